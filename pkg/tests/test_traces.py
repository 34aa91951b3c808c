from __future__ import annotations

import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from framization.harmonic import disjoint_splits, esystem_solution, solve_esystem, sup_split_params
from framization.linalg import EchelonSpan, element_to_vector
from framization.scalars import RationalFunction, TracePolynomial, specialize
from framization.traces import (
    E_value,
    TraceParams,
    algebra_dimension,
    catalan,
    check_ctl_pass,
    check_ftl_pass,
    check_ytl_pass,
    ctl_condition_value,
    ftl_dimension_formula,
    ideal_basis,
    ideal_contains,
    ideal_dimension,
    inductive_basis,
    lemma8_check,
    markov_trace,
    power_trace_formula,
    proposition6_check,
    proposition7_check,
    residuals_json,
    steinberg_trace_value,
    triple_value,
)
from framization.yokonuma import (
    AlgebraContext,
    ell_generator,
    idempotent,
    shifted_idempotent,
    steinberg_elements,
)

from helpers import random_element

Z = TracePolynomial.z()
TU = TracePolynomial.u()
U = RationalFunction.u()


# -- basic trace values


def test_trace_examples():
    for d in (1, 2, 3):
        ctx = AlgebraContext(d, 3)
        assert markov_trace(ctx.one()) == 1
        assert markov_trace(ctx.g(1)) == Z
        assert markov_trace(ctx.g(1) * ctx.g(2)) == Z * Z
        assert markov_trace(idempotent(ctx, 1, 2)) == E_value(d)
        for k in range(d):
            assert markov_trace(ctx.t(1, k)) == TracePolynomial.x(k)
            assert markov_trace(ctx.t(3, k)) == TracePolynomial.x(k)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_trace_of_idempotents_is_position_free(d):
    ctx = AlgebraContext(d, 4)
    for i in range(1, 4):
        assert markov_trace(idempotent(ctx, i, i + 1)) == E_value(d)
        for m in range(d):
            assert markov_trace(shifted_idempotent(ctx, i, m)) == E_value(d, m)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_lemma8_and_propositions(d):
    assert lemma8_check(d) == []
    assert proposition6_check(d) == []
    assert proposition7_check(d) == []


def test_proposition6_d1_factorization():
    expected = ((TU + 1) * Z + 1) * (Z + 1)
    assert steinberg_trace_value(1, 0) == expected
    ctx = AlgebraContext(1, 3)
    _, r12, _ = steinberg_elements(ctx)
    powers = set()
    for w in inductive_basis(1, 3):
        tr = markov_trace(w.element(ctx) * r12)
        assert tr == TracePolynomial.u(w.u_power) * expected
        powers.add(w.u_power)
    assert powers == {0, 1, 2, 3}


def test_proposition6_specific_classes():
    ctx = AlgebraContext(2, 3)
    _, r12, _ = steinberg_elements(ctx)
    for a in range(2):
        for b in range(2):
            for c in range(2):
                m = ctx.t(1, a) * ctx.t(2, b) * ctx.t(3, c)
                assert markov_trace(m * r12) == steinberg_trace_value(2, a + b + c)
                m = ctx.t(1, a) * ctx.g(1) * ctx.t(1, b) * ctx.g(2) * ctx.g(1) * ctx.t(1, c)
                assert markov_trace(m * r12) == TracePolynomial.u(3) * steinberg_trace_value(2, a + b + c)


def test_inductive_basis_shape():
    for d in (1, 2, 3):
        for n in (1, 2, 3):
            words = inductive_basis(d, n)
            assert len(words) == AlgebraContext(d, n).dimension
    assert str(inductive_basis(2, 3)[0]) == "1"


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_closed_forms_match_traces(d):
    ctx = AlgebraContext(d, 3)
    e2 = idempotent(ctx, 2, 3)
    for k in range(d):
        assert markov_trace(shifted_idempotent(ctx, 1, k) * e2) == triple_value(d, k)


# -- trace axioms on random elements


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10 ** 6), d=st.integers(1, 3), n=st.integers(2, 3))
def test_trace_is_central(seed, d, n):
    rng = random.Random(seed)
    ctx = AlgebraContext(d, n)
    a, b = random_element(ctx, rng), random_element(ctx, rng)
    assert markov_trace(a * b) == markov_trace(b * a)
    params = TraceParams.specialized(-1 / (U + 1), [Fraction(rng.randint(-3, 3), 2) for _ in range(d - 1)])
    assert markov_trace(a * b, params) == markov_trace(b * a, params)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10 ** 6), d=st.integers(1, 3), n=st.integers(1, 3))
def test_markov_rule(seed, d, n):
    rng = random.Random(seed)
    a = random_element(AlgebraContext(d, n), rng)
    big = AlgebraContext(d, n + 1)
    a_big = big.embed(a)
    assert markov_trace(a_big * big.g(n)) == Z * markov_trace(a)
    for s in range(d):
        assert markov_trace(a_big * big.t(n + 1, s)) == TracePolynomial.x(s) * markov_trace(a)


# -- power formulas


@pytest.mark.parametrize("d", [1, 2, 3])
def test_power_formulas(d):
    ctx = AlgebraContext(d, 2)
    powers = [ctx.one()]
    for _ in range(6):
        powers.append(powers[-1] * ctx.g(1))
    for sol in solve_esystem(d):
        E = RationalFunction.const(sol.E)
        degenerate = -E
        for z in (degenerate, -E / (U + 1), RationalFunction.const(Fraction(2, 5))):
            params = TraceParams.from_solution(sol, z)
            for m in range(1, 7):
                value = markov_trace(powers[m], params)
                assert value == power_trace_formula(m, z, E)
                q = (U ** m - 1) / (U + 1)
                if m % 2 == 0:
                    assert value == q * z + q * E + 1
                elif z == degenerate:
                    assert value == q * z + q * E - E
        # at z = -1/|D| the trace forgets the power beyond its parity
        params = TraceParams.from_solution(sol, degenerate)
        assert {markov_trace(powers[m], params) for m in (2, 4, 6)} == {RationalFunction.const(1)}
        assert {markov_trace(powers[m], params) for m in (1, 3, 5)} == {-E}


def test_power_formula_rejects_zero():
    with pytest.raises(ValueError):
        power_trace_formula(0, 0, 1)


# -- pass-to-quotient checks


def _params(z, x):
    return TraceParams.specialized(z, x)


def test_ftl_check_examples():
    assert check_ftl_pass(2, TraceParams.from_sup_split(sup_split_params(2, [], [0, 1]))).passed
    report = check_ftl_pass(2, _params(-1 / (U + 1), [Fraction(1, 2)]))
    assert not report.passed and report.residuals
    assert check_ftl_pass(1, _params(-1 / (U + 1), [])).passed
    assert check_ftl_pass(1, _params(-1, [])).passed


def test_ftl_check_exhaustive_mode():
    params = TraceParams.from_sup_split(sup_split_params(2, [0], [1]))
    assert check_ftl_pass(2, params, n=4).passed


def test_ctl_check_examples():
    report = check_ctl_pass(2, TraceParams.from_solution(esystem_solution(2, [0]), -1 / (U + 1)))
    assert report.passed and report.consistent
    for z in (RationalFunction.const(7), -1 / (U + 3), RationalFunction.v()):
        report = check_ctl_pass(2, TraceParams.from_solution(esystem_solution(2, [1]), z))
        assert report.passed and report.consistent
    report = check_ctl_pass(1, _params(Fraction(-1, 2), []))
    assert not report.passed and report.consistent
    assert report.closed_form == (1 - U) / 4


def test_ytl_check_examples():
    assert check_ytl_pass(1, _params(-1 / (U + 1), [])).passed
    assert check_ytl_pass(2, _params(-1 / (U + 1), [-1])).passed
    assert not check_ytl_pass(2, _params(-1 / (U + 1), [0])).passed
    # the second family of the known classification, with z = -1/2
    report = check_ytl_pass(2, _params(Fraction(-1, 2), [0]))
    assert report.passed and "chi_0 + chi_1" in report.note
    assert check_ytl_pass(3, TraceParams.from_solution(esystem_solution(3, [1]), -1)).passed


def test_check_parameter_validation():
    with pytest.raises(ValueError):
        check_ftl_pass(2, TraceParams())
    with pytest.raises(ValueError):
        check_ftl_pass(3, _params(-1, [1]))


def test_residual_report_json():
    report = check_ftl_pass(2, _params(-1 / (U + 1), [Fraction(1, 2)]))
    data = json.loads(residuals_json(report.residuals))
    assert data and set(data[0]) == {"monomial", "residual"}
    assert report.to_json()["passed"] is False


def _families(d):
    rng = random.Random(d)
    fams = [TraceParams.from_sup_split(sup_split_params(d, s1, s2)) for s1, s2 in disjoint_splits(d)]
    for sol in solve_esystem(d):
        for z in (-1 / (U + 1), RationalFunction.const(-1), RationalFunction.const(Fraction(-1, 2))):
            fams.append(TraceParams.from_solution(sol, z))
    for _ in range(4):
        fams.append(_params(Fraction(rng.randint(-5, 5), 3), [Fraction(rng.randint(-4, 4), 2) for _ in range(d - 1)]))
    return fams


@pytest.mark.parametrize("d", [1, 2])
def test_condition_nesting(d):
    for params in _families(d):
        ytl = check_ytl_pass(d, params).passed
        ftl = check_ftl_pass(d, params).passed
        ctl = check_ctl_pass(d, params)
        assert ctl.consistent
        if ytl:
            assert ftl
        if ftl:
            assert ctl.passed


@pytest.mark.parametrize("d", [2, 3])
def test_ctl_closed_form_values(d):
    for sol in solve_esystem(d):
        x = sol.x_params()
        zero_in = 0 in sol.D
        k = len(sol.D)
        sum_x = specialize(sum((TracePolynomial.x(s) for s in range(d)), TracePolynomial()), 0, x)
        sum_E = specialize(sum((E_value(d, s) for s in range(d)), TracePolynomial()), 0, x)
        sum_T = specialize(sum((triple_value(d, s) for s in range(d)), TracePolynomial()), 0, x)
        assert sum_x == (Fraction(d, k) if zero_in else 0)
        assert sum_E == (Fraction(d, k * k) if zero_in else 0)
        assert sum_T == (Fraction(d, k ** 3) if zero_in else 0)
        if zero_in:
            z = -1 / ((U + 1) * k)
            assert specialize(ctl_condition_value(d), z, x).is_zero()


# -- dimensions and ideals


def test_ftl_dimension_formula_examples():
    assert ftl_dimension_formula(2, 3).dimension == 46
    assert ftl_dimension_formula(2, 1).dimension == 2
    for n in range(1, 8):
        assert ftl_dimension_formula(1, n).dimension == catalan(n)
    assert [catalan(k) for k in range(5)] == [1, 1, 2, 5, 14]
    assert algebra_dimension(2, 3).dimension == 48
    with pytest.raises(ValueError):
        ftl_dimension_formula(0, 3)


def test_ideal_dimension_examples():
    r = ideal_dimension(2, 3, "r")
    assert (r.dimension, r.ideal_rank, r.method) == (46, 2, "rank")
    assert ideal_dimension(1, 3, "r").dimension == 5
    c = ideal_dimension(2, 3, "c")
    g = ideal_dimension(2, 3, "g")
    assert c.dimension >= r.dimension >= g.dimension
    assert (c.dimension, g.dimension) == (47, 28)


@pytest.mark.parametrize("d,n", [(1, 4), (3, 3)])
def test_rank_matches_formula(d, n):
    assert ideal_dimension(d, n, "r").dimension == ftl_dimension_formula(d, n).dimension


def test_pairs_method_agrees():
    for kind in "rcg":
        assert ideal_dimension(1, 3, kind, method="pairs") == ideal_dimension(1, 3, kind)
    assert ideal_dimension(2, 3, "c", method="pairs").dimension == 47


def test_ideal_guards():
    with pytest.raises(ValueError):
        ideal_dimension(2, 2, "r")
    with pytest.raises(ValueError):
        ideal_dimension(3, 5, "r")
    with pytest.raises(ValueError):
        ideal_dimension(2, 3, "x")
    with pytest.raises(ValueError):
        ideal_dimension(2, 3, "r", method="svd")


def test_ftl23_basis_remark():
    ctx, span, index = ideal_basis(2, 3, "r")
    words = inductive_basis(2, 3)
    kept = [w for w in words if str(w) not in ("1", "t1")]
    assert len(kept) == 46
    combined = EchelonSpan()
    for row in span.rows.values():
        combined.add(dict(row))
    for w in kept:
        combined.add(element_to_vector(w.element(ctx), index))
    assert combined.rank == 48
    _, r12, _ = steinberg_elements(ctx)
    e1e2 = idempotent(ctx, 1, 2) * idempotent(ctx, 2, 3)
    for m in range(2):
        assert ideal_contains(2, 3, "r", ctx.t(1, m) * e1e2 * steinberg_elements(ctx)[0])


# -- presentations of the quotients, as identities and ideal memberships


@pytest.mark.parametrize("d", [1, 2, 3])
def test_presentation_identities(d):
    ctx = AlgebraContext(d, 4)
    L = {i: ell_generator(ctx, i) for i in (1, 2, 3)}
    e = {i: idempotent(ctx, i, i + 1) for i in (1, 2, 3)}
    t = lambda j: ctx.t(j)
    one = ctx.one()
    assert L[1] * L[3] == L[3] * L[1]
    for i in (1, 2, 3):
        assert L[i] * t(i) == t(i + 1) * L[i] + (t(i) - t(i + 1))
        assert L[i] * t(i + 1) == t(i) * L[i] + (t(i + 1) - t(i))
        for j in range(1, 5):
            if j not in (i, i + 1):
                assert L[i] * t(j) == t(j) * L[i]
        assert L[i] * L[i] == ((TU - 1) * e[i] + 2) * L[i]
    for i in (1, 2):
        lhs = L[i] * L[i + 1] * L[i] - ((TU - 1) * e[i] + one) * L[i]
        rhs = L[i + 1] * L[i] * L[i + 1] - ((TU - 1) * e[i + 1] + one) * L[i + 1]
        assert lhs == rhs


@pytest.mark.parametrize("d", [1, 2])
def test_ftl_relation_in_ideal(d):
    ctx = AlgebraContext(d, 3)
    L1, L2 = ell_generator(ctx, 1), ell_generator(ctx, 2)
    e1e2 = idempotent(ctx, 1, 2) * idempotent(ctx, 2, 3)
    rel = e1e2 * L1 * L2 * L1 - TU * (e1e2 * L1)
    assert not rel.is_zero()
    assert ideal_contains(d, 3, "r", rel)
    if d == 1:
        # f1 f2 f1 = delta f1 in TL_3, delta = u/(u+1)^2
        assert ideal_contains(1, 3, "r", L1 * L2 * L1 - TU * L1)


@pytest.mark.parametrize("d", [1, 2])
def test_ctl_relation_in_ideal(d):
    ctx = AlgebraContext(d, 3)
    L1, L2 = ell_generator(ctx, 1), ell_generator(ctx, 2)
    e2 = idempotent(ctx, 2, 3)
    S = sum((shifted_idempotent(ctx, 1, k) for k in range(d)), ctx.zero())
    rel = S * e2 * (L1 * L2 * L1 - TU * L1)
    assert ideal_contains(d, 3, "c", rel)
    ftl_rel = idempotent(ctx, 1, 2) * e2 * (L1 * L2 * L1 - TU * L1)
    assert ideal_contains(d, 3, "c", ftl_rel) == (d == 1)


def test_ideal_membership_d3():
    ctx = AlgebraContext(3, 3)
    L1, L2 = ell_generator(ctx, 1), ell_generator(ctx, 2)
    e2 = idempotent(ctx, 2, 3)
    core = L1 * L2 * L1 - TU * L1
    assert ideal_contains(3, 3, "r", idempotent(ctx, 1, 2) * e2 * core)
    S = sum((shifted_idempotent(ctx, 1, k) for k in range(3)), ctx.zero())
    assert ideal_contains(3, 3, "c", S * e2 * core)
    assert not ideal_contains(3, 3, "r", ctx.one())
    with pytest.raises(ValueError):
        ideal_contains(3, 3, "r", AlgebraContext(2, 3).one())
