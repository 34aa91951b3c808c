"""
Command-line interface.

    framization esystem --d 3
    framization trace --d 2 --n 2 --word "n=2: t1 s1" --spec "D={0,1}"
    framization invariant --kind theta --d 2 --D "{0,1}" --word "n=2: s1^3" --json
    framization check --quotient ftl --d 2 --spec "sup1={},sup2={0,1}"
    framization dim --algebra ftl --d 2 --n 3 --method rank

Exit status: 0 on success, 2 when a check fails, 1 on usage errors.
"""
from __future__ import annotations

import argparse
import ast
import json
import operator
import os
import re
import sys
import tempfile
from typing import Sequence

from .braids import parse_braid
from .harmonic import esystem_solution, format_subset, solve_esystem, sup_split_params
from .invariants import (
    InvariantValue,
    delta_invariant,
    gamma_invariant,
    homflypt,
    jones,
    jones_z,
    to_algebra,
)
from .scalars import RationalFunction
from .traces import (
    TraceParams,
    algebra_dimension,
    check_ctl_pass,
    check_ftl_pass,
    check_ytl_pass,
    ftl_dimension_formula,
    ideal_dimension,
    markov_trace,
)
from .yokonuma import AlgebraContext


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


# -- small parsers


def parse_set(text: str) -> frozenset:
    """'{0,2}', '0,2' or '{}' -> frozenset of ints."""
    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    body = body.strip()
    if not body:
        return frozenset()
    try:
        return frozenset(int(p) for p in body.split(","))
    except ValueError:
        raise UsageError(f"cannot read a set of integers from {text!r}") from None


_SPEC_ITEM = re.compile(r"\s*(\w+)\s*=\s*(\{[^}]*\}|[^,]*)\s*(?:,|$)")


def parse_spec(text: str) -> dict[str, frozenset]:
    """'D={0,1}' or 'sup1={0},sup2={1}'."""
    out: dict[str, frozenset] = {}
    pos = 0
    while pos < len(text):
        m = _SPEC_ITEM.match(text, pos)
        if not m or m.end() == pos:
            raise UsageError(f"cannot read parameter spec {text!r}")
        out[m.group(1).lower()] = parse_set(m.group(2))
        pos = m.end()
    if set(out) not in ({"d"}, {"sup1", "sup2"}):
        raise UsageError("spec must be 'D=<set>' or 'sup1=<set>,sup2=<set>'")
    return out


_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.Div: operator.truediv}


def parse_rational(text: str) -> RationalFunction:
    """An arithmetic expression in u, v and integers, e.g. '-1/(u+2)'."""

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return RationalFunction.const(node.value)
        if isinstance(node, ast.Name) and node.id in ("u", "v"):
            return RationalFunction.u() if node.id == "u" else RationalFunction.v()
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            val = ev(node.operand)
            return -val if isinstance(node.op, ast.USub) else val
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.BinOp) and isinstance(node.op, ast.Pow):
            exp = node.right
            if isinstance(exp, ast.UnaryOp) and isinstance(exp.op, ast.USub) and isinstance(exp.operand, ast.Constant):
                return ev(node.left) ** (-exp.operand.value)
            if isinstance(exp, ast.Constant) and isinstance(exp.value, int):
                return ev(node.left) ** exp.value
        raise UsageError(f"unsupported expression {ast.unparse(node)!r}")

    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError:
        raise UsageError(f"cannot parse expression {text!r}") from None
    try:
        return ev(tree)
    except ZeroDivisionError:
        raise UsageError(f"division by zero in {text!r}") from None


def params_from_spec(d: int, spec: str | None, z: str | None) -> tuple[TraceParams, dict]:
    if spec is None:
        raise UsageError("this command needs --spec")
    items = parse_spec(spec)
    if "d" in items:
        D = items["d"]
        if not D:
            raise UsageError("D must be non-empty")
        zval = parse_rational(z) if z else jones_z(len(D))
        sol = esystem_solution(d, D)
        return TraceParams.from_solution(sol, zval), {"D": format_subset(sol.D), "z": str(zval)}
    try:
        p = sup_split_params(d, items["sup1"], items["sup2"])
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if z:
        raise UsageError("z is determined by the Sup split; drop --z")
    return TraceParams.from_sup_split(p), {
        "sup1": format_subset(p.sup1),
        "sup2": format_subset(p.sup2),
        "z": str(p.z),
    }


# -- result cache


class ResultCache:
    """A JSON file of previously computed invariant values, rewritten atomically on every store."""

    def __init__(self, path: str | None):
        self.path = path
        self.data: dict[str, dict] = {}
        if path and os.path.exists(path):
            with open(path, encoding="utf-8") as fh:
                self.data = json.load(fh)

    @staticmethod
    def key(d: int, D: frozenset, word: str, kind: str, z: str | None) -> str:
        return json.dumps([d, sorted(D), word, kind, z])

    def get(self, key: str) -> dict | None:
        return self.data.get(key) if self.path else None

    def put(self, key: str, record: dict) -> None:
        if not self.path:
            return
        self.data[key] = record
        folder = os.path.dirname(os.path.abspath(self.path))
        fd, tmp = tempfile.mkstemp(dir=folder, prefix=".cache-", suffix=".json")
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(self.data, fh, indent=1, sort_keys=True)
        os.replace(tmp, self.path)


# -- commands


def _emit(record: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(record, indent=2))
    else:
        print(record["value"])


def cmd_esystem(args) -> int:
    sols = solve_esystem(args.d)
    if args.json:
        print(json.dumps([{"D": sorted(s.D), "x": [str(v) for v in s.x.values], "E": f"1/{len(s.D)}"} for s in sols], indent=2))
    else:
        for s in sols:
            print(s)
    return 0


def cmd_trace(args) -> int:
    word = parse_braid(args.word)
    n = args.n if args.n is not None else word.n
    if word.n > n:
        raise UsageError(f"word has {word.n} strands but --n is {n}")
    ctx = AlgebraContext(args.d, n)
    elem = ctx.embed(to_algebra(word.reduce_framings(args.d), AlgebraContext(args.d, word.n)))
    if args.spec:
        params, info = params_from_spec(args.d, args.spec, args.z)
    else:
        params, info = TraceParams(), {"mode": "symbolic"}
    value = markov_trace(elem, params)
    _emit({"input": str(word), "params": {"d": args.d, "n": n, **info}, "value": str(value), "grading": None}, args.json)
    return 0


def compute_invariant(kind: str, d: int, D: frozenset, word: str, z: RationalFunction | None) -> InvariantValue:
    if kind == "homflypt":
        if z is None:
            raise UsageError("homflypt needs --z")
        return homflypt(word, z)
    if kind == "jones":
        return jones(word)
    if not D:
        raise UsageError("--D is required and must be non-empty")
    if kind == "gamma":
        return gamma_invariant(word, d, D, "general" if z is not None else "w=u", z)
    if kind == "delta":
        return delta_invariant(word, d, D, "general" if z is not None else "w=u", z)
    if kind == "vartheta":
        return gamma_invariant(word, d, D, "w=u")
    if kind == "theta":
        return delta_invariant(word, d, D, "w=u")
    raise UsageError(f"unknown invariant kind {kind!r}")


def cmd_invariant(args) -> int:
    D = parse_set(args.D) if args.D else frozenset()
    z = parse_rational(args.z) if args.z else None
    d = 1 if args.kind in ("homflypt", "jones") else args.d
    canonical = str(parse_braid(args.word))
    cache = ResultCache(args.cache)
    key = ResultCache.key(d, D, canonical, args.kind, str(z) if z is not None else None)
    record = cache.get(key)
    if record is None:
        val = compute_invariant(args.kind, d, D, args.word, z)
        params = {"kind": args.kind, "d": d, "D": format_subset(val.D)}
        if z is not None:
            params["z"] = str(z)
        record = {"input": canonical, "params": params, "value": str(val), "grading": val.grading()}
        cache.put(key, record)
    _emit(record, args.json)
    return 0


def cmd_check(args) -> int:
    params, info = params_from_spec(args.d, args.spec, args.z)
    checker = {"ftl": check_ftl_pass, "ctl": check_ctl_pass, "ytl": check_ytl_pass}[args.quotient]
    report = checker(args.d, params, n=args.n)
    out = report.to_json()
    out["params"] = {"d": args.d, **info}
    print(json.dumps(out, indent=2))
    return 0 if report.passed else 2


def cmd_dim(args) -> int:
    if args.algebra == "y":
        rep = algebra_dimension(args.d, args.n)
    elif args.method == "formula":
        if args.algebra != "ftl":
            raise UsageError("a closed formula is only available for ftl; use --method rank")
        rep = ftl_dimension_formula(args.d, args.n)
    else:
        kind = {"ftl": "r", "ctl": "c", "ytl": "g"}[args.algebra]
        try:
            rep = ideal_dimension(args.d, args.n, kind)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.json:
        print(json.dumps(rep.to_json(), indent=2))
    else:
        print(rep.dimension)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="framization", description="Yokonuma-Hecke algebra traces, quotients and link invariants.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("esystem", help="list the solutions of the E-system")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_esystem)

    s = sub.add_parser("trace", help="Markov trace of a framed braid word")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--n", type=int)
    s.add_argument("--word", required=True)
    s.add_argument("--spec", help="'D=<set>' or 'sup1=<set>,sup2=<set>'; symbolic when absent")
    s.add_argument("--z", help="z as an expression in u (with --spec D=...)")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_trace)

    s = sub.add_parser("invariant", help="evaluate a link invariant on a braid closure")
    s.add_argument("--kind", choices=["gamma", "delta", "theta", "vartheta", "homflypt", "jones"], required=True)
    s.add_argument("--d", type=int, default=1)
    s.add_argument("--D", help="subset of Z/d, e.g. '{0,1}'")
    s.add_argument("--word", required=True)
    s.add_argument("--z", help="z for the general-w mode of gamma/delta, or zeta for homflypt")
    s.add_argument("--cache", help="JSON file for memoized results")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_invariant)

    s = sub.add_parser("check", help="does the trace pass to a quotient?")
    s.add_argument("--quotient", choices=["ftl", "ctl", "ytl"], required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--spec", required=True)
    s.add_argument("--z")
    s.add_argument("--n", type=int, default=3, choices=[3, 4])
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("dim", help="dimension of the algebra or a quotient")
    s.add_argument("--algebra", choices=["y", "ftl", "ctl", "ytl"], required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--method", choices=["formula", "rank"], default="formula")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_dim)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"framization: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
