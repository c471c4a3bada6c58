"""Command line interface.

Exit codes: 0 on success, 1 when a verification fails (a failed check, a
proven-composite verdict being the exception: that is still a successful
run), 2 on bad input or violated hypotheses.
"""
from __future__ import annotations

import argparse
import concurrent.futures
import json
import sys
from fractions import Fraction

from . import divisibility, pell, recurrence, series, suite
from .continuants import verify_identity
from .errors import ContikitError
from .systems import PeriodicSystem


def _add_system_args(p: argparse.ArgumentParser):
    p.add_argument("--system", metavar="FILE", help="JSON file describing the system")
    p.add_argument("--sqrt", type=int, metavar="N",
                   help="use the continued-fraction system of sqrt(N)")
    p.add_argument("--d", type=int, help="period length")
    p.add_argument("--a", help="comma-separated a_1..a_d")
    p.add_argument("--b", help="comma-separated b_1..b_d")
    p.add_argument("--b0", type=int, default=None, help="leading b_0 (default 1)")
    p.add_argument("--non-strict", action="store_true",
                   help="allow non-positive coefficients")


def _system_from_args(args) -> PeriodicSystem:
    given = [x is not None for x in (args.system, args.sqrt, args.d)]
    if sum(given) != 1:
        raise SystemExit2("give exactly one of --system, --sqrt, or --d/--a/--b")
    if args.system is not None:
        with open(args.system) as fh:
            return PeriodicSystem.from_json(fh.read())
    if args.sqrt is not None:
        return pell.to_system(pell.expand_sqrt(args.sqrt))
    if args.a is None or args.b is None:
        raise SystemExit2("--d requires --a and --b")
    a = tuple(int(x) for x in args.a.split(","))
    b = tuple(int(x) for x in args.b.split(","))
    return PeriodicSystem(d=args.d, a=a, b=b,
                          b0=args.b0 if args.b0 is not None else 1,
                          strict=not args.non_strict)


class SystemExit2(Exception):
    """Usage error detected after argparse."""


def _int_str(x) -> str:
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else str(x.numerator)
    return str(x)


def _emit(args, obj: dict, text: str):
    if args.json:
        print(json.dumps(obj))
    else:
        print(text)


def cmd_expand(args) -> int:
    exp = pell.expand_sqrt(args.n)
    _emit(args, {"n": str(exp.n), "a0": str(exp.a0),
                 "period": [str(x) for x in exp.period], "d": exp.d}, str(exp))
    return 0


def cmd_pell(args) -> int:
    sols = pell.pell_solutions(args.n, args.count)
    if args.json:
        print(json.dumps([{"n": str(s.n), "x": str(s.x), "y": str(s.y)} for s in sols]))
    else:
        for k, s in enumerate(sols, start=1):
            print(f"k={k}: x={s.x} y={s.y}  ({s.x}^2 - {s.n}*{s.y}^2 = 1)")
    return 0


def cmd_reduce(args) -> int:
    system = _system_from_args(args)
    red = recurrence.reduce(system)
    _emit(args,
          {"C_d": str(red.Cd), "D_d": str(red.Dd), "Delta": str(red.delta)},
          f"C_d = {red.Cd}, D_d = {red.Dd}, Delta = {red.delta}")
    return 0


def cmd_binet(args) -> int:
    system = _system_from_args(args)
    nu = args.nu
    d = system.d
    n, r = divmod(nu + 1, d)
    r -= 1
    if n >= 0:
        value = recurrence.binet(system, n, r)
    else:
        value = recurrence.binet_negative(system, -n, r)
    _emit(args, {"nu": str(nu), "B": _int_str(value)}, f"B_{nu} = {value}")
    return 0


def cmd_series(args) -> int:
    ctx = series.PrecisionContext(args.digits, args.terms)
    if args.family in series.ZETA_KINDS:
        system = _system_from_args(args)
        rep = series.zeta_series(system, args.family, ctx,
                                 compare_zeta=args.compare_zeta)
    elif args.family.startswith("pell_"):
        if args.sqrt is None:
            raise SystemExit2(f"{args.family} needs --sqrt N")
        rep = series.telescoping_sum(args.sqrt, args.family, ctx)
    else:
        system = _system_from_args(args)
        rep = series.telescoping_sum(system, args.family, ctx)
    if args.json:
        print(json.dumps(rep.to_dict()))
    else:
        print(f"family      : {rep.family}")
        print(f"partial sum : {rep.partial_sum}  ({rep.terms} terms)")
        print(f"closed form : {rep.closed_form}  [{rep.closed_symbolic}]")
        print(f"abs error   : {rep.abs_error}")
        print(f"converged   : {rep.converged}")
    return 0 if rep.converged else 1


def cmd_check(args) -> int:
    system = _system_from_args(args)
    if args.identity is not None:
        params = tuple(int(x) for x in args.params.split(","))
        rep = verify_identity(system, args.identity, params)
        _emit(args,
              {"identity": rep.identity, "params": list(rep.params),
               "lhs": [_int_str(v) for v in rep.lhs],
               "rhs": [_int_str(v) for v in rep.rhs], "equal": rep.equal},
              f"{rep.identity}{rep.params}: lhs={rep.lhs} rhs={rep.rhs} equal={rep.equal}")
        return 0 if rep.equal else 1
    if args.congruence_p is not None:
        case = divisibility.congruence_suite(system, args.congruence_p)
        if args.json:
            print(json.dumps({"p": case.p, "case": case.case_tag,
                              "verified": [{"label": lbl, "ok": ok}
                                           for lbl, ok in case.verified],
                              "all_pass": case.all_pass}))
        else:
            print(f"p = {case.p}  case: {case.case_tag}")
            for lbl, ok in case.verified:
                print(f"  [{'ok' if ok else 'FAIL'}] {lbl}")
        return 0 if case.all_pass else 1
    raise SystemExit2("check needs --identity or --congruence-p")


def _scan_one(payload: tuple[str, int]) -> dict:
    system_json, n = payload
    system = PeriodicSystem.from_json(system_json)
    return divisibility.lucas_pseudoprime_test(system, n).to_dict()


def cmd_pseudoprime(args) -> int:
    system = _system_from_args(args)
    if args.candidate is not None:
        verdict = divisibility.lucas_pseudoprime_test(system, args.candidate)
        _emit(args, verdict.to_dict(),
              f"n = {verdict.n}: {verdict.verdict} "
              f"(epsilon = {verdict.epsilon}, tested B index {verdict.tested_index})")
        return 0
    if args.range is None:
        raise SystemExit2("pseudoprime needs --candidate or --range lo:hi")
    lo, hi = (int(x) for x in args.range.split(":"))
    odd = [n for n in range(max(lo, 3), hi + 1) if n % 2 == 1]
    payloads = [(system.to_json(), n) for n in odd]
    if args.jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_scan_one, payloads, chunksize=16))
    else:
        results = [_scan_one(p) for p in payloads]
    for res in results:
        if args.json:
            print(json.dumps(res))
        else:
            print(f"n = {res['n']}: {res['verdict']}")
    return 0


def cmd_pisano(args) -> int:
    system = _system_from_args(args)
    pi = divisibility.pisano_period(system, args.p)
    bound = divisibility.pisano_bound(system, args.p)
    _emit(args, {"p": str(args.p), "pi": str(pi), "bound": str(bound)},
          f"pi({args.p}) = {pi}  (divisor bound {bound})")
    return 0


def cmd_paper(args) -> int:
    rows = suite.run_full_suite(args.seed, args.digits)
    if args.json:
        print(json.dumps({"seed": args.seed, "digits": args.digits,
                          "rows": [r.to_dict() for r in rows]}))
    else:
        print(f"verification suite  seed={args.seed} digits={args.digits}")
        for r in rows:
            print(f"[{'PASS' if r.passed else 'FAIL'}] {r.name}: {r.detail}")
        n_fail = sum(not r.passed for r in rows)
        print(f"{len(rows) - n_fail}/{len(rows)} checks passed")
    return 0 if all(r.passed for r in rows) else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="contikit",
                                 description="exact continuant/Pell/series toolkit")
    sub = ap.add_subparsers(dest="verb", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("expand", help="continued fraction of sqrt(N)")
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("pell", help="solutions of x^2 - N y^2 = 1")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_pell)

    p = sub.add_parser("reduce", help="C_d, D_d, Delta of a system")
    _add_system_args(p)
    common(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("binet", help="B_nu by the closed form (any integer nu)")
    _add_system_args(p)
    p.add_argument("--nu", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_binet)

    p = sub.add_parser("series", help="verify a series closed form")
    _add_system_args(p)
    p.add_argument("--family", required=True,
                   choices=series.TELESCOPING_FAMILIES + series.ZETA_KINDS)
    p.add_argument("--digits", type=int, default=50)
    p.add_argument("--terms", type=int, default=60)
    p.add_argument("--compare-zeta", type=str, default=None,
                   help="also evaluate the sum at this root value")
    common(p)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("check", help="verify a continuant identity or congruence suite")
    _add_system_args(p)
    p.add_argument("--identity", choices=("cassini_A", "cassini_B", "catalan",
                                          "docagne", "index_changing", "telescoping"))
    p.add_argument("--params", default="0,3", help="comma-separated identity parameters")
    p.add_argument("--congruence-p", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("pseudoprime", help="Lucas-style compositeness test")
    _add_system_args(p)
    p.add_argument("--candidate", type=int, default=None)
    p.add_argument("--range", default=None, metavar="LO:HI")
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_pseudoprime)

    p = sub.add_parser("pisano", help="period of B mod p")
    _add_system_args(p)
    p.add_argument("--p", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_pisano)

    p = sub.add_parser("paper", help="run the full deterministic verification suite")
    p.add_argument("--seed", type=int, default=20240801)
    p.add_argument("--digits", type=int, default=50)
    common(p)
    p.set_defaults(func=cmd_paper)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ContikitError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
