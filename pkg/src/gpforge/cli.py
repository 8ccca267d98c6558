"""Command-line entry point: ``gpforge <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import printed
from .conformance import REFUTED, audit
from .elliptic import ExceptionalPointError
from .exact import fmt_rational, parse_rational
from .family import (DEFAULT_M_CAP, PublishedFormulaViolation, TrinomialCurve, closed_form_family,
                     generate_family, integer_model)
from .search import (GeneralCurve, HeightBound, gp_search, gp_verify, length10_search,
                     parse_general_curve)

SCHEMA = "gpforge/1"


class UsageError(Exception):
    pass


def _rationals(text: str) -> list:
    try:
        return [parse_rational(s) for s in text.split(",") if s.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational list {text!r}: {exc}") from None


def _ints(text: str) -> list:
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise UsageError(f"bad integer list {text!r}") from None


def _range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        return int(lo), int(hi)
    except ValueError:
        raise UsageError(f"range must look like 1..8, got {text!r}") from None


def _curve(args) -> GeneralCurve:
    if args.poly:
        return parse_general_curve(args.poly)
    if args.curve:
        parts = args.curve.split(",")
        if len(parts) != 3:
            raise UsageError("--curve takes a,b,n")
        a, b = parse_rational(parts[0]), parse_rational(parts[1])
        return GeneralCurve.from_trinomial(TrinomialCurve(int(parts[2]), a, b))
    raise UsageError("one of --curve a,b,n or --poly c0,c1,... is required")


def _record_json(rec, integer: bool) -> dict:
    d = rec.to_json()
    if integer:
        c, curve, pts = integer_model(rec)
        d["integer_model"] = {
            "scale": fmt_rational(c),
            "curve": curve.to_json(),
            "points": [{"x": fmt_rational(x), "y": fmt_rational(y)} for x, y in pts],
        }
    return d


def cmd_generate(args) -> dict:
    T = parse_rational(args.T)
    ms = _ints(args.m)
    if not ms:
        raise UsageError("--m needs at least one value")
    records, skipped = generate_family(T, args.n, ms, m_cap=args.m_cap)
    for m, reason in skipped:
        print(f"skipped m={m}: {reason}", file=sys.stderr)
    return {"records": [_record_json(r, args.integer_model) for r in records],
            "skipped": [{"m": m, "reason": reason} for m, reason in skipped]}


def cmd_example(args) -> dict:
    rec = closed_form_family(printed.GOLDEN_T, printed.GOLDEN_N)
    ok = (rec.curve.a == printed.GOLDEN_A and rec.curve.b == printed.GOLDEN_B
          and rec.sequence.points == printed.GOLDEN_POINTS)
    C = GeneralCurve.from_trinomial(rec.curve)
    hits = gp_verify(C, rec.sequence.base, rec.sequence.ratio, 1, 8)
    ok = ok and [(x, y) for _, x, y in hits] == list(rec.sequence.points)
    if not ok:
        raise PublishedFormulaViolation("numeric example failed re-verification")
    print(f"y^2 = {rec.curve.a} x^4 + {rec.curve.b} x^2 + {rec.curve.a}", file=sys.stderr)
    for x, y in rec.sequence.points:
        print(f"  ({x}, {y})", file=sys.stderr)
    return {"record": _record_json(rec, args.integer_model), "verified": True}


def cmd_verify(args) -> dict:
    C = _curve(args)
    lo, hi = _range(args.range)
    hits = gp_verify(C, parse_rational(args.p), parse_rational(args.ratio), lo, hi)
    return {"curve": C.to_json(),
            "hits": [{"i": i, "x": fmt_rational(x), "y": fmt_rational(y)} for i, x, y in hits]}


def cmd_search(args) -> dict:
    C = _curve(args)
    seqs = gp_search(C, HeightBound(args.height), args.min_len, workers=args.workers)
    return {"curve": C.to_json(), "height": args.height, "sequences": [s.to_json() for s in seqs]}


def cmd_audit(args) -> dict:
    report = audit(_rationals(args.t), seed=args.seed)
    print(report.table(), file=sys.stderr)
    if args.strict and report["S4_CLOSED_FORMS"].status == REFUTED:
        raise PublishedFormulaViolation("S4_CLOSED_FORMS refuted")
    return {"report": report.to_json()}


def cmd_length10(args) -> dict:
    (t,) = _rationals(args.t)
    hits = length10_search(t, HeightBound(args.height))
    return {"t": fmt_rational(t), "height": args.height,
            "hits": [h.to_json() for h in hits if not h.degenerate],
            "degenerate": [h.to_json() for h in hits if h.degenerate]}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gpforge", allow_abbrev=False,
                                 description="Geometric progressions on y^2 = a x^2n + b x^n + a.")
    ap.add_argument("--out", help="write JSON here instead of stdout")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", allow_abbrev=False, help="family members for given m")
    g.add_argument("--T", required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", default="1")
    g.add_argument("--m-cap", type=int, default=DEFAULT_M_CAP)
    g.add_argument("--integer-model", action="store_true")
    g.set_defaults(func=cmd_generate)

    e = sub.add_parser("example", allow_abbrev=False, help="the T=2, n=2 numeric example")
    e.add_argument("--integer-model", action="store_true")
    e.set_defaults(func=cmd_example)

    for name, func in (("verify", cmd_verify), ("search", cmd_search)):
        s = sub.add_parser(name, allow_abbrev=False)
        s.add_argument("--curve", help="trinomial a,b,n")
        s.add_argument("--poly", help="descending coefficients of f")
        if name == "verify":
            s.add_argument("--p", required=True)
            s.add_argument("--ratio", required=True)
            s.add_argument("--range", required=True)
        else:
            s.add_argument("--height", type=int, default=4)
            s.add_argument("--min-len", type=int, default=3)
            s.add_argument("--workers", type=int, default=1)
        s.set_defaults(func=func)

    a = sub.add_parser("audit", allow_abbrev=False, help="audit printed formulas")
    a.add_argument("--t", default="2,3,5/2")
    a.add_argument("--seed", type=int, default=0)
    a.add_argument("--strict", action="store_true")
    a.set_defaults(func=cmd_audit)

    L = sub.add_parser("length10", allow_abbrev=False, help="bounded search for ten-term extensions")
    L.add_argument("--t", required=True)
    L.add_argument("--height", type=int, default=50)
    L.set_defaults(func=cmd_length10)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        payload = args.func(args)
    except (UsageError, ValueError, ZeroDivisionError, ExceptionalPointError) as exc:
        print(f"gpforge: error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"gpforge: verification failure: {exc}", file=sys.stderr)
        return 1
    text = json.dumps({"schema": SCHEMA, "command": args.command, **payload}, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
