"""Command-line front end: ``dyckdiv <command> ...``.

Exit codes: 0 success (or "yes" for ``dense``), 1 a "no" verdict or a failed
``check``, 2 usage errors and internal disagreement between deciders.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from . import __version__
from .checks import run_battery
from .classes import hooley_class, is_regular, lambda_class, right_limit_class
from .divisors import (
    delta,
    delta_bruteforce,
    divisors,
    is_densely_divisible,
    is_densely_divisible_sweep,
    is_densely_divisible_via_word,
)
from .numerics import PositiveSet, format_rational, parse_rational
from .render import RenderSpec, path_points
from .topology import components, step_function
from .words import (
    gamma,
    height,
    hooley_irreducible_factors,
    irreducible_factors,
    is_dyck,
    is_hooley_dyck,
    omega,
    theta,
)

KINDS = ("class", "hooley", "right-limit")

EXIT_YES, EXIT_NO, EXIT_DISAGREE = 0, 1, 2


class UsageError(Exception):
    pass


def _lambda_arg(text: str) -> Fraction:
    try:
        lam = parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if lam <= 1:
        raise argparse.ArgumentTypeError(f"lambda must exceed 1, got {format_rational(lam)}")
    return lam


def _lambda_list(text: str) -> List[Fraction]:
    lams = [_lambda_arg(part) for part in text.split(",") if part.strip()]
    if not lams:
        raise argparse.ArgumentTypeError("need at least one lambda")
    return lams


def _set_arg(text: str) -> PositiveSet:
    try:
        return PositiveSet.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {n}")
    return n


def show_word(w: str) -> str:
    return w if w else "ε"


def word_metadata(w: str) -> Dict[str, Any]:
    """Metadata recomputable from the word alone (used for JSON round trips)."""
    meta: Dict[str, Any] = {"length": len(w)}
    if "c" in w:
        meta["theta"] = theta(w) if is_hooley_dyck(w) else None
        meta["omega"] = None
        meta["height"] = height(gamma(w)) if is_hooley_dyck(w) else None
    elif is_dyck(w):
        meta["omega"] = omega(w)
        meta["theta"] = omega(w)
        meta["height"] = height(w)
    else:
        meta.update(omega=None, theta=None, height=None)
    return meta


def _emit(args: argparse.Namespace, payload: Dict[str, Any], text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, ensure_ascii=False))
    else:
        print(text)


def _target(args: argparse.Namespace) -> PositiveSet:
    if args.set is not None:
        return args.set
    if args.n is None:
        raise UsageError("give an integer n or --set")
    return divisors(args.n).divisors


def _subject(args: argparse.Namespace) -> Dict[str, Any]:
    if args.set is not None:
        return {"set": [format_rational(x) for x in args.set]}
    return {"n": args.n}


def _kind_word(S: PositiveSet, lam: Fraction, kind: str) -> str:
    if kind == "class":
        return lambda_class(S, lam)
    if kind == "hooley":
        return hooley_class(S, lam)
    return right_limit_class(S, lam)


def cmd_word(args: argparse.Namespace) -> int:
    S = _target(args)
    w = _kind_word(S, args.lam, args.kind)
    payload = {**_subject(args), "lambda": format_rational(args.lam), "kind": args.kind, "word": w}
    payload.update(word_metadata(w))
    payload["regular"] = is_regular(S, args.lam)
    counter = "theta" if args.kind == "hooley" else "omega"
    lines = [
        show_word(w),
        f"  length:  {payload['length']}",
        f"  {counter}:   {payload[counter]}",
        f"  height:  {payload['height']}",
        f"  regular: {'yes' if payload['regular'] else 'no'}",
    ]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_factor(args: argparse.Namespace) -> int:
    if args.word is not None:
        w = args.word
        payload: Dict[str, Any] = {}
    else:
        S = _target(args)
        w = _kind_word(S, args.lam, args.kind)
        payload = {**_subject(args), "lambda": format_rational(args.lam), "kind": args.kind}
    if "c" in w:
        factors = hooley_irreducible_factors(w)
        payload.update(word=w, factors=factors, theta=len(factors))
    else:
        factors = irreducible_factors(w)
        payload.update(word=w, factors=factors, omega=len(factors))
    text = " · ".join(factors) if factors else "ε"
    _emit(args, payload, f"{show_word(w)}\n  = {text}\n  {len(factors)} irreducible factor(s)")
    return 0


def cmd_dense(args: argparse.Namespace) -> int:
    n, lam = _require_n(args), args.lam
    verdicts = {
        "ratio": is_densely_divisible(n, lam),
        "sweep": is_densely_divisible_sweep(n, lam),
        "word": is_densely_divisible_via_word(n, lam),
    }
    agree = len(set(verdicts.values())) == 1
    verdict = verdicts["ratio"]
    payload = {
        "n": n,
        "lambda": format_rational(lam),
        "densely_divisible": verdict if agree else None,
        "deciders": verdicts,
        "components": components(divisors(n).divisors, lam).count,
        "omega": omega(lambda_class(divisors(n).divisors, lam)),
    }
    if agree:
        head = f"{'yes' if verdict else 'no'} (3/3 deciders agree)"
    else:
        head = "DISAGREEMENT between deciders: " + ", ".join(f"{k}={v}" for k, v in verdicts.items())
    body = [head] + [f"  {k}: {'yes' if v else 'no'}" for k, v in verdicts.items()]
    _emit(args, payload, "\n".join(body))
    if not agree:
        return EXIT_DISAGREE
    return EXIT_YES if verdict else EXIT_NO


def cmd_delta(args: argparse.Namespace) -> int:
    n, lam = _require_n(args), args.lam
    d_word, d_brute = delta(n, lam), delta_bruteforce(n, lam)
    payload = {"n": n, "lambda": format_rational(lam), "height": d_word, "delta": d_word, "delta_bruteforce": d_brute}
    _emit(args, payload, f"Delta_{format_rational(lam)}({n}) = {d_word}  (word height {d_word}, brute force {d_brute})")
    return 0 if d_word == d_brute else EXIT_DISAGREE


def cmd_components(args: argparse.Namespace) -> int:
    S = _target(args)
    rep = components(S, args.lam)
    lam_s = format_rational(args.lam)
    spans = [
        {"start": format_rational(a), "end": format_rational(args.lam * b), "log_approx": [round(x, 6), round(y, 6)]}
        for (a, b), (x, y) in zip(rep.spans, rep.log_spans())
    ]
    payload = {**_subject(args), "lambda": lam_s, "components": rep.count, "spans": spans}
    lines = [f"components: {rep.count}"]
    for sp in spans:
        x, y = sp["log_approx"]
        lines.append(f"  [{sp['start']}, {sp['end']}]   log ≈ [{x:.6f}, {y:.6f}]")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_scan(args: argparse.Namespace) -> int:
    S = _target(args)
    report = step_function(S)
    rows = []
    starts: List[Optional[Fraction]] = [None] + list(report.breakpoints)
    for i, start in enumerate(starts):
        probe = start if start is not None else (Fraction(1) + (report.breakpoints[0] if report.breakpoints else 3)) / 2
        end = report.breakpoints[i] if i < len(report.breakpoints) else None
        rows.append(
            {
                "from": format_rational(start) if start is not None else "1",
                "from_closed": start is not None,
                "to": format_rational(end) if end is not None else "inf",
                "omega": omega(lambda_class(S, probe)),
                "components": components(S, probe).count,
            }
        )
    agree = all(r["omega"] == r["components"] for r in rows)
    payload = {**_subject(args), "breakpoints": [format_rational(b) for b in report.breakpoints], "intervals": rows}
    lines = [f"{'lambda interval':<24} {'omega':>6} {'components':>11}"]
    for r in rows:
        interval = f"{'[' if r['from_closed'] else '('}{r['from']}, {r['to']})"
        lines.append(f"{interval:<24} {r['omega']:>6} {r['components']:>11}")
    if not report.breakpoints:
        lines.append("no breakpoints")
    _emit(args, payload, "\n".join(lines))
    return 0 if agree else EXIT_DISAGREE


def cmd_render(args: argparse.Namespace) -> int:
    w = args.word
    if not w:
        raise UsageError("render needs a nonempty word")
    if set(w) - set("abc"):
        raise UsageError(f"word {w!r} may only use the letters a, b, c")
    if args.format == "json":
        print(json.dumps({"word": w, "points": path_points(w)}))
        return 0
    fmt = "svg" if args.format == "svg" else "ascii"
    out = RenderSpec(w, fmt, args.cell_size).render()
    sys.stdout.write(out if out.endswith("\n") else out + "\n")
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    total, failure = run_battery(args.n_max, args.lambdas, jobs=args.jobs)
    if failure is not None:
        _emit(args, {"passed": False, "checks": total, "failure": str(failure)}, f"FAILED after {total} checks: {failure}")
        return EXIT_NO
    _emit(args, {"passed": True, "checks": total}, f"all {total} checks passed")
    return 0


def _require_n(args: argparse.Namespace) -> int:
    if args.set is not None:
        raise UsageError(f"{args.command} works on integers only; --set is not supported")
    if args.n is None:
        raise UsageError("an integer n is required")
    return args.n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--lambda", dest="lam", type=_lambda_arg, default=Fraction(2), metavar="p/q|decimal",
                        help="scale factor lambda > 1 (default: 2)")
    common.add_argument("--format", choices=("text", "json", "svg", "ascii"), default="text")
    common.add_argument("--set", type=_set_arg, default=None, metavar="r1,r2,...",
                        help="use this set of positive rationals instead of the divisors of n")

    parser = argparse.ArgumentParser(prog="dyckdiv", description="Dyck-word view of the divisors of an integer.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("word", parents=[common], help="print a class word and its invariants")
    p.add_argument("n", type=_positive_int, nargs="?")
    p.add_argument("--kind", choices=KINDS, default="class")
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("factor", parents=[common], help="irreducible factorization of a word")
    p.add_argument("n", type=_positive_int, nargs="?")
    p.add_argument("--kind", choices=KINDS, default="class")
    p.add_argument("--word", default=None, help="factor this literal word instead")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("dense", parents=[common], help="decide lambda-dense divisibility three ways")
    p.add_argument("n", type=_positive_int, nargs="?")
    p.set_defaults(func=cmd_dense)

    p = sub.add_parser("delta", parents=[common], help="generalized Hooley Delta")
    p.add_argument("n", type=_positive_int, nargs="?")
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("components", parents=[common], help="connected components of the interval union")
    p.add_argument("n", type=_positive_int, nargs="?")
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("scan", parents=[common], help="omega and component count across all lambda")
    p.add_argument("n", type=_positive_int, nargs="?")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("render", parents=[common], help="draw a word as a lattice path")
    p.add_argument("word")
    p.add_argument("--cell-size", type=_positive_int, default=20)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("check", parents=[common], help="run the cross-check battery")
    p.add_argument("n_max", type=_positive_int)
    p.add_argument("--lambdas", type=_lambda_list, default=[Fraction(3, 2), Fraction(2), Fraction(7, 3)])
    p.add_argument("--jobs", type=_positive_int, default=1)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        parser.error(str(exc))
    return 2


if __name__ == "__main__":
    raise SystemExit(main())
