"""Command-line front end: ``qbias expand | verify | bias-table``.

Results go to stdout, diagnostics (timings, errors) to stderr. Exit codes:
0 on success / overall PASS, 1 on a FAIL verdict, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from typing import Sequence

from . import sweeps
from .builders import SeriesId, SeriesKind
from .partitions import bias_counts, validate_residues

DEFAULT_MAX_ORDER = 2000
DEFAULT_MAX_GRID = 20

# target -> (aliases, default s-range, default m-range, default N)
_TARGETS = {
    "conj5": (("inner",), "1..12", "1..12", 200),
    "conj4": (("double",), None, "2..10", 150),
    "rearrange": ((), None, "2..8", 100),
    "proof": ((), "1..8", "1..8", 120),
    "thm1": (("parity",), None, None, 200),
    "thm3": (("residue",), None, "2..6", 100),
    "full": ((), None, "2..8", 100),
}
_ALIASES = {alias: name for name, (aliases, *_) in _TARGETS.items() for alias in aliases}


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """Parse ``"3"``, ``"1..12"``, ``"1-12"`` or ``"2,4,7"`` into a list of ints."""
    text = text.strip()
    try:
        if "," in text:
            return [int(x) for x in text.split(",") if x.strip()]
        for sep in ("..", "-"):
            if sep in text.lstrip("-"):
                lo, hi = text.split(sep, 1) if sep == ".." else text.rsplit("-", 1)
                lo_i, hi_i = int(lo), int(hi)
                if hi_i < lo_i:
                    raise UsageError(f"empty range {text!r}")
                return list(range(lo_i, hi_i + 1))
        return [int(text)]
    except ValueError:
        raise UsageError(f"malformed range {text!r}") from None


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-N", "--order", type=int, help="truncation order / largest n")
    common.add_argument("--json", action="store_true", help="emit JSON instead of tab-separated text")
    common.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER,
                        help=f"refuse orders above this (default {DEFAULT_MAX_ORDER})")

    parser = argparse.ArgumentParser(prog="qbias", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="print coefficients of a series")
    p.add_argument("kind", choices=[k.value for k in SeriesKind])
    p.add_argument("--s", type=int)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="run a verification sweep")
    p.add_argument("--target", required=True, choices=sorted(_TARGETS) + sorted(_ALIASES))
    p.add_argument("--s", help="range of s, e.g. 1..12")
    p.add_argument("--m", help="range of m, e.g. 2..10")
    p.add_argument("--max-grid", type=int, default=DEFAULT_MAX_GRID,
                   help=f"largest allowed range length (default {DEFAULT_MAX_GRID})")

    p = sub.add_parser("bias-table", parents=[common], help="tabulate p_{a,b,m}(n) against p_{b,a,m}(n)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    return parser


def _check_order(order: int, args) -> None:
    if order < 0:
        raise UsageError(f"order must be >= 0, got {order}")
    if order > args.max_order:
        raise UsageError(f"order {order} exceeds cap {args.max_order}; raise --max-order")


def _cmd_expand(args, out) -> int:
    if args.order is None:
        raise UsageError("expand requires -N/--order")
    _check_order(args.order, args)
    kind = SeriesKind(args.kind)
    if kind is SeriesKind.INNER and args.s is None:
        raise UsageError("inner series requires --s")
    try:
        sid = SeriesId(kind, args.order, args.m, args.s if kind is SeriesKind.INNER else None)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    coeffs = sid.build().coeffs
    if args.json:
        payload = {"series": kind.value, "s": sid.s, "m": sid.m, "N": sid.order,
                   "coefficients": [str(c) for c in coeffs]}
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write("".join(f"{n}\t{c}\n" for n, c in enumerate(coeffs)))
    return 0


def _grid(text: str | None, default: str | None, name: str, lowest: int, args) -> list[int]:
    values = parse_range(text if text is not None else default)
    if len(values) > args.max_grid:
        raise UsageError(f"--{name} has {len(values)} values, cap is {args.max_grid}; raise --max-grid")
    if min(values) < lowest:
        raise UsageError(f"--{name} values must be >= {lowest}")
    return values


def _cmd_verify(args, out, err) -> int:
    target = _ALIASES.get(args.target, args.target)
    _, s_default, m_default, n_default = _TARGETS[target]
    order = n_default if args.order is None else args.order
    _check_order(order, args)

    if target == "conj5":
        report = sweeps.sweep_inner(_grid(args.s, s_default, "s", 1, args),
                                    _grid(args.m, m_default, "m", 1, args), order)
    elif target == "proof":
        report = sweeps.sweep_proof(_grid(args.s, s_default, "s", 1, args),
                                    _grid(args.m, m_default, "m", 1, args), order)
    elif target == "conj4":
        report = sweeps.sweep_double(_grid(args.m, m_default, "m", 2, args), order)
    elif target == "rearrange":
        report = sweeps.sweep_rearrangement(_grid(args.m, m_default, "m", 2, args), order)
    elif target == "full":
        report = sweeps.sweep_full(_grid(args.m, m_default, "m", 2, args), order)
    elif target == "thm3":
        report = sweeps.sweep_bias(_grid(args.m, m_default, "m", 2, args), order)
    else:
        report = sweeps.sweep_parity(order)

    out.write(report.to_json() + "\n" if args.json else report.to_text())
    err.write(f"{report.identity_name}: {report.overall} in {report.elapsed_ms:.1f} ms\n")
    return 0 if report.passed else 1


def _cmd_bias_table(args, out) -> int:
    if args.order is None:
        raise UsageError("bias-table requires -N/--order")
    _check_order(args.order, args)
    try:
        validate_residues(args.a, args.b, args.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    fwd = bias_counts(args.a, args.b, args.m, args.order)
    back = bias_counts(args.b, args.a, args.m, args.order)
    rows = [(n, x, y, x - y) for n, (x, y) in enumerate(zip(fwd, back))]
    if args.json:
        payload = {"a": args.a, "b": args.b, "m": args.m, "N": args.order,
                   "rows": [{"n": n, "forward": x, "backward": y, "difference": d} for n, x, y, d in rows]}
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write("".join(f"{n}\t{x}\t{y}\t{d}\n" for n, x, y, d in rows))
    return 0


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _build_parser()
    try:
        with contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "expand":
            return _cmd_expand(args, out)
        if args.command == "verify":
            return _cmd_verify(args, out, err)
        return _cmd_bias_table(args, out)
    except (UsageError, ValueError) as exc:
        err.write(f"qbias: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
