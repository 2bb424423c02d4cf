"""Command-line front end: ``analyze``, ``sweep`` and ``verify``.

Exit codes: 0 success, 1 verification failure, 2 parameter error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .contextuality import DEFAULT_EPSILON
from .correlations import DEFAULT_GRID
from .errors import DiscordError
from .records import FAMILIES, analyze, sweep, to_csv

EXIT_OK, EXIT_VERIFY, EXIT_PARAM, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


def real(text: str) -> float:
    """Parse a decimal or a fraction such as ``-1/3``."""
    try:
        return float(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError):
        try:
            return float(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not a real number: {text!r}") from None


def grid_size(text: str) -> tuple[int, int]:
    try:
        n_theta, n_phi = (int(v) for v in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must look like 64x128, got {text!r}") from None
    if n_theta < 1 or n_phi < 1:
        raise argparse.ArgumentTypeError(f"grid dimensions must be positive, got {text!r}")
    return n_theta, n_phi


def range_spec(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"range must be min:max:steps, got {text!r}")
    try:
        return real(parts[0]), real(parts[1]), int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad steps in range {text!r}") from None


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", default=None, help="output path (default: standard output)")
    p.add_argument("--epsilon", type=real, default=DEFAULT_EPSILON,
                   help="tolerance on |gap| for the consistency verdict")
    p.add_argument("--grid", type=grid_size, default=DEFAULT_GRID,
                   help="discord search grid as THETAxPHI (default 64x128)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="discordctx",
        description="Quantum discord and product-average consistency for two-qubit state families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze_p = sub.add_parser("analyze", help="report on a single state as JSON")
    fam_sub = analyze_p.add_subparsers(dest="family", required=True)
    for fam in FAMILIES.values():
        fp = fam_sub.add_parser(fam.name)
        for name in fam.params:
            fp.add_argument(f"--{name}", type=real, required=True)
        _common(fp)

    sweep_p = sub.add_parser("sweep", help="evaluate a parameter grid and write CSV")
    fam_sub = sweep_p.add_subparsers(dest="family", required=True)
    for fam in FAMILIES.values():
        fp = fam_sub.add_parser(fam.name)
        for name in fam.swept:
            lo, hi, n = fam.defaults[name]
            fp.add_argument(f"--{name}", type=range_spec, default=None, metavar="MIN:MAX:STEPS",
                            help=f"range for {name} (default {lo:g}:{hi:g}:{n})")
            fp.add_argument(f"--{name}-min", type=real, default=None)
            fp.add_argument(f"--{name}-max", type=real, default=None)
            fp.add_argument(f"--{name}-steps", type=int, default=None)
        fp.add_argument("--steps", type=int, default=None,
                        help="steps for every parameter without its own step count")
        _common(fp)

    verify_p = sub.add_parser("verify", help="run the acceptance battery")
    verify_p.add_argument("--out", default=None, help="also write the report to this path")
    return parser


def _ranges(fam, args) -> dict:
    ranges = {}
    for name in fam.swept:
        attr = name.replace("-", "_")
        lo, hi, n = fam.defaults[name]
        compact = getattr(args, attr)
        if compact is not None:
            lo, hi, n = compact
        elif args.steps is not None:
            n = args.steps
        lo = lo if getattr(args, f"{attr}_min") is None else getattr(args, f"{attr}_min")
        hi = hi if getattr(args, f"{attr}_max") is None else getattr(args, f"{attr}_max")
        n = n if getattr(args, f"{attr}_steps") is None else getattr(args, f"{attr}_steps")
        if n < 1:
            raise UsageError(f"--{name}: steps must be >= 1, got {n}")
        if lo > hi:
            raise UsageError(f"--{name}: min {lo} exceeds max {hi}")
        ranges[name] = (lo, hi, n)
    return ranges


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(out, "w", newline="\n", encoding="utf-8") as fh:
        fh.write(text)


def cmd_analyze(args) -> int:
    fam = FAMILIES[args.family]
    params = {k: getattr(args, k) for k in fam.params}
    if args.epsilon <= 0:
        raise UsageError(f"--epsilon must be positive, got {args.epsilon}")
    try:
        record = analyze(fam, params, args.epsilon, args.grid)
    except DiscordError as exc:
        raise UsageError(str(exc)) from exc
    _emit(json.dumps(record) + "\n", args.out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    fam = FAMILIES[args.family]
    ranges = _ranges(fam, args)
    if args.epsilon <= 0:
        raise UsageError(f"--epsilon must be positive, got {args.epsilon}")
    result = sweep(fam, ranges, args.epsilon, args.grid)
    _emit(to_csv(fam, result.records), args.out)
    print(
        f"cells={result.cells} skipped={result.skipped} "
        f"max_discord={result.max_discord:.12g} max_abs_gap={result.max_abs_gap:.12g}",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    from .acceptance import run_all

    results = run_all()
    lines = [r.line() for r in results]
    ok = all(r.passed for r in results)
    lines.append(f"{'ALL PASS' if ok else 'FAILED'}: {sum(r.passed for r in results)}/{len(results)}")
    text = "\n".join(lines) + "\n"
    sys.stdout.write(text)
    if args.out:
        _emit(text, args.out)
    return EXIT_OK if ok else EXIT_VERIFY


_NEGATIVE_VALUE = re.compile(r"^-[\d.]")


def _attach_negative_values(argv: list[str]) -> list[str]:
    """Rewrite ``--opt -0.2:0.2:9`` as ``--opt=-0.2:0.2:9``.

    argparse only recognises plain negative numbers as values; ranges and
    fractions starting with a minus sign would otherwise look like options.
    """
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if (tok.startswith("--") and "=" not in tok and i + 1 < len(argv)
                and _NEGATIVE_VALUE.match(argv[i + 1])):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_attach_negative_values(argv))
    handler = {"analyze": cmd_analyze, "sweep": cmd_sweep, "verify": cmd_verify}[args.command]
    try:
        return handler(args)
    except UsageError as exc:
        print(f"discordctx: error: {exc}", file=sys.stderr)
        return EXIT_PARAM
    except OSError as exc:
        print(f"discordctx: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
