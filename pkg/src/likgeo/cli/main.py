"""``likgeo`` command line.

Exit codes: 0 success, 1 ``verify-gb`` found a non-basis, 2 bad spec or
arguments, 3 computation failed, timed out, or the method does not apply.
"""

from __future__ import annotations

import argparse
import json
import logging
import signal
import sys

from .report import COMMANDS, METHODS, ORDERS, MethodError, run
from .spec import SpecError, load_spec

EXIT_OK, EXIT_FALSE, EXIT_SPEC, EXIT_COMPUTE = 0, 1, 2, 3


class _Timeout(Exception):
    pass


def _alarm(signum, frame):
    raise _Timeout()


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="likgeo", description="Likelihood ideals of discrete statistical models.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("spec", help="spec file, '-' for stdin, or an inline document")
        p.add_argument("--method", choices=METHODS)
        p.add_argument("--saturate", choices=("full", "pplus"))
        p.add_argument("--order", choices=ORDERS)
        p.add_argument("--minor-size", choices=("rank", "literal"), dest="minor_size")
        p.add_argument("--seed", type=int)
        p.add_argument("--timeout", type=float, help="seconds; 0 disables")
        p.add_argument("--output", choices=("text", "json", "csv"), default="text")
    b = sub.add_parser("bench")
    b.add_argument("specs", nargs="*", help="spec files or inline documents")
    b.add_argument("--methods", default="independence,toric", help="comma separated")
    b.add_argument("--pplus", action="store_true", help="add a toric cell saturating by p_+ only")
    b.add_argument("--repetitions", type=int, default=3)
    b.add_argument("--timeout", type=float, default=60.0, help="seconds per repetition")
    b.add_argument("--jobs", type=int, default=1, help="concurrent cells (capped by LIKGEO_THREADS)")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--no-ml-degree", action="store_true", dest="no_ml")
    b.add_argument("--output", choices=("text", "json", "csv"), default="csv")
    return ap


def _bench(args) -> int:
    from . import bench as B

    specs = []
    for arg in args.specs:
        try:
            spec = load_spec(arg)
        except SpecError as exc:
            print(f"likgeo: spec error: {exc}", file=sys.stderr)
            return EXIT_SPEC
        specs.append((spec.label(), json.dumps(spec.raw)))
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    for m in methods:
        if m.removesuffix(B.PPLUS_SUFFIX) not in METHODS:
            print(f"likgeo: unknown method {m!r}", file=sys.stderr)
            return EXIT_SPEC
    if args.repetitions < 3:
        print("likgeo: at least 3 repetitions are required", file=sys.stderr)
        return EXIT_SPEC
    cells = B.bench(specs, methods, args.repetitions, args.timeout, args.pplus, args.jobs, args.seed, not args.no_ml)
    if args.output == "text":
        sys.stdout.write(B.grid(cells))
    elif args.output == "json":
        sys.stdout.write(json.dumps([dict(zip(B.HEADER, c.row())) for c in cells], indent=2) + "\n")
    else:
        sys.stdout.write(B.to_csv(cells))
    return EXIT_OK


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    if args.command == "bench":
        return _bench(args)
    try:
        spec = load_spec(args.spec)
    except SpecError as exc:
        print(f"likgeo: spec error: {exc}", file=sys.stderr)
        return EXIT_SPEC
    except OSError as exc:
        print(f"likgeo: cannot read spec: {exc}", file=sys.stderr)
        return EXIT_SPEC
    use_alarm = bool(args.timeout) and hasattr(signal, "SIGALRM")
    if use_alarm:
        signal.signal(signal.SIGALRM, _alarm)
        signal.setitimer(signal.ITIMER_REAL, args.timeout)
    try:
        report = run(spec, args.command, method=args.method, saturate=args.saturate, order=args.order, seed=args.seed, minor_size=args.minor_size)
    except _Timeout:
        print(f"likgeo: TIMEOUT after {args.timeout:g}s", file=sys.stderr)
        return EXIT_COMPUTE
    except MethodError as exc:
        print(f"likgeo: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    except (ValueError, RuntimeError, ArithmeticError) as exc:
        print(f"likgeo: computation failed: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    finally:
        if use_alarm:
            signal.setitimer(signal.ITIMER_REAL, 0)
    sys.stdout.write(report.render(args.output))
    if args.command == "verify-gb" and not report.is_groebner:
        return EXIT_FALSE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
