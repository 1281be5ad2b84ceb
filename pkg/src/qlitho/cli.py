"""Command-line front end: ``qlitho {pattern,verify,rates,oracle}``.

Exit codes: 0 ok, 1 a check failed, 2 usage/config error, 3 I/O error,
4 internal-consistency error. Diagnostics go to stderr as one line.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import __version__
from .dosage import DosageQuery, dosage_expectation, dosage_matrix_oracle, ORACLE_MAX_CUTOFF
from .errors import ConsistencyError, CutoffTooSmall, NonPositiveInput, ParseError, QLithoError
from .fock import make_state
from .pattern import emit_curve, pattern_stats, render_csv, sweep
from .rates import (
    DEFAULT_COHERENCE_TIME,
    DEFAULT_CROSS_SECTION,
    DEFAULT_N,
    DEFAULT_PACKET_AREA,
    FeasibilityParams,
    feasibility_report,
    format_report,
)
from .states import coherent_truncated, fock_product, load_state, noon

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO, EXIT_INTERNAL = 0, 1, 2, 3, 4

VERIFY_POINTS = 64
VERIFY_TOL = 1e-12
ORACLE_TOL = 1e-10
ORACLE_PHASES = 16


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_state_source(p, required=True):
    src = p.add_mutually_exclusive_group(required=required)
    src.add_argument("--noon", type=int, metavar="N", help="NOON state with N photons")
    src.add_argument("--fock", type=int, nargs=2, metavar=("NC", "ND"), help="product Fock state |NC, ND>")
    src.add_argument("--coherent", type=complex, nargs=2, metavar=("ALPHA", "BETA"),
                     help="product coherent state, truncated at --cutoff per mode")
    src.add_argument("--state", metavar="FILE", help="state JSON file")
    p.add_argument("--theta", type=float, default=0.0, help="NOON branch phase in radians (default 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qlitho", description="Multi-photon dosage patterns and exposure-rate bounds.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("pattern", help="sweep the K-photon dosage over phi and report fringe statistics")
    _add_state_source(p)
    p.add_argument("--k", type=int, required=True, help="absorption order K")
    p.add_argument("--points", type=int, default=64, help="phi samples, a power of two >= 8 (default 64)")
    p.add_argument("--mix", type=float, default=0.5, help="power fraction of mode C in the field (default 0.5)")
    p.add_argument("--cutoff", type=int, default=12, help="per-mode cutoff for --coherent (default 12)")
    p.add_argument("--out", metavar="PATH", help="write the curve here")
    p.add_argument("--format", choices=("csv", "json"), help="curve format (default: from --out suffix, else csv)")

    p = sub.add_parser("verify", help="check NOON flatness for K<N and the 1+cos(2N phi) law at K=N")
    p.add_argument("--noon", type=int, required=True, metavar="N")
    p.add_argument("--kmin", type=int, default=1, help="smallest K to check (default 1)")
    p.add_argument("--points", type=int, default=VERIFY_POINTS)

    p = sub.add_parser("rates", help="feasibility thresholds (wavelength in nm, areas in m^2, times in s)")
    p.add_argument("--wavelength", type=float, default=200.0, help="wavelength in nm (default 200)")
    p.add_argument("--cross-section", type=float, default=DEFAULT_CROSS_SECTION,
                   help="single-photon absorption cross-section in m^2 (default 1e-19)")
    p.add_argument("--area", type=float, default=DEFAULT_PACKET_AREA, help="wave packet cross section in m^2 (default 1e-12)")
    p.add_argument("--tau", type=float, default=DEFAULT_COHERENCE_TIME, help="coherence time in s (default 1e-12)")
    p.add_argument("--n", type=int, default=DEFAULT_N, help="photon number N (default 2)")
    p.add_argument("--json", action="store_true", help="print the report as JSON")

    p = sub.add_parser("oracle", help="compare the fast dosage path with the dense-matrix oracle")
    _add_state_source(p, required=False)
    p.add_argument("--cutoff", type=int, default=8, help=f"dense basis cutoff per mode, <= {ORACLE_MAX_CUTOFF} (default 8)")
    p.add_argument("--k", type=int, help="only this K (default 1..6)")
    return parser


def _load_source(args):
    if args.noon is not None:
        return noon(args.noon, args.theta)
    if args.fock is not None:
        return fock_product(*args.fock)
    if args.coherent is not None:
        return coherent_truncated(*args.coherent, getattr(args, "cutoff", 12))[0]
    if args.state is not None:
        state = load_state(args.state)
        return state if state.normalized else make_state(state.terms, normalize=True)
    return None


def cmd_pattern(args, out) -> int:
    points = args.points
    if points < 8 or points & (points - 1):
        raise UsageError(f"--points must be a power of two >= 8, got {points}")
    state = _load_source(args)
    grid = sweep(state, args.k, points, args.mix)
    stats = pattern_stats(grid)
    if args.out:
        fmt = args.format or ("json" if args.out.lower().endswith(".json") else "csv")
        emit_curve(grid, stats, fmt, args.out)
    elif args.format == "csv":
        out.write(render_csv(grid, stats))
    period = "FLAT" if stats.is_flat else f"{stats.dominant_period:.12g}"
    enhancement = "n/a" if stats.enhancement is None else f"{stats.enhancement:.12g}"
    out.write(f"k={args.k} points={points} visibility={stats.visibility:.12g} "
              f"period={period} enhancement={enhancement}\n")
    return EXIT_OK


def verify_noon(n: int, points: int = VERIFY_POINTS, kmin: int = 1):
    """Yield ``(label, passed, detail)`` for each NOON law check."""
    state = noon(n)
    phis = 2.0 * np.pi * np.arange(points) / points
    for k in range(max(kmin, 1), n + 1):
        values = np.array([dosage_expectation(state, DosageQuery.at(k, float(p))).value for p in phis])
        if k < n:
            expected = 2.0 ** -k * math.comb(n, k)
            spread = float(values.max() - values.min())
            err = float(np.max(np.abs(values - expected)))
            ok = spread <= VERIFY_TOL and err <= VERIFY_TOL
            yield f"K={k} flat at 2^-{k} C({n},{k}) = {expected:.12g}", ok, f"spread={spread:.3g} err={err:.3g}"
        else:
            expected = 2.0 ** -n * (1.0 + np.cos(2 * n * phis))
            err = float(np.max(np.abs(values - expected)))
            yield f"K={k} fringe 2^-{n}(1+cos {2 * n} phi), period pi/{n}", err <= VERIFY_TOL, f"err={err:.3g}"


def cmd_verify(args, out) -> int:
    if args.noon < 1:
        raise UsageError(f"--noon must be >= 1, got {args.noon}")
    if args.points < 8:
        raise UsageError("--points must be >= 8")
    failed = 0
    for label, ok, detail in verify_noon(args.noon, args.points, args.kmin):
        failed += not ok
        out.write(f"{'PASS' if ok else 'FAIL'}  {label}  ({detail})\n")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_rates(args, out) -> int:
    try:
        params = FeasibilityParams(args.wavelength * 1e-9, args.area, args.tau, args.cross_section, args.n)
    except NonPositiveInput as exc:
        raise UsageError(str(exc)) from None
    report = feasibility_report(params)
    out.write((report.to_json() if args.json else format_report(report)) + "\n")
    return EXIT_OK


def oracle_states(cutoff: int):
    """Deterministic test states that fit inside ``cutoff`` photons per mode."""
    top = min(cutoff, 8)
    for n in range(1, top + 1):
        yield f"noon({n})", noon(n)
        yield f"noon({n}, theta=1)", noon(n, 1.0)
    for n_c in range(top + 1):
        yield f"fock({n_c},{top - n_c})", fock_product(n_c, top - n_c)
    for seed in range(1, 6):
        terms = {
            (i, j): complex(math.cos(seed * (1.3 * i + 0.7 * j)), math.sin(seed * (0.4 * i - 1.1 * j))) / (1 + i + j)
            for i in range(top + 1)
            for j in range(top + 1 - i)
        }
        yield f"mixed#{seed}", make_state(terms)


def oracle_deviation(state, ks, cutoff: int, phases: int = ORACLE_PHASES) -> float:
    worst = 0.0
    for k in ks:
        for p in 2.0 * np.pi * np.arange(phases) / phases:
            q = DosageQuery.at(k, float(p))
            fast = dosage_expectation(state, q).value
            dense = dosage_matrix_oracle(state, q, cutoff)
            worst = max(worst, abs(fast - dense))
    return worst


def cmd_oracle(args, out) -> int:
    if not 0 <= args.cutoff <= ORACLE_MAX_CUTOFF:
        raise UsageError(f"--cutoff must lie in 0..{ORACLE_MAX_CUTOFF}")
    ks = [args.k] if args.k is not None else list(range(1, 7))
    if any(k < 1 for k in ks):
        raise UsageError("--k must be >= 1")
    state = _load_source(args)
    cases = [("state", state)] if state is not None else list(oracle_states(args.cutoff))
    worst = 0.0
    for label, s in cases:
        dev = oracle_deviation(s, ks, args.cutoff)
        worst = max(worst, dev)
        out.write(f"{label:<20} max|fast - dense| = {dev:.3e}\n")
    ok = worst <= ORACLE_TOL
    out.write(f"{'PASS' if ok else 'FAIL'}  max deviation {worst:.3e} (tolerance {ORACLE_TOL:g})\n")
    return EXIT_OK if ok else EXIT_FAIL


COMMANDS = {"pattern": cmd_pattern, "verify": cmd_verify, "rates": cmd_rates, "oracle": cmd_oracle}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"qlitho: error: {exc}\n")
        return EXIT_USAGE
    except CutoffTooSmall as exc:
        err.write(f"qlitho: CutoffTooSmall: {exc}\n")
        return EXIT_USAGE
    except ConsistencyError as exc:
        err.write(f"qlitho: internal error: {exc}\n")
        return EXIT_INTERNAL
    except ParseError as exc:
        err.write(f"qlitho: {type(exc).__name__}: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        err.write(f"qlitho: I/O error: {exc}\n")
        return EXIT_IO
    except (QLithoError, ValueError) as exc:
        err.write(f"qlitho: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
