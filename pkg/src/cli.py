"""
SKEWRANK - CLI Entry Point

Commands:
- skewrank validate --spec FILE: check a ring spec and its automorphism
- skewrank rank --spec FILE: radical, primes and Goldie rank
- skewrank alpha-prime --spec FILE --ideal "v1;v2": alpha-primeness of an ideal
- skewrank invert --spec FILE --series FILE: inverse of a unit series
- skewrank induced --spec FILE --ideal "v1;v2": induced ideal IB_N
- skewrank verify --spec FILE: every scenario for (A, alpha)
- skewrank selftest: the built-in suite

--spec also accepts suite:NAME for a built-in context.
Exit codes: 0 ok, 1 a checked claim failed, 2 bad input, 3 resource cap.
"""

import sys
import argparse
import logging
from pathlib import Path
from typing import List, Optional

PROJECT_ROOT = Path(__file__).parent.parent.resolve()
sys.path.insert(0, str(PROJECT_ROOT / "src"))

from alpha_ideals import alpha_orbit, is_alpha_ideal, is_alpha_prime
from config import get_settings
from errors import SkewRankError, SpecError
from ideals import quotient_algebra
from laurent import SkewLaurent, laurent_invert
from modules import regular_module, uniform_dimension
from report import Report
from series import invert_unit
from spec_io import dump_json, ideal_to_string, load_context, load_series, parse_ideal, series_to_doc
from structure import enumerate_prime_ideals, goldie_rank, is_semiprime, is_semiprime_ideal, jacobson_radical
from suite import run_selftest
from truncation import build_truncation, induced_ideal_truncated
from verify import verify_context, verify_induced_corollary

logger = logging.getLogger("skewrank.cli")


def setup_logging(level: str):
    logging.basicConfig(level=getattr(logging, level.upper(), logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def _require(args, name: str):
    value = getattr(args, name)
    if value is None:
        raise SpecError(f"--{name} is required for '{args.command}'")
    return value


def _precision(args, default: int) -> int:
    N = args.precision if args.precision is not None else default
    if N < 1:
        raise SpecError(f"precision must be positive, got {N}")
    return N


# ============================================
# Commands
# ============================================

def cmd_validate(args) -> Report:
    """Check a ring spec"""
    ctx = load_context(_require(args, "spec"))
    A = ctx.algebra
    report = Report(f"validate {ctx.name}")
    report.data.update({"p": A.p, "dim": A.dim, "basis": list(A.basis_names),
                        "alpha_order": ctx.alpha.order})
    # construction already raised on any failure
    report.check("associative", True)
    report.check("unit", True, [int(c) for c in A.unit])
    report.check("automorphism", True)
    return report.finish()


def cmd_rank(args) -> Report:
    """Radical, semiprimeness, primes, rank"""
    ctx = load_context(_require(args, "spec"))
    A = ctx.algebra
    report = Report(f"rank {ctx.name}")
    J = jacobson_radical(A)
    semiprime = is_semiprime(A)
    primes = enumerate_prime_ideals(A)
    report.data.update({"dim": A.dim, "radical_dim": J.dim, "semiprime": semiprime,
                        "primes": [ideal_to_string(P) or "0" for P in primes]})
    if semiprime:
        rank = goldie_rank(A)
        report.data["rank"] = rank
        report.check("goldie_rank_matches_uniform_dimension", True, {"rank": rank})
    else:
        udim = uniform_dimension(regular_module(A), radical=J.basis)
        report.data["udim"] = udim
    return report.finish()


def cmd_alpha_prime(args) -> Report:
    """alpha-primeness of an ideal"""
    ctx = load_context(_require(args, "spec"))
    I = parse_ideal(ctx.algebra, args.ideal)
    report = Report(f"alpha-prime {ctx.name} I=<{ideal_to_string(I) or '0'}>")
    stable = is_alpha_ideal(I, ctx.alpha)
    report.data["alpha_ideal"] = stable
    report.data["orbit_length"] = len(alpha_orbit(I, ctx.alpha))
    if stable and not I.is_whole():
        report.data["alpha_prime"] = is_alpha_prime(I, ctx.alpha)
        report.data["semiprime"] = is_semiprime_ideal(ctx.algebra, I)
    return report.finish()


def cmd_invert(args) -> dict:
    """Inverse of a series (or Laurent series) with unit leading term"""
    ctx = load_context(_require(args, "spec"))
    f = load_series(ctx, _require(args, "series"))
    if isinstance(f, SkewLaurent):
        return series_to_doc(laurent_invert(f))
    if args.precision is not None:
        f = f.truncate(_precision(args, f.precision))
    return series_to_doc(invert_unit(f))


def cmd_induced(args) -> Report:
    """IB_N and, when A/I is semiprime, the rank corollary"""
    ctx = load_context(_require(args, "spec"))
    N = _precision(args, get_settings().verify_precision)
    I = parse_ideal(ctx.algebra, args.ideal)
    if not I.is_whole() and is_semiprime(quotient_algebra(ctx.algebra, I).algebra):
        return verify_induced_corollary(ctx, I, N)
    report = Report(f"induced {ctx.name} I=<{ideal_to_string(I) or '0'}> N={N}")
    induced = induced_ideal_truncated(I, build_truncation(ctx, N))
    report.data["dim_IB_N"] = induced.ideal.dim
    report.check("descriptions_agree", True)
    report.check("quotient_isomorphism", induced.iso is not None or I.is_whole())
    return report.finish()


def cmd_verify(args) -> Report:
    ctx = load_context(_require(args, "spec"))
    N = _precision(args, get_settings().verify_precision)
    ideals = [parse_ideal(ctx.algebra, args.ideal)] if args.ideal is not None else None
    return verify_context(ctx, N, ideals)


def cmd_selftest(args) -> Report:
    N = _precision(args, get_settings().verify_precision)
    return run_selftest(N=N)


COMMANDS = {
    "validate": (cmd_validate, "Check a ring spec and its automorphism"),
    "rank": (cmd_rank, "Radical, prime ideals and Goldie rank"),
    "alpha-prime": (cmd_alpha_prime, "Is the ideal alpha-prime?"),
    "invert": (cmd_invert, "Invert a series with unit constant term"),
    "induced": (cmd_induced, "Induced ideal IB_N and the rank corollary"),
    "verify": (cmd_verify, "Run every scenario for (A, alpha)"),
    "selftest": (cmd_selftest, "Run the built-in suite"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewrank",
        description="SKEWRANK - Skew power series over finite algebras"
    )
    subparsers = parser.add_subparsers(dest="command", help="Commands")
    for name, (func, help_text) in COMMANDS.items():
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("--spec", help="Ring spec JSON file, or suite:NAME")
        sub.add_argument("--series", help="Series JSON file")
        sub.add_argument("--ideal", help='Ideal generators "v1;v2;..."')
        sub.add_argument("--precision", "-N", type=int, help="Precision / truncation order")
        sub.add_argument("--format", choices=["text", "json"], default="text")
        sub.add_argument("--oracle", choices=["on", "off"], help="Brute-force cross-checks")
        sub.add_argument("--verbose", "-v", action="store_true")
        sub.set_defaults(func=func)
    return parser


def _emit(result, fmt: str):
    if isinstance(result, Report):
        print(result.to_json() if fmt == "json" else result.to_text())
    elif fmt == "json":
        print(dump_json(result))
    else:
        for key, value in result.items():
            print(f"{key}: {value}")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return 2

    settings = get_settings()
    setup_logging("DEBUG" if args.verbose else settings.log_level)
    if args.oracle is not None:
        settings.oracle = args.oracle == "on"

    try:
        result = args.func(args)
    except SkewRankError as e:
        logger.debug("[CLI] %s failed: %s", args.command, e)
        if args.format == "json":
            print(dump_json(e.to_dict()))
        else:
            print(f"❌ {type(e).__name__}: {e}", file=sys.stderr)
            if e.witness is not None:
                print(f"   witness: {e.witness}", file=sys.stderr)
        return e.exit_code

    _emit(result, args.format)
    return result.exit_code if isinstance(result, Report) else 0


if __name__ == "__main__":
    sys.exit(main())
