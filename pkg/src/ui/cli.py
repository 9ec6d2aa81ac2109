"""
Command-line interface for stirling-forge.
Tables, polynomial families, power sums, identity verification and series expansions.
"""

import argparse
import logging
import os
import sys
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

sys.path.append(os.path.join(os.path.dirname(__file__), '..'))
sys.path.append(os.path.join(os.path.dirname(__file__), '..', '..'))

import config
from modules.exactnum import parse_rational
from modules.families import (
    euler_poly,
    eulerian_poly,
    exponential_poly,
    geometric_poly,
    naive_power_sum,
    power_sum_bernoulli,
    power_sum_stirling,
)
from modules.series import (
    bell_egf,
    bernoulli_egf,
    bernoulli_log_trick,
    egf_stirling2_column,
    euler_poly_egf,
    exp_series,
    fermi_expansion,
    inverse_factorial_expansion_check,
    inverse_factorial_partial_sum,
)
from modules.stirling import MODERN_LAYOUT, STIRLING_LAYOUT, first_kind_table, second_kind_table
from modules.verification import ALL, VerifyOptions, identity_ids, run_all, run_identity
from ui.output import (
    CSV,
    FORMATS,
    JSON,
    PLAIN,
    exact_frame,
    format_polynomial,
    render_csv,
    render_failures,
    render_json,
    render_plain_table,
    summary_frame,
    with_notes,
)

logger = logging.getLogger(__name__)

PROG = "stirling-forge"

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

TABLE_KINDS = ("s2", "s1", "s1u")
POLY_FAMILIES = {
    "phi": exponential_poly,
    "omega": geometric_poly,
    "euler": euler_poly,
    "eulerian": eulerian_poly,
}
POWER_SUM_METHODS = ("naive", "bernoulli", "stirling", "all")
EXPAND_ORACLES = (
    "exp",
    "stirling2-egf",
    "bell-egf",
    "bernoulli-egf",
    "bernoulli-log",
    "euler-egf",
    "fermi",
    "inverse-factorial",
)

Rendered = Tuple[str, int]


def _errata_notes(kind: str, max_m: int) -> List[str]:
    notes = []
    for (errata_kind, m, n), (printed, computed) in sorted(config.FIGURE_ERRATA.items()):
        if errata_kind == kind and m <= max_m:
            notes.append(
                f"historical table prints {printed} at (m={m}, n={n}); the computed value is {computed}"
            )
    return notes


def cmd_table(kind: str, max_m: int, layout: str = MODERN_LAYOUT, fmt: str = PLAIN) -> Rendered:
    """
    Emit a Stirling triangle.

    Args:
        kind: ``s2`` (second kind), ``s1`` (signed first kind) or ``s1u`` (unsigned)
        max_m: Last row index, 0..MAX_TABLE_M
        layout: ``modern`` (m down the rows) or ``stirling`` (m across the columns)
        fmt: Output format

    Returns:
        (rendered text, exit code)
    """
    if kind not in TABLE_KINDS:
        raise ValueError(f"Unknown table kind: {kind}")
    if max_m < 0 or max_m > config.MAX_TABLE_M:
        raise ValueError(f"--max-m must be in [0, {config.MAX_TABLE_M}], got {max_m}")

    if kind == "s2":
        triangle = second_kind_table(max_m)
    elif kind == "s1u":
        triangle = first_kind_table(max_m)
    else:
        triangle = first_kind_table(max_m).signed()
    rows = triangle.rows(layout)
    notes = _errata_notes(kind, max_m)

    if fmt == JSON:
        params = {"kind": kind, "max_m": max_m, "layout": layout}
        return render_json("table", params, {"rows": rows}, notes), EXIT_OK
    if fmt == CSV:
        return render_csv(exact_frame(rows, [str(j) for j in range(max_m + 1)])), EXIT_OK
    return with_notes(render_plain_table(rows), notes), EXIT_OK


def cmd_poly(family: str, n: int, fmt: str = PLAIN) -> Rendered:
    """Print phi_n, omega_n, E_n or A_n with ascending coefficients."""
    if family not in POLY_FAMILIES:
        raise ValueError(f"Unknown polynomial family: {family}")
    if n < 0 or n > config.MAX_POLY_N:
        raise ValueError(f"n must be in [0, {config.MAX_POLY_N}], got {n}")
    p = POLY_FAMILIES[family](n)
    text = format_polynomial(p)

    if fmt == JSON:
        result = {"coefficients": list(p.coeffs), "text": text}
        return render_json("poly", {"family": family, "n": n}, result), EXIT_OK
    if fmt == CSV:
        return render_csv(exact_frame(list(enumerate(p.coeffs)), ["k", "coefficient"])), EXIT_OK
    return text + "\n", EXIT_OK


def cmd_powersum(m: int, n: int, method: str = "all", fmt: str = PLAIN) -> Rendered:
    """
    Print 1^m + 2^m + ... + n^m by one method or all three.

    With ``all`` the exit code is 1 when the methods disagree.
    """
    if method not in POWER_SUM_METHODS:
        raise ValueError(f"Unknown power-sum method: {method}")
    if m < 0 or m > config.MAX_POWER_SUM_M:
        raise ValueError(f"m must be in [0, {config.MAX_POWER_SUM_M}], got {m}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if method in ("naive", "all") and n > config.MAX_NAIVE_N:
        raise ValueError(f"naive summation is limited to n <= {config.MAX_NAIVE_N}, got {n}")

    routes = {
        "naive": lambda: naive_power_sum(m, n),
        # The Bernoulli formula stops at n - 1
        "bernoulli": lambda: power_sum_bernoulli(m, n + 1),
        "stirling": lambda: power_sum_stirling(m, n),
    }
    methods = [method] if method != "all" else ["naive", "bernoulli", "stirling"]
    values = {name: routes[name]() for name in methods}
    agree = len(set(values.values())) == 1
    code = EXIT_OK if agree else EXIT_FAILURE
    if not agree:
        logger.warning(f"power-sum methods disagree for m={m}, n={n}: {values}")

    if fmt == JSON:
        result = {"values": values, "agree": agree}
        return render_json("powersum", {"m": m, "n": n, "method": method}, result), code
    if fmt == CSV:
        return render_csv(exact_frame(list(values.items()), ["method", "value"])), code
    if method != "all":
        return f"{values[method]}\n", code
    return "".join(f"{name}: {value}\n" for name, value in values.items()), code


def cmd_verify(
    identity_id: str,
    max_index: int = config.DEFAULT_VERIFY_MAX,
    order: int = config.DEFAULT_VERIFY_ORDER,
    seed: int = config.DEFAULT_SEED,
    fmt: str = PLAIN,
    progress: bool = False,
) -> Rendered:
    """
    Run one identity suite (or ``all``) and report.

    Exit code 0 when every case passes and 1 otherwise; an unknown id is a usage error.
    """
    if identity_id != ALL and identity_id not in identity_ids():
        raise ValueError(f"Unknown identity: {identity_id}")
    if max_index < 0 or max_index > config.MAX_TABLE_M:
        raise ValueError(f"--max must be in [0, {config.MAX_TABLE_M}], got {max_index}")
    if order < 0 or order > config.MAX_TABLE_M:
        raise ValueError(f"--order must be in [0, {config.MAX_TABLE_M}], got {order}")

    opts = VerifyOptions(
        max_index=max_index,
        order=order,
        seed=seed,
        samples=config.VERIFY_RANDOM_SAMPLES,
        power_sum_n=config.VERIFY_POWER_SUM_N,
        newton_degree=config.VERIFY_NEWTON_DEGREE,
        inverse_factorial_m=config.VERIFY_INVERSE_FACTORIAL_M,
        inverse_factorial_k=config.VERIFY_INVERSE_FACTORIAL_K,
        numerator=config.RANDOM_NUMERATOR,
        denominator=config.RANDOM_DENOMINATOR,
    )
    if identity_id == ALL:
        reports = run_all(opts, progress=progress)
    else:
        reports = [run_identity(identity_id, opts)]
    passed = all(r.passed for r in reports)
    code = EXIT_OK if passed else EXIT_FAILURE

    if fmt == JSON:
        params = {"identity_id": identity_id, "max": max_index, "order": order, "seed": seed}
        result = {
            "reports": [r.to_dict() for r in reports],
            "checked": sum(r.checked for r in reports),
            "status": "pass" if passed else "fail",
        }
        return render_json("verify", params, result), code
    frame = summary_frame(reports)
    if fmt == CSV:
        return render_csv(frame), code
    return frame.to_string(index=False) + "\n" + render_failures(reports), code


def cmd_expand(
    oracle: str,
    order: int = 12,
    n: int = 1,
    x: Fraction = Fraction(1),
    lam: Fraction = Fraction(1),
    mu: Fraction = Fraction(1),
    m: int = 1,
    terms: int = 6,
    z: Fraction = Fraction(10),
    fmt: str = PLAIN,
) -> Rendered:
    """
    Print the coefficients of one generating-function oracle.

    Series oracles list i, the coefficient of t^i and i! times it. The
    ``inverse-factorial`` oracle instead evaluates the first ``terms + 1`` terms of
    the inverse-factorial expansion of 1/z^(m+1) at ``z`` and reports the residual.
    """
    if oracle not in EXPAND_ORACLES:
        raise ValueError(f"Unknown oracle: {oracle}")
    if order < 0 or order > config.MAX_TABLE_M:
        raise ValueError(f"--order must be in [0, {config.MAX_TABLE_M}], got {order}")

    if oracle == "inverse-factorial":
        return _expand_inverse_factorial(m, terms, z, fmt)

    builders = {
        "exp": lambda: exp_series(order, x),
        "stirling2-egf": lambda: egf_stirling2_column(n, order),
        "bell-egf": lambda: bell_egf(x, order),
        "bernoulli-egf": lambda: bernoulli_egf(order),
        "bernoulli-log": lambda: bernoulli_log_trick(order),
        "euler-egf": lambda: euler_poly_egf(x, order),
        "fermi": lambda: fermi_expansion(lam, mu, order),
    }
    params = {
        "exp": {"x": x},
        "stirling2-egf": {"n": n},
        "bell-egf": {"x": x},
        "euler-egf": {"x": x},
        "fermi": {"lam": lam, "mu": mu},
    }.get(oracle, {})
    params = {"oracle": oracle, "order": order, **params}

    series = builders[oracle]()
    rows = [(i, c, series.egf_coefficient(i)) for i, c in enumerate(series.coeffs)]

    if fmt == JSON:
        result = {
            "coefficients": list(series.coeffs),
            "egf_coefficients": [row[2] for row in rows],
        }
        return render_json("expand", params, result), EXIT_OK
    frame = exact_frame(rows, ["i", "coefficient", "egf"])
    if fmt == CSV:
        return render_csv(frame), EXIT_OK
    return frame.to_string(index=False) + "\n", EXIT_OK


def _expand_inverse_factorial(m: int, terms: int, z: Fraction, fmt: str) -> Rendered:
    if terms < 0:
        raise ValueError(f"--terms must be non-negative, got {terms}")
    partial, residual = inverse_factorial_partial_sum(m, terms, z)
    formal = inverse_factorial_expansion_check(m, terms)
    code = EXIT_OK if formal.passed else EXIT_FAILURE
    params = {"oracle": "inverse-factorial", "m": m, "terms": terms, "z": z}
    result = {
        "target": 1 / z ** (m + 1),
        "partial_sum": partial,
        "residual": residual,
        "formal_check": formal.status,
    }

    if fmt == JSON:
        return render_json("expand", params, result), code
    frame = exact_frame(list(result.items()), ["quantity", "value"])
    if fmt == CSV:
        return render_csv(frame), code
    return frame.to_string(index=False) + "\n", code


def build_parser() -> argparse.ArgumentParser:
    """Create the argument parser with its five subcommands."""
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Exact Stirling numbers, polynomial families, power sums and identity checks",
    )
    parser.add_argument("--format", choices=FORMATS, default=PLAIN, help="Output format (default: plain)")
    parser.add_argument(
        "--seed",
        type=int,
        default=config.DEFAULT_SEED,
        help="Seed for random rational cases (default: STIRLING_FORGE_SEED or 0)",
    )
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default=None,
        help="Override the configured log level",
    )
    parser.add_argument("--progress", action="store_true", help="Show a progress bar on stderr")

    subparsers = parser.add_subparsers(dest="command", required=True)

    table = subparsers.add_parser("table", help="Stirling triangle of either kind")
    table.add_argument("kind", choices=TABLE_KINDS)
    table.add_argument("--max-m", type=int, default=9, help="Last row index (default: 9)")
    table.add_argument("--layout", choices=[MODERN_LAYOUT, STIRLING_LAYOUT], default=MODERN_LAYOUT)

    poly = subparsers.add_parser("poly", help="Exponential, geometric, Euler or Eulerian polynomial")
    poly.add_argument("family", choices=list(POLY_FAMILIES))
    poly.add_argument("n", type=int)

    powersum = subparsers.add_parser("powersum", help="Sum of the first n m-th powers")
    powersum.add_argument("m", type=int)
    powersum.add_argument("n", type=int)
    powersum.add_argument("--method", choices=POWER_SUM_METHODS, default="all")

    verify = subparsers.add_parser("verify", help="Check an identity by independent computations")
    verify.add_argument("identity_id", choices=identity_ids() + [ALL])
    verify.add_argument("--max", type=int, default=config.DEFAULT_VERIFY_MAX, help="Largest index")
    verify.add_argument("--order", type=int, default=config.DEFAULT_VERIFY_ORDER, help="Series truncation order")

    expand = subparsers.add_parser("expand", help="Coefficients of a generating-function oracle")
    expand.add_argument("oracle", choices=EXPAND_ORACLES)
    expand.add_argument("--order", type=int, default=12)
    expand.add_argument("--n", type=int, default=1, help="Column of the second-kind EGF")
    expand.add_argument("--x", type=parse_rational, default=Fraction(1))
    expand.add_argument("--lam", type=parse_rational, default=Fraction(1))
    expand.add_argument("--mu", type=parse_rational, default=Fraction(1))
    expand.add_argument("--m", type=int, default=1, help="Index of the inverse-factorial expansion")
    expand.add_argument("--terms", type=int, default=6, help="Last term index K")
    expand.add_argument("--z", type=parse_rational, default=Fraction(10), help="Evaluation point")

    return parser


def dispatch(args: argparse.Namespace) -> Rendered:
    if args.command == "table":
        return cmd_table(args.kind, args.max_m, args.layout, args.format)
    if args.command == "poly":
        return cmd_poly(args.family, args.n, args.format)
    if args.command == "powersum":
        return cmd_powersum(args.m, args.n, args.method, args.format)
    if args.command == "verify":
        return cmd_verify(args.identity_id, args.max, args.order, args.seed, args.format, args.progress)
    return cmd_expand(
        args.oracle,
        order=args.order,
        n=args.n,
        x=args.x,
        lam=args.lam,
        mu=args.mu,
        m=args.m,
        terms=args.terms,
        z=args.z,
        fmt=args.format,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse argv, run one command and write its output to stdout.

    Returns:
        0 on success, 1 on a verification failure or method disagreement,
        2 on a usage error
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    if args.log_level:
        logging.getLogger().setLevel(args.log_level)

    try:
        text, code = dispatch(args)
    except ValueError as e:
        print(f"{PROG}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:
        logger.error(f"Error running {args.command}: {e}", exc_info=True)
        return EXIT_FAILURE

    sys.stdout.write(text)
    return code
