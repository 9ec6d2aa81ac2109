"""
Identity Verification Module
Registry of identity checks keyed by equation id. Each check sweeps an index range
(and a truncation order for series identities) and compares independent computations.
"""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from tqdm import tqdm

from .exactnum import (
    IdentityViolationError,
    binomial,
    binomial_transform,
    factorial,
    hockey_stick,
    inverse_binomial_transform,
    random_rational,
)
from .families import (
    alternating_affine_power_sum,
    alternating_affine_power_sum_closed,
    alternating_poly_sum,
    alternating_poly_sum_closed,
    alternating_power_sum,
    bernoulli_number,
    euler_poly,
    eulerian_poly,
    exponential_poly,
    geometric_poly,
    power_sum_bernoulli,
    power_sum_stirling,
    power_via_stirling,
    sum_1_9_check,
)
from .findiff import delta, iterated_delta_at_zero, newton_coefficients, newton_reconstruct
from .polybasis import Polynomial, expand_in_falling_basis, falling_factorial_poly, falling_to_power
from .report import VerificationReport
from .series import (
    TruncatedSeries,
    bell_egf,
    bernoulli_egf,
    bernoulli_log_trick,
    egf_stirling2_column,
    egf_stirling2_column_by_exponentials,
    eulerian_ogf_check,
    euler_poly_egf,
    exp_series,
    fermi_expansion,
    grunert_apply,
    grunert_polynomial,
    inverse_factorial_expansion_check,
    ogf_power_check,
    series_reciprocal,
)
from .stirling import (
    ENUMERATION_LIMIT,
    count_set_partitions,
    first_kind_table,
    orthogonality_sum,
    second_kind_table,
    stirling2,
    stirling2_explicit,
)

logger = logging.getLogger(__name__)

ALL = "all"
SCALING_POINTS = (Fraction(1), Fraction(2), Fraction(-1), Fraction(1, 2))


@dataclass(frozen=True)
class VerifyOptions:
    """Ranges and sampling for a verification run."""

    max_index: int = 12
    order: int = 16
    seed: int = 0
    samples: int = 20
    power_sum_n: int = 100
    newton_degree: int = 10
    inverse_factorial_m: int = 4
    inverse_factorial_k: int = 6
    numerator: int = 20
    denominator: int = 12

    def rng(self, identity_id: str) -> random.Random:
        # One stream per identity so a single check and "all" draw the same values
        return random.Random(f"{self.seed}:{identity_id}")

    def rational(self, rng: random.Random) -> Fraction:
        return random_rational(rng, self.numerator, self.denominator)

    def polynomial(self, rng: random.Random, degree: int) -> Polynomial:
        return Polynomial(self.rational(rng) for _ in range(degree + 1))


@dataclass(frozen=True)
class IdentityCheck:
    identity_id: str
    description: str
    run: Callable[[VerifyOptions], VerificationReport]


REGISTRY: Dict[str, IdentityCheck] = {}


def register(identity_id: str, description: str):
    """Add a check function to the registry under an equation id."""
    def decorator(func: Callable[[VerifyOptions], VerificationReport]):
        REGISTRY[identity_id] = IdentityCheck(identity_id, description, func)
        return func
    return decorator


def identity_ids() -> List[str]:
    """Registered ids in equation order."""
    def key(identity_id: str):
        return tuple(int(part) for part in identity_id[2:].split("."))
    return sorted(REGISTRY, key=key)


@register("eq1.1", "sum C(n,k)(-1)^k k^m is 0 for m < n and (-1)^n n! for m = n")
def check_alternating_power_sum(opts: VerifyOptions) -> VerificationReport:
    M = opts.max_index
    report = VerificationReport("eq1.1", f"0 <= m <= n <= {M}")
    for n in range(M + 1):
        for m in range(n + 1):
            expected = 0 if m < n else (-1) ** n * factorial(n)
            report.check({"n": n, "m": m}, expected, alternating_power_sum(n, m))
    return report


@register("eq1.2", "sum C(n,k)(-1)^k (xk+y)^m is 0 for m < n and (-1)^n x^n n! for m = n")
def check_affine_low_degree(opts: VerifyOptions) -> VerificationReport:
    M = opts.max_index
    rng = opts.rng("eq1.2")
    report = VerificationReport("eq1.2", f"0 <= m <= n <= {M}, {opts.samples} random (x, y)")
    for _ in range(opts.samples):
        x, y = opts.rational(rng), opts.rational(rng)
        for n in range(M + 1):
            for m in range(n + 1):
                expected = 0 if m < n else (-1) ** n * x ** n * factorial(n)
                report.check({"n": n, "m": m, "x": x, "y": y}, expected,
                             alternating_affine_power_sum(n, m, x, y))
    return report


@register("eq1.4", "(-1)^n n! S(m,n) equals the alternating power sum; recurrence, explicit sum and enumeration agree")
def check_stirling_agreement(opts: VerifyOptions) -> VerificationReport:
    M = opts.max_index
    enumerated = min(M, ENUMERATION_LIMIT)
    report = VerificationReport("eq1.4", f"0 <= m, n <= {M}; enumeration for m <= {enumerated}")
    table = second_kind_table(M)
    for m in range(M + 1):
        for n in range(M + 1):
            s = table.entry(m, n)
            report.check({"m": m, "n": n}, (-1) ** n * factorial(n) * s, alternating_power_sum(n, m))
            report.check({"m": m, "n": n, "route": "recurrence"}, s, stirling2(m, n))
            report.check({"m": m, "n": n, "route": "explicit"}, s, stirling2_explicit(m, n))
            if m <= enumerated:
                report.check({"m": m, "n": n, "route": "enumeration"}, s, count_set_partitions(m, n))
    return report


@register("eq1.8", "S(n+1, n) = n(n+1)/2")
def check_subdiagonal(opts: VerifyOptions) -> VerificationReport:
    M = opts.max_index
    report = VerificationReport("eq1.8", f"0 <= n <= {M}")
    for n in range(M + 1):
        report.check({"n": n}, n * (n + 1) // 2, stirling2(n + 1, n))
    return report


@register("eq1.9", "sum C(n,k)(-1)^k k^(n+1) = (-1)^n (n/2) (n+1)!")
def check_first_excess(opts: VerifyOptions) -> VerificationReport:
    M = opts.max_index
    report = VerificationReport("eq1.9", f"0 <= n <= {M}")
    for n in range(M + 1):
        expected = Fraction((-1) ** n * n * factorial(n + 1), 2)
        try:
            actual = sum_1_9_check(n)
        except IdentityViolationError:
            actual = alternating_power_sum(n, n + 1)
        report.check({"n": n}, expected, actual)
    return report


@register("eq1.10", "sum C(n,k)(-1)^k (xk+y)^m = (-1)^n n! sum_j C(m,j) x^j y^(m-j) S(j,n)")
def check_affine_closed_form(opts: VerifyOptions) -> VerificationReport:
    M = opts.max_index
    rng = opts.rng("eq1.10")
    report = VerificationReport("eq1.10", f"0 <= m, n <= {M}, {opts.samples} random (x, y)")
    for _ in range(opts.samples):
        x, y = opts.rational(rng), opts.rational(rng)
        for n in range(M + 1):
            for m in range(M + 1):
                report.check({"n": n, "m": m, "x": x, "y": y},
                             alternating_affine_power_sum_closed(n, m, x, y),
                             alternating_affine_power_sum(n, m, x, y))
    return report


@register("eq1.11", "sum C(n,k)(-1)^k f(k) = (-1)^n n! sum_m c_m S(m,n) for polynomial f")
def check_polynomial_sum(opts: VerifyOptions) -> VerificationReport:
    M = opts.max_index
    rng = opts.rng("eq1.11")
    report = VerificationReport("eq1.11", f"deg f <= {M}, 0 <= n <= {M}, {opts.samples} random f")
    for sample in range(opts.samples):
        f = opts.polynomial(rng, rng.randint(0, M))
        degree = -1 if f.is_zero() else f.degree
        for n in range(M + 1):
            direct = alternating_poly_sum(n, f)
            report.check({"sample": sample, "n": n}, alternating_poly_sum_closed(n, f), direct)
            if degree < n:
                report.check({"sample": sample, "n": n, "case": "deg < n"}, 0, direct)
            elif degree == n:
                report.check({"sample": sample, "n": n, "case": "deg = n"},
                             (-1) ** n * factorial(n) * f.coefficient(n), direct)
    return report


@register("eq3.5", "the binomial sum for the n-th difference at 0 equals n-fold differencing")
def check_iterated_difference(opts: VerifyOptions) -> VerificationReport:
    M = opts.max_index
    degree = min(M, opts.newton_degree)
    rng = opts.rng("eq3.5")
    report = VerificationReport("eq3.5", f"deg f <= {degree}, 0 <= n <= {M}, {opts.samples} random f")
    for sample in range(opts.samples):
        f = opts.polynomial(rng, rng.randint(0, degree))
        current = f
        for n in range(M + 1):
            report.check({"sample": sample, "n": n}, current(0), iterated_delta_at_zero(f, n))
            current = delta(current)
    return report


@register("eq3.9", "Newton coefficients of z^m are S(m,n); Newton expansion round-trips")
def check_newton_expansion(opts: VerifyOptions) -> VerificationReport:
    M = opts.max_index
    degree = min(M, opts.newton_degree)
    rng = opts.rng("eq3.9")
    report = VerificationReport("eq3.9", f"0 <= m <= {M}; round trip on {opts.samples} random f of degree {degree}")
    table = second_kind_table(M)
    for m in range(M + 1):
        power = Polynomial.monomial(m)
        expected = list(table.row(m))
        report.check({"m": m, "route": "differences"}, expected, list(newton_coefficients(power).coeffs))
        report.check({"m": m, "route": "basis change"}, expected, list(expand_in_falling_basis(power).coeffs))
    for sample in range(opts.samples):
        f = opts.polynomial(rng, degree)
        coefficients = newton_coefficients(f)
        report.check({"sample": sample, "route": "round trip"}, f, newton_reconstruct(coefficients))
        report.check({"sample": sample, "route": "two expansions"}, expand_in_falling_basis(f), coefficients)
    return report


@register("eq3.10", "(1/m!) sum C(m,k)(-1)^(m-k) k^m = 1")
def check_leading_difference(opts: VerifyOptions) -> VerificationReport:
    M = opts.max_index
    report = VerificationReport("eq3.10", f"0 <= m <= {M}")
    for m in range(M + 1):
        report.check({"m": m, "route": "differences"}, 1,
                     iterated_delta_at_zero(Polynomial.monomial(m), m) / factorial(m))
        report.check({"m": m, "route": "alternating sum"}, 1,
                     Fraction((-1) ** m * alternating_power_sum(m, m), factorial(m)))
    return report


@register("eq5.3", "e^(-x) (x d/dx)^m e^x = phi_m(x)")
def check_grunert(opts: VerifyOptions) -> VerificationReport:
    M, N = opts.max_index, opts.order
    report = VerificationReport("eq5.3", f"0 <= m <= {M}, order {N}")
    for m in range(M + 1):
        phi = exponential_poly(m)
        series = grunert_polynomial(m, N)
        for i in range(N + 1):
            report.check({"m": m, "i": i}, phi.coefficient(i), series.coefficient(i))
    return report


@register("eq5.4", "e^(x(e^t - 1)) = sum phi_n(x) t^n / n!")
def check_bell_egf(opts: VerifyOptions) -> VerificationReport:
    N = opts.order
    rng = opts.rng("eq5.4")
    report = VerificationReport("eq5.4", f"0 <= n <= {N}, {opts.samples} random x")
    for _ in range(opts.samples):
        x = opts.rational(rng)
        series = bell_egf(x, N)
        for n in range(N + 1):
            report.check({"n": n, "x": x}, exponential_poly(n)(x), series.egf_coefficient(n))
    return report


@register("eq5.6", "(x d/dx)^m e^(ax) = phi_m(ax) e^(ax)")
def check_scaled_grunert(opts: VerifyOptions) -> VerificationReport:
    M, N = opts.max_index, opts.order
    rng = opts.rng("eq5.6")
    points = list(SCALING_POINTS) + [opts.rational(rng) for _ in range(opts.samples)]
    report = VerificationReport("eq5.6", f"0 <= m <= {M}, order {N}, {len(points)} values of a")
    for a in points:
        exponential = exp_series(N, a)
        for m in range(M + 1):
            lhs = grunert_apply(exponential, m)
            phi_scaled = exponential_poly(m).compose(Polynomial([0, a]))
            rhs = TruncatedSeries.from_polynomial(phi_scaled, N) * exponential
            report.check({"a": a, "m": m}, list(rhs.coeffs), list(lhs.coeffs))
    return report


@register("eq6.2", "(e^t - 1)^n = sum C(n,k)(-1)^(n-k) e^(kt)")
def check_column_by_exponentials(opts: VerifyOptions) -> VerificationReport:
    M, N = opts.max_index, opts.order
    report = VerificationReport("eq6.2", f"0 <= n <= {M}, order {N}")
    for n in range(M + 1):
        report.check({"n": n}, list(egf_stirling2_column(n, N).coeffs),
                     list(egf_stirling2_column_by_exponentials(n, N).coeffs))
    return report


@register("eq6.3", "(e^t - 1)^n / n! = sum S(m,n) t^m / m!")
def check_stirling_egf(opts: VerifyOptions) -> VerificationReport:
    M, N = opts.max_index, opts.order
    report = VerificationReport("eq6.3", f"0 <= n <= {M}, 0 <= m <= {N}")
    table = second_kind_table(N)
    for n in range(M + 1):
        column = egf_stirling2_column(n, N)
        for m in range(N + 1):
            report.check({"m": m, "n": n}, table.entry(m, n), column.egf_coefficient(m))
    return report


@register("eq7.6", "sum n^m x^n = omega_m(x/(1-x)) / (1-x)")
def check_geometric_ogf(opts: VerifyOptions) -> VerificationReport:
    M, N = opts.max_index, opts.order
    report = VerificationReport("eq7.6", f"0 <= m <= {M}, order {N}")
    for m in range(M + 1):
        report.merge(ogf_power_check(m, N))
    return report


@register("eq7.13", "1/(mu e^(lambda t) + 1) = (1/(mu+1)) sum lambda^m omega_m(-mu/(mu+1)) t^m/m!")
def check_fermi(opts: VerifyOptions) -> VerificationReport:
    N = opts.order
    rng = opts.rng("eq7.13")
    report = VerificationReport("eq7.13", f"order {N}, {opts.samples} random (lambda, mu)")
    for _ in range(opts.samples):
        lam, mu = opts.rational(rng), opts.rational(rng)
        if mu == -1:
            mu = Fraction(1)
        point = -mu / (mu + 1)
        try:
            expansion = fermi_expansion(lam, mu, N)
        except IdentityViolationError:
            expansion = series_reciprocal(exp_series(N, lam).scale(mu) + 1)
        for m in range(N + 1):
            expected = lam ** m / (mu + 1) * geometric_poly(m)(point)
            report.check({"lambda": lam, "mu": mu, "m": m}, expected, expansion.egf_coefficient(m))
    return report


@register("eq7.14", "2/(e^t + 1) = sum omega_m(-1/2) t^m / m!")
def check_fermi_unit(opts: VerifyOptions) -> VerificationReport:
    N = opts.order
    report = VerificationReport("eq7.14", f"0 <= m <= {N}")
    series = series_reciprocal(exp_series(N) + 1).scale(2)
    table = second_kind_table(N)
    for m in range(N + 1):
        omega = geometric_poly(m)(Fraction(-1, 2))
        stirling_sum = sum(
            (table.entry(m, n) * factorial(n) * Fraction(-1, 2) ** n for n in range(m + 1)), Fraction(0)
        )
        report.check({"m": m, "route": "omega"}, omega, series.egf_coefficient(m))
        report.check({"m": m, "route": "stirling sum"}, stirling_sum, series.egf_coefficient(m))
    return report


@register("eq7.15", "sum n^m x^n = A_m(x) / (1-x)^(m+1), deg A_m <= m")
def check_eulerian(opts: VerifyOptions) -> VerificationReport:
    M, N = opts.max_index, opts.order
    report = VerificationReport("eq7.15", f"0 <= m <= {M}, order {N}")
    for m in range(M + 1):
        degree = eulerian_poly(m).degree
        report.check({"m": m, "case": "degree <= m"}, True, degree is not None and degree <= m)
        report.merge(eulerian_ogf_check(m, N))
    return report


@register("eq7.18", "E_m(x) = sum C(m,k) omega_k(-1/2) x^(m-k) matches 2e^(xt)/(e^t+1); E_m(x) + E_m(x+1) = 2x^m")
def check_euler_polynomials(opts: VerifyOptions) -> VerificationReport:
    M, N = opts.max_index, opts.order
    rng = opts.rng("eq7.18")
    report = VerificationReport("eq7.18", f"0 <= m <= {N} against the series, {opts.samples} random x")
    for _ in range(opts.samples):
        x = opts.rational(rng)
        series = euler_poly_egf(x, N)
        for m in range(N + 1):
            report.check({"m": m, "x": x}, euler_poly(m)(x), series.egf_coefficient(m))
        for m in range(M + 1):
            e = euler_poly(m)
            report.check({"m": m, "x": x, "case": "functional equation"}, 2 * x ** m, e(x) + e(x + 1))
    return report


@register("eq7.19", "E_m(0) = omega_m(-1/2) = sum S(m,n) n! (-1)^n / 2^n")
def check_euler_constant_term(opts: VerifyOptions) -> VerificationReport:
    M = opts.max_index
    report = VerificationReport("eq7.19", f"0 <= m <= {M}")
    table = second_kind_table(M)
    for m in range(M + 1):
        omega = geometric_poly(m)(Fraction(-1, 2))
        stirling_sum = sum(
            (table.entry(m, n) * factorial(n) * Fraction(-1, 2) ** n for n in range(m + 1)), Fraction(0)
        )
        report.check({"m": m, "route": "omega"}, omega, euler_poly(m)(0))
        report.check({"m": m, "route": "stirling sum"}, stirling_sum, euler_poly(m)(0))
    return report


@register("eq8.3", "t/(e^t - 1) = sum (-1)^n/(n+1) (e^t - 1)^n")
def check_bernoulli_routes(opts: VerifyOptions) -> VerificationReport:
    N = opts.order
    report = VerificationReport("eq8.3", f"order {N}")
    reciprocal, log_trick = bernoulli_egf(N), bernoulli_log_trick(N)
    for i in range(N + 1):
        report.check({"i": i}, reciprocal.coefficient(i), log_trick.coefficient(i))
    return report


@register("eq8.4", "B_m = sum (-1)^n n!/(n+1) S(m,n) equals m! [t^m] t/(e^t - 1); odd B_m vanish past 1")
def check_bernoulli_numbers(opts: VerifyOptions) -> VerificationReport:
    N = opts.order
    report = VerificationReport("eq8.4", f"0 <= m <= {N}")
    series = bernoulli_egf(N)
    for m in range(N + 1):
        value = bernoulli_number(m)
        report.check({"m": m}, series.egf_coefficient(m), value)
        if m >= 3 and m % 2 == 1:
            report.check({"m": m, "case": "odd"}, 0, value)
    return report


@register("eq9.1", "1^m + ... + (n-1)^m by the Bernoulli formula")
def check_bernoulli_power_sums(opts: VerifyOptions) -> VerificationReport:
    M, top = opts.max_index, opts.power_sum_n
    report = VerificationReport("eq9.1", f"0 <= m <= {M}, 1 <= n <= {top}")
    for m in range(M + 1):
        running = 0
        for n in range(1, top + 1):
            report.check({"m": m, "n": n}, running, power_sum_bernoulli(m, n))
            running += n ** m
    return report


@register("eq9.2", "n^m = sum C(n,k) S(m,k) k!")
def check_power_inversion(opts: VerifyOptions) -> VerificationReport:
    M = opts.max_index
    report = VerificationReport("eq9.2", f"0 <= n, m <= {M}")
    for n in range(M + 1):
        for m in range(M + 1):
            short = power_via_stirling(n, m)
            report.check({"n": n, "m": m}, n ** m, short)
            report.check({"n": n, "m": m, "case": "full range"}, power_via_stirling(n, m, full_range=True), short)
    return report


@register("eq9.3", "the binomial transform and its inverse undo each other")
def check_binomial_transform(opts: VerifyOptions) -> VerificationReport:
    M = opts.max_index
    rng = opts.rng("eq9.3")
    report = VerificationReport("eq9.3", f"{opts.samples} random sequences of length <= {M + 1}; 0 <= m <= {M}")
    for sample in range(opts.samples):
        a = [opts.rational(rng) for _ in range(rng.randint(1, M + 1))]
        report.check({"sample": sample, "route": "inverse after forward"}, a,
                     inverse_binomial_transform(binomial_transform(a)))
        report.check({"sample": sample, "route": "forward after inverse"}, a,
                     binomial_transform(inverse_binomial_transform(a)))
    table = second_kind_table(M)
    for m in range(M + 1):
        weighted = [table.entry(m, k) * factorial(k) for k in range(M + 1)]
        report.check({"m": m, "route": "powers"}, [n ** m for n in range(M + 1)], binomial_transform(weighted))
    return report


@register("eq9.6", "sum_{p=k}^{n} C(p,k) = C(n+1,k+1)")
def check_hockey_stick(opts: VerifyOptions) -> VerificationReport:
    M = opts.max_index
    report = VerificationReport("eq9.6", f"0 <= k <= n <= {M}")
    for n in range(M + 1):
        for k in range(n + 1):
            report.check({"n": n, "k": k}, binomial(n + 1, k + 1), hockey_stick(n, k))
    return report


@register("eq9.7", "1^m + ... + n^m = sum C(n+1,k+1) S(m,k) k!")
def check_stirling_power_sums(opts: VerifyOptions) -> VerificationReport:
    M, top = opts.max_index, opts.power_sum_n
    report = VerificationReport("eq9.7", f"0 <= m <= {M}, 1 <= n <= {top}")
    for m in range(M + 1):
        running = 0
        for n in range(1, top + 1):
            running += n ** m
            value = power_sum_stirling(m, n)
            report.check({"m": m, "n": n}, running, value)
            report.check({"m": m, "n": n, "route": "bernoulli"}, power_sum_bernoulli(m, n + 1), value)
    return report


@register("eq10.1", "z(z-1)...(z-m+1) = sum s(m,k) z^k")
def check_first_kind_expansion(opts: VerifyOptions) -> VerificationReport:
    M = opts.max_index
    report = VerificationReport("eq10.1", f"0 <= m <= {M}")
    signed = first_kind_table(M).signed()
    for m in range(M + 1):
        product = falling_factorial_poly(m)
        report.check({"m": m}, list(signed.row(m)), list(product.coeffs))
        report.check({"m": m, "route": "table"}, product, falling_to_power(m))
    return report


@register("eq10.2", "sum_k S(m,k) s(k,n) = delta(m,n)")
def check_orthogonality(opts: VerifyOptions) -> VerificationReport:
    M = opts.max_index
    report = VerificationReport("eq10.2", f"0 <= m, n <= {M}")
    for m in range(M + 1):
        for n in range(M + 1):
            report.check({"m": m, "n": n}, 1 if m == n else 0, orthogonality_sum(m, n))
    return report


@register("eq10.3", "1/z^(m+1) = sum_k sigma(m+k,m) / (z(z+1)...(z+m+k)) in u = 1/z")
def check_inverse_factorial(opts: VerifyOptions) -> VerificationReport:
    top_m = max(1, min(opts.max_index, opts.inverse_factorial_m))
    top_k = min(opts.max_index, opts.inverse_factorial_k)
    report = VerificationReport("eq10.3", f"1 <= m <= {top_m}, 0 <= K <= {top_k}")
    for m in range(1, top_m + 1):
        for K in range(top_k + 1):
            report.merge(inverse_factorial_expansion_check(m, K))
    return report


def run_identity(identity_id: str, opts: Optional[VerifyOptions] = None) -> VerificationReport:
    """
    Run one registered identity check.

    Args:
        identity_id: Registered id such as ``eq10.2``
        opts: Ranges and seed; defaults when omitted

    Returns:
        VerificationReport for the identity
    """
    if identity_id not in REGISTRY:
        raise ValueError(f"Unknown identity: {identity_id}")
    opts = opts or VerifyOptions()
    logger.info(f"Verifying {identity_id} (max={opts.max_index}, order={opts.order}, seed={opts.seed})")
    report = REGISTRY[identity_id].run(opts)
    if report.failures:
        logger.warning(f"{identity_id}: {len(report.failures)} of {report.checked} cases failed")
    return report


def run_all(opts: Optional[VerifyOptions] = None, progress: bool = False) -> List[VerificationReport]:
    """Run every registered check in equation order."""
    opts = opts or VerifyOptions()
    reports = []
    for identity_id in tqdm(identity_ids(), desc="verify", disable=not progress):
        reports.append(run_identity(identity_id, opts))
    logger.info(f"Verified {len(reports)} identities, {sum(r.checked for r in reports)} cases")
    return reports
