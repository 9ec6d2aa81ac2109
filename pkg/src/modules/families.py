"""
Polynomial Families Module
Exponential, geometric, Eulerian and Euler polynomials, Bernoulli numbers, power sums
and the alternating binomial sums, all built from the second-kind triangle.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exactnum import IdentityViolationError, RationalLike, binomial, factorial
from .polybasis import Polynomial
from .stirling import second_kind_table

logger = logging.getLogger(__name__)

MINUS_HALF = Fraction(-1, 2)


def _second_kind_row(m: int):
    if m < 0:
        raise ValueError(f"index must be non-negative, got {m}")
    return second_kind_table(m).row(m)


def exponential_poly(n: int) -> Polynomial:
    """phi_n(x) = sum_k S(n, k) x^k."""
    return Polynomial(_second_kind_row(n))


def bell_number_from_poly(n: int) -> int:
    """Bell number as phi_n(1)."""
    value = exponential_poly(n)(1)
    return value.numerator


def geometric_poly(m: int) -> Polynomial:
    """omega_m(z) = sum_n S(m, n) n! z^n."""
    return Polynomial(s * factorial(n) for n, s in enumerate(_second_kind_row(m)))


def euler_poly(m: int) -> Polynomial:
    """
    E_m(x) = sum_k C(m, k) omega_k(-1/2) x^(m-k).

    The constant term is omega_m(-1/2).
    """
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    coeffs = [Fraction(0)] * (m + 1)
    for k in range(m + 1):
        coeffs[m - k] = binomial(m, k) * geometric_poly(k)(MINUS_HALF)
    return Polynomial(coeffs)


def eulerian_poly(m: int) -> Polynomial:
    """A_m(x) = sum_n S(m, n) n! x^n (1 - x)^(m-n)."""
    one_minus_x = Polynomial([1, -1])
    result = Polynomial()
    for n, s in enumerate(_second_kind_row(m)):
        if s == 0:
            continue
        result = result + Polynomial.monomial(n, s * factorial(n)) * one_minus_x ** (m - n)
    return result


@lru_cache(maxsize=None)
def bernoulli_number(m: int) -> Fraction:
    """B_m = sum_n (-1)^n n!/(n+1) S(m, n), so that B_1 = -1/2."""
    return sum(
        (Fraction((-1) ** n * factorial(n), n + 1) * s for n, s in enumerate(_second_kind_row(m))),
        Fraction(0),
    )


def naive_power_sum(m: int, n: int) -> int:
    """1^m + 2^m + ... + n^m by a plain loop."""
    if m < 0 or n < 0:
        raise ValueError(f"arguments must be non-negative, got m={m}, n={n}")
    return sum(j ** m for j in range(1, n + 1))


def power_sum_bernoulli(m: int, n: int) -> Fraction:
    """
    1^m + 2^m + ... + (n-1)^m through the Bernoulli formula.

    The formula (1/(m+1)) sum_k C(m+1, k) B_k n^(m+1-k) counts a 0^m term, which
    is 1 for m = 0; that term is removed so the result is the sum from 1.
    """
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    total = sum(
        (binomial(m + 1, k) * bernoulli_number(k) * n ** (m + 1 - k) for k in range(m + 1)),
        Fraction(0),
    )
    return total / (m + 1) - 0 ** m


def power_sum_stirling(m: int, n: int) -> int:
    """
    1^m + 2^m + ... + n^m as sum_k C(n+1, k+1) S(m, k) k!.

    Terms with k > m vanish, so the sum runs to min(n, m). As in the Bernoulli
    formula, the 0^m term counted at m = 0 is removed.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    row = _second_kind_row(m)
    total = sum(binomial(n + 1, k + 1) * row[k] * factorial(k) for k in range(min(n, m) + 1))
    return total - 0 ** m


def power_via_stirling(n: int, m: int, full_range: bool = False) -> int:
    """
    n^m as sum_k C(n, k) S(m, k) k!.

    Args:
        n: Base
        m: Exponent
        full_range: Sum k over 0..n instead of stopping at min(n, m)

    Returns:
        n^m
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    row = _second_kind_row(m)
    upper = n if full_range else min(n, m)
    return sum(binomial(n, k) * (row[k] if k <= m else 0) * factorial(k) for k in range(upper + 1))


def alternating_power_sum(n: int, m: int) -> int:
    """sum_k C(n, k) (-1)^k k^m, with 0^0 = 1."""
    if n < 0 or m < 0:
        raise ValueError(f"arguments must be non-negative, got n={n}, m={m}")
    return sum((-1) ** k * binomial(n, k) * k ** m for k in range(n + 1))


def alternating_affine_power_sum(n: int, m: int, x: RationalLike, y: RationalLike) -> Fraction:
    """sum_k C(n, k) (-1)^k (xk + y)^m by direct summation."""
    if n < 0 or m < 0:
        raise ValueError(f"arguments must be non-negative, got n={n}, m={m}")
    x, y = Fraction(x), Fraction(y)
    return sum(((-1) ** k * binomial(n, k) * (x * k + y) ** m for k in range(n + 1)), Fraction(0))


def alternating_affine_power_sum_closed(n: int, m: int, x: RationalLike, y: RationalLike) -> Fraction:
    """(-1)^n n! sum_{j=n}^m C(m, j) x^j y^(m-j) S(j, n); zero when m < n."""
    if n < 0 or m < 0:
        raise ValueError(f"arguments must be non-negative, got n={n}, m={m}")
    if m < n:
        return Fraction(0)
    x, y = Fraction(x), Fraction(y)
    table = second_kind_table(m)
    inner = sum(
        (binomial(m, j) * x ** j * y ** (m - j) * table.entry(j, n) for j in range(n, m + 1)),
        Fraction(0),
    )
    return (-1) ** n * factorial(n) * inner


def alternating_poly_sum(n: int, f: Polynomial) -> Fraction:
    """sum_k C(n, k) (-1)^k f(k) by direct summation."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return sum(((-1) ** k * binomial(n, k) * f(k) for k in range(n + 1)), Fraction(0))


def alternating_coefficient_sum(n: int, coeffs: Sequence[RationalLike]) -> Fraction:
    """
    (-1)^n n! sum_m c_m S(m, n) over a caller-truncated coefficient sequence.

    For a polynomial this is exact; for a longer series it is the value at the
    chosen truncation, with no claim about the tail.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    values = [Fraction(c) for c in coeffs]
    if len(values) <= n:
        return Fraction(0)
    table = second_kind_table(len(values) - 1)
    inner = sum((c * table.entry(m, n) for m, c in enumerate(values)), Fraction(0))
    return (-1) ** n * factorial(n) * inner


def alternating_poly_sum_closed(n: int, f: Polynomial) -> Fraction:
    """Closed form of alternating_poly_sum from the coefficients of f."""
    return alternating_coefficient_sum(n, f.coeffs)


def sum_1_9_check(n: int) -> int:
    """
    sum_k C(n, k) (-1)^k k^(n+1), checked against (-1)^n (n/2) (n+1)!.

    Raises:
        IdentityViolationError: if the two sides differ
    """
    value = alternating_power_sum(n, n + 1)
    expected = Fraction((-1) ** n * n * factorial(n + 1), 2)
    if value != expected:
        raise IdentityViolationError(f"n={n}: alternating sum {value} != {expected}")
    return value
