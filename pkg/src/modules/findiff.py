"""
Finite Differences Module
The forward difference operator, iterated differences and Newton-series coefficients
of polynomials.
"""

import logging
from fractions import Fraction

from .exactnum import RationalLike, binomial, factorial
from .polybasis import FallingFactorialExpansion, Polynomial, falling_factorial_poly

logger = logging.getLogger(__name__)

_SHIFT = Polynomial([1, 1])


def delta(f: Polynomial) -> Polynomial:
    """f(z + 1) - f(z); constants (and zero) go to the zero polynomial."""
    return f.compose(_SHIFT) - f


def iterated_delta(f: Polynomial, n: int) -> Polynomial:
    """Apply delta n times."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    for _ in range(n):
        if f.is_zero():
            break
        f = delta(f)
    return f


def iterated_delta_at(f: Polynomial, n: int, z: RationalLike) -> Fraction:
    """n-th difference at z as sum_k C(n, k) (-1)^(n-k) f(z + k)."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    z = Fraction(z)
    return sum(((-1) ** (n - k) * binomial(n, k) * f(z + k) for k in range(n + 1)), Fraction(0))


def iterated_delta_at_zero(f: Polynomial, n: int) -> Fraction:
    """n-th difference at 0 from the binomial sum."""
    return iterated_delta_at(f, n, 0)


def newton_coefficients(f: Polynomial) -> FallingFactorialExpansion:
    """
    Newton coefficients a_k = (delta^k f)(0) / k! by repeated differencing.

    Args:
        f: Polynomial to expand

    Returns:
        Expansion on the falling factorials; empty for the zero polynomial
    """
    if f.is_zero():
        return FallingFactorialExpansion()
    coeffs = []
    current = f
    for k in range(f.degree + 1):
        coeffs.append(current(0) / factorial(k))
        current = delta(current)
    return FallingFactorialExpansion(coeffs)


def newton_reconstruct(a: FallingFactorialExpansion) -> Polynomial:
    """sum_k a_k P_k(z), multiplying out each falling factorial."""
    result = Polynomial()
    for k, c in enumerate(a.coeffs):
        if c != 0:
            result = result + falling_factorial_poly(k).scale(c)
    return result
