"""
Polynomial Basis Module
Dense exact polynomials over the rationals and the conversions between the power
basis z^k and the falling-factorial basis P_k(z) = z(z-1)...(z-k+1).
"""

import logging
from fractions import Fraction
from typing import Iterable, Optional, Tuple, Union

from .stirling import first_kind_table, second_kind_table

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


def _strip(coeffs: Iterable) -> Tuple[Fraction, ...]:
    values = [Fraction(c) for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


class Polynomial:
    """
    Polynomial c_0 + c_1 z + ... + c_d z^d with rational coefficients.

    The zero polynomial has no coefficients and degree None. Trailing zeros are
    always stripped, so equal polynomials have equal coefficient tuples.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self._coeffs = _strip(coeffs)

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "Polynomial":
        if k < 0:
            raise ValueError(f"monomial degree must be non-negative, got {k}")
        return cls([0] * k + [c])

    @classmethod
    def identity(cls) -> "Polynomial":
        return cls([0, 1])

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> Optional[int]:
        return len(self._coeffs) - 1 if self._coeffs else None

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == _strip([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self._coeffs]})"

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self._coeffs)

    def __add__(self, other) -> "Polynomial":
        other = _as_polynomial(other)
        if other is None:
            return NotImplemented
        size = max(len(self._coeffs), len(other._coeffs))
        return Polynomial(self.coefficient(i) + other.coefficient(i) for i in range(size))

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        other = _as_polynomial(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Polynomial()
        product = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                product[i + j] += a * b
        return Polynomial(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor: Scalar) -> "Polynomial":
        factor = Fraction(factor)
        return Polynomial(factor * c for c in self._coeffs)

    def derivative(self) -> "Polynomial":
        return Polynomial(k * c for k, c in enumerate(self._coeffs) if k > 0)

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """Substitute ``inner`` for z (Horner's scheme)."""
        result = Polynomial()
        for c in reversed(self._coeffs):
            result = result * inner + Polynomial.constant(c)
        return result

    def __call__(self, x: Scalar) -> Fraction:
        """Exact Horner evaluation; the zero polynomial evaluates to 0."""
        x = Fraction(x)
        value = Fraction(0)
        for c in reversed(self._coeffs):
            value = value * x + c
        return value


def _as_polynomial(value) -> Optional[Polynomial]:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return Polynomial.constant(value)
    return None


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def poly_scale(p: Polynomial, factor: Scalar) -> Polynomial:
    return p.scale(factor)


def poly_derivative(p: Polynomial) -> Polynomial:
    """Derivative; the zero polynomial and constants go to zero."""
    return p.derivative()


def poly_compose(p: Polynomial, q: Polynomial) -> Polynomial:
    """p(q(z)); composing the zero polynomial gives zero."""
    return p.compose(q)


def poly_eval(p: Polynomial, x: Scalar) -> Fraction:
    return p(x)


class FallingFactorialExpansion:
    """Coefficients a_n of sum_n a_n P_n(z); trailing zeros are stripped."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self._coeffs = _strip(coeffs)

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> Optional[int]:
        return len(self._coeffs) - 1 if self._coeffs else None

    def coefficient(self, n: int) -> Fraction:
        if 0 <= n < len(self._coeffs):
            return self._coeffs[n]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FallingFactorialExpansion):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(("falling", self._coeffs))

    def __repr__(self) -> str:
        return f"FallingFactorialExpansion({[str(c) for c in self._coeffs]})"

    def to_polynomial(self) -> Polynomial:
        """Collapse to the power basis: the z^k coefficient is sum_n a_n s(n, k)."""
        if not self._coeffs:
            return Polynomial()
        first = first_kind_table(self.degree).signed()
        return Polynomial(
            sum((a * first.entry(n, k) for n, a in enumerate(self._coeffs)), Fraction(0))
            for k in range(len(self._coeffs))
        )


def falling_factorial_poly(k: int) -> Polynomial:
    """P_k(z) = z(z-1)...(z-k+1) with P_0 = 1, multiplied out factor by factor."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    result = Polynomial.constant(1)
    for j in range(k):
        result = result * Polynomial([-j, 1])
    return result


def power_to_falling(m: int) -> FallingFactorialExpansion:
    """z^m in the falling-factorial basis; the P_n coefficient is S(m, n)."""
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    return FallingFactorialExpansion(second_kind_table(m).row(m))


def falling_to_power(m: int) -> Polynomial:
    """P_m(z) in the power basis; the z^k coefficient is s(m, k)."""
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    return Polynomial(first_kind_table(m).signed().row(m))


def expand_in_falling_basis(p: Polynomial) -> FallingFactorialExpansion:
    """
    Newton coefficients of p by a change of basis.

    The second-kind triangle is the (lower-triangular) matrix taking power-basis
    coefficients to falling-factorial ones: a_n = sum_m c_m S(m, n).
    The zero polynomial maps to the empty expansion.
    """
    if p.is_zero():
        return FallingFactorialExpansion()
    second = second_kind_table(p.degree)
    return FallingFactorialExpansion(
        sum((c * second.entry(m, n) for m, c in enumerate(p.coeffs) if m >= n), Fraction(0))
        for n in range(p.degree + 1)
    )
