"""
Exact Arithmetic Module
Integer and rational helpers, binomial coefficients and the binomial transform pair.

Integers are Python ints and rationals are ``fractions.Fraction``; both are exact at
every magnitude and Fraction keeps itself in lowest terms with a positive denominator.
"""

import logging
import math
import random
from fractions import Fraction
from typing import List, Sequence, Union

logger = logging.getLogger(__name__)

RationalLike = Union[int, Fraction, str]


class IdentityViolationError(AssertionError):
    """Raised when an identity check or an exact division fails."""


def factorial(n: int) -> int:
    """Return n! exactly."""
    if n < 0:
        raise ValueError(f"factorial needs n >= 0, got {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """
    Binomial coefficient C(n, k).

    Out-of-range k (k < 0 or k > n) gives 0 so that summations can run over
    any index range and let the missing terms vanish.

    Args:
        n: Non-negative upper index
        k: Any integer lower index

    Returns:
        C(n, k) as an exact integer
    """
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    # math.comb uses the multiplicative formula with exact division
    return math.comb(n, k)


def pascal_binomial(n: int, k: int) -> int:
    """C(n, k) through the Pascal recurrence; an oracle for binomial()."""
    if n < 0:
        raise ValueError(f"pascal_binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row[k]


def hockey_stick(n: int, k: int) -> int:
    """
    Sum C(p, k) for p = k..n by direct summation.

    The result equals C(n+1, k+1).
    """
    if k < 0 or k > n:
        raise ValueError(f"hockey_stick needs 0 <= k <= n, got n={n}, k={k}")
    return sum(binomial(p, k) for p in range(k, n + 1))


def binomial_transform(a: Sequence[RationalLike]) -> List[Fraction]:
    """
    Binomial transform b_n = sum_k C(n, k) a_k.

    Args:
        a: Non-empty input sequence

    Returns:
        The transformed sequence, same length as the input
    """
    if len(a) == 0:
        raise ValueError("binomial_transform needs a non-empty sequence")
    values = [Fraction(v) for v in a]
    return [
        sum((binomial(n, k) * values[k] for k in range(n + 1)), Fraction(0))
        for n in range(len(values))
    ]


def inverse_binomial_transform(b: Sequence[RationalLike]) -> List[Fraction]:
    """Inverse transform a_n = sum_k C(n, k) (-1)^(n-k) b_k."""
    if len(b) == 0:
        raise ValueError("inverse_binomial_transform needs a non-empty sequence")
    values = [Fraction(v) for v in b]
    return [
        sum(((-1) ** (n - k) * binomial(n, k) * values[k] for k in range(n + 1)), Fraction(0))
        for n in range(len(values))
    ]


def exact_divide(numerator: int, denominator: int) -> int:
    """Integer division that must leave no remainder."""
    quotient, remainder = divmod(numerator, denominator)
    if remainder != 0:
        raise IdentityViolationError(
            f"inexact division {numerator} / {denominator} (remainder {remainder})"
        )
    return quotient


def parse_rational(text: RationalLike) -> Fraction:
    """
    Parse an exact rational.

    Accepts ints, Fractions and strings such as ``"3"``, ``"-1/2"`` or ``"0.25"``
    (decimals are converted exactly, never through a float).
    """
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"not an exact rational: {text!r}") from e


def format_rational(value: RationalLike) -> str:
    """Render a rational as a bare integer or as ``p/q``."""
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def random_rational(rng: random.Random, numerator: int = 20, denominator: int = 12) -> Fraction:
    """Draw a rational with |p| <= numerator and 1 <= q <= denominator."""
    return Fraction(rng.randint(-numerator, numerator), rng.randint(1, denominator))
