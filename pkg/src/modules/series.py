"""
Formal Power Series Module
Truncated power series over the rationals: the generating-function oracle for the
exponential and ordinary generating functions of every family, plus the
operator (x d/dx)^m.
"""

import logging
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple, Union

from .exactnum import IdentityViolationError, RationalLike, binomial, factorial
from .families import eulerian_poly, geometric_poly
from .polybasis import Polynomial
from .report import VerificationReport
from .stirling import first_kind_table

logger = logging.getLogger(__name__)


class ConstantTermError(ValueError):
    """Raised when a series operation is undefined for the given constant term."""


class TruncatedSeries:
    """
    Coefficients c_0..c_N of a formal power series kept to an explicit order N.

    Binary operations truncate to the smaller order of the two operands.
    """

    __slots__ = ("_order", "_coeffs")

    def __init__(self, coeffs: Iterable[RationalLike], order: Optional[int] = None):
        values = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(values) - 1
        if order < 0:
            raise ValueError("a truncated series needs order >= 0")
        values = values[: order + 1]
        values.extend([Fraction(0)] * (order + 1 - len(values)))
        self._order = order
        self._coeffs = tuple(values)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([], order)

    @classmethod
    def constant(cls, c: RationalLike, order: int) -> "TruncatedSeries":
        return cls([c], order)

    @classmethod
    def monomial(cls, k: int, order: int, c: RationalLike = 1) -> "TruncatedSeries":
        return cls([0] * k + [c], order)

    @classmethod
    def from_polynomial(cls, p: Polynomial, order: int) -> "TruncatedSeries":
        return cls(p.coeffs, order)

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    def coefficient(self, i: int) -> Fraction:
        if i < 0 or i > self._order:
            raise IndexError(f"coefficient {i} is outside the truncation order {self._order}")
        return self._coeffs[i]

    def egf_coefficient(self, i: int) -> Fraction:
        """i! times the coefficient of t^i."""
        return factorial(i) * self.coefficient(i)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self._order:
            raise ValueError(f"cannot raise truncation order from {self._order} to {order}")
        return TruncatedSeries(self._coeffs, order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._order == other._order and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._order, self._coeffs))

    def __repr__(self) -> str:
        return f"TruncatedSeries({[str(c) for c in self._coeffs]}, order={self._order})"

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.constant(other, self._order)
        if isinstance(other, Polynomial):
            return TruncatedSeries.from_polynomial(other, self._order)
        return None

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self._coeffs], self._order)

    def __add__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        order = min(self._order, other._order)
        return TruncatedSeries([a + b for a, b in zip(self._coeffs, other._coeffs)], order)

    __radd__ = __add__

    def __sub__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "TruncatedSeries":
        return (-self) + other

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        order = min(self._order, other._order)
        a, b = self._coeffs, other._coeffs
        product = []
        for n in range(order + 1):
            product.append(sum((a[i] * b[n - i] for i in range(n + 1) if a[i]), Fraction(0)))
        return TruncatedSeries(product, order)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if exponent < 0:
            return series_reciprocal(self) ** (-exponent)
        result = TruncatedSeries.constant(1, self._order)
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, factor: RationalLike) -> "TruncatedSeries":
        factor = Fraction(factor)
        return TruncatedSeries([factor * c for c in self._coeffs], self._order)


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def series_scale(a: TruncatedSeries, factor: RationalLike) -> TruncatedSeries:
    return a.scale(factor)


def series_exp(s: TruncatedSeries) -> TruncatedSeries:
    """exp(s) for s with zero constant term, from g' = s' g."""
    if s.coeffs[0] != 0:
        raise ConstantTermError(f"exp needs constant term 0, got {s.coeffs[0]}")
    c = s.coeffs
    g = [Fraction(1)]
    for n in range(1, s.order + 1):
        g.append(sum((k * c[k] * g[n - k] for k in range(1, n + 1) if c[k]), Fraction(0)) / n)
    return TruncatedSeries(g, s.order)


def series_log1p(s: TruncatedSeries) -> TruncatedSeries:
    """log(1 + s) for s with zero constant term, from (1 + s) h' = s'."""
    if s.coeffs[0] != 0:
        raise ConstantTermError(f"log1p needs constant term 0, got {s.coeffs[0]}")
    c = s.coeffs
    h = [Fraction(0)]
    for n in range(1, s.order + 1):
        acc = n * c[n] - sum((k * h[k] * c[n - k] for k in range(1, n)), Fraction(0))
        h.append(acc / n)
    return TruncatedSeries(h, s.order)


def series_reciprocal(s: TruncatedSeries) -> TruncatedSeries:
    """1/s for s with non-zero constant term."""
    c = s.coeffs
    if c[0] == 0:
        raise ConstantTermError("reciprocal needs a non-zero constant term")
    inverse = 1 / c[0]
    r = [inverse]
    for n in range(1, s.order + 1):
        r.append(-inverse * sum((c[k] * r[n - k] for k in range(1, n + 1) if c[k]), Fraction(0)))
    return TruncatedSeries(r, s.order)


def series_compose(outer: Union[Polynomial, TruncatedSeries], inner: TruncatedSeries) -> TruncatedSeries:
    """
    outer(inner) by Horner's scheme; inner must have zero constant term.

    A polynomial outer keeps the order of inner; a series outer truncates to the
    smaller of the two orders.
    """
    if inner.coeffs[0] != 0:
        raise ConstantTermError(f"composition needs inner constant term 0, got {inner.coeffs[0]}")
    if isinstance(outer, TruncatedSeries):
        order = min(outer.order, inner.order)
        coeffs = outer.coeffs[: order + 1]
    else:
        order = inner.order
        coeffs = outer.coeffs
    inner = inner.truncate(order)
    result = TruncatedSeries.zero(order)
    for c in reversed(coeffs):
        result = result * inner + c
    return result


def exp_series(order: int, scale: RationalLike = 1) -> TruncatedSeries:
    """e^(a t) to the given order."""
    a = Fraction(scale)
    return TruncatedSeries([a ** k / factorial(k) for k in range(order + 1)], order)


def egf_stirling2_column(n: int, order: int) -> TruncatedSeries:
    """(e^t - 1)^n / n!; the coefficient of t^m times m! is S(m, n)."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return ((exp_series(order) - 1) ** n).scale(Fraction(1, factorial(n)))


def egf_stirling2_column_by_exponentials(n: int, order: int) -> TruncatedSeries:
    """The same column built as sum_k C(n, k) (-1)^(n-k) e^(kt) / n!."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    total = TruncatedSeries.zero(order)
    for k in range(n + 1):
        total = total + exp_series(order, k).scale((-1) ** (n - k) * binomial(n, k))
    return total.scale(Fraction(1, factorial(n)))


def bell_egf(x: RationalLike, order: int) -> TruncatedSeries:
    """e^(x(e^t - 1)); n! times the coefficient of t^n is phi_n(x)."""
    return series_exp((exp_series(order) - 1).scale(x))


def grunert_apply(s: TruncatedSeries, m: int) -> TruncatedSeries:
    """Apply (x d/dx) m times: c_k becomes k^m c_k."""
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    return TruncatedSeries([k ** m * c for k, c in enumerate(s.coeffs)], s.order)


def grunert_polynomial(m: int, order: int) -> TruncatedSeries:
    """e^(-x) (x d/dx)^m e^x; through order >= m its coefficients are those of phi_m."""
    return exp_series(order, -1) * grunert_apply(exp_series(order), m)


def bernoulli_egf(order: int) -> TruncatedSeries:
    """t/(e^t - 1) as the reciprocal of (e^t - 1)/t."""
    quotient = TruncatedSeries([Fraction(1, factorial(i + 1)) for i in range(order + 1)], order)
    return series_reciprocal(quotient)


def bernoulli_log_trick(order: int) -> TruncatedSeries:
    """sum_{n=0}^{N} (-1)^n/(n+1) (e^t - 1)^n, truncated to order N."""
    u = exp_series(order) - 1
    power = TruncatedSeries.constant(1, order)
    total = TruncatedSeries.zero(order)
    for n in range(order + 1):
        total = total + power.scale(Fraction((-1) ** n, n + 1))
        power = power * u
    return total


def euler_poly_egf(x: RationalLike, order: int) -> TruncatedSeries:
    """2 e^(xt) / (e^t + 1); m! times the coefficient of t^m is E_m(x)."""
    return (exp_series(order, x) * series_reciprocal(exp_series(order) + 1)).scale(2)


def fermi_expansion(lam: RationalLike, mu: RationalLike, order: int) -> TruncatedSeries:
    """
    1 / (mu e^(lam t) + 1) to the given order.

    Each coefficient is checked against lam^m/(mu+1) omega_m(-mu/(mu+1)).

    Raises:
        ConstantTermError: for mu = -1 (the function has a pole at t = 0)
        IdentityViolationError: if a coefficient disagrees with the closed form
    """
    lam, mu = Fraction(lam), Fraction(mu)
    if mu == -1:
        raise ConstantTermError("mu = -1 gives a zero constant term")
    expansion = series_reciprocal(exp_series(order, lam).scale(mu) + 1)
    point = -mu / (mu + 1)
    for m in range(order + 1):
        expected = lam ** m / (mu + 1) * geometric_poly(m)(point)
        if expansion.egf_coefficient(m) != expected:
            raise IdentityViolationError(
                f"lambda={lam}, mu={mu}, m={m}: {expansion.egf_coefficient(m)} != {expected}"
            )
    return expansion


def _geometric_series(order: int) -> TruncatedSeries:
    return TruncatedSeries([1] * (order + 1), order)


def power_ogf(m: int, order: int) -> TruncatedSeries:
    """sum_n n^m x^n taken term by term, with 0^0 = 1."""
    return TruncatedSeries([n ** m for n in range(order + 1)], order)


def ogf_power_check(m: int, order: int) -> VerificationReport:
    """Compare sum_n n^m x^n with omega_m(x/(1-x)) / (1-x) coefficient by coefficient."""
    report = VerificationReport("eq7.6", f"m={m}, order {order}")
    lhs = power_ogf(m, order)
    x_over_one_minus_x = TruncatedSeries([0] + [1] * order, order)
    rhs = series_compose(geometric_poly(m), x_over_one_minus_x) * _geometric_series(order)
    for i in range(order + 1):
        report.check({"m": m, "i": i}, lhs.coefficient(i), rhs.coefficient(i))
    return report


def eulerian_ogf_check(m: int, order: int) -> VerificationReport:
    """Compare sum_n n^m x^n with A_m(x) / (1-x)^(m+1) coefficient by coefficient."""
    report = VerificationReport("eq7.15", f"m={m}, order {order}")
    lhs = power_ogf(m, order)
    denominator = TruncatedSeries.from_polynomial(Polynomial([1, -1]) ** (m + 1), order)
    rhs = TruncatedSeries.from_polynomial(eulerian_poly(m), order) * series_reciprocal(denominator)
    for i in range(order + 1):
        report.check({"m": m, "i": i}, lhs.coefficient(i), rhs.coefficient(i))
    return report


def inverse_factorial_terms(m: int, K: int) -> List[TruncatedSeries]:
    """
    The weighted terms sigma(m+k, m) / (z(z+1)...(z+m+k)) for k = 0..K in u = 1/z.

    Each term is u^(m+k+1) prod_{j=1}^{m+k} 1/(1 + j u), kept to order m+K+1.
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if K < 0:
        raise ValueError(f"K must be non-negative, got {K}")
    order = m + K + 1
    sigma = first_kind_table(m + K)
    product = TruncatedSeries.constant(1, order)
    for j in range(1, m + 1):
        product = product * series_reciprocal(TruncatedSeries([1, j], order))
    terms = []
    for k in range(K + 1):
        if k > 0:
            product = product * series_reciprocal(TruncatedSeries([1, m + k], order))
        term = TruncatedSeries.monomial(m + k + 1, order) * product
        terms.append(term.scale(sigma.entry(m + k, m)))
    return terms


def inverse_factorial_expansion_check(m: int, K: int) -> VerificationReport:
    """Check that the first K+1 terms sum to u^(m+1) through order u^(m+K+1)."""
    order = m + K + 1
    report = VerificationReport("eq10.3", f"m={m}, K={K}, through u^{order}")
    total = TruncatedSeries.zero(order)
    for term in inverse_factorial_terms(m, K):
        total = total + term
    target = TruncatedSeries.monomial(m + 1, order)
    for i in range(order + 1):
        report.check({"m": m, "K": K, "i": i}, target.coefficient(i), total.coefficient(i))
    return report


def inverse_factorial_partial_sum(m: int, K: int, z: RationalLike) -> Tuple[Fraction, Fraction]:
    """
    Evaluate the first K+1 terms of the inverse-factorial expansion at a point.

    Args:
        m: Positive index
        K: Last term index
        z: Positive rational evaluation point

    Returns:
        (partial sum, residual 1/z^(m+1) - partial sum), both exact
    """
    z = Fraction(z)
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if z <= 0:
        raise ValueError(f"z must be positive, got {z}")
    sigma = first_kind_table(m + K)
    rising = Fraction(1)
    for j in range(m + 1):
        rising *= z + j
    partial = Fraction(0)
    for k in range(K + 1):
        if k > 0:
            rising *= z + m + k
        partial += sigma.entry(m + k, m) / rising
    return partial, 1 / z ** (m + 1) - partial
