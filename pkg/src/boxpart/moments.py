"""Closed-form and empirical moments of the volume laws.

Every paired factor (1 - q^a) / (1 - q^(a-c)) of a volume generating
function contributes g(a x) - g((a - c) x) to the log of the moment
generating function, where g(t) = log((e^t - 1) / t).  With b_N the
Taylor coefficients of g, the x^N coefficient of one factor is

    H_{N,c}(a) = b_N * (a^N - (a - c)^N),

so the mean is the sum of H_{1,c}(a) = c/2 over factors and the variance
is the sum of 2! * H_{2,c}(a) = c*a/6 - c^2/12.  Summing those in closed
form over each builder's index ranges gives the formulas below; they are
cross-checked against exhaustive enumeration in the tests.

Everything in this module is exact: all values are integers or
`fractions.Fraction`, never floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .ensembles import EnsembleSpec, Kind, VolumeDistribution, builder


def mean_closed(spec: EnsembleSpec) -> Fraction:
    """Exact mean volume: always half the bounding volume."""
    _require_plane_partition(spec)
    return Fraction(spec.bounding_volume, 2)


def variance_closed(spec: EnsembleSpec) -> Fraction:
    """Exact variance of the volume, summed from the quadratic cumulant."""
    _require_plane_partition(spec)
    if spec.kind is Kind.PP:
        r, s, t = spec.params
        return Fraction(r * s * t * (r + s + t), 12)
    if spec.kind is Kind.SPP:
        r, t = spec.params
        # Sum of c*a/6 - c^2/12 over diagonal factors (c = 1) and fused
        # off-diagonal orbit factors (c = 2).
        return (Fraction(t * r ** 3, 3) - Fraction(t * r ** 2, 6)
                + Fraction(t ** 2 * r ** 2, 6) - Fraction(t ** 2 * r, 12))
    r = spec.params[0]
    return Fraction(3 * r ** 4, 4) - Fraction(r ** 2, 2)


def empirical_moment(dist: VolumeDistribution, order: int) -> Fraction:
    """Raw moment E[X^order] computed directly from the exact counts."""
    if order < 0:
        raise ValueError("moment order must be nonnegative")
    acc = 0
    for k, c in enumerate(dist.counts.coefficients):
        if c:
            acc += k ** order * c
    return Fraction(acc, dist.total)


def empirical_central_moment(dist: VolumeDistribution, order: int) -> Fraction:
    """Central moment E[(X - E[X])^order] from the exact counts."""
    if order < 0:
        raise ValueError("moment order must be nonnegative")
    mu = empirical_moment(dist, 1)
    acc = Fraction(0)
    for k, c in enumerate(dist.counts.coefficients):
        if c:
            acc += (k - mu) ** order * c
    return acc / dist.total


@dataclass(frozen=True)
class GSeries:
    """Taylor coefficients b_1..b_nmax of g(t) = log((e^t - 1)/t) at 0."""

    coefficients: tuple[Fraction, ...]

    @property
    def nmax(self) -> int:
        return len(self.coefficients)

    def b(self, order: int) -> Fraction:
        if not 1 <= order <= self.nmax:
            raise ValueError("order %d outside 1..%d" % (order, self.nmax))
        return self.coefficients[order - 1]


def _series_mul(x: list[Fraction], y: list[Fraction], nmax: int) -> list[Fraction]:
    out = [Fraction(0)] * (nmax + 1)
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        for j, yj in enumerate(y):
            if i + j > nmax:
                break
            if yj:
                out[i + j] += xi * yj
    return out


@lru_cache(maxsize=None)
def g_series(nmax: int) -> GSeries:
    """Expand g(t) = log(1 + sum_{n>=1} t^n/(n+1)!) by series composition."""
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    inner = [Fraction(0)] + [Fraction(1, factorial(n + 1)) for n in range(1, nmax + 1)]
    total = [Fraction(0)] * (nmax + 1)
    power = [Fraction(1)] + [Fraction(0)] * nmax
    for j in range(1, nmax + 1):
        power = _series_mul(power, inner, nmax)
        sign = Fraction(1, j) if j % 2 == 1 else Fraction(-1, j)
        for n in range(j, nmax + 1):
            total[n] += sign * power[n]
    return GSeries(tuple(total[1:]))


def _b_coefficient(order: int) -> Fraction:
    return g_series(max(order, 2)).b(order)


@dataclass(frozen=True)
class HCoefficient:
    """H_{N,c} as a polynomial in the factor weight a, ascending powers."""

    order: int
    offset: int
    alpha_coefficients: tuple[Fraction, ...]

    def evaluate(self, alpha) -> Fraction:
        a = Fraction(alpha)
        acc = Fraction(0)
        for coeff in reversed(self.alpha_coefficients):
            acc = acc * a + coeff
        return acc


def h_polynomial(order: int, offset: int) -> HCoefficient:
    """Coefficients of b_N * (a^N - (a - c)^N) as a polynomial in a."""
    if order < 1:
        raise ValueError("order must be >= 1")
    if offset < 1:
        raise ValueError("offset must be >= 1")
    b = _b_coefficient(order)
    coeffs = [Fraction(0)] * order
    # a^N - (a - c)^N = sum_{k>=1} C(N,k) (-1)^(k+1) c^k a^(N-k), degree N-1.
    for k in range(1, order + 1):
        sign = 1 if k % 2 == 1 else -1
        coeffs[order - k] = b * sign * comb(order, k) * offset ** k
    return HCoefficient(order, offset, tuple(coeffs))


def h_coefficient(order: int, offset: int, alpha) -> Fraction:
    """Value of H_{N,c} at a rational weight alpha."""
    if order < 1:
        raise ValueError("order must be >= 1")
    if offset < 1:
        raise ValueError("offset must be >= 1")
    a = Fraction(alpha)
    return _b_coefficient(order) * (a ** order - (a - offset) ** order)


def h_bound_check(order: int, offset: int, alpha, bound_constant=1) -> bool:
    """Check |H_{N,c}(alpha)| <= D * alpha^(N-1) * (2c)^N exactly."""
    a = Fraction(alpha)
    if a <= offset:
        raise ValueError("alpha must exceed the offset")
    lhs = abs(h_coefficient(order, offset, a))
    rhs = Fraction(bound_constant) * a ** (order - 1) * (2 * offset) ** order
    return lhs <= rhs


def variance_from_cumulant(spec: EnsembleSpec) -> Fraction:
    """Variance as the sum of 2! * H_{2,c} over the builder's factor pairs."""
    _require_plane_partition(spec)
    acc = 0
    for a, b in builder(spec).pairs:
        acc += a * a - b * b
    return Fraction(acc, 12)


def _require_plane_partition(spec: EnsembleSpec) -> None:
    if spec.kind not in (Kind.PP, Kind.SPP, Kind.CSPP):
        raise ValueError(
            "no closed-form volume moments for %s specs" % spec.kind.value)
