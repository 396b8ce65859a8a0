"""Ferrers diagram ensembles counted by height and area.

A diagram with exactly h rows and w columns has area generating function
q^(h+w-1) times the Gaussian binomial [h+w-2 choose h-1]_q: peeling the
pinned first row and column leaves an arbitrary diagram inside an
(h-1) x (w-1) box, which is the h+w-1 = t case of the box product.

Fixing the half-perimeter h + w = m + 2 instead gives a joint law on
(height, area): row h of the joint table holds the coefficients of
q^(m+1) [m choose h-1]_q, the table total is 2^m, and the height marginal
is 1 + Binomial(m, 1/2).  Successive Gaussian binomials along a row of
fixed m are produced by the ratio recurrence

    [m choose k+1]_q = [m choose k]_q * (1 - q^(m-k)) / (1 - q^(k+1)),

one exact multiply and one exact division per step.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import sqrt

from .ensembles import (EnsembleSpec, VolumeDistribution, build_pp,
                        ferrers_perimeter, pp)
from .limits import gaussian_cdf, sup_cdf_distance
from .moments import mean_closed, variance_closed
from .qpoly import (CapExceededError, ExactPolynomial, divide_exact, expand,
                    multiply_one_minus_q)

MAX_HALF_PERIMETER = 400


class PerimeterCapError(CapExceededError):
    """Joint table would exceed the half-perimeter cap."""


def gaussian_binomial(n: int, k: int) -> ExactPolynomial:
    """[n choose k]_q as a polynomial, via the box product at height 1."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if k == 0 or k == n:
        return ExactPolynomial.one()
    return expand(build_pp(k, n - k, 1))


def ferrers_hw_polynomial(h: int, w: int) -> ExactPolynomial:
    """Area generating function of diagrams with h rows and w columns."""
    if h < 1 or w < 1:
        raise ValueError("diagram sides must be positive")
    return gaussian_binomial(h + w - 2, h - 1).shifted(h + w - 1)


@dataclass(frozen=True)
class JointHeightAreaDistribution:
    """Dense joint table of diagram counts by height and area.

    rows[h - 1][j] counts diagrams of height h and area area_offset + j;
    all rows share the span 0..floor(m^2/4).  total is 2^m.
    """

    m: int
    rows: tuple[tuple[int, ...], ...]
    area_offset: int
    total: int

    def count(self, height: int, area: int) -> int:
        if not 1 <= height <= self.m + 1:
            return 0
        j = area - self.area_offset
        row = self.rows[height - 1]
        if 0 <= j < len(row):
            return row[j]
        return 0

    def heights(self) -> range:
        return range(1, self.m + 2)

    def row_total(self, height: int) -> int:
        return sum(self.rows[height - 1])

    def max_area(self) -> int:
        return self.area_offset + len(self.rows[0]) - 1


def perimeter_joint(m: int, max_half_perimeter: int = MAX_HALF_PERIMETER
                    ) -> JointHeightAreaDistribution:
    """Joint (height, area) counts at half-perimeter m + 2."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m > max_half_perimeter:
        raise PerimeterCapError(
            "m = %d exceeds the joint table cap %d" % (m, max_half_perimeter))
    span = (m * m) // 4 + 1
    rows = []
    row = ExactPolynomial.one()
    for k in range(m + 1):
        coeffs = row.coefficients
        rows.append(coeffs + (0,) * (span - len(coeffs)))
        if k < m:
            row = divide_exact(multiply_one_minus_q(row, m - k), k + 1)
    return JointHeightAreaDistribution(m, tuple(rows), m + 1, 1 << m)


def perimeter_area_polynomial(m: int) -> ExactPolynomial:
    """Area generating function aggregated over all heights."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    acc = [0] * ((m * m) // 4 + 1)
    row = ExactPolynomial.one()
    for k in range(m + 1):
        for j, c in enumerate(row.coefficients):
            acc[j] += c
        if k < m:
            row = divide_exact(multiply_one_minus_q(row, m - k), k + 1)
    return ExactPolynomial(tuple(acc)).shifted(m + 1)


def conditional_area(joint: JointHeightAreaDistribution,
                     height: int) -> VolumeDistribution:
    """Area distribution among diagrams of one fixed height."""
    if not 1 <= height <= joint.m + 1:
        raise ValueError("height %d outside 1..%d" % (height, joint.m + 1))
    row = joint.rows[height - 1]
    counts = ExactPolynomial((0,) * joint.area_offset + row)
    bounding = joint.area_offset + (height - 1) * (joint.m + 1 - height)
    return VolumeDistribution(ferrers_perimeter(joint.m), counts,
                              sum(row), bounding)


def height_marginal_moments(joint: JointHeightAreaDistribution
                            ) -> tuple[Fraction, Fraction]:
    """Exact (mean, variance) of the height marginal: (1 + m/2, m/4)."""
    total = joint.total
    first = 0
    second = 0
    for h in joint.heights():
        weight = joint.row_total(h)
        first += h * weight
        second += h * h * weight
    mean = Fraction(first, total)
    return mean, Fraction(second, total) - mean * mean


@dataclass(frozen=True)
class JointDiagnostics:
    """Moments of the standardized pair and per-height Gaussian distances.

    Area is standardized as (A - m^2/8) / sqrt(m^3/48) and height as
    (H - m/2) / (sqrt(m)/2).  Variances and the covariance come from the
    exact joint law; only the square roots force floats.
    """

    m: int
    standardized_area_mean: float
    standardized_area_variance: Fraction
    standardized_height_mean: float
    standardized_height_variance: Fraction
    correlation: float
    conditional_gaussian_ks: tuple[tuple[int, float], ...]


def central_heights(m: int) -> tuple[int, ...]:
    """Heights h whose box side h - 1 is within one of m // 2."""
    return tuple(v + 1 for v in (m // 2 - 1, m // 2, m // 2 + 1))


def joint_diagnostics(joint: JointHeightAreaDistribution) -> JointDiagnostics:
    """Standardized moments, correlation, and central-height KS distances."""
    m = joint.m
    if m < 4:
        raise ValueError("diagnostics need m >= 4")
    total = joint.total
    ea = eaa = eh = ehh = eah = 0
    for h in joint.heights():
        row = joint.rows[h - 1]
        row_sum = 0
        row_area = 0
        row_area_sq = 0
        for j, c in enumerate(row):
            if c:
                a = joint.area_offset + j
                row_sum += c
                row_area += a * c
                row_area_sq += a * a * c
        ea += row_area
        eaa += row_area_sq
        eh += h * row_sum
        ehh += h * h * row_sum
        eah += h * row_area
    mean_a = Fraction(ea, total)
    mean_h = Fraction(eh, total)
    var_a = Fraction(eaa, total) - mean_a * mean_a
    var_h = Fraction(ehh, total) - mean_h * mean_h
    cov = Fraction(eah, total) - mean_a * mean_h

    area_scale_sq = Fraction(m ** 3, 48)
    height_scale_sq = Fraction(m, 4)
    mean_x = float(mean_a - Fraction(m * m, 8)) / sqrt(float(area_scale_sq))
    mean_y = float(mean_h - Fraction(m, 2)) / sqrt(float(height_scale_sq))
    if cov == 0:
        corr = 0.0
    else:
        corr_sq = cov * cov / (var_a * var_h)
        corr = (1.0 if cov > 0 else -1.0) * sqrt(float(corr_sq))

    ks_rows = tuple(
        (h, _conditional_gaussian_ks(joint, h)) for h in central_heights(m))
    return JointDiagnostics(m, mean_x, var_a / area_scale_sq, mean_y,
                            var_h / height_scale_sq, corr, ks_rows)


def _conditional_gaussian_ks(joint: JointHeightAreaDistribution,
                             height: int) -> float:
    """KS of the standardized conditional area against the Gaussian."""
    cond = conditional_area(joint, height)
    box = pp(height - 1, joint.m + 1 - height, 1)
    mu = joint.area_offset + mean_closed(box)
    sigma = sqrt(float(variance_closed(box)))
    support = cond.support()
    positions = [float(a - mu) / sigma for a in support]
    weights = [cond.counts[a] for a in support]
    return sup_cdf_distance(positions, weights, gaussian_cdf)
