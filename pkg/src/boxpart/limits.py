"""Reference laws and Kolmogorov-Smirnov diagnostics for the volume laws.

Two normalizations are supported: standardizing by the exact closed-form
mean and standard deviation (compared against the standard Gaussian), and
dividing the volume by the height bound t (compared against a convolution
of uniform densities on [0, 1] and [0, 2]).

The KS statistic of a discrete law against a continuous reference is the
supremum over atoms x of max(|F(x) - C(x)|, |F(x-) - C(x)|), where F is
the discrete CDF and C the reference CDF.  Atom prefix sums are exact big
integers and are floated through a 2^64 scaling, so the discrete side
carries at most 2^-63 relative error into the comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb, erfc, factorial, sqrt
from typing import Callable, Sequence

from .ensembles import EnsembleSpec, Kind, VolumeDistribution
from .moments import mean_closed, variance_closed

_SQRT2 = sqrt(2.0)


class Normalization(Enum):
    STANDARDIZE = "standardize"
    SCALE_BY_T = "scale_by_t"


class LawKind(Enum):
    STANDARD_GAUSSIAN = "standard_gaussian"
    UNIFORM_CONVOLUTION = "uniform_convolution"


@dataclass(frozen=True)
class ReferenceLaw:
    """A continuous limit law: the standard Gaussian, or the distribution
    of a sum of n1 uniforms on [0, 1] and n2 uniforms on [0, 2]."""

    kind: LawKind
    n1: int = 0
    n2: int = 0

    def __post_init__(self) -> None:
        if self.kind is LawKind.UNIFORM_CONVOLUTION:
            if self.n1 < 0 or self.n2 < 0 or self.n1 + self.n2 < 1:
                raise ValueError("need at least one uniform factor")
        elif self.n1 or self.n2:
            raise ValueError("factor counts only apply to uniform convolutions")


def standard_gaussian() -> ReferenceLaw:
    return ReferenceLaw(LawKind.STANDARD_GAUSSIAN)


def uniform_convolution(n1: int, n2: int = 0) -> ReferenceLaw:
    return ReferenceLaw(LawKind.UNIFORM_CONVOLUTION, n1, n2)


def gaussian_cdf(x: float) -> float:
    """Standard normal CDF via the complementary error function."""
    return 0.5 * erfc(-x / _SQRT2)


def uniform_convolution_cdf(law: ReferenceLaw, x) -> float:
    """CDF of the uniform convolution at x, by exact inclusion-exclusion.

    The value is assembled in rational arithmetic from the shifted power
    terms (x - j - 2k)_+^n and floated only at the very end, so there is
    no cancellation error even for many factors.
    """
    if law.kind is not LawKind.UNIFORM_CONVOLUTION:
        raise ValueError("law is not a uniform convolution")
    n1, n2 = law.n1, law.n2
    n = n1 + n2
    xq = Fraction(x)
    if xq <= 0:
        return 0.0
    if xq >= n1 + 2 * n2:
        return 1.0
    acc = Fraction(0)
    for j in range(n1 + 1):
        for k in range(n2 + 1):
            shift = j + 2 * k
            if xq <= shift:
                continue
            term = comb(n1, j) * comb(n2, k) * (xq - shift) ** n
            acc += -term if (j + k) % 2 else term
    return float(acc / (factorial(n) * 2 ** n2))


def sup_cdf_distance(positions: Sequence, weights: Sequence[int],
                     cdf: Callable, cdf_left: Callable | None = None) -> float:
    """Sup distance between the step CDF of weighted atoms and a reference.

    positions must be strictly increasing; weights are exact counts.  For a
    continuous reference only `cdf` is needed; a discrete reference can
    supply its left limits through `cdf_left`.
    """
    if len(positions) != len(weights):
        raise ValueError("positions and weights differ in length")
    if cdf_left is None:
        cdf_left = cdf
    total = sum(weights)
    if total <= 0:
        raise ValueError("total weight must be positive")
    best = 0.0
    acc = 0
    previous = None
    for pos, weight in zip(positions, weights):
        if previous is not None and not pos > previous:
            raise ValueError("positions must be strictly increasing")
        previous = pos
        below = _ratio_as_float(acc, total)
        acc += weight
        upto = _ratio_as_float(acc, total)
        best = max(best, abs(upto - cdf(pos)), abs(below - cdf_left(pos)))
    return best


def _ratio_as_float(numerator: int, denominator: int) -> float:
    # Exact to 2^-64 no matter how large the integers are.
    return ((numerator << 64) // denominator) / 2.0 ** 64


def ks_distance(dist: VolumeDistribution, normalization: Normalization,
                law: ReferenceLaw) -> float:
    """KS distance of the normalized volume law from the reference law."""
    support = dist.support()
    weights = [dist.counts[k] for k in support]
    if normalization is Normalization.STANDARDIZE:
        if law.kind is not LawKind.STANDARD_GAUSSIAN:
            raise ValueError("standardized volumes compare to the Gaussian law")
        mu = mean_closed(dist.spec)
        var = variance_closed(dist.spec)
        if var <= 0:
            raise ValueError("variance must be positive to standardize")
        sigma = sqrt(float(var))
        positions = [float(k - mu) / sigma for k in support]
        return sup_cdf_distance(positions, weights, gaussian_cdf)
    if law.kind is not LawKind.UNIFORM_CONVOLUTION:
        raise ValueError("scaled volumes compare to a uniform convolution")
    scale = _height_bound(dist.spec)
    positions = [Fraction(k, scale) for k in support]
    return sup_cdf_distance(positions, weights,
                            lambda x: uniform_convolution_cdf(law, x))


def _height_bound(spec: EnsembleSpec) -> int:
    if spec.kind is Kind.PP:
        return spec.params[2]
    if spec.kind is Kind.SPP:
        return spec.params[1]
    raise ValueError("%s volumes have no height scaling" % spec.kind.value)


def concentration_ratio(spec: EnsembleSpec) -> Fraction:
    """Exact squared coefficient of variation (sigma/mu)^2 for plain boxes."""
    if spec.kind is not Kind.PP:
        raise ValueError("concentration ratio is defined for plain boxes")
    r, s, t = spec.params
    return (Fraction(1, s * t) + Fraction(1, r * t) + Fraction(1, r * s)) / 3


@dataclass(frozen=True)
class ConvergenceRow:
    spec: EnsembleSpec
    normalization: Normalization
    ks: float


@dataclass(frozen=True)
class ConvergenceReport:
    """KS distances for a family of growing specs, in the given order."""

    rows: tuple[ConvergenceRow, ...]

    @property
    def ks_values(self) -> tuple[float, ...]:
        return tuple(row.ks for row in self.rows)

    @property
    def nonincreasing(self) -> bool:
        values = self.ks_values
        return all(b <= a for a, b in zip(values, values[1:]))


def convergence_table(specs: Sequence[EnsembleSpec],
                      normalization: Normalization,
                      law: ReferenceLaw) -> ConvergenceReport:
    """KS distance for each spec in turn, with a monotonicity verdict."""
    from .ensembles import distribution
    rows = tuple(
        ConvergenceRow(spec, normalization,
                       ks_distance(distribution(spec), normalization, law))
        for spec in specs)
    return ConvergenceReport(rows)
