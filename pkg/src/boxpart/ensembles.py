"""Volume ensembles: box-bounded plane partitions and Ferrers diagrams.

Each ensemble is named by an `EnsembleSpec`.  For the three plane
partition families the volume generating function is a product of factors
(1 - q^a) / (1 - q^b) with one factor per orbit of box cells; the builders
below emit those exponent pairs and `distribution` expands them into the
exact count-per-volume table.  The Ferrers families are delegated to the
`ferrers` module, which works with the same polynomial machinery.

Exponent pair conventions (a = orbit weight sum, b = a - c):

* plain boxes: one factor per cell (i, j, k), pair (i+j+k-1, i+j+k-2);
* transpose-symmetric boxes: diagonal cells give (2i+k-1, 2i+k-2), the
  fused off-diagonal orbit of (i, j, k) and (j, i, k) with i < j gives
  (2(i+j+k-1), 2(i+j+k-2));
* 3-cycle-symmetric cubes: orbits of three distinct coordinates give
  (3(i+j+k-1), 3(i+j+k-2)) and occur twice per support set i < j < k,
  orbits with exactly two equal coordinates give the pairs for weights
  2i+k and i+2k over i < k, and fixed cells (i, i, i) give (3i-1, 3i-2).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .qpoly import ExactPolynomial, FactorRatioProduct, expand


class Kind(str, Enum):
    PP = "pp"
    SPP = "spp"
    CSPP = "cspp"
    FERRERS_HW = "ferrers_hw"
    FERRERS_PERIMETER = "ferrers_perimeter"


_PARAM_NAMES = {
    Kind.PP: ("r", "s", "t"),
    Kind.SPP: ("r", "t"),
    Kind.CSPP: ("r",),
    Kind.FERRERS_HW: ("h", "w"),
    Kind.FERRERS_PERIMETER: ("m",),
}


@dataclass(frozen=True)
class EnsembleSpec:
    """A combinatorial family tag plus its size parameters."""

    kind: Kind
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        names = _PARAM_NAMES[self.kind]
        params = tuple(int(v) for v in self.params)
        if len(params) != len(names):
            raise ValueError("%s expects parameters %s" % (self.kind.value, names))
        minimum = 0 if self.kind is Kind.FERRERS_PERIMETER else 1
        for name, value in zip(names, params):
            if value < minimum:
                raise ValueError("%s must be >= %d, got %d" % (name, minimum, value))
        object.__setattr__(self, "params", params)

    def __getattr__(self, name: str) -> int:
        if name.startswith("_") or name in ("kind", "params"):
            raise AttributeError(name)
        names = _PARAM_NAMES[self.kind]
        if name in names:
            return self.params[names.index(name)]
        raise AttributeError("%s spec has no parameter %r" % (self.kind.value, name))

    @property
    def bounding_volume(self) -> int:
        """Largest volume (or area) any member of the ensemble can have."""
        if self.kind is Kind.PP:
            r, s, t = self.params
            return r * s * t
        if self.kind is Kind.SPP:
            r, t = self.params
            return r * r * t
        if self.kind is Kind.CSPP:
            return self.params[0] ** 3
        if self.kind is Kind.FERRERS_HW:
            h, w = self.params
            return h * w
        m = self.params[0]
        return m + 1 + (m * m) // 4

    def as_dict(self) -> dict:
        out: dict = {"kind": self.kind.value}
        out.update(zip(_PARAM_NAMES[self.kind], self.params))
        return out


def pp(r: int, s: int, t: int) -> EnsembleSpec:
    """Plane partitions in an r x s box with parts at most t."""
    return EnsembleSpec(Kind.PP, (r, s, t))


def spp(r: int, t: int) -> EnsembleSpec:
    """Transpose-symmetric plane partitions in an r x r box, parts <= t."""
    return EnsembleSpec(Kind.SPP, (r, t))


def cspp(r: int) -> EnsembleSpec:
    """Plane partitions in an r-cube whose cube set is 3-cycle invariant."""
    return EnsembleSpec(Kind.CSPP, (r,))


def ferrers_hw(h: int, w: int) -> EnsembleSpec:
    """Ferrers diagrams with exactly h rows and exactly w columns."""
    return EnsembleSpec(Kind.FERRERS_HW, (h, w))


def ferrers_perimeter(m: int) -> EnsembleSpec:
    """Ferrers diagrams with height + width = m + 2 (half-perimeter m + 2)."""
    return EnsembleSpec(Kind.FERRERS_PERIMETER, (m,))


@dataclass(frozen=True)
class VolumeDistribution:
    """Exact counts of ensemble members by volume.

    counts[k] is the number of members of volume k; total is the number of
    members overall.  Both are exact integers.
    """

    spec: EnsembleSpec
    counts: ExactPolynomial
    total: int
    bounding_volume: int

    def __post_init__(self) -> None:
        if any(c < 0 for c in self.counts.coefficients):
            raise ValueError("counts must be nonnegative")
        if self.total != self.counts.coefficient_sum():
            raise ValueError("total does not match the coefficient sum")
        if self.counts.degree > self.bounding_volume:
            raise ValueError("counts extend past the bounding volume")

    def support(self) -> tuple[int, ...]:
        """Volumes with at least one member, in increasing order."""
        return tuple(k for k, c in enumerate(self.counts.coefficients) if c)


def _require_positive(**sides: int) -> None:
    for name, value in sides.items():
        if value < 1:
            raise ValueError("%s must be >= 1, got %d" % (name, value))


def build_pp(r: int, s: int, t: int) -> FactorRatioProduct:
    """Factor pairs of the volume generating function for pp(r, s, t)."""
    _require_positive(r=r, s=s, t=t)
    pairs = []
    for i in range(1, r + 1):
        for j in range(1, s + 1):
            for k in range(1, t + 1):
                a = i + j + k - 1
                pairs.append((a, a - 1))
    return FactorRatioProduct(tuple(pairs))


def build_spp(r: int, t: int) -> FactorRatioProduct:
    """Factor pairs of the volume generating function for spp(r, t)."""
    _require_positive(r=r, t=t)
    pairs = []
    for i in range(1, r + 1):
        for k in range(1, t + 1):
            a = 2 * i + k - 1
            pairs.append((a, a - 1))
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            for k in range(1, t + 1):
                b = 2 * (i + j + k - 2)
                pairs.append((b + 2, b))
    return FactorRatioProduct(tuple(pairs))


def build_cspp(r: int) -> FactorRatioProduct:
    """Factor pairs of the volume generating function for cspp(r)."""
    _require_positive(r=r)
    pairs = []
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            for k in range(j + 1, r + 1):
                a = 3 * (i + j + k - 1)
                pairs.append((a, a - 3))
                pairs.append((a, a - 3))
    for i in range(1, r + 1):
        for k in range(i + 1, r + 1):
            a = 3 * (2 * i + k - 1)
            pairs.append((a, a - 3))
            b = 3 * (i + 2 * k - 1)
            pairs.append((b, b - 3))
    for i in range(1, r + 1):
        pairs.append((3 * i - 1, 3 * i - 2))
    return FactorRatioProduct(tuple(pairs))


_BUILDERS = {
    Kind.PP: lambda spec: build_pp(*spec.params),
    Kind.SPP: lambda spec: build_spp(*spec.params),
    Kind.CSPP: lambda spec: build_cspp(*spec.params),
}


def builder(spec: EnsembleSpec) -> FactorRatioProduct:
    """Factor-ratio product for a plane partition spec."""
    try:
        make = _BUILDERS[spec.kind]
    except KeyError:
        raise ValueError("%s has no factor-ratio form" % spec.kind.value) from None
    return make(spec)


def distribution(spec: EnsembleSpec) -> VolumeDistribution:
    """Exact volume distribution of the ensemble."""
    if spec.kind in _BUILDERS:
        counts = expand(builder(spec))
    elif spec.kind is Kind.FERRERS_HW:
        from .ferrers import ferrers_hw_polynomial
        counts = ferrers_hw_polynomial(*spec.params)
    else:
        from .ferrers import perimeter_area_polynomial
        counts = perimeter_area_polynomial(spec.params[0])
    return VolumeDistribution(spec, counts, counts.coefficient_sum(),
                              spec.bounding_volume)


def probability(dist: VolumeDistribution, k: int) -> Fraction:
    """Probability that a uniformly drawn member has volume exactly k."""
    if k < 0 or k > dist.bounding_volume:
        return Fraction(0)
    return Fraction(dist.counts[k], dist.total)
