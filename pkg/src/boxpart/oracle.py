"""Brute-force enumerations used as ground truth in tests.

Plane partitions are enumerated cell by cell, row-major, with each entry
bounded by its left and upper neighbors and by the height bound.  The
symmetric and cyclically symmetric variants filter the same enumeration.
Hard caps guard against accidental huge inputs; exceeding one raises
before any work is done.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .ensembles import EnsembleSpec, cspp, ferrers_hw, pp, spp
from .qpoly import CapExceededError, ExactPolynomial

MAX_SIDE = 4
MAX_CELLS = 36
MAX_CSPP_SIDE = 4
MAX_FERRERS_SIDE = 8


class EnumerationCapError(CapExceededError):
    """Requested enumeration is larger than the configured hard cap."""


@dataclass(frozen=True)
class PlanePartitionArray:
    """An r x s array of nonnegative parts, weakly decreasing along rows
    and down columns."""

    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in self.parts)
        for row in rows:
            if any(a < b for a, b in zip(row, row[1:])):
                raise ValueError("rows must be weakly decreasing")
        for upper, lower in zip(rows, rows[1:]):
            if len(upper) != len(lower):
                raise ValueError("rows must have equal length")
            if any(a < b for a, b in zip(upper, lower)):
                raise ValueError("columns must be weakly decreasing")
        if any(v < 0 for row in rows for v in row):
            raise ValueError("parts must be nonnegative")
        object.__setattr__(self, "parts", rows)

    @property
    def volume(self) -> int:
        return sum(sum(row) for row in self.parts)


@dataclass(frozen=True)
class OracleDistribution:
    """Volume histogram produced by exhaustive enumeration."""

    spec: EnsembleSpec
    counts: ExactPolynomial
    total: int
    bounding_volume: int


def iter_pp(r: int, s: int, t: int) -> Iterator[PlanePartitionArray]:
    """Yield every plane partition in an r x s box with parts at most t."""
    grid = [[0] * s for _ in range(r)]

    def rec(i: int, j: int) -> Iterator[PlanePartitionArray]:
        if i == r:
            yield PlanePartitionArray(tuple(tuple(row) for row in grid))
            return
        ni, nj = (i, j + 1) if j + 1 < s else (i + 1, 0)
        above = grid[i - 1][j] if i > 0 else t
        left = grid[i][j - 1] if j > 0 else t
        for v in range(min(above, left), -1, -1):
            grid[i][j] = v
            yield from rec(ni, nj)
        grid[i][j] = 0

    return rec(0, 0)


def _check_box_cap(r: int, s: int, t: int) -> None:
    if min(r, s, t) < 1:
        raise ValueError("box sides must be positive")
    if max(r, s, t) > MAX_SIDE or r * s * t > MAX_CELLS:
        raise EnumerationCapError(
            "box %dx%dx%d exceeds enumeration cap (sides <= %d, cells <= %d)"
            % (r, s, t, MAX_SIDE, MAX_CELLS))


def _histogram(spec: EnsembleSpec, volumes: Iterator[int],
               bounding_volume: int) -> OracleDistribution:
    hist = [0] * (bounding_volume + 1)
    total = 0
    for v in volumes:
        hist[v] += 1
        total += 1
    return OracleDistribution(spec, ExactPolynomial(tuple(hist)), total, bounding_volume)


def enumerate_pp(r: int, s: int, t: int) -> OracleDistribution:
    """Volume histogram of all plane partitions in an r x s x t box."""
    _check_box_cap(r, s, t)
    return _histogram(pp(r, s, t), (p.volume for p in iter_pp(r, s, t)), r * s * t)


def enumerate_spp(r: int, t: int) -> OracleDistribution:
    """Volume histogram of the symmetric (transpose-invariant) arrays."""
    _check_box_cap(r, r, t)
    volumes = (p.volume for p in iter_pp(r, r, t) if _is_symmetric(p))
    return _histogram(spp(r, t), volumes, r * r * t)


def enumerate_cspp(r: int) -> OracleDistribution:
    """Volume histogram of arrays whose cube set is 3-cycle invariant."""
    if r < 1:
        raise ValueError("box side must be positive")
    if r > MAX_CSPP_SIDE:
        raise EnumerationCapError(
            "cube side %d exceeds enumeration cap %d" % (r, MAX_CSPP_SIDE))
    volumes = (p.volume for p in iter_pp(r, r, r) if _is_cyclic(p, r))
    return _histogram(cspp(r), volumes, r ** 3)


def enumerate_ferrers(h: int, w: int) -> OracleDistribution:
    """Area histogram of Ferrers diagrams with exactly h rows and w columns."""
    if h < 1 or w < 1:
        raise ValueError("diagram sides must be positive")
    if h > MAX_FERRERS_SIDE or w > MAX_FERRERS_SIDE:
        raise EnumerationCapError(
            "diagram %dx%d exceeds enumeration cap %d" % (h, w, MAX_FERRERS_SIDE))
    hist = [0] * (h * w + 1)
    # First row pinned to width w; remaining rows weakly decreasing, >= 1.
    row_values = [w] * h

    def rec(i: int, area: int) -> None:
        if i == h:
            hist[area] += 1
            return
        for v in range(1, row_values[i - 1] + 1):
            row_values[i] = v
            rec(i + 1, area + v)

    rec(1, w)
    total = sum(hist)
    return OracleDistribution(ferrers_hw(h, w), ExactPolynomial(tuple(hist)),
                              total, h * w)


def _is_symmetric(p: PlanePartitionArray) -> bool:
    rows = p.parts
    n = len(rows)
    return all(rows[i][j] == rows[j][i] for i in range(n) for j in range(i + 1, n))


def _is_cyclic(p: PlanePartitionArray, r: int) -> bool:
    # Cube (i, j, k) lies in the stack iff parts[i][j] >= k + 1 (0-based i, j).
    # Invariance under the coordinate 3-cycle asks (i, j, k) in <=> (k, i, j) in.
    rows = p.parts
    for i in range(r):
        for j in range(r):
            for k in range(r):
                if (rows[i][j] >= k + 1) != (rows[k][i] >= j + 1):
                    return False
    return True
