from __future__ import annotations

import pytest

from boxpart.ensembles import builder, cspp, pp, spp
from boxpart.oracle import (EnumerationCapError, PlanePartitionArray,
                            enumerate_cspp, enumerate_ferrers, enumerate_pp,
                            enumerate_spp, iter_pp)
from boxpart.qpoly import eval_at_one


def test_array_validation():
    good = PlanePartitionArray(((3, 2), (2, 1)))
    assert good.volume == 8
    with pytest.raises(ValueError):
        PlanePartitionArray(((1, 2),))
    with pytest.raises(ValueError):
        PlanePartitionArray(((1,), (2,)))
    with pytest.raises(ValueError):
        PlanePartitionArray(((-1,),))


def test_iter_pp_counts_and_monotonicity():
    arrays = list(iter_pp(2, 2, 2))
    assert len(arrays) == 20
    assert len(set(arrays)) == 20
    for a in arrays:
        assert all(v <= 2 for row in a.parts for v in row)


def test_enumerate_pp_small_boxes():
    d = enumerate_pp(2, 2, 2)
    assert d.counts.coefficients == (1, 1, 3, 3, 4, 3, 3, 1, 1)
    assert d.total == 20
    assert d.bounding_volume == 8
    assert enumerate_pp(1, 1, 3).counts.coefficients == (1, 1, 1, 1)


def test_enumerate_pp_box_symmetry():
    reference = enumerate_pp(1, 2, 3).counts
    for r, s, t in ((1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)):
        assert enumerate_pp(r, s, t).counts == reference


@pytest.mark.parametrize("r,s,t", [(1, 1, 1), (2, 2, 2), (2, 3, 3), (3, 3, 3)])
def test_enumerate_pp_totals_match_product_formula(r, s, t):
    assert enumerate_pp(r, s, t).total == eval_at_one(builder(pp(r, s, t)))


def test_enumerate_spp_small():
    d = enumerate_spp(2, 1)
    assert d.counts.coefficients == (1, 1, 0, 1, 1)
    assert d.total == 4
    d = enumerate_spp(2, 2)
    assert d.counts.coefficients == (1, 1, 1, 1, 2, 1, 1, 1, 1)
    assert d.total == 10
    assert d.total == eval_at_one(builder(spp(2, 2)))


def test_enumerate_cspp_small():
    d = enumerate_cspp(2)
    assert d.counts.coefficients == (1, 1, 0, 0, 1, 0, 0, 1, 1)
    assert d.total == 5
    d = enumerate_cspp(3)
    assert d.total == 20
    assert d.total == eval_at_one(builder(cspp(3)))
    assert d.counts.degree == 27


def test_enumerate_ferrers_small():
    d = enumerate_ferrers(2, 2)
    assert d.counts.coefficients == (0, 0, 0, 1, 1)
    assert d.total == 2
    d = enumerate_ferrers(1, 4)
    assert d.counts.coefficients == (0, 0, 0, 0, 1)
    assert d.total == 1
    assert enumerate_ferrers(3, 3).total == 6


def test_enumeration_caps():
    with pytest.raises(EnumerationCapError):
        enumerate_pp(5, 1, 1)
    with pytest.raises(EnumerationCapError):
        enumerate_pp(4, 4, 3)
    with pytest.raises(EnumerationCapError):
        enumerate_spp(4, 3)
    with pytest.raises(EnumerationCapError):
        enumerate_cspp(5)
    with pytest.raises(EnumerationCapError):
        enumerate_ferrers(9, 2)
    with pytest.raises(ValueError):
        enumerate_pp(0, 1, 1)
