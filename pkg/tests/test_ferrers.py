from __future__ import annotations

from fractions import Fraction
from math import comb, sqrt

import pytest

from boxpart.ensembles import distribution, ferrers_hw, pp
from boxpart.ferrers import (MAX_HALF_PERIMETER, PerimeterCapError,
                             central_heights, conditional_area,
                             ferrers_hw_polynomial, gaussian_binomial,
                             height_marginal_moments, joint_diagnostics,
                             perimeter_area_polynomial, perimeter_joint)
from boxpart.oracle import enumerate_ferrers

from conftest import q_binomial_pascal


def test_gaussian_binomial_matches_pascal_recurrence():
    for n in range(0, 9):
        for k in range(0, n + 1):
            assert gaussian_binomial(n, k).coefficients == \
                q_binomial_pascal(n, k)


def test_gaussian_binomial_symmetry():
    assert gaussian_binomial(7, 3) == gaussian_binomial(7, 4)
    assert gaussian_binomial(5, 0).coefficients == (1,)


def test_hw_polynomial_small_cases():
    assert ferrers_hw_polynomial(1, 1).coefficients == (0, 1)
    assert ferrers_hw_polynomial(2, 2).coefficients == (0, 0, 0, 1, 1)
    assert ferrers_hw_polynomial(1, 4).coefficients == (0, 0, 0, 0, 1)


def test_hw_polynomial_matches_enumeration():
    for h in range(1, 7):
        for w in range(1, 7):
            assert ferrers_hw_polynomial(h, w) == \
                enumerate_ferrers(h, w).counts


def test_hw_polynomial_support_bounds():
    poly = ferrers_hw_polynomial(3, 5)
    assert poly[3 + 5 - 2] == 0
    assert poly[3 + 5 - 1] == 1
    assert poly.degree == 15


def test_perimeter_joint_smallest_cases():
    joint = perimeter_joint(0)
    assert joint.rows == ((1,),)
    assert joint.total == 1
    joint = perimeter_joint(2)
    assert joint.rows == ((1, 0), (1, 1), (1, 0))
    assert joint.area_offset == 3
    assert joint.total == 4
    assert joint.count(2, 4) == 1
    assert joint.count(1, 4) == 0
    assert joint.max_area() == 4


def test_perimeter_joint_row_sums_are_binomial():
    for m in (3, 6, 11):
        joint = perimeter_joint(m)
        assert joint.total == 1 << m
        for h in joint.heights():
            assert joint.row_total(h) == comb(m, h - 1)


def test_perimeter_joint_rows_match_hw_polynomials():
    # fixing the height inside the half-perimeter family pins the width,
    # so each row is a height-by-width polynomial: h + w = m + 2
    for m in (4, 7):
        joint = perimeter_joint(m)
        for h in joint.heights():
            poly = ferrers_hw_polynomial(h, m + 2 - h)
            row = tuple(poly[joint.area_offset + j]
                        for j in range(len(joint.rows[0])))
            assert joint.rows[h - 1] == row


def test_perimeter_joint_matches_enumeration():
    for m in range(0, 7):
        joint = perimeter_joint(m)
        for h in joint.heights():
            w = m + 2 - h
            if w > 8:
                continue
            want = enumerate_ferrers(h, w).counts
            got = tuple(joint.count(h, a) for a in range(want.degree + 1))
            assert got == want.coefficients


def test_perimeter_area_polynomial_aggregates_rows():
    for m in (0, 1, 5, 9):
        joint = perimeter_joint(m)
        poly = perimeter_area_polynomial(m)
        assert poly.coefficient_sum() == 1 << m
        assert poly.degree == joint.area_offset + (m * m) // 4
        for a in range(poly.degree + 1):
            assert poly[a] == sum(joint.count(h, a) for h in joint.heights())
        assert distribution(ferrers_hw(2, 2)).counts == \
            ferrers_hw_polynomial(2, 2)


def test_perimeter_cap():
    with pytest.raises(PerimeterCapError):
        perimeter_joint(MAX_HALF_PERIMETER + 1)
    with pytest.raises(ValueError):
        perimeter_joint(-1)


def test_conditional_area_matches_shifted_box():
    m = 12
    joint = perimeter_joint(m)
    for h in range(2, m + 1):
        cond = conditional_area(joint, h)
        box = distribution(pp(h - 1, m + 1 - h, 1))
        assert cond.counts == box.counts.shifted(joint.area_offset)
        assert cond.total == comb(m, h - 1)
        assert box.counts.is_palindromic()


def test_conditional_area_edges_are_point_masses():
    m = 9
    joint = perimeter_joint(m)
    for h in (1, m + 1):
        cond = conditional_area(joint, h)
        assert cond.total == 1
        assert cond.counts.coefficients == (0,) * (m + 1) + (1,)
    with pytest.raises(ValueError):
        conditional_area(joint, 0)
    with pytest.raises(ValueError):
        conditional_area(joint, m + 2)


def test_height_marginal_moments_exact():
    for m in (2, 5, 12, 33):
        mean, variance = height_marginal_moments(perimeter_joint(m))
        assert mean == 1 + Fraction(m, 2)
        assert variance == Fraction(m, 4)


def test_height_mean_ratio_approaches_one():
    # reported mean is 1 + m/2 against the limit prediction m/2
    def excess(m):
        mean, _ = height_marginal_moments(perimeter_joint(m))
        return mean / Fraction(m, 2) - 1

    assert excess(12) == Fraction(1, 6)
    assert excess(60) < excess(12)
    assert excess(60) == Fraction(1, 30)


def test_central_heights():
    assert central_heights(8) == (4, 5, 6)
    assert central_heights(9) == (4, 5, 6)
    assert central_heights(50) == (25, 26, 27)


def test_joint_diagnostics_exact_parts():
    for m in (4, 10, 50):
        diag = joint_diagnostics(perimeter_joint(m))
        assert diag.standardized_height_variance == 1
        assert diag.correlation == 0.0
        assert abs(diag.standardized_height_mean - 2 / sqrt(m)) <= 1e-12
        assert len(diag.conditional_gaussian_ks) == 3


def test_joint_diagnostics_area_variance_converges():
    # exact Var(X_m) approaches 1 from above as m grows
    v10 = joint_diagnostics(perimeter_joint(10)).standardized_area_variance
    v60 = joint_diagnostics(perimeter_joint(60)).standardized_area_variance
    assert abs(v60 - 1) < abs(v10 - 1)


def test_joint_diagnostics_requires_enough_mass():
    with pytest.raises(ValueError):
        joint_diagnostics(perimeter_joint(3))


def test_conditional_gaussian_ks_shrinks():
    ks32 = max(k for _, k in
               joint_diagnostics(perimeter_joint(32)).conditional_gaussian_ks)
    ks128 = max(k for _, k in
                joint_diagnostics(perimeter_joint(128)).conditional_gaussian_ks)
    assert ks128 < ks32
