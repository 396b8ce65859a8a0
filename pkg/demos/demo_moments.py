"""Closed-form moments against the exact distributions.

The mean is always half the bounding volume.  The variance comes from a
quadratic cumulant: each factor pair (a, a - c) of the generating
function contributes H_{2,c}(a) * 2! = (2ca - c^2) / 12, and the closed
formulas below are just those sums evaluated.
"""

from __future__ import annotations

from fractions import Fraction

from boxpart import (cspp, distribution, empirical_central_moment,
                     empirical_moment, g_series, h_coefficient, mean_closed,
                     pp, spp, variance_closed, variance_from_cumulant)

print("spec                     mean        variance    (all exact)")
for spec in (pp(2, 2, 2), pp(3, 4, 5), spp(3, 2), spp(4, 4), cspp(3),
             cspp(5)):
    dist = distribution(spec)
    mean = mean_closed(spec)
    var = variance_closed(spec)
    assert mean == empirical_moment(dist, 1)
    assert var == empirical_central_moment(dist, 2)
    assert var == variance_from_cumulant(spec)
    print("%-24s %-11s %-11s" % (spec.as_dict(), mean, var))

print("\nOdd central moments vanish (palindromic counts):")
dist = distribution(pp(3, 3, 3))
for order in (3, 5, 7):
    value = empirical_central_moment(dist, order)
    print("  order %d: %s" % (order, value))
    assert value == 0

print("\nTaylor coefficients b_N of log((e^t - 1)/t):")
g = g_series(8)
for n in range(1, 9):
    print("  b_%d = %s" % (n, g.b(n)))
assert g.b(1) == Fraction(1, 2)
assert g.b(2) == Fraction(1, 24)

print("\nFirst-order H is constant in the weight: H_{1,c}(a) = c / 2")
for c in (1, 2, 3):
    values = {h_coefficient(1, c, a) for a in (c + 1, 2 * c, 50)}
    print("  c = %d: H_{1,%d}(a) = %s" % (c, c, values.pop()))
    assert not values
