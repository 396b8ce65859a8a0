"""Diagrams counted by height and area at fixed half-perimeter.

Among the 2^m diagrams whose height plus width is m + 2, the height
marginal is 1 + Binomial(m, 1/2) and, given the height h, the area is a
shifted height-one box distribution on an (h-1) x (m+1-h) base.  Height
and area are exactly uncorrelated at every m: transposing a diagram flips
the height about its mean without changing the area.
"""

from __future__ import annotations

from fractions import Fraction

from boxpart import (central_heights, conditional_area, distribution,
                     ferrers_hw_polynomial, height_marginal_moments,
                     joint_diagnostics, perimeter_joint, pp)

m = 12
joint = perimeter_joint(m)
print("m = %d: %d diagrams, heights 1..%d" % (m, joint.total, m + 1))
assert joint.total == 2 ** m

mean, variance = height_marginal_moments(joint)
print("height marginal: mean = %s, variance = %s" % (mean, variance))
assert mean == 1 + Fraction(m, 2)
assert variance == Fraction(m, 4)

print("\nrow totals are binomial coefficients:")
print(" ", [joint.row_total(h) for h in joint.heights()])

h = 5
cond = conditional_area(joint, h)
box = distribution(pp(h - 1, m + 1 - h, 1))
assert cond.counts == box.counts.shifted(joint.area_offset)
print("\nconditional area at height %d = height-one box on %dx%d, shifted"
      % (h, h - 1, m + 1 - h))
print("  counts:", cond.counts.coefficients[joint.area_offset:])

print("\nfixing both height and width gives a single shifted q-binomial:")
print("  ferrers_hw_polynomial(3, 4) =",
      ferrers_hw_polynomial(3, 4).coefficients)

print("\nstandardized diagnostics as m grows:")
print("   m   Var(X_m)        corr(X_m, Y_m)  central KS (worst)")
for size in (16, 64, 256):
    diag = joint_diagnostics(perimeter_joint(size))
    worst = max(k for _, k in diag.conditional_gaussian_ks)
    print("  %-4d %-15s %-15s %.5f"
          % (size, float(diag.standardized_area_variance),
             diag.correlation, worst))
    assert diag.standardized_height_variance == 1
    assert diag.correlation == 0.0

print("\ncentral heights probed at m = 256:", central_heights(256))
