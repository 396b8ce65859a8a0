"""Uniform-convolution limit for slabs with a growing height bound.

Fix the base of the box and let the height bound t grow.  Each of the
r * s columns scales to an independent-looking uniform on [0, 1], and the
scaled volume X/t approaches a sum of uniforms.  For symmetric boxes the
r diagonal columns give uniforms on [0, 1] and each off-diagonal pair is
mirrored, giving r(r-1)/2 uniforms on [0, 2].
"""

from __future__ import annotations

from fractions import Fraction

from boxpart import (Normalization, convergence_table, distribution,
                     ks_distance, pp, spp, uniform_convolution,
                     uniform_convolution_cdf)

print("A 1 x 1 column is exactly uniform; its KS distance is 1/(t+1)")
for t in (4, 16, 64):
    ks = ks_distance(distribution(pp(1, 1, t)), Normalization.SCALE_BY_T,
                     uniform_convolution(1))
    print("  t = %-4d KS = %.6f   1/(t+1) = %.6f" % (t, ks, 1 / (t + 1)))

print("\npp(2, 2, t) scaled by t, against a sum of four uniforms on [0,1]")
report = convergence_table([pp(2, 2, t) for t in (8, 32, 128)],
                           Normalization.SCALE_BY_T, uniform_convolution(4))
for row in report.rows:
    print("  t = %-4d KS = %.6f" % (row.spec.t, row.ks))
assert report.nonincreasing

print("\nspp(2, t) scaled by t, against U[0,1] + U[0,1] + U[0,2]")
report = convergence_table([spp(2, t) for t in (8, 32, 128)],
                           Normalization.SCALE_BY_T,
                           uniform_convolution(2, 1))
for row in report.rows:
    print("  t = %-4d KS = %.6f" % (row.spec.t, row.ks))
assert report.nonincreasing

print("\nThe reference CDF itself is exact inclusion-exclusion:")
law = uniform_convolution(2, 1)
for x in (Fraction(1), Fraction(2), Fraction(3)):
    print("  F(%s) = %.12f" % (x, uniform_convolution_cdf(law, x)))
