"""Gaussian limit of standardized volumes for growing cubes.

The volume of a random member concentrates: (sigma/mu)^2 shrinks like
1/n^2 for an n-cube.  After standardizing to mean 0 and variance 1, the
distribution's KS distance from the standard normal CDF drops steadily.
"""

from __future__ import annotations

from boxpart import (Normalization, concentration_ratio, convergence_table,
                     cspp, pp, standard_gaussian)

print("Concentration of the volume in an n-cube: (sigma/mu)^2 = 1/n^2")
for n in (1, 2, 4, 8):
    ratio = concentration_ratio(pp(n, n, n))
    print("  n = %-3d (sigma/mu)^2 = %s" % (n, ratio))

print("\nKS distance of the standardized cube volume from the Gaussian")
report = convergence_table([pp(n, n, n) for n in (2, 4, 8, 12)],
                           Normalization.STANDARDIZE, standard_gaussian())
for row in report.rows:
    print("  n = %-3d KS = %.6f" % (row.spec.r, row.ks))
assert report.nonincreasing

print("\nSame limit for cyclically symmetric boxes")
report = convergence_table([cspp(r) for r in (2, 4, 8)],
                           Normalization.STANDARDIZE, standard_gaussian())
for row in report.rows:
    print("  r = %-3d KS = %.6f" % (row.spec.r, row.ks))
assert report.nonincreasing
