"""Exact volume distributions for each ensemble, cross-checked two ways.

Every family's generating function is a ratio of (1 - q^a) factors; the
package expands it with exact integer arithmetic, so each coefficient is
the literal number of members with that volume.
"""

from __future__ import annotations

from boxpart import (builder, cspp, distribution, enumerate_pp, eval_at_one,
                     ferrers_hw, pp, spp)


def show(spec):
    dist = distribution(spec)
    print("%-22s total=%-8d counts=%s"
          % (spec.as_dict(), dist.total, dist.counts.coefficients))


print("Plain boxes")
show(pp(1, 1, 3))
show(pp(2, 2, 2))
show(pp(2, 3, 2))

print("\nSymmetric and cyclically symmetric boxes")
show(spp(2, 2))
show(cspp(2))
show(cspp(3))

print("\nFixed height-and-width diagrams")
show(ferrers_hw(2, 3))
show(ferrers_hw(3, 3))

print("\nThe same counts, from brute-force enumeration")
oracle = enumerate_pp(2, 2, 2)
print("enumerated pp(2,2,2):", oracle.counts.coefficients)
assert oracle.counts == distribution(pp(2, 2, 2)).counts

print("\nTotals agree with the factor-ratio product at q = 1")
for spec in (pp(2, 2, 2), pp(3, 3, 3), cspp(3)):
    total = eval_at_one(builder(spec))
    print("%-22s members = %s" % (spec.as_dict(), total))
    assert total == distribution(spec).total

print("\nEvery volume distribution is palindromic: removing a box's filled")
print("cells from the bounding box is a volume-reversing bijection.")
for spec in (pp(3, 4, 2), spp(3, 3), cspp(4)):
    assert distribution(spec).counts.is_palindromic()
    print("%-22s palindromic" % (spec.as_dict(),))
