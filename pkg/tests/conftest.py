"""Shared test helpers.

The q-binomial oracle here deliberately uses the additive Pascal-style
recurrence on dense coefficient lists, so it shares no code path with the
package's multiplicative factor-ratio route.
"""

from __future__ import annotations

from functools import lru_cache


@lru_cache(maxsize=None)
def q_binomial_pascal(n: int, k: int) -> tuple[int, ...]:
    """Gaussian binomial [n choose k]_q via [n,k] = [n-1,k-1] + q^k [n-1,k]."""
    if k < 0 or k > n:
        return ()
    if k == 0 or k == n:
        return (1,)
    low = q_binomial_pascal(n - 1, k - 1)
    high = q_binomial_pascal(n - 1, k)
    out = [0] * max(len(low), len(high) + k)
    for i, c in enumerate(low):
        out[i] += c
    for i, c in enumerate(high):
        out[i + k] += c
    return tuple(out)


def coefficient_list(poly, length: int) -> list[int]:
    """Dense coefficients 0..length-1, padding past the degree with zeros."""
    return [poly[k] for k in range(length)]
