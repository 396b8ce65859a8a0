"""Exact polynomial arithmetic over the integers in one variable q.

A polynomial is a dense tuple of arbitrary-precision integer coefficients
indexed by the exponent of q.  Generating functions arrive as products of
factors (1 - q^a) / (1 - q^b); these are kept unexpanded as multisets of
paired exponents until `expand`, which cancels matching factors, multiplies
out the remaining numerator binomials, and removes each denominator factor
by exact synthetic division.  Division is checked: a nonzero remainder
means the product was not a polynomial and raises.

All coefficient arithmetic uses Python's native big integers, so results
are exact at every size.  Rational values (for example a product evaluated
at q = 1) are `fractions.Fraction` instances.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

DEFAULT_DEGREE_CAP = 2_000_000
DEGREE_CAP_ENV = "BOXPART_DEGREE_CAP"


class NonzeroRemainderError(ArithmeticError):
    """Division by (1 - q^d) left a nonzero remainder."""


class CapExceededError(RuntimeError):
    """Base class for resource-guard errors raised before large allocations."""


class DegreeCapError(CapExceededError):
    """Expansion would need more coefficient slots than the configured cap."""


def degree_cap() -> int:
    """Active degree cap: BOXPART_DEGREE_CAP when set, else the default."""
    raw = os.environ.get(DEGREE_CAP_ENV)
    if raw is None:
        return DEFAULT_DEGREE_CAP
    value = int(raw)
    if value <= 0:
        raise ValueError("degree cap must be a positive integer")
    return value


@dataclass(frozen=True)
class ExactPolynomial:
    """Dense integer polynomial; coefficients[k] multiplies q**k.

    Trailing zero coefficients are stripped on construction, so the zero
    polynomial is the empty tuple and otherwise the last entry is nonzero.
    """

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coefficients)
        end = len(coeffs)
        while end > 0 and coeffs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coefficients", coeffs[:end])

    @classmethod
    def zero(cls) -> "ExactPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "ExactPolynomial":
        return cls((1,))

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[int]) -> "ExactPolynomial":
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return 0

    def __len__(self) -> int:
        return len(self.coefficients)

    def coefficient_sum(self) -> int:
        """Value at q = 1."""
        return sum(self.coefficients)

    def is_palindromic(self) -> bool:
        """True when the coefficient vector reads the same reversed."""
        return self.coefficients == self.coefficients[::-1]

    def shifted(self, k: int) -> "ExactPolynomial":
        """Product with q**k."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if not self.coefficients:
            return self
        return ExactPolynomial((0,) * k + self.coefficients)

    def evaluate(self, x: Fraction) -> Fraction:
        """Value at a rational point, by Horner's rule."""
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc


@dataclass(frozen=True)
class FactorRatioProduct:
    """Unexpanded product of factors (1 - q**num) / (1 - q**den).

    Factors are stored as (numerator, denominator) exponent pairs in the
    order the builder emitted them; the multiset views drop the pairing.
    Every exponent must be positive: a factor 1 - q**0 vanishes identically,
    so a zero exponent marks a malformed product and is rejected outright.
    """

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        pairs = tuple((int(n), int(d)) for n, d in self.pairs)
        for n, d in pairs:
            if n <= 0 or d <= 0:
                raise ValueError("factor exponents must be positive, got (%d, %d)" % (n, d))
        object.__setattr__(self, "pairs", pairs)

    @property
    def numerator_exponents(self) -> tuple[int, ...]:
        return tuple(sorted(n for n, _ in self.pairs))

    @property
    def denominator_exponents(self) -> tuple[int, ...]:
        return tuple(sorted(d for _, d in self.pairs))

    def __len__(self) -> int:
        return len(self.pairs)


def poly_mul(a: ExactPolynomial, b: ExactPolynomial,
             max_degree: int | None = None) -> ExactPolynomial:
    """Exact product of two polynomials (schoolbook convolution)."""
    if not a.coefficients or not b.coefficients:
        return ExactPolynomial.zero()
    cap = degree_cap() if max_degree is None else max_degree
    out_degree = a.degree + b.degree
    if out_degree > cap:
        raise DegreeCapError("product degree %d exceeds cap %d" % (out_degree, cap))
    out = [0] * (out_degree + 1)
    for i, ca in enumerate(a.coefficients):
        if ca == 0:
            continue
        for j, cb in enumerate(b.coefficients):
            if cb:
                out[i + j] += ca * cb
    return ExactPolynomial(tuple(out))


def multiply_one_minus_q(a: ExactPolynomial, e: int) -> ExactPolynomial:
    """Product a * (1 - q**e) without materializing the sparse factor."""
    if e <= 0:
        raise ValueError("exponent must be positive")
    if not a.coefficients:
        return a
    out = list(a.coefficients) + [0] * e
    for i, c in enumerate(a.coefficients):
        if c:
            out[i + e] -= c
    return ExactPolynomial(tuple(out))


def divide_exact(a: ExactPolynomial, d: int) -> ExactPolynomial:
    """Quotient a / (1 - q**d); raises NonzeroRemainderError unless exact.

    Uses synthetic division: with a = c * (1 - q**d) the coefficients obey
    c[k] = a[k] + c[k - d], and every slot above the quotient degree must
    come out zero.
    """
    if d <= 0:
        raise ValueError("divisor exponent must be positive")
    if not a.coefficients:
        return a
    n = a.degree
    m = n - d
    if m < 0:
        raise NonzeroRemainderError("degree %d too small to divide by 1 - q^%d" % (n, d))
    work = list(a.coefficients)
    for k in range(d, n + 1):
        work[k] += work[k - d]
    for k in range(m + 1, n + 1):
        if work[k] != 0:
            raise NonzeroRemainderError("nonzero remainder dividing by 1 - q^%d" % d)
    return ExactPolynomial(tuple(work[: m + 1]))


def expand(product: FactorRatioProduct,
           max_degree: int | None = None) -> ExactPolynomial:
    """Multiply a factor-ratio product out into a dense polynomial.

    Equal numerator/denominator exponents cancel first; the surviving
    numerator factors are multiplied together and the surviving denominator
    factors divided out one at a time.  Since the full quotient is a
    polynomial, each intermediate division is exact in any order.
    """
    cap = degree_cap() if max_degree is None else max_degree
    numerator = Counter(n for n, _ in product.pairs)
    denominator = Counter(d for _, d in product.pairs)
    common = numerator & denominator
    numerator -= common
    denominator -= common
    peak_degree = sum(e * c for e, c in numerator.items())
    if peak_degree > cap:
        raise DegreeCapError("expansion degree %d exceeds cap %d" % (peak_degree, cap))

    coeffs = [1]
    for e in sorted(numerator.elements()):
        grown = coeffs + [0] * e
        for i, c in enumerate(coeffs):
            if c:
                grown[i + e] -= c
        coeffs = grown
    for d in sorted(denominator.elements()):
        n = len(coeffs) - 1
        m = n - d
        if m < 0:
            raise NonzeroRemainderError("denominator factor 1 - q^%d does not divide" % d)
        for k in range(d, n + 1):
            coeffs[k] += coeffs[k - d]
        for k in range(m + 1, n + 1):
            if coeffs[k] != 0:
                raise NonzeroRemainderError("nonzero remainder dividing by 1 - q^%d" % d)
        del coeffs[m + 1:]
    return ExactPolynomial(tuple(coeffs))


def eval_at_one(product: FactorRatioProduct) -> Fraction:
    """Value of the product at q = 1, reading each paired factor as num/den."""
    num = 1
    den = 1
    for n, d in product.pairs:
        num *= n
        den *= d
    return Fraction(num, den)
