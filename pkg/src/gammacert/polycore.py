"""Exact arithmetic core: binomials and the h <-> gamma basis change.

A polynomial h(x) = h_0 + h_1 x + ... + h_n x^n that satisfies h_i = h_{n-i}
(palindromic with center n/2; trailing zeros are allowed, so n is part of the
data and may exceed the degree) can be written uniquely as

    h(x) = sum_j  gamma_j * x^j * (1 + x)^(n-2j),      0 <= j <= floor(n/2).

Extracting the coefficient of x^i gives the linear relation

    h_i = sum_j  C(n-2j, i-j) * gamma_j,

which is the forward transform implemented here; the inverse is forward
substitution against the same unitriangular system.  All arithmetic is exact:
coefficients are ``fractions.Fraction`` (floats are rejected outright, since
every downstream inequality check is an exact statement) and binomials are
arbitrary-precision integers.

Convention pinned throughout the package: ``binomial(n, k) == 0`` whenever
k < 0, k > n or n < 0.  The closed formulas in :mod:`gammacert.coefficients`
silently rely on out-of-range binomials vanishing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import RangeError, SymmetryError

Rational = Fraction


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), exactly; 0 outside 0 <= k <= n <= anything.

    Accepts any pair of integers.  No overflow at any size.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def as_rational(value: int | str | Fraction, *, what: str = "entry") -> Fraction:
    """Coerce an exact value to ``Fraction``; floats are banned, not rounded."""
    if isinstance(value, float):
        raise TypeError(f"{what} must be exact (int, Fraction or 'p/q' string), got float {value!r}")
    return Fraction(value)


def rational_vector(values: Iterable[int | str | Fraction]) -> tuple[Fraction, ...]:
    """Coerce a sequence of exact values to a tuple of ``Fraction``."""
    return tuple(as_rational(v, what=f"entry {i}") for i, v in enumerate(values))


@dataclass(frozen=True)
class SymmetricPolynomial:
    """Coefficient vector h_0..h_n with declared center of symmetry n/2.

    The vector always has length n+1, even when h_n = 0.  Construction does
    not enforce h_i = h_{n-i}; call :meth:`check_symmetric` (or go through
    :func:`h_to_gamma`, which does) when the invariant matters.
    """

    n: int
    h: tuple[Fraction, ...]

    def __post_init__(self):
        if self.n < 0:
            raise RangeError(f"n must be nonnegative, got {self.n}")
        object.__setattr__(self, "h", rational_vector(self.h))
        if len(self.h) != self.n + 1:
            raise RangeError(f"h must have length n+1 = {self.n + 1}, got {len(self.h)}")

    def symmetry_violation(self) -> int | None:
        """Index of the first entry with h_i != h_{n-i}, or None if palindromic."""
        for i in range(self.n // 2 + 1):
            if self.h[i] != self.h[self.n - i]:
                return i
        return None

    def check_symmetric(self) -> None:
        i = self.symmetry_violation()
        if i is not None:
            raise SymmetryError(
                i, f"not symmetric: h_{i} = {self.h[i]} but h_{self.n - i} = {self.h[self.n - i]}"
            )


@dataclass(frozen=True)
class GammaVector:
    """Coefficients gamma_0..gamma_{floor(n/2)} of the x^j (1+x)^(n-2j) expansion."""

    n: int
    gamma: tuple[Fraction, ...]

    def __post_init__(self):
        if self.n < 0:
            raise RangeError(f"n must be nonnegative, got {self.n}")
        object.__setattr__(self, "gamma", rational_vector(self.gamma))
        expected = self.n // 2 + 1
        if len(self.gamma) != expected:
            raise RangeError(f"gamma must have length floor(n/2)+1 = {expected}, got {len(self.gamma)}")


def basis_polynomial(n: int, j: int) -> tuple[int, ...]:
    """Monomial coefficients of x^j (1+x)^(n-2j), as a vector of length n+1.

    Entry i is C(n-2j, i-j).
    """
    if n < 0 or j < 0 or j > n // 2:
        raise RangeError(f"need 0 <= j <= floor(n/2); got n={n}, j={j}")
    return tuple(binomial(n - 2 * j, i - j) for i in range(n + 1))


def gamma_to_h(g: GammaVector) -> SymmetricPolynomial:
    """Expand a gamma vector into its h-coefficients.

    The output is palindromic by construction: C(n-2j, i-j) = C(n-2j, (n-i)-j)
    under the vanishing convention for out-of-range binomials.
    """
    n = g.n
    h = [Fraction(0)] * (n + 1)
    for j, coeff in enumerate(g.gamma):
        if coeff == 0:
            continue
        for i in range(j, n - j + 1):
            h[i] += coeff * binomial(n - 2 * j, i - j)
    return SymmetricPolynomial(n, tuple(h))


def h_to_gamma(p: SymmetricPolynomial) -> GammaVector:
    """Invert :func:`gamma_to_h` by forward substitution.

    Requires the symmetry invariant; raises ``SymmetryError`` naming the first
    offending index otherwise.  Round trips exactly: the transform matrix is
    unitriangular (C(n-2i, 0) = 1 on the diagonal), so no division occurs.
    """
    p.check_symmetric()
    n = p.n
    gamma: list[Fraction] = []
    for i in range(n // 2 + 1):
        value = p.h[i]
        for j in range(i):
            value -= binomial(n - 2 * j, i - j) * gamma[j]
        gamma.append(value)
    return GammaVector(n, tuple(gamma))


def symmetric_polynomial(n: int, coeffs: Sequence[int | str | Fraction]) -> SymmetricPolynomial:
    """Convenience constructor accepting any exact entry types."""
    return SymmetricPolynomial(n, rational_vector(coeffs))


def gamma_vector(n: int, coeffs: Sequence[int | str | Fraction]) -> GammaVector:
    """Convenience constructor accepting any exact entry types."""
    return GammaVector(n, rational_vector(coeffs))
