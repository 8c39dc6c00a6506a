"""Set arithmetic, autocorrelation, convolution and Fourier analysis on Z_m.

ResidueSet stores a subset of Z_m as a bit mask; the rotate-and-popcount
autocorrelation here is the hot path reused by the pair search.  All
accept/reject decisions elsewhere in the package go through the exact
integer routines; the complex transform is diagnostic only.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

from .errors import ModulusMismatch, NotADivisor, NotAUnit


def _rotl(mask: int, i: int, m: int) -> int:
    i %= m
    full = (1 << m) - 1
    return ((mask << i) | (mask >> (m - i))) & full


@dataclass(frozen=True)
class ResidueSet:
    """A subset of Z_m held as a width-m bit mask."""

    modulus: int
    mask: int

    @staticmethod
    def of(modulus: int, members: Iterable[int]) -> "ResidueSet":
        mask = 0
        for x in members:
            mask |= 1 << (x % modulus)
        return ResidueSet(modulus, mask)

    @staticmethod
    def empty(modulus: int) -> "ResidueSet":
        return ResidueSet(modulus, 0)

    @staticmethod
    def full(modulus: int) -> "ResidueSet":
        return ResidueSet(modulus, (1 << modulus) - 1)

    @cached_property
    def members(self) -> tuple[int, ...]:
        return tuple(
            i for i in range(self.modulus) if (self.mask >> i) & 1
        )

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, x: int) -> bool:
        return (self.mask >> (x % self.modulus)) & 1 == 1

    def __iter__(self):
        return iter(self.members)

    def shift(self, i: int) -> "ResidueSet":
        """i + A."""
        return ResidueSet(self.modulus, _rotl(self.mask, i, self.modulus))

    def negate(self) -> "ResidueSet":
        return ResidueSet.of(self.modulus, (-x for x in self.members))

    def scale(self, c: int) -> "ResidueSet":
        """c * A (c need not be a unit)."""
        return ResidueSet.of(self.modulus, (c * x for x in self.members))

    def union(self, other: "ResidueSet") -> "ResidueSet":
        self._check(other)
        return ResidueSet(self.modulus, self.mask | other.mask)

    def intersection_size(self, other: "ResidueSet") -> int:
        self._check(other)
        return (self.mask & other.mask).bit_count()

    def overlap(self, i: int) -> int:
        """|A & (i + A)| by rotate-and-popcount."""
        return (self.mask & _rotl(self.mask, i, self.modulus)).bit_count()

    def indicator(self) -> list[int]:
        return [(self.mask >> i) & 1 for i in range(self.modulus)]

    def _check(self, other: "ResidueSet"):
        if self.modulus != other.modulus:
            raise ModulusMismatch(
                f"moduli differ: {self.modulus} vs {other.modulus}"
            )

    def render(self) -> str:
        return ",".join(str(x) for x in self.members)

    def __repr__(self):
        return f"ResidueSet({self.modulus}, {{{self.render()}}})"


def autocorrelation(a: ResidueSet) -> list[int]:
    """out[i] = |A & (i + A)| for every i in Z_m, exact."""
    return [a.overlap(i) for i in range(a.modulus)]


def convolve(f: Sequence[int], g: Sequence[int]) -> list[int]:
    """Exact cyclic convolution (f*g)(z) = sum_i f(i) g(z-i)."""
    m = len(f)
    if len(g) != m:
        raise ModulusMismatch(f"lengths differ: {m} vs {len(g)}")
    out = [0] * m
    for i, fi in enumerate(f):
        if fi == 0:
            continue
        for j, gj in enumerate(g):
            if gj:
                out[(i + j) % m] += fi * gj
    return out


def dft(f: Sequence) -> list[complex]:
    """F(f)(z) = sum_i f(i) w^(i z), w = exp(2 pi i / m)."""
    m = len(f)
    w = cmath.exp(2j * cmath.pi / m)
    return [
        sum(f[i] * w ** ((i * z) % m) for i in range(m)) for z in range(m)
    ]


def idft(f: Sequence) -> list[complex]:
    """Inverse transform; idft(dft(f)) == f up to roundoff."""
    m = len(f)
    second = dft(f)
    # F(F(f))(z) = m f(-z), so divide and flip
    return [second[(-z) % m] / m for z in range(m)]


def unit_orbits(m: int) -> list[tuple[int, ResidueSet]]:
    """Orbits of Z_m under multiplication by units, one per divisor r of m.

    The orbit for divisor r is {c * (m/r) : c a unit}, i.e. the elements of
    additive order r.  Returned sorted by r; the orbits partition Z_m.
    """
    out = []
    for r in sorted(d for d in range(1, m + 1) if m % d == 0):
        step = m // r
        members = {
            (c * step) % m for c in range(m) if gcd(c, m) == 1
        }
        out.append((r, ResidueSet.of(m, members)))
    return out


def orbit_closure(a: ResidueSet) -> ResidueSet:
    """Smallest union of unit orbits containing A."""
    m = a.modulus
    mask = 0
    for _, orb in unit_orbits(m):
        if orb.mask & a.mask:
            mask |= orb.mask
    return ResidueSet(m, mask)


def coset_profile(a: ResidueSet, r: int) -> tuple[list[int], complex]:
    """Counts e_i = |A & (i + r Z_m)| and their character sum.

    The returned value sum_i e_i xi^i (xi = w^(m/r)) equals dft of the
    indicator of A evaluated at m/r.
    """
    m = a.modulus
    if r <= 0 or m % r != 0:
        raise NotADivisor(f"{r} does not divide {m}")
    e = [0] * r
    for x in a.members:
        e[x % r] += 1
    xi = cmath.exp(2j * cmath.pi / r)
    value = sum(e[i] * xi**i for i in range(r))
    return e, value


def affine_image(a: ResidueSet, mult: int, add: int = 0) -> ResidueSet:
    """b + c*A for a unit c; a bijection of Z_m."""
    m = a.modulus
    if gcd(mult, m) != 1:
        raise NotAUnit(f"{mult} is not a unit mod {m}")
    return ResidueSet.of(m, (add + mult * x for x in a.members))


def units(m: int) -> list[int]:
    return [c for c in range(1, m) if gcd(c, m) == 1]
