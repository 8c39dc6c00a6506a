"""Finite groups with a cyclic subgroup of index at most 2.

Six families are supported, named in CLI/config by the strings
"cyclic", "cyclic-x-z2", "dihedral", "dicyclic", "sd", "psd":

  cyclic(m)       Z_m,                                 order m
  cyclic-x-z2(n)  Z_n + Z_2,                           order 2n
  dihedral(n)     <p, t | p^n = t^2 = 1, tpt = p^-1>,  order 2n
  dicyclic(n)     <p, t | p^2n = 1, t^2 = p^n,
                          t^-1 p t = p^-1>,            order 4n
  sd(n)           <p, t | p^2n = t^2 = 1,
                          tpt = p^(n-1)>,              order 4n, n = 2^r >= 4
  psd(n)          <p, t | p^2n = t^2 = 1,
                          tpt = p^(n+1)>,              order 4n, n = 2^r >= 4

Elements are encoded as integers in [0, order).  For the two-generator
families the rotation part comes first: index i < h means p^i, and
index h + i means p^i t, where h is the order of <p> (2n for dicyclic,
sd, psd; n for dihedral).  For cyclic-x-z2, index e*n + x means (x, e).

Multiplication is by closed-form modular formulas, O(1) per product.
All operations are pure; Group and GroupElement are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator

from .errors import InvalidParameter, MixedGroups

FAMILIES = ("cyclic", "cyclic-x-z2", "dihedral", "dicyclic", "sd", "psd")

# families of order 4n whose elements split as p^i / p^i t over Z_2n
BLOCK_4N = ("dicyclic", "sd", "psd")


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


@dataclass(frozen=True)
class Group:
    """One group from the six supported families.

    Do not construct directly; use make_group(family, n).
    """

    family: str
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidParameter(f"unknown family {self.family!r}")
        if self.n < 1:
            raise InvalidParameter("group parameter must be positive")
        if self.family in ("sd", "psd"):
            if not _is_power_of_two(self.n) or self.n < 4:
                raise InvalidParameter(
                    f"{self.family} requires n = 2^r with r >= 2, got n={self.n}"
                )

    @cached_property
    def order(self) -> int:
        if self.family == "cyclic":
            return self.n
        if self.family in ("cyclic-x-z2", "dihedral"):
            return 2 * self.n
        return 4 * self.n

    @cached_property
    def rot_order(self) -> int:
        """Order of the distinguished cyclic part (the p^i block)."""
        if self.family == "cyclic":
            return self.n
        if self.family == "cyclic-x-z2":
            return self.n
        if self.family == "dihedral":
            return self.n
        return 2 * self.n

    @cached_property
    def _twist(self) -> int:
        """Multiplier s in t p t^-1 = p^s, reduced mod rot_order."""
        h = self.rot_order
        if self.family in ("dihedral", "dicyclic"):
            return (-1) % h
        if self.family == "sd":
            return (self.n - 1) % h
        if self.family == "psd":
            return (self.n + 1) % h
        return 1  # abelian families

    @cached_property
    def _tau_square(self) -> int:
        """Exponent e with t^2 = p^e (dicyclic: e = n, else 0)."""
        return self.n if self.family == "dicyclic" else 0

    # -- integer-index arithmetic (fast path) --------------------------------

    identity = 0

    def mul_index(self, a: int, b: int) -> int:
        h = self.rot_order
        if self.family == "cyclic":
            return (a + b) % h
        if self.family == "cyclic-x-z2":
            xa, ea = a % h, a // h
            xb, eb = b % h, b // h
            return ((xa + xb) % h) + h * ((ea + eb) % 2)
        s = self._twist
        ra, ta = a % h, a // h
        rb, tb = b % h, b // h
        # p^ra t^ta * p^rb t^tb ; pull p^rb through t^ta
        r = (ra + (s * rb if ta else rb)) % h
        if ta and tb:
            return (r + self._tau_square) % h
        return r + h * ((ta + tb) % 2)

    def inv_index(self, a: int) -> int:
        h = self.rot_order
        if self.family == "cyclic":
            return (-a) % h
        if self.family == "cyclic-x-z2":
            return ((-(a % h)) % h) + h * (a // h)
        r, t = a % h, a // h
        if not t:
            return (-r) % h
        # solve p^r t * p^x t = 1:  r + s*x + e = 0 (mod h); s is self-inverse
        s = self._twist
        x = (-s * (r + self._tau_square)) % h
        return x + h

    def elements(self) -> range:
        return range(self.order)

    # -- wrapped elements ----------------------------------------------------

    def element(self, index: int) -> "GroupElement":
        return GroupElement(self, index % self.order)

    def rho(self, i: int = 1) -> "GroupElement":
        return GroupElement(self, i % self.rot_order)

    def rho_tau(self, i: int = 0) -> "GroupElement":
        if self.family in ("cyclic", "cyclic-x-z2"):
            raise InvalidParameter(f"{self.family} has no reflection generator")
        return GroupElement(self, self.rot_order + (i % self.rot_order))

    def mul(self, g: "GroupElement", h: "GroupElement") -> "GroupElement":
        if g.group is not self or h.group is not self:
            raise MixedGroups("operands belong to different groups")
        return GroupElement(self, self.mul_index(g.index, h.index))

    def inv(self, g: "GroupElement") -> "GroupElement":
        if g.group is not self:
            raise MixedGroups("operand belongs to a different group")
        return GroupElement(self, self.inv_index(g.index))

    def element_name(self, index: int) -> str:
        h = self.rot_order
        if self.family == "cyclic":
            return f"g^{index}"
        if self.family == "cyclic-x-z2":
            return f"({index % h},{index // h})"
        r, t = index % h, index // h
        if t == 0:
            return "1" if r == 0 else f"p^{r}"
        return "t" if r == 0 else f"p^{r}t"

    def generated_by(self, gens) -> frozenset[int]:
        """Subgroup generated by the given element indices (orbit closure)."""
        seen = {0}
        frontier = [0]
        gens = [g % self.order for g in gens]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = self.mul_index(a, g)
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            frontier = nxt
        return frozenset(seen)

    def __repr__(self):
        return f"Group({self.family!r}, {self.n})"


@dataclass(frozen=True)
class GroupElement:
    group: Group
    index: int

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return self.group.mul(self, other)

    def inverse(self) -> "GroupElement":
        return self.group.inv(self)

    def __repr__(self):
        return f"<{self.group.element_name(self.index)}>"


@dataclass(frozen=True)
class Subgroup:
    parent: Group
    members: frozenset[int]
    label: str = ""

    @property
    def order(self) -> int:
        return len(self.members)

    def is_closed(self) -> bool:
        g = self.parent
        mem = self.members
        if 0 not in mem:
            return False
        return all(
            g.mul_index(x, g.inv_index(y)) in mem for x in mem for y in mem
        )

    def contains(self, index: int) -> bool:
        return index in self.members

    def __repr__(self):
        return f"Subgroup({self.label or sorted(self.members)})"


def make_group(family: str, n: int) -> Group:
    """Construct a group of the given family; validates the parameter."""
    return Group(family, n)


def cayley_table(group: Group) -> list[list[int]]:
    """Full multiplication table; used for cross-validation at small order."""
    order = group.order
    return [
        [group.mul_index(a, b) for b in range(order)] for a in range(order)
    ]


def index2_subgroups(group: Group) -> list[Subgroup]:
    """All subgroups of index 2.

    Hard-coded per family (they are the kernels of the homomorphisms onto
    Z_2); validated by brute-force closure in the test suite.  For sd/psd
    these are exactly <p>, <p^2, t> and <p^2, p t>.
    """
    fam = group.family
    h = group.rot_order
    out: list[Subgroup] = []

    def sub(members, label):
        out.append(Subgroup(group, frozenset(members), label))

    if fam == "cyclic":
        if group.n % 2 == 0:
            sub(range(0, group.n, 2), "<g^2>")
        return out

    if fam == "cyclic-x-z2":
        sub(range(h), "<g>")
        if group.n % 2 == 0:
            evens = range(0, h, 2)
            sub(list(evens) + [h + x for x in evens], "<g^2, t>")
            sub(list(evens) + [h + x for x in range(1, h, 2)], "<g^2, g t>")
        return out

    # dihedral / dicyclic / sd / psd: rotation block [0, h), t-block [h, 2h)
    sub(range(h), "<p>")
    if h % 2 == 0 and (fam != "dicyclic" or group.n % 2 == 0):
        evens = list(range(0, h, 2))
        sub(evens + [h + x for x in evens], "<p^2, t>")
        sub(evens + [h + x for x in range(1, h, 2)], "<p^2, p t>")
    return out


def subgroups_of_order(group: Group, r: int) -> list[Subgroup]:
    """All cyclic subgroups of the given order (enough for prime r)."""
    seen = set()
    out = []
    for g in group.elements():
        members = group.generated_by([g])
        if len(members) == r and members not in seen:
            seen.add(members)
            out.append(Subgroup(group, members, f"<{group.element_name(g)}>"))
    return out
