"""Cayley graph construction with per-vertex bit-vector adjacency.

A BitGraph stores one Python int per vertex as its adjacency row, so
distance layers and common-neighbour counts reduce to AND + popcount.
CayleyGraph adds the group structure and, for the two-generator families,
remembers the (family, n, R, T) connection spec for classification.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import (
    BadClosure,
    IdentityInSet,
    InvalidParameter,
    NotInverseClosed,
    ZeroInR,
)
from .groups import Group, make_group
from .residues import ResidueSet


class BitGraph:
    """Simple undirected graph; adjacency rows are int bit masks."""

    def __init__(self, adjacency: list[int]):
        self.adjacency = adjacency
        self.order = len(adjacency)

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adjacency[v])

    def is_regular(self) -> bool:
        degs = {row.bit_count() for row in self.adjacency}
        return len(degs) == 1

    @property
    def valency(self) -> int:
        return self.adjacency[0].bit_count()

    def validate(self):
        for v, row in enumerate(self.adjacency):
            if (row >> v) & 1:
                raise InvalidParameter(f"self-loop at vertex {v}")
            for u in _bits(row):
                if not (self.adjacency[u] >> v) & 1:
                    raise InvalidParameter(f"asymmetric edge {v}->{u}")


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class ConnectionSpec:
    """The residue pair (R, T) mod 2n defining a two-generator Cayley graph."""

    family: str  # "sd", "psd", "dihedral", "dicyclic"
    n: int
    r_set: ResidueSet
    t_set: ResidueSet

    @property
    def modulus(self) -> int:
        return self.r_set.modulus

    def validate(self):
        m = self.modulus
        if self.t_set.modulus != m:
            raise BadClosure("R and T use different moduli")
        if 0 in self.r_set:
            raise ZeroInR("0 must not belong to R")
        neg = self.r_set.negate()
        if neg.mask != self.r_set.mask:
            missing = sorted(set(neg.members) - set(self.r_set.members))
            raise BadClosure(f"R is not inverse-closed: missing {missing}")
        n = self.n
        if self.family == "sd":
            closed = self.t_set.scale(n + 1)
        elif self.family == "psd":
            closed = self.t_set.scale(n - 1)
        elif self.family == "dicyclic":
            closed = self.t_set.shift(n)
        elif self.family == "dihedral":
            closed = self.t_set  # T is unconstrained for dihedrants
        else:
            raise InvalidParameter(f"no connection-spec family {self.family!r}")
        if closed.mask != self.t_set.mask:
            raise BadClosure(
                f"T violates its closure rule for family {self.family}: "
                f"T={{{self.t_set.render()}}}"
            )
        if len(self.r_set) == 0 and len(self.t_set) == 0:
            raise BadClosure("R and T are both empty (edgeless graph)")

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "R": list(self.r_set.members),
            "T": list(self.t_set.members),
        }


class CayleyGraph(BitGraph):
    def __init__(self, group: Group, connection: frozenset[int],
                 spec: Optional[ConnectionSpec] = None):
        self.group = group
        self.connection = connection
        self.spec = spec
        order = group.order
        rows = [0] * order
        for g in range(order):
            row = 0
            for s in connection:
                row |= 1 << group.mul_index(g, s)
            rows[g] = row
        super().__init__(rows)

    def to_json(self) -> dict:
        out = self.spec.to_json() if self.spec else {"family": self.group.family,
                                                     "n": self.group.n}
        out["order"] = self.order
        out["valency"] = self.valency
        return out


def build_cayley(group: Group, connection, spec: Optional[ConnectionSpec] = None
                 ) -> CayleyGraph:
    """Cay(G, S): g ~ h iff g^-1 h in S.  S must be identity-free and
    inverse-closed."""
    s = frozenset(x % group.order for x in connection)
    if group.identity in s:
        raise IdentityInSet("connection set contains the identity")
    for x in s:
        if group.inv_index(x) not in s:
            raise NotInverseClosed(
                f"connection set not inverse-closed at {group.element_name(x)}"
            )
    return CayleyGraph(group, s, spec)


def _two_gen_connection(group: Group, spec: ConnectionSpec) -> frozenset[int]:
    h = group.rot_order
    conn = set(spec.r_set.members)
    conn.update(h + t for t in spec.t_set.members)
    return frozenset(conn)


def _build_family(family: str, n: int, r_mem, t_mem) -> CayleyGraph:
    m = {"sd": 2 * n, "psd": 2 * n, "dicyclic": 2 * n, "dihedral": n}[family]
    spec = ConnectionSpec(
        family, n, ResidueSet.of(m, r_mem), ResidueSet.of(m, t_mem)
    )
    spec.validate()
    group = make_group(family, n)
    return build_cayley(group, _two_gen_connection(group, spec), spec)


def build_sd(n: int, r_mem, t_mem) -> CayleyGraph:
    """Cay(SD_n, p^R u p^T t) with R = -R, 0 not in R, T = (n+1)T."""
    return _build_family("sd", n, r_mem, t_mem)


def build_psd(n: int, r_mem, t_mem) -> CayleyGraph:
    """Cay(PSD_n, p^R u p^T t) with R = -R, 0 not in R, T = (n-1)T."""
    return _build_family("psd", n, r_mem, t_mem)


def build_dih(n: int, r_mem, t_mem) -> CayleyGraph:
    return _build_family("dihedral", n, r_mem, t_mem)


def build_dic(n: int, r_mem, t_mem) -> CayleyGraph:
    return _build_family("dicyclic", n, r_mem, t_mem)


def neighborhood(graph: CayleyGraph, v: int) -> frozenset[int]:
    return frozenset(graph.neighbors(v))


def neighborhood_formula(graph: CayleyGraph, v: int) -> frozenset[int]:
    """Closed-form neighbourhood for sd/psd specs.

    N(p^i)   = p^(i+R) u p^(i+T) t
    N(p^i t) = p^(i+cT) u p^(i+cR) t   with c = n-1 (sd) or n+1 (psd).
    """
    spec = graph.spec
    if spec is None or spec.family not in ("sd", "psd"):
        raise InvalidParameter("closed-form neighbourhood needs an sd/psd spec")
    h = graph.group.rot_order
    n = spec.n
    c = (n - 1) if spec.family == "sd" else (n + 1)
    i, t_part = v % h, v // h
    out = set()
    if t_part == 0:
        out.update((i + r) % h for r in spec.r_set.members)
        out.update(h + (i + t) % h for t in spec.t_set.members)
    else:
        out.update((i + c * t) % h for t in spec.t_set.members)
        out.update(h + (i + c * r) % h for r in spec.r_set.members)
    return frozenset(out)


def is_connected(graph: BitGraph) -> bool:
    """BFS reachability from vertex 0."""
    if graph.order == 0:
        return True
    visited = 1
    frontier = 1
    adj = graph.adjacency
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~visited
        visited |= frontier
    return visited == (1 << graph.order) - 1


def generates_group(graph: CayleyGraph) -> bool:
    """<S> = G, the algebraic counterpart of connectivity."""
    return len(graph.group.generated_by(graph.connection)) == graph.group.order
