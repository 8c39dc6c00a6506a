"""Difference sets, relative difference sets and their graph equivalences.

Difference counting is exact integer multiset arithmetic throughout.  The
two equivalence checks cross-validate a combinatorial graph property
against a design property computed independently of any distance
information.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Optional

from .cayley import CayleyGraph
from .drg import check_distance_regular, distance_partition, _bits
from .errors import (
    Disconnected,
    NotASubgroupChain,
    NotASubset,
    TooLarge,
)
from .groups import Group, Subgroup, index2_subgroups


@dataclass
class DesignReport:
    kind: str  # "difference-set" | "relative-difference-set"
    parameters: tuple[int, ...]  # (n, k, lam) or (m, r, k, mu)
    ambient: str
    forbidden: Optional[str] = None
    symmetric: bool = False
    trivial: bool = False

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "parameters": list(self.parameters),
            "ambient": self.ambient,
            "forbidden": self.forbidden,
            "symmetric": self.symmetric,
            "trivial": self.trivial,
        }


def _difference_counts(group: Group, d: list[int]) -> dict[int, int]:
    counts: dict[int, int] = {}
    invs = [group.inv_index(x) for x in d]
    for d1 in d:
        for d2i in invs:
            g = group.mul_index(d1, d2i)
            counts[g] = counts.get(g, 0) + 1
    return counts


def difference_set_lambda(h: Subgroup, d) -> Optional[int]:
    """lam if every non-identity element of H has the same number of
    representations d1 * d2^-1, else None."""
    d = sorted(set(d))
    if not set(d) <= h.members:
        raise NotASubset("D is not contained in H")
    if len(h.members) == 1:
        return 0
    counts = _difference_counts(h.parent, d)
    vals = {counts.get(g, 0) for g in h.members if g != 0}
    return vals.pop() if len(vals) == 1 else None


def verify_difference_set(h: Subgroup, d) -> Optional[DesignReport]:
    lam = difference_set_lambda(h, d)
    if lam is None:
        return None
    n, k = len(h.members), len(set(d))
    return DesignReport(
        kind="difference-set",
        parameters=(n, k, lam),
        ambient=h.label or "H",
        trivial=k in (n, n - 1, 1, 0),
    )


def _relative_counts_ok(group: Group, d: list[int], h: Subgroup
                        ) -> Optional[tuple[frozenset[int], int]]:
    """If the difference multiset of D has the shape k*1 + mu*(H \\ N) for
    some subgroup N of H, return (N, mu), else None."""
    counts = _difference_counts(group, d)
    k = len(d)
    if counts.get(0, 0) != k:
        return None
    zero = frozenset(
        g for g in h.members if g != 0 and counts.get(g, 0) == 0
    )
    n_members = zero | {0}
    candidate = Subgroup(group, n_members, "")
    if not candidate.is_closed():
        return None
    outside = {counts.get(g, 0) for g in h.members if g not in n_members}
    if len(outside) > 1:
        return None
    mu = outside.pop() if outside else 0
    return n_members, mu


def verify_relative_difference_set(h: Subgroup, n_sub: Subgroup, d
                                   ) -> Optional[DesignReport]:
    """Recognize D as an (m, r, k, mu)-relative difference set in H with
    forbidden subgroup N; the symmetric flag records whether D^(-1) is
    also one (possibly with a different forbidden subgroup)."""
    d = sorted(set(d))
    if not set(d) <= h.members:
        raise NotASubset("D is not contained in H")
    if not n_sub.members <= h.members:
        raise NotASubgroupChain("N is not a subgroup of H")
    group = h.parent
    counts = _difference_counts(group, d)
    k = len(d)
    if counts.get(0, 0) != k:
        return None
    if any(counts.get(g, 0) != 0 for g in n_sub.members if g != 0):
        return None
    outside = {
        counts.get(g, 0) for g in h.members if g not in n_sub.members
    }
    if len(outside) > 1:
        return None
    mu = outside.pop() if outside else 0
    r = len(n_sub.members)
    m = len(h.members) // r

    d_inv = [group.inv_index(x) for x in d]
    symmetric = _relative_counts_ok(group, d_inv, h) is not None
    return DesignReport(
        kind="relative-difference-set",
        parameters=(m, r, k, mu),
        ambient=h.label or "H",
        forbidden=n_sub.label or "N",
        symmetric=symmetric,
        trivial=k in (len(h.members), len(h.members) - 1, 1, 0),
    )


def check_symmetry_condition(group: Group, d, a: int) -> bool:
    """D^(-1) == a D a as sets."""
    d = set(d)
    inv = {group.inv_index(x) for x in d}
    conj = {
        group.mul_index(group.mul_index(a, x), a) for x in d
    }
    return inv == conj


@dataclass
class EquivalenceReport:
    graph_side: bool
    design_side: bool
    h_label: Optional[str] = None
    design: Optional[DesignReport] = None
    boundary_ok: Optional[bool] = None  # the distance-set identification

    @property
    def agree(self) -> bool:
        return self.graph_side == self.design_side

    def to_json(self) -> dict:
        return {
            "graphSide": self.graph_side,
            "designSide": self.design_side,
            "agree": self.agree,
            "subgroup": self.h_label,
            "design": self.design.to_json() if self.design else None,
            "boundaryOk": self.boundary_ok,
        }


def _index2_avoiding(group: Group, connection) -> list[Subgroup]:
    return [
        h for h in index2_subgroups(group)
        if not (set(connection) & h.members)
    ]


def _coset_reps(group: Group, h: Subgroup, full: bool) -> list[int]:
    outside = [g for g in group.elements() if g not in h.members]
    return outside if full else outside[:1]


def check_bipartite_d3_equivalence(graph: CayleyGraph, full: bool = False
                                   ) -> EquivalenceReport:
    """Bipartite diameter-3 DRG property vs the difference-set property.

    Graph side: connected bipartite non-trivial distance-regular of
    diameter 3 with array {k, k-1, k-mu; 1, mu, k}.  Design side: some
    index-2 subgroup H avoiding S makes D = a^-1 S a non-trivial
    difference set in H with D^(-1) = a D a (a ranges over one coset
    representative, or all of G \\ H when full=True).
    """
    group = graph.group
    report = check_distance_regular(graph)
    k = graph.valency
    half = group.order // 2
    graph_side = False
    if report.is_drg and report.bipartite and report.diameter == 3:
        arr = report.array
        expected = ((k, k - 1, k - arr.mu), (1, arr.mu, k))
        nontrivial = k not in (half, half - 1, 1, 0)
        graph_side = (arr.b, arr.c) == expected and nontrivial

    best: tuple[Optional[str], Optional[DesignReport]] = (None, None)
    design_side = False
    for h in _index2_avoiding(group, graph.connection):
        ok_all = True
        rep: Optional[DesignReport] = None
        for a in _coset_reps(group, h, full):
            ai = group.inv_index(a)
            d = [group.mul_index(ai, s) for s in graph.connection]
            rep = verify_difference_set(h, d)
            if rep is None or rep.trivial or not check_symmetry_condition(
                group, d, a
            ):
                ok_all = False
                break
        if ok_all and rep is not None:
            design_side = True
            best = (h.label, rep)
            break

    boundary = None
    if graph_side and design_side:
        part = distance_partition(graph, group.identity)
        dist2 = set(_bits(part.layers[2]))
        h = next(
            s for s in index2_subgroups(group) if s.label == best[0]
        )
        boundary = dist2 == {g for g in h.members if g != 0}
    return EquivalenceReport(graph_side, design_side, best[0], best[1],
                             boundary)


def check_antipodal_d4_equivalence(graph: CayleyGraph, full: bool = False
                                   ) -> EquivalenceReport:
    """Antipodal bipartite diameter-4 DRG property vs the symmetric
    relative-difference-set property.

    Graph side: antipodal bipartite distance-regular of diameter 4 with
    array {r mu, r mu - 1, (r-1) mu, 1; 1, mu, r mu - 1, r mu}.  Design
    side: D = a^-1 S is a symmetric (r mu, r, r mu, mu)-relative
    difference set relative to an order-r subgroup N of an index-2
    subgroup H, with D^(-1) = a D a.
    """
    group = graph.group
    report = check_distance_regular(graph)
    k = graph.valency
    graph_side = False
    r = None
    if (report.is_drg and report.bipartite and report.antipodal
            and report.diameter == 4):
        r = report.antipodal_index
        mu = report.array.mu
        expected = (
            (r * mu, r * mu - 1, (r - 1) * mu, 1),
            (1, mu, r * mu - 1, r * mu),
        )
        graph_side = (report.array.b, report.array.c) == expected

    # the design side derives r from the counting identity |G| = 2 r k
    design_side = False
    best: tuple[Optional[str], Optional[DesignReport]] = (None, None)
    if k > 0 and group.order % (2 * k) == 0:
        r_design = group.order // (2 * k)
        mu_design, rem = divmod(k, r_design) if r_design else (0, 1)
        if r_design >= 2 and rem == 0:
            for h in _index2_avoiding(group, graph.connection):
                ok_all = True
                rep = None
                for a in _coset_reps(group, h, full):
                    ai = group.inv_index(a)
                    d = [group.mul_index(ai, s) for s in graph.connection]
                    found = _relative_counts_ok(group, d, h)
                    if found is None:
                        ok_all = False
                        break
                    n_members, mu_got = found
                    if (len(n_members) != r_design or mu_got != mu_design
                            or not check_symmetry_condition(group, d, a)):
                        ok_all = False
                        break
                    n_sub = Subgroup(group, n_members, _label_of(
                        group, n_members))
                    rep = verify_relative_difference_set(h, n_sub, d)
                    if rep is None or not rep.symmetric:
                        ok_all = False
                        break
                if ok_all and rep is not None:
                    design_side = True
                    best = (h.label, rep)
                    break

    boundary = None
    if graph_side and design_side:
        part = distance_partition(graph, group.identity)
        h = next(
            s for s in index2_subgroups(group) if s.label == best[0]
        )
        dist24 = set(_bits(part.layers[2])) | set(_bits(part.layers[4]))
        dist4 = set(_bits(part.layers[4]))
        n_size = best[1].parameters[1]
        boundary = (
            dist24 == {g for g in h.members if g != 0}
            and len(dist4) == n_size - 1
        )
    return EquivalenceReport(graph_side, design_side, best[0], best[1],
                             boundary)


def _label_of(group: Group, members: frozenset[int]) -> str:
    gens = sorted(members - {0})
    if gens:
        return f"<{group.element_name(gens[0])}>"
    return "<1>"


def search_difference_sets(h: Subgroup, k: int) -> list[tuple[int, ...]]:
    """All k-subsets of H that are difference sets, one representative per
    right-translate class (the lexicographically least translate)."""
    n = len(h.members)
    if n > 64:
        raise TooLarge(f"|H| = {n} exceeds the search limit 64")
    members = sorted(h.members)
    if k < 0 or k > n:
        return []
    if n > 32 and comb(n, k) > 10**7:
        raise TooLarge(f"C({n},{k}) is beyond full enumeration")
    # feasibility: k(k-1) = lam (n-1) must have an integer solution
    if n > 1 and (k * (k - 1)) % (n - 1) != 0:
        return []
    group = h.parent
    found: set[tuple[int, ...]] = set()
    for d in combinations(members, k):
        if difference_set_lambda(h, list(d)) is not None:
            found.add(_canonical_translate(group, h, d))
    return sorted(found)


def _canonical_translate(group: Group, h: Subgroup, d) -> tuple[int, ...]:
    best = None
    for g in h.members:
        t = tuple(sorted(group.mul_index(x, g) for x in d))
        if best is None or t < best:
            best = t
    return best
