"""Fast end-to-end sanity battery for the installed package.

Each check re-derives a known result through at least two independent
code paths.  The battery is intended to finish in a few seconds.
"""

from __future__ import annotations

import random

from .cayley import build_psd, build_sd
from .classify import CASE_HADAMARD, classify, verify_hadamard_certificate
from .designs import (
    check_antipodal_d4_equivalence,
    search_difference_sets,
    verify_difference_set,
)
from .drg import (
    IntersectionArray,
    check_distance_regular,
    distance_module_oracle,
    intersection_matrix_spectrum,
)
from .groups import Subgroup, cayley_table, make_group
from .search import search_hadamard_pairs, search_hadamard_pairs_reference

SD8_PAIR = ((5, 7, 9, 11), (4, 8, 10, 14))
PSD8_PAIR = ((5, 7, 9, 11), (3, 5, 9, 15))
SD32_PAIR = (
    (9, 11, 15, 19, 25, 27, 29, 31, 33, 35, 37, 39, 45, 49, 53, 55),
    (0, 8, 12, 14, 22, 24, 30, 34, 36, 38, 42, 48, 50, 52, 58, 60),
)


def _check_group_arithmetic() -> bool:
    for family in ("sd", "psd", "dihedral", "dicyclic"):
        group = make_group(family, 8)
        table = cayley_table(group)
        n = group.order
        # associativity and two-sided inverses on the full table
        rng = random.Random(7)
        triples = [
            (rng.randrange(n), rng.randrange(n), rng.randrange(n))
            for _ in range(200)
        ]
        for a, b, c in triples:
            if table[table[a][b]][c] != table[a][table[b][c]]:
                return False
        for a in range(n):
            ai = group.inv_index(a)
            if table[a][ai] != 0 or table[ai][a] != 0:
                return False
    return True


def _check_known_pair(family: str, n: int, pair) -> bool:
    r, t = pair
    graph = build_sd(n, r, t) if family == "sd" else build_psd(n, r, t)
    report = check_distance_regular(graph)
    expected = IntersectionArray(
        (n, n - 1, n // 2, 1), (1, n // 2, n - 1, n)
    )
    if not (report.is_drg and report.array == expected and report.bipartite
            and report.antipodal and report.antipodal_index == 2):
        return False
    if not distance_module_oracle(graph):
        return False
    if classify(family, n, r, t).case != CASE_HADAMARD:
        return False
    if not verify_hadamard_certificate(family, n, r, t).valid:
        return False
    eq = check_antipodal_d4_equivalence(graph)
    return eq.graph_side and eq.design_side and bool(eq.boundary_ok)


def _check_spectrum() -> bool:
    arr = IntersectionArray((8, 7, 4, 1), (1, 4, 7, 8))
    spec = intersection_matrix_spectrum(arr, 32)
    want = [8.0, 8 ** 0.5, 0.0, -(8 ** 0.5), -8.0]
    if len(spec.eigenvalues) != 5:
        return False
    if any(abs(a - b) > 1e-9 for a, b in zip(spec.eigenvalues, want)):
        return False
    return spec.multiplicities == [1, 8, 14, 8, 1]


def _check_searches() -> bool:
    for family, n, count in [("sd", 8, 1), ("sd", 16, 0),
                             ("psd", 8, 4), ("psd", 16, 0)]:
        fast = search_hadamard_pairs(family, n)
        slow = search_hadamard_pairs_reference(family, n)
        if len(fast.pairs) != count or fast.pairs != slow.pairs:
            return False
    return True


def _check_no_16_6_2() -> bool:
    group = make_group("cyclic", 16)
    whole = Subgroup(group, frozenset(range(16)), "Z16")
    hits = [
        d for d in search_difference_sets(whole, 6)
        if not verify_difference_set(whole, list(d)).trivial
    ]
    return hits == []


def run_selfcheck() -> list[tuple[str, bool]]:
    checks = [
        ("group arithmetic", _check_group_arithmetic),
        ("sd n=8 known pair", lambda: _check_known_pair("sd", 8, SD8_PAIR)),
        ("psd n=8 known pair",
         lambda: _check_known_pair("psd", 8, PSD8_PAIR)),
        ("sd n=32 known pair",
         lambda: _check_known_pair("sd", 32, SD32_PAIR)),
        ("spectrum of {8,7,4,1;1,4,7,8}", _check_spectrum),
        ("search counts n=8,16", _check_searches),
        ("no non-trivial (16,6,2) difference set", _check_no_16_6_2),
    ]
    results = []
    for name, fn in checks:
        try:
            ok = bool(fn())
        except Exception:
            ok = False
        results.append((name, ok))
    return results
