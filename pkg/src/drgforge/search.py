"""Exhaustive search for diameter-4 (Hadamard-type) connection pairs.

The structural constraints factor the candidate space into independent
half-shift couples, so R candidates number 2^(n/4) and T candidates
2^(n/2) (sd) or 2^(n/4) (psd).  The matcher joins the two sides on the
folded autocorrelation profile: R-profiles are hashed once, every
T-candidate probes with the complementary profile, turning the product
space into two linear passes.  A slow unhashed reference search is kept
for cross-validation at small n.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .classify import canonicalize, hadamard_check_range
from .errors import UnsupportedN
from .residues import _rotl

Pair = tuple[tuple[int, ...], tuple[int, ...]]


@dataclass
class SearchResult:
    family: str
    n: int
    pairs: list[Pair]
    candidates_examined: int
    elapsed_ms: float

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "pairCount": len(self.pairs),
            "pairs": [{"R": list(r), "T": list(t)} for r, t in self.pairs],
            "candidatesExamined": self.candidates_examined,
            "elapsedMs": round(self.elapsed_ms, 3),
        }


def _mask(members, _m):
    out = 0
    for x in members:
        out |= 1 << x
    return out


def _odd_quadruples(n: int) -> list[tuple[int, int, int, int]]:
    """Orbits {i, -i, i+n, n-i} of the odd residues mod 2n; each orbit has
    size 4 for n = 2^r >= 8."""
    m = 2 * n
    seen = set()
    orbits = []
    for i in range(1, m, 2):
        if i in seen:
            continue
        quad = (i, (-i) % m, (i + n) % m, (n - i) % m)
        seen.update(quad)
        orbits.append(quad)
    return orbits


def _r_candidates(n: int) -> list[int]:
    """Masks of all valid R: odd, R = -R, |R| = n/2, R and n+R disjoint.
    Per orbit {i, -i, i+n, n-i} the choice is {i, -i} or {i+n, n-i}."""
    m = 2 * n
    orbits = _odd_quadruples(n)
    options = [
        (_mask((i, j), m), _mask((k, l), m)) for i, j, k, l in orbits
    ]
    return _combine(options)


def _sd_t_candidates(n: int) -> list[int]:
    """Masks of all valid sd T: even, |T| = n/2, T and n+T disjoint.  One
    residue chosen from each couple {t, t+n}."""
    m = 2 * n
    options = [
        (_mask((t,), m), _mask(((t + n) % m,), m)) for t in range(0, n, 2)
    ]
    return _combine(options)


def _psd_t_candidates(n: int) -> list[int]:
    """Masks of all valid psd T: odd, T = n - T, |T| = n/2, T and n+T
    disjoint.  Per orbit the reflection-closed choice is {i, n-i} or
    {i+n, -i}."""
    m = 2 * n
    orbits = _odd_quadruples(n)
    options = [
        (_mask((i, l), m), _mask((k, j), m)) for i, j, k, l in orbits
    ]
    return _combine(options)


def _combine(options: list[tuple[int, int]]) -> list[int]:
    masks = []
    for bits in range(1 << len(options)):
        acc = 0
        for pos, (a, b) in enumerate(options):
            acc |= b if (bits >> pos) & 1 else a
        masks.append(acc)
    return masks


def _profile(mask: int, n: int) -> tuple[int, ...]:
    """Folded autocorrelation (|A & (i+A)|) over even i in (0, n); the
    remaining required shifts follow by the i <-> 2n-i symmetry."""
    m = 2 * n
    return tuple(
        (mask & _rotl(mask, i, m)).bit_count() for i in range(2, n, 2)
    )


def _full_mu_ok(r_mask: int, t_mask: int, n: int) -> bool:
    m = 2 * n
    half = n // 2
    return all(
        (r_mask & _rotl(r_mask, i, m)).bit_count()
        + (t_mask & _rotl(t_mask, i, m)).bit_count() == half
        for i in hadamard_check_range(n)
    )


def _members(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _validate_n(n: int):
    if n < 8 or n > 64 or n & (n - 1):
        raise UnsupportedN(f"search supports n = 2^r with 8 <= n <= 64, got {n}")


def _t_candidates(family: str, n: int) -> list[int]:
    if family == "sd":
        if n > 32:
            raise UnsupportedN(
                "sd search stops at n = 32: the T-candidate space is "
                "2^(n/2) masks and becomes memory-bound beyond that"
            )
        return _sd_t_candidates(n)
    if family == "psd":
        return _psd_t_candidates(n)
    raise UnsupportedN(f"search covers sd/psd, not {family!r}")


def search_hadamard_pairs(family: str, n: int, threads: int = 1
                          ) -> SearchResult:
    """All canonical (R, T) pairs whose graph is the diameter-4 antipodal
    case, via the profile-hash join."""
    _validate_n(n)
    start = time.perf_counter()
    r_cands = _r_candidates(n)
    t_cands = _t_candidates(family, n)
    half = n // 2

    table: dict[tuple[int, ...], list[int]] = {}
    for r_mask in r_cands:
        table.setdefault(_profile(r_mask, n), []).append(r_mask)

    def scan(chunk: list[int]) -> list[tuple[int, int]]:
        hits = []
        for t_mask in chunk:
            need = tuple(half - c for c in _profile(t_mask, n))
            for r_mask in table.get(need, ()):
                hits.append((r_mask, t_mask))
        return hits

    threads = max(1, threads)
    if threads == 1 or len(t_cands) < 2 * threads:
        raw = scan(t_cands)
    else:
        size = -(-len(t_cands) // threads)
        chunks = [
            t_cands[i:i + size] for i in range(0, len(t_cands), size)
        ]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            raw = [
                hit for part in pool.map(scan, chunks) for hit in part
            ]

    pairs = _canonical_pairs(family, n, raw)
    elapsed = (time.perf_counter() - start) * 1e3
    return SearchResult(family, n, pairs,
                        len(r_cands) + len(t_cands), elapsed)


def search_hadamard_pairs_reference(family: str, n: int) -> SearchResult:
    """Direct double loop with a per-pair full shift check; no hashing.
    Used to cross-validate the joined search at small n."""
    _validate_n(n)
    start = time.perf_counter()
    r_cands = _r_candidates(n)
    t_cands = _t_candidates(family, n)
    raw = [
        (r_mask, t_mask)
        for r_mask in r_cands
        for t_mask in t_cands
        if _full_mu_ok(r_mask, t_mask, n)
    ]
    pairs = _canonical_pairs(family, n, raw)
    elapsed = (time.perf_counter() - start) * 1e3
    return SearchResult(family, n, pairs,
                        len(r_cands) * len(t_cands), elapsed)


def _canonical_pairs(family: str, n: int, raw: list[tuple[int, int]]
                     ) -> list[Pair]:
    """Deduplicate by the affine canonical form; the affine maps permute
    the raw hit set, so each orbit is swept once."""
    seen: set[tuple[int, int]] = set()
    raw_set = set(raw)
    out: set[Pair] = set()
    for hit in raw:
        if hit in seen:
            continue
        r_mem, t_mem = _members(hit[0]), _members(hit[1])
        canon = canonicalize(family, n, r_mem, t_mem)
        out.add(canon)
        orbit = _affine_orbit(family, n, r_mem, t_mem)
        seen.update(orbit & raw_set)
    return sorted(out)


def _affine_orbit(family: str, n: int, r_mem, t_mem
                  ) -> set[tuple[int, int]]:
    m = 2 * n
    orbit = set()
    if family == "psd":
        shifted = tuple(sorted((x + n) % m for x in t_mem))
        for t in (tuple(t_mem), shifted):
            orbit.add((_mask(r_mem, m), _mask(t, m)))
        return orbit
    from .residues import units

    for a in units(m):
        ra = _mask(((a * x) % m for x in r_mem), m)
        ta = [(a * x) % m for x in t_mem]
        for b in range(0, m, 2):
            orbit.add((ra, _mask(((b + x) % m for x in ta), m)))
    return orbit
