"""Classification of sd/psd connection specs into the named cases.

A distance-regular two-generator Cayley graph over these groups falls
into exactly one of: complete, complete multipartite, complete bipartite
minus a matching, one of three diameter-3 difference-set cases (indexed
by which index-2 subgroup carries the bipartition), or the diameter-4
Hadamard-pair case.  The classifier's verdict is required to agree with
the direct distance-regularity check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .cayley import CayleyGraph, build_psd, build_sd
from .designs import DesignReport, verify_difference_set
from .drg import (
    IntersectionArray,
    check_distance_regular,
    distance_partition,
    recognize_named,
    _bits,
)
from .errors import (
    Disconnected,
    InternalInconsistency,
    InvalidParameter,
    StructuralViolation,
)
from .groups import index2_subgroups
from .residues import ResidueSet, units

CASE_NOT_DRG = "not-distance-regular"
CASE_COMPLETE = "complete"
CASE_MULTIPARTITE = "complete-multipartite"
CASE_CBMM = "complete-bipartite-minus-matching"
CASE_DS_RHO = "diff-set-rho"
CASE_DS_RHO2_TAU = "diff-set-rho2-tau"
CASE_DS_RHO2_RHOTAU = "diff-set-rho2-rhotau"
CASE_HADAMARD = "hadamard-pair"

_DS_CASE_BY_LABEL = {
    "<p>": CASE_DS_RHO,
    "<p^2, t>": CASE_DS_RHO2_TAU,
    "<p^2, p t>": CASE_DS_RHO2_RHOTAU,
}


@dataclass
class HadamardCertificate:
    family: str
    n: int
    r_set: ResidueSet
    t_set: ResidueSet
    mu_check: dict[int, int]

    @property
    def valid(self) -> bool:
        return all(v == self.n // 2 for v in self.mu_check.values())

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "R": list(self.r_set.members),
            "T": list(self.t_set.members),
            "muCheck": {str(i): v for i, v in sorted(self.mu_check.items())},
            "valid": self.valid,
        }


@dataclass
class TheoremCase:
    case: str
    witness: Optional[dict] = None

    def to_json(self) -> dict:
        return {"case": self.case, "witness": self.witness}


def _build(family: str, n: int, r_mem, t_mem) -> CayleyGraph:
    if family == "sd":
        return build_sd(n, r_mem, t_mem)
    if family == "psd":
        return build_psd(n, r_mem, t_mem)
    raise InvalidParameter(f"classification covers sd/psd, not {family!r}")


def classify(family: str, n: int, r_mem, t_mem) -> TheoremCase:
    """Name the case a valid sd/psd spec falls into, with a verified
    witness; returns not-distance-regular exactly when the direct check
    does (disconnected graphs are never distance-regular)."""
    graph = _build(family, n, r_mem, t_mem)
    try:
        report = check_distance_regular(graph)
    except Disconnected:
        return TheoremCase(CASE_NOT_DRG, {"reason": "disconnected"})
    if not report.is_drg:
        return TheoremCase(CASE_NOT_DRG)

    named = recognize_named(graph)
    if named.kind == "complete":
        return TheoremCase(CASE_COMPLETE, {"order": graph.order})
    if named.kind == "complete-bipartite-minus-matching":
        return TheoremCase(CASE_CBMM, {"m": named.params[0]})
    if named.kind == "complete-multipartite":
        t, m = named.params
        return TheoremCase(CASE_MULTIPARTITE, {"parts": t, "partSize": m})

    if report.diameter == 3 and report.bipartite:
        return _classify_diameter3(graph, report.array)
    if report.diameter == 4:
        cert = verify_hadamard_certificate(family, n, r_mem, t_mem)
        if not cert.valid:
            raise InternalInconsistency(
                "diameter-4 distance-regular spec without a valid "
                "Hadamard certificate"
            )
        return TheoremCase(CASE_HADAMARD, cert.to_json())
    raise InternalInconsistency(
        f"distance-regular spec matches no case (diameter {report.diameter})"
    )


def _classify_diameter3(graph: CayleyGraph, array: IntersectionArray
                        ) -> TheoremCase:
    group = graph.group
    part = distance_partition(graph, group.identity)
    h_members = frozenset(_bits(part.layers[0] | part.layers[2]))
    match = next(
        (h for h in index2_subgroups(group) if h.members == h_members),
        None,
    )
    if match is None or match.label not in _DS_CASE_BY_LABEL:
        raise InternalInconsistency(
            "diameter-3 bipartition class is not a named index-2 subgroup"
        )
    # Lemma-style witness: D = a^-1 S is a difference set in H
    a = min(g for g in group.elements() if g not in match.members)
    ai = group.inv_index(a)
    d = [group.mul_index(ai, s) for s in graph.connection]
    design = verify_difference_set(match, d)
    if design is None or design.trivial:
        raise InternalInconsistency(
            "diameter-3 case without a non-trivial difference-set witness"
        )
    witness = {
        "subgroup": match.label,
        "design": design.to_json(),
        "array": array.to_json(),
    }
    case = _DS_CASE_BY_LABEL[match.label]
    if graph.spec.family == "psd" and case == CASE_DS_RHO2_TAU:
        # <p^2, t> is here the direct product <p^2> x <t>; report the
        # shifted set in Z_(2n)-even (+) Z_2 coordinates as well
        m = graph.spec.modulus
        pairs = sorted(
            [((r - 1) % m, 0) for r in graph.spec.r_set.members]
            + [((t - 1) % m, 1) for t in graph.spec.t_set.members]
        )
        witness["directProduct"] = [list(p) for p in pairs]
    return TheoremCase(case, witness)


def canonicalize(family: str, n: int, r_mem, t_mem
                 ) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Least representative of the affine-isomorphism orbit of (R, T).

    sd: minimum of (aR, b + aT) over units a and even shifts b, all of
    which preserve the closure invariants.  psd: only the T -> n + T map
    is available, so the minimum of (R, T) and (R, n + T).
    """
    m = 2 * n
    r = ResidueSet.of(m, r_mem)
    t = ResidueSet.of(m, t_mem)
    if family == "psd":
        t2 = t.shift(n)
        return min(
            (r.members, t.members), (r.members, t2.members)
        )
    if family != "sd":
        raise InvalidParameter(f"canonicalize covers sd/psd, not {family!r}")
    best = None
    for a in units(m):
        ra = tuple(sorted((a * x) % m for x in r.members))
        ta_base = [(a * x) % m for x in t.members]
        for b in range(0, m, 2):
            tb = tuple(sorted((b + x) % m for x in ta_base))
            cand = (ra, tb)
            if best is None or cand < best:
                best = cand
    return best


def hadamard_check_range(n: int) -> list[int]:
    """All even i mod 2n except 0 and n."""
    return [i for i in range(2, 2 * n, 2) if i != n]


def verify_hadamard_certificate(family: str, n: int, r_mem, t_mem
                                ) -> HadamardCertificate:
    """Check the diameter-4 structural constraints, then the full
    autocorrelation-sum map; the certificate is valid iff every entry
    equals n/2.  Structural failures raise StructuralViolation."""
    m = 2 * n
    r = ResidueSet.of(m, r_mem)
    t = ResidueSet.of(m, t_mem)
    half = n // 2

    def fail(name, msg):
        raise StructuralViolation(name, msg)

    if len(r) != half:
        fail("R-size", f"|R| must be {half}, got {len(r)}")
    if len(t) != half:
        fail("T-size", f"|T| must be {half}, got {len(t)}")
    if any(x % 2 == 0 for x in r.members):
        fail("R-parity", "R must consist of odd residues")
    if r.negate().mask != r.mask:
        fail("R-symmetry", "R must satisfy R = -R")
    if r.mask & r.shift(n).mask:
        fail("R-halfshift", "R and n+R must be disjoint")
    if t.mask & t.shift(n).mask:
        fail("T-halfshift", "T and n+T must be disjoint")
    if family == "sd":
        if any(x % 2 for x in t.members):
            fail("T-parity", "T must consist of even residues")
    elif family == "psd":
        if any(x % 2 == 0 for x in t.members):
            fail("T-parity", "T must consist of odd residues")
        reflected = ResidueSet.of(m, ((n - x) % m for x in t.members))
        if reflected.mask != t.mask:
            fail("T-reflection", "T must satisfy T = n - T")
    else:
        raise InvalidParameter(f"no Hadamard structure for family {family!r}")

    mu_check = {
        i: r.overlap(i) + t.overlap(i) for i in hadamard_check_range(n)
    }
    cert = HadamardCertificate(family, n, r, t, mu_check)
    if cert.valid:
        graph = _build(family, n, r.members, t.members)
        report = check_distance_regular(graph)
        expected = IntersectionArray(
            (n, n - 1, half, 1), (1, half, n - 1, n)
        )
        if not report.is_drg or report.array != expected:
            raise InternalInconsistency(
                "valid certificate but the graph is not distance-regular "
                "with the antipodal diameter-4 array"
            )
    return cert
