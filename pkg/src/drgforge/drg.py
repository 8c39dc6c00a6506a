"""Distance structure of graphs.

Distance-regularity decision, intersection arrays, imprimitivity
(bipartite / antipodal / primitive), halved graphs, antipodal quotients,
named-graph recognition, intersection-matrix spectra, and the
group-algebra (distance-module) oracle that re-decides distance
regularity by a completely different computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .cayley import BitGraph, CayleyGraph, _bits, is_connected
from .errors import (
    Disconnected,
    InternalInconsistency,
    InvalidArray,
    NotAntipodal,
    NotBipartite,
    NotRegular,
)


@dataclass
class DistancePartition:
    base: int
    layers: list[int]  # bit masks N_0 .. N_d

    @property
    def diameter(self) -> int:
        return len(self.layers) - 1

    def layer_sizes(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self.layers)

    def layer_of(self, v: int) -> int:
        for i, m in enumerate(self.layers):
            if (m >> v) & 1:
                return i
        raise ValueError(f"vertex {v} not in partition")


def distance_partition(graph: BitGraph, base: int) -> DistancePartition:
    adj = graph.adjacency
    layers = [1 << base]
    visited = 1 << base
    while True:
        frontier = 0
        for v in _bits(layers[-1]):
            frontier |= adj[v]
        frontier &= ~visited
        if not frontier:
            break
        layers.append(frontier)
        visited |= frontier
    if visited != (1 << graph.order) - 1:
        raise Disconnected("graph is not connected")
    return DistancePartition(base, layers)


@dataclass(frozen=True)
class IntersectionArray:
    b: tuple[int, ...]  # b_0 .. b_{d-1}
    c: tuple[int, ...]  # c_1 .. c_d

    def __post_init__(self):
        if len(self.b) != len(self.c) or not self.b:
            raise InvalidArray("b and c must be non-empty and equally long")
        if self.c[0] != 1:
            raise InvalidArray("c_1 must equal 1")
        if any(x < 0 for x in self.b + self.c):
            raise InvalidArray("entries must be non-negative")

    @property
    def d(self) -> int:
        return len(self.b)

    @property
    def k(self) -> int:
        return self.b[0]

    def b_i(self, i: int) -> int:
        return self.b[i] if i < self.d else 0

    def c_i(self, i: int) -> int:
        return self.c[i - 1] if i >= 1 else 0

    def a_i(self, i: int) -> int:
        return self.k - self.b_i(i) - self.c_i(i)

    @property
    def lam(self) -> int:
        return self.a_i(1)

    @property
    def mu(self) -> int:
        return self.c_i(2) if self.d >= 2 else 0

    def k_i(self) -> list[int]:
        """Layer sizes k_0..k_d forced by the array; raises if non-integral."""
        ks = [1]
        for i in range(self.d):
            num = ks[-1] * self.b[i]
            den = self.c[i]
            if num % den:
                raise InvalidArray("layer sizes are not integral")
            ks.append(num // den)
        return ks

    def validate(self):
        for i in range(self.d + 1):
            if self.a_i(i) < 0:
                raise InvalidArray(f"a_{i} negative")
        self.k_i()

    def render(self) -> str:
        bs = ",".join(str(x) for x in self.b)
        cs = ",".join(str(x) for x in self.c)
        return "{%s;%s}" % (bs, cs)

    def to_json(self) -> dict:
        return {"b": list(self.b), "c": list(self.c),
                "rendered": self.render()}


@dataclass
class StructureReport:
    is_drg: bool
    array: Optional[IntersectionArray]
    bipartite: bool
    antipodal: bool
    antipodal_index: Optional[int]
    primitive: bool
    diameter: int
    layer_sizes: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "isDRG": self.is_drg,
            "array": self.array.to_json() if self.array else None,
            "bipartite": self.bipartite,
            "antipodal": self.antipodal,
            "antipodalIndex": self.antipodal_index,
            "primitive": self.primitive,
            "diameter": self.diameter,
            "layerSizes": list(self.layer_sizes),
        }


def _array_from_partition(graph: BitGraph, part: DistancePartition
                          ) -> Optional[IntersectionArray]:
    """The (b, c) constants of a single base partition, or None if the
    neighbour counts into adjacent layers are not constant per layer."""
    adj = graph.adjacency
    d = part.diameter
    b = [0] * d
    c = [0] * d
    for i, layer in enumerate(part.layers):
        below = part.layers[i - 1] if i > 0 else 0
        above = part.layers[i + 1] if i < d else 0
        cs = set()
        bs = set()
        for v in _bits(layer):
            cs.add((adj[v] & below).bit_count())
            bs.add((adj[v] & above).bit_count())
        if len(cs) > 1 or len(bs) > 1:
            return None
        if i > 0:
            c[i - 1] = cs.pop()
        if i < d:
            b[i] = bs.pop()
    try:
        arr = IntersectionArray(tuple(b), tuple(c))
        arr.validate()
    except InvalidArray:
        return None
    return arr


def _two_color(graph: BitGraph) -> Optional[tuple[int, int]]:
    """(mask0, mask1) of a proper 2-colouring, or None."""
    color = [-1] * graph.order
    adj = graph.adjacency
    for start in range(graph.order):
        if color[start] >= 0:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for u in _bits(adj[v]):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return None
    m0 = m1 = 0
    for v, cv in enumerate(color):
        if cv == 0:
            m0 |= 1 << v
        else:
            m1 |= 1 << v
    return m0, m1


def _far_classes(parts: list[DistancePartition], d: int
                 ) -> Optional[list[int]]:
    """Antipodal classes {v} u N_d(v) if the distance-{0,d} relation is an
    equivalence, else None."""
    far = []
    for v, p in enumerate(parts):
        mask = 1 << v
        if p.diameter == d:
            mask |= p.layers[d]
        far.append(mask)
    classes = []
    seen = 0
    for v in range(len(parts)):
        if (seen >> v) & 1:
            continue
        cls = far[v]
        for u in _bits(cls):
            if far[u] != cls:
                return None
        classes.append(cls)
        seen |= cls
    return classes


def antipodal_classes(graph: BitGraph) -> list[int]:
    parts = [distance_partition(graph, v) for v in range(graph.order)]
    d = max(p.diameter for p in parts)
    classes = _far_classes(parts, d)
    if classes is None:
        raise NotAntipodal("distance-{0,d} relation is not an equivalence")
    return classes


def check_distance_regular(graph: BitGraph, all_bases: Optional[bool] = None
                           ) -> StructureReport:
    """Decide distance-regularity and the imprimitivity structure.

    By default a single base vertex is used for Cayley graphs (left
    translations carry the base partition everywhere) and every base for
    plain graphs; all_bases overrides.
    """
    if all_bases is None:
        all_bases = not isinstance(graph, CayleyGraph)
    if not graph.is_regular():
        raise NotRegular("graph is not regular")
    parts = [distance_partition(graph, v) for v in range(graph.order)]
    d = parts[0].diameter
    if any(p.diameter != d for p in parts):
        is_drg, array = False, None
    else:
        bases = range(graph.order) if all_bases else (0,)
        arrays = [_array_from_partition(graph, parts[v]) for v in bases]
        if any(a is None for a in arrays) or len({a for a in arrays}) != 1:
            is_drg, array = False, None
        else:
            is_drg, array = True, arrays[0]

    coloring = _two_color(graph)
    bipartite = coloring is not None

    classes = _far_classes(parts, d)
    antipodal = classes is not None
    index = None
    if antipodal:
        sizes = {c.bit_count() for c in classes}
        index = sizes.pop() if len(sizes) == 1 else None

    primitive = False
    if is_drg:
        primitive = all(
            _distance_graph_connected(parts, i, graph.order)
            for i in range(1, d + 1)
        )

    return StructureReport(
        is_drg=is_drg,
        array=array,
        bipartite=bipartite,
        antipodal=antipodal,
        antipodal_index=index,
        primitive=primitive,
        diameter=d,
        layer_sizes=parts[0].layer_sizes(),
    )


def _distance_graph_connected(parts: list[DistancePartition], i: int,
                              order: int) -> bool:
    rows = [
        p.layers[i] if i <= p.diameter else 0 for p in parts
    ]
    return is_connected(BitGraph(rows))


def distance_graph(graph: BitGraph, i: int) -> BitGraph:
    parts = [distance_partition(graph, v) for v in range(graph.order)]
    return BitGraph(
        [p.layers[i] if i <= p.diameter else 0 for p in parts]
    )


def distance_module_oracle(graph: CayleyGraph) -> bool:
    """Group-algebra re-derivation of distance-regularity.

    Expands every product of distance-layer class sums with exact integer
    coefficients and checks each product is constant on every layer; the
    distance module is closed under multiplication exactly when the graph
    is distance-regular.
    """
    group = graph.group
    part = distance_partition(graph, group.identity)
    layers = [_bits(m) for m in part.layers]
    layer_of = [0] * group.order
    for i, members in enumerate(layers):
        for g in members:
            layer_of[g] = i
    for ni in layers:
        for nj in layers:
            coeff = [0] * group.order
            for x in ni:
                for y in nj:
                    coeff[group.mul_index(x, y)] += 1
            for members in layers:
                vals = {coeff[g] for g in members}
                if len(vals) > 1:
                    return False
    return True


def halved_graphs(graph: BitGraph) -> tuple[BitGraph, BitGraph]:
    """The two components of the distance-2 graph of a bipartite graph,
    with vertices relabelled to 0..m-1 in increasing original order."""
    coloring = _two_color(graph)
    if coloring is None:
        raise NotBipartite("graph is not bipartite")
    adj = graph.adjacency
    dist2 = []
    for v in range(graph.order):
        row = 0
        for u in _bits(adj[v]):
            row |= adj[u]
        dist2.append(row & ~(1 << v))
    return tuple(
        _induced(BitGraph(dist2), _bits(side)) for side in coloring
    )


def _induced(graph: BitGraph, vertices: list[int]) -> BitGraph:
    pos = {v: i for i, v in enumerate(vertices)}
    rows = []
    for v in vertices:
        row = 0
        for u in _bits(graph.adjacency[v]):
            if u in pos:
                row |= 1 << pos[u]
        rows.append(row)
    return BitGraph(rows)


def antipodal_quotient(graph: BitGraph) -> BitGraph:
    """Collapse each antipodal class to one vertex; classes are ordered by
    their least original vertex."""
    classes = antipodal_classes(graph)
    classes.sort(key=lambda m: (m & -m).bit_length())
    cls_of = {}
    for i, cls in enumerate(classes):
        for v in _bits(cls):
            cls_of[v] = i
    rows = [0] * len(classes)
    for v in range(graph.order):
        for u in _bits(graph.adjacency[v]):
            if cls_of[v] != cls_of[u]:
                rows[cls_of[v]] |= 1 << cls_of[u]
    return BitGraph(rows)


@dataclass(frozen=True)
class NamedGraph:
    kind: str  # complete | cycle | complete-bipartite-minus-matching |
    #            complete-multipartite | conference-parameters | other
    params: tuple[int, ...] = ()

    def to_json(self) -> dict:
        return {"kind": self.kind, "params": list(self.params)}


def recognize_named(graph: BitGraph) -> NamedGraph:
    """Most specific named-family match.

    Precedence: complete > cycle > complete-bipartite-minus-matching >
    complete-multipartite > conference-parameters > other.
    """
    v = graph.order
    full = (1 << v) - 1
    if all(graph.adjacency[x] == full & ~(1 << x) for x in range(v)):
        return NamedGraph("complete", (v,))
    if graph.is_regular() and graph.valency == 2 and is_connected(graph):
        return NamedGraph("cycle", (v,))
    cbm = _match_cbmm(graph)
    if cbm is not None:
        return NamedGraph("complete-bipartite-minus-matching", (cbm,))
    km = _match_multipartite(graph)
    if km is not None:
        return NamedGraph("complete-multipartite", km)
    if _match_conference(graph):
        return NamedGraph("conference-parameters", (v,))
    return NamedGraph("other")


def _match_cbmm(graph: BitGraph) -> Optional[int]:
    """K_{m,m} minus a perfect matching: each vertex misses exactly one
    vertex of the opposite part and the missing pairs form a matching."""
    v = graph.order
    if v % 2 or v < 6:
        return None
    m = v // 2
    if not graph.is_regular() or graph.valency != m - 1:
        return None
    coloring = _two_color(graph)
    if coloring is None:
        return None
    m0, m1 = coloring
    if m0.bit_count() != m or m1.bit_count() != m:
        return None
    partner = {}
    for x in range(v):
        side, other = (m0, m1) if (m0 >> x) & 1 else (m1, m0)
        missing = other & ~graph.adjacency[x]
        if missing.bit_count() != 1:
            return None
        partner[x] = missing.bit_length() - 1
    if any(partner[partner[x]] != x for x in range(v)):
        return None
    return m


def _match_multipartite(graph: BitGraph) -> Optional[tuple[int, int]]:
    """K_{t x m} with m >= 2: non-adjacency (plus the diagonal) is an
    equivalence with t equal classes."""
    v = graph.order
    full = (1 << v) - 1
    nonadj = [(full & ~graph.adjacency[x]) for x in range(v)]
    classes = []
    seen = 0
    for x in range(v):
        if (seen >> x) & 1:
            continue
        cls = nonadj[x]
        for y in _bits(cls):
            if nonadj[y] != cls:
                return None
        classes.append(cls)
        seen |= cls
    sizes = {c.bit_count() for c in classes}
    if len(sizes) != 1:
        return None
    m = sizes.pop()
    t = len(classes)
    if m < 2 or t < 2:
        return None
    return t, m


def _match_conference(graph: BitGraph) -> bool:
    v = graph.order
    if v % 4 != 1 or not graph.is_regular():
        return False
    if 2 * graph.valency != v - 1:
        return False
    srg = _srg_params(graph)
    if srg is None:
        return False
    k, lam, mu = srg
    return lam * 4 == v - 5 and mu * 4 == v - 1


def _srg_params(graph: BitGraph) -> Optional[tuple[int, int, int]]:
    if not is_connected(graph) or not graph.is_regular():
        return None
    v = graph.order
    adj = graph.adjacency
    lams, mus = set(), set()
    for x in range(v):
        for y in range(x + 1, v):
            common = (adj[x] & adj[y]).bit_count()
            if (adj[x] >> y) & 1:
                lams.add(common)
            else:
                mus.add(common)
    if len(lams) != 1 or len(mus) != 1:
        return None
    mu = mus.pop()
    if mu == 0:
        return None
    return graph.valency, lams.pop(), mu


@dataclass
class SpectrumReport:
    eigenvalues: list[float]  # decreasing
    multiplicities: list[int]

    def to_json(self) -> dict:
        return {
            "eigenvalues": self.eigenvalues,
            "multiplicities": self.multiplicities,
        }


def intersection_matrix(array: IntersectionArray) -> np.ndarray:
    d = array.d
    m = np.zeros((d + 1, d + 1))
    for i in range(d + 1):
        m[i, i] = array.a_i(i)
        if i > 0:
            m[i, i - 1] = array.c_i(i)
        if i < d:
            m[i, i + 1] = array.b_i(i)
    return m


def intersection_matrix_spectrum(array: IntersectionArray, order: int,
                                 tol: float = 1e-9) -> SpectrumReport:
    """Eigenvalues of the tridiagonal intersection matrix with standard
    multiplicities; eigenvalues closer than tol are merged."""
    array.validate()
    eigs = np.linalg.eigvals(intersection_matrix(array))
    if np.max(np.abs(eigs.imag)) > 1e-6:
        raise InvalidArray("intersection matrix has non-real spectrum")
    vals = sorted(eigs.real, reverse=True)
    merged: list[float] = []
    for x in vals:
        if merged and abs(merged[-1] - x) <= tol:
            continue
        merged.append(x)
    ks = array.k_i()
    mults = []
    for theta in merged:
        u = [1.0, theta / array.k]
        for i in range(1, array.d):
            nxt = ((theta - array.a_i(i)) * u[i] - array.c_i(i) * u[i - 1])
            u.append(nxt / array.b_i(i))
        norm = sum(ks[i] * u[i] * u[i] for i in range(array.d + 1))
        mults.append(round(order / norm))
    if sum(mults) != order:
        raise InternalInconsistency(
            f"multiplicities {mults} do not sum to {order}"
        )
    return SpectrumReport(merged, mults)
