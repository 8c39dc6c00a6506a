import random

import numpy as np
import pytest

from conftest import PSD8_PAIR, SD8_PAIR, random_spec
from drgforge.cayley import BitGraph, build_cayley, build_psd, build_sd
from drgforge.drg import (
    IntersectionArray,
    antipodal_quotient,
    check_distance_regular,
    distance_module_oracle,
    distance_partition,
    halved_graphs,
    intersection_matrix,
    intersection_matrix_spectrum,
    recognize_named,
)
from drgforge.errors import Disconnected, InvalidArray, NotBipartite
from drgforge.groups import make_group


def cycle_graph(n):
    return BitGraph([
        (1 << ((v + 1) % n)) | (1 << ((v - 1) % n)) for v in range(n)
    ])


def complete_graph(n):
    full = (1 << n) - 1
    return BitGraph([full & ~(1 << v) for v in range(n)])


def complete_bipartite(m):
    top = ((1 << m) - 1) << m
    bot = (1 << m) - 1
    return BitGraph([top] * m + [bot] * m)


def test_complete_graph_array():
    report = check_distance_regular(complete_graph(7))
    assert report.is_drg
    assert report.array == IntersectionArray((6,), (1,))
    assert report.array.render() == "{6;1}"
    assert report.primitive and not report.bipartite


def test_cycle_array():
    report = check_distance_regular(cycle_graph(8))
    assert report.is_drg
    assert report.array == IntersectionArray((2, 1, 1, 1), (1, 1, 1, 2))
    assert report.bipartite and report.antipodal and report.antipodal_index == 2


def test_complete_bipartite_array():
    report = check_distance_regular(complete_bipartite(4))
    assert report.is_drg
    assert report.array == IntersectionArray((4, 3), (1, 4))
    assert report.antipodal_index == 4


def test_disconnected_raises():
    g = BitGraph([0b0010, 0b0001, 0b1000, 0b0100])
    with pytest.raises(Disconnected):
        distance_partition(g, 0)


def test_petersen_like_non_drg_detected():
    # path P4 is connected and not even regular
    g = BitGraph([0b0010, 0b0100, 0b1001, 0b0100])
    from drgforge.errors import NotRegular
    with pytest.raises(NotRegular):
        check_distance_regular(g)


def test_known_pair_structure():
    graph = build_sd(8, *SD8_PAIR)
    report = check_distance_regular(graph)
    assert report.is_drg and report.diameter == 4
    assert report.array == IntersectionArray((8, 7, 4, 1), (1, 4, 7, 8))
    assert report.bipartite and report.antipodal
    assert report.antipodal_index == 2 and not report.primitive
    assert report.layer_sizes == (1, 8, 14, 8, 1)
    assert report.array.k_i() == [1, 8, 14, 8, 1]


def test_single_base_matches_all_bases():
    rng = random.Random(17)
    for _ in range(50):
        family = rng.choice(("sd", "psd"))
        r, t = random_spec(rng, family, 8)
        build = build_sd if family == "sd" else build_psd
        graph = build(8, r, t)
        try:
            fast = check_distance_regular(graph)
            slow = check_distance_regular(graph, all_bases=True)
        except Disconnected:
            continue
        assert fast.is_drg == slow.is_drg and fast.array == slow.array


def test_oracle_agreement_on_known_pairs():
    for family, pair in (("sd", SD8_PAIR), ("psd", PSD8_PAIR)):
        build = build_sd if family == "sd" else build_psd
        graph = build(8, *pair)
        assert distance_module_oracle(graph)
        assert check_distance_regular(graph).is_drg


def test_halved_graphs_of_hadamard_pair():
    graph = build_sd(8, *SD8_PAIR)
    for half in halved_graphs(graph):
        assert half.order == 16
        report = check_distance_regular(half, all_bases=True)
        assert report.is_drg and report.diameter == 2
        # each half is the cocktail-party graph K_{8x2}
        assert report.array == IntersectionArray((14, 1), (1, 14))
        assert recognize_named(half).params == (8, 2)


def test_halved_complete_bipartite_is_complete():
    for half in halved_graphs(complete_bipartite(5)):
        assert recognize_named(half).kind == "complete"


def test_halve_rejects_odd_cycle():
    with pytest.raises(NotBipartite):
        halved_graphs(cycle_graph(5))


def test_antipodal_quotient_of_hadamard_pair():
    graph = build_sd(8, *SD8_PAIR)
    q = antipodal_quotient(graph)
    assert q.order == 16
    report = check_distance_regular(q, all_bases=True)
    assert report.is_drg and report.diameter == 2
    assert report.array == IntersectionArray((8, 7), (1, 8))


def test_antipodal_quotient_of_cycle():
    q = antipodal_quotient(cycle_graph(8))
    assert q.order == 4
    assert recognize_named(q).kind == "cycle"


def test_recognize_complete():
    assert recognize_named(complete_graph(6)) == \
        recognize_named(complete_graph(6))
    assert recognize_named(complete_graph(6)).kind == "complete"


def test_recognize_cbmm_from_cayley():
    # all-reflection connection set gives K_{16,16} minus a matching
    graph = build_sd(8, [], list(range(1, 16)))
    named = recognize_named(graph)
    assert named.kind == "complete-bipartite-minus-matching"
    assert named.params == (16,)
    report = check_distance_regular(graph)
    assert report.is_drg and report.diameter == 3


def test_recognize_multipartite_from_cayley():
    # S = G \ <p^2> yields the complete multipartite K_{4x8}
    group = make_group("sd", 8)
    sub = group.generated_by([2])
    s = [g for g in group.elements() if g not in sub]
    graph = build_cayley(group, s)
    named = recognize_named(graph)
    assert named.kind == "complete-multipartite"
    assert named.params == (4, 8)


def test_recognize_conference_parameters():
    # Paley graph on 13 vertices: quadratic residues mod 13
    group = make_group("cyclic", 13)
    qr = sorted({(x * x) % 13 for x in range(1, 13)})
    graph = build_cayley(group, qr)
    assert recognize_named(graph).kind == "conference-parameters"


def test_recognition_precedence_other():
    graph = build_sd(8, *SD8_PAIR)
    assert recognize_named(graph).kind == "other"


def test_intersection_matrix_entries():
    arr = IntersectionArray((8, 7, 4, 1), (1, 4, 7, 8))
    m = intersection_matrix(arr)
    assert m.shape == (5, 5)
    assert m[0, 1] == 8 and m[1, 0] == 1
    assert np.all(np.diag(m) == 0)  # bipartite array has a_i = 0


def test_spectrum_of_hadamard_array():
    arr = IntersectionArray((8, 7, 4, 1), (1, 4, 7, 8))
    spec = intersection_matrix_spectrum(arr, 32)
    want = [8.0, np.sqrt(8), 0.0, -np.sqrt(8), -8.0]
    assert len(spec.eigenvalues) == 5
    assert np.allclose(spec.eigenvalues, want, atol=1e-9)
    assert spec.multiplicities == [1, 8, 14, 8, 1]


def test_spectrum_matches_direct_eigensolve():
    graph = build_psd(8, *PSD8_PAIR)
    report = check_distance_regular(graph)
    spec = intersection_matrix_spectrum(report.array, graph.order)
    a = np.zeros((graph.order, graph.order))
    for v in range(graph.order):
        for u in graph.neighbors(v):
            a[v, u] = 1
    eigs = np.linalg.eigvalsh(a)
    direct = sorted(np.round(eigs, 6))
    reconstructed = sorted(
        round(val, 6)
        for val, mult in zip(spec.eigenvalues, spec.multiplicities)
        for _ in range(mult)
    )
    assert np.allclose(direct, reconstructed, atol=1e-5)


def test_invalid_array_rejected():
    with pytest.raises(InvalidArray):
        IntersectionArray((4, 3), (2, 4))  # c_1 must be 1
    with pytest.raises(InvalidArray):
        IntersectionArray((), ())
    arr = IntersectionArray((3, 3), (1, 1))
    with pytest.raises(InvalidArray):
        arr.validate()  # k_2 = 9 forces a_1 = -1
