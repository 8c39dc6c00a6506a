import random

import pytest

from conftest import PSD8_PAIR, SD8_PAIR, random_spec
from drgforge.cayley import (
    BitGraph,
    build_cayley,
    build_dih,
    build_psd,
    build_sd,
    generates_group,
    is_connected,
    neighborhood,
    neighborhood_formula,
)
from drgforge.errors import (
    BadClosure,
    IdentityInSet,
    NotInverseClosed,
    ZeroInR,
)
from drgforge.groups import make_group


def test_complete_graph_from_full_connection():
    group = make_group("cyclic", 8)
    graph = build_cayley(group, range(1, 8))
    assert graph.order == 8 and graph.valency == 7
    graph.validate()
    full = (1 << 8) - 1
    assert all(
        graph.adjacency[v] == full & ~(1 << v) for v in range(8)
    )


def test_cayley_is_undirected_and_loopless():
    graph = build_sd(8, *SD8_PAIR)
    graph.validate()
    assert graph.is_regular() and graph.valency == 8


def test_identity_rejected():
    group = make_group("cyclic", 8)
    with pytest.raises(IdentityInSet):
        build_cayley(group, [0, 1, 7])


def test_inverse_closure_rejected():
    group = make_group("sd", 8)
    with pytest.raises(NotInverseClosed):
        build_cayley(group, [1])  # p has inverse p^15


def test_spec_closure_errors():
    with pytest.raises(ZeroInR):
        build_sd(8, [0, 5, 11], [4])
    with pytest.raises(BadClosure):
        build_sd(8, [5, 7, 9], [4])  # missing 11 = -5
    with pytest.raises(BadClosure):
        build_sd(8, [5, 11], [1])  # odd t needs its 9t partner
    with pytest.raises(BadClosure):
        build_psd(8, [5, 11], [1])  # psd odd t needs n - t
    with pytest.raises(BadClosure):
        build_sd(8, [], [])


def test_dihedral_t_unconstrained():
    graph = build_dih(8, [1, 7], [0, 3])
    graph.validate()
    assert graph.order == 16 and graph.valency == 4


@pytest.mark.parametrize("family,pair", [("sd", SD8_PAIR), ("psd", PSD8_PAIR)])
def test_neighborhood_formula_matches_adjacency(family, pair):
    build = build_sd if family == "sd" else build_psd
    graph = build(8, *pair)
    for v in range(graph.order):
        assert neighborhood_formula(graph, v) == neighborhood(graph, v)


def test_neighborhood_formula_on_random_specs():
    rng = random.Random(42)
    for _ in range(25):
        for family in ("sd", "psd"):
            r, t = random_spec(rng, family, 8)
            build = build_sd if family == "sd" else build_psd
            graph = build(8, r, t)
            for v in range(graph.order):
                assert neighborhood_formula(graph, v) == neighborhood(graph, v)


def test_connectivity_agrees_with_generation():
    rng = random.Random(99)
    for _ in range(100):
        family = rng.choice(("sd", "psd"))
        r, t = random_spec(rng, family, 8)
        build = build_sd if family == "sd" else build_psd
        graph = build(8, r, t)
        assert is_connected(graph) == generates_group(graph)


def test_disconnected_example():
    # S inside <p^2> leaves the graph in two or more components
    graph = build_sd(8, [2, 14], [])
    assert not is_connected(graph)
    assert not generates_group(graph)


def test_bitgraph_basics():
    g = BitGraph([0b0110, 0b1001, 0b1001, 0b0110])  # 4-cycle 0-1-3-2-0
    assert g.degree(0) == 2
    assert g.neighbors(0) == [1, 2]
    assert g.is_regular() and g.valency == 2
    assert is_connected(g)
