import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from specpairs import (
    Graph,
    PathSystem,
    brute_force_connectivity,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    edge_connectivity,
    empty_graph,
    max_edge_disjoint_paths,
    max_vertex_disjoint_paths,
    path_graph,
    vertex_connectivity,
    verify_disconnecting_set,
)
from tests.conftest import random_graph


# -- known global values ---------------------------------------------------------


def test_complete_graph_conventions():
    r = vertex_connectivity(complete_graph(5))
    assert r.value == 4 and r.witness is None and r.kind == "vertex"
    assert vertex_connectivity(empty_graph(1)).value == 0
    assert vertex_connectivity(empty_graph(0)).value == 0
    assert edge_connectivity(empty_graph(1)).witness is None
    r = edge_connectivity(complete_graph(5))
    assert r.value == 4 and len(r.witness) == 4


def test_disconnected_graphs():
    g = disjoint_union(cycle_graph(3), cycle_graph(3))
    assert vertex_connectivity(g).value == 0
    assert vertex_connectivity(g).witness == ()
    assert edge_connectivity(g).value == 0
    assert edge_connectivity(g).witness == ()


@pytest.mark.parametrize(
    "g,kv,ke",
    [
        (cycle_graph(6), 2, 2),
        (path_graph(4), 1, 1),
        (complete_bipartite(3, 4), 3, 3),
        (complete_bipartite(1, 5), 1, 1),
    ],
)
def test_known_connectivities(g, kv, ke):
    rv, re = vertex_connectivity(g), edge_connectivity(g)
    assert rv.value == kv and re.value == ke
    assert verify_disconnecting_set(g, rv.witness)
    assert verify_disconnecting_set(g, re.witness)
    assert len(rv.witness) == kv and len(re.witness) == ke


def test_witnesses_are_sorted_and_normalized():
    re = edge_connectivity(cycle_graph(5))
    assert all(u < v for u, v in re.witness)
    assert list(re.witness) == sorted(re.witness)
    rv = vertex_connectivity(complete_bipartite(2, 5))
    assert list(rv.witness) == sorted(rv.witness)


def test_results_are_deterministic():
    g = random_graph(np.random.default_rng(3), 12, 0.3)
    first_v = vertex_connectivity(g)
    first_e = edge_connectivity(g)
    for _ in range(3):
        assert vertex_connectivity(g) == first_v
        assert edge_connectivity(g) == first_e


# -- local path systems -----------------------------------------------------------


def test_vertex_disjoint_paths_on_k4():
    ps = max_vertex_disjoint_paths(complete_graph(4), 0, 3)
    assert ps.count == 3 and ps.mode == "vertex"
    ps.validate(complete_graph(4))


def test_vertex_disjoint_paths_on_cycle():
    ps = max_vertex_disjoint_paths(cycle_graph(6), 0, 3)
    assert ps.count == 2
    ps.validate(cycle_graph(6))


def test_edge_disjoint_paths():
    ps = max_edge_disjoint_paths(cycle_graph(4), 0, 2)
    assert ps.count == 2 and ps.mode == "edge"
    ps.validate(cycle_graph(4))
    ps = max_edge_disjoint_paths(complete_graph(5), 1, 4)
    assert ps.count == 4
    ps.validate(complete_graph(5))


def test_path_endpoints_validated():
    with pytest.raises(ValueError):
        max_vertex_disjoint_paths(cycle_graph(4), 0, 0)
    with pytest.raises(ValueError):
        max_edge_disjoint_paths(cycle_graph(4), 0, 9)


def test_disconnected_endpoints_give_empty_system():
    g = disjoint_union(cycle_graph(3), cycle_graph(3))
    ps = max_vertex_disjoint_paths(g, 0, 4)
    assert ps.count == 0
    ps.validate(g)


def test_path_system_validate_catches_faults():
    g = cycle_graph(4)
    with pytest.raises(ValueError, match="from s to t"):
        PathSystem(0, 2, "vertex", ((0, 1),)).validate(g)
    with pytest.raises(ValueError, match="non-edge"):
        PathSystem(0, 2, "vertex", ((0, 2),)).validate(g)
    with pytest.raises(ValueError, match="interior"):
        PathSystem(0, 2, "vertex", ((0, 1, 2), (0, 1, 2))).validate(g)
    with pytest.raises(ValueError, match="reuses edge"):
        PathSystem(0, 2, "edge", ((0, 1, 2), (0, 1, 2))).validate(g)
    with pytest.raises(ValueError, match="repeats"):
        PathSystem(0, 2, "vertex", ((0, 1, 0, 1, 2),)).validate(g)
    with pytest.raises(ValueError, match="mode"):
        PathSystem(0, 2, "diagonal", ()).validate(g)


@settings(max_examples=40, deadline=None)
@given(
    n=st.integers(min_value=2, max_value=11),
    seed=st.integers(min_value=0, max_value=2**32 - 1),
    p=st.floats(min_value=0.2, max_value=0.8),
)
def test_path_systems_validate_on_random_graphs(n, seed, p):
    g = random_graph(np.random.default_rng(seed), n, p)
    s, t = 0, n - 1
    vps = max_vertex_disjoint_paths(g, s, t)
    eps = max_edge_disjoint_paths(g, s, t)
    vps.validate(g)
    eps.validate(g)
    # vertex-disjoint systems are edge-disjoint, so the counts nest
    assert vps.count <= eps.count


# -- brute-force oracle ------------------------------------------------------------


def test_brute_force_known_values():
    assert brute_force_connectivity(cycle_graph(6), "vertex", 6) == 2
    assert brute_force_connectivity(cycle_graph(6), "edge", 6) == 2
    assert brute_force_connectivity(path_graph(4), "vertex", 4) == 1
    g = disjoint_union(cycle_graph(3), cycle_graph(3))
    assert brute_force_connectivity(g, "vertex", 2) == 0
    # complete graphs admit no disconnecting vertex set at all
    assert brute_force_connectivity(complete_graph(4), "vertex", 4) is None
    # a budget below the answer comes back empty-handed
    assert brute_force_connectivity(cycle_graph(6), "vertex", 1) is None


def test_brute_force_argument_validation():
    with pytest.raises(ValueError, match="mode"):
        brute_force_connectivity(cycle_graph(4), "face", 2)
    with pytest.raises(ValueError, match="nonnegative"):
        brute_force_connectivity(cycle_graph(4), "vertex", -1)


def test_brute_force_refuses_oversized_scans():
    g = complete_graph(8)
    with pytest.raises(ValueError, match="ceiling"):
        brute_force_connectivity(g, "edge", 28, ceiling=1000)
    # a generous ceiling admits the same call
    assert brute_force_connectivity(g, "edge", 7, ceiling=2_000_000) == 7


@settings(max_examples=60, deadline=None)
@given(
    n=st.integers(min_value=1, max_value=8),
    seed=st.integers(min_value=0, max_value=2**32 - 1),
    p=st.floats(min_value=0.1, max_value=0.9),
)
def test_flow_agrees_with_brute_force(n, seed, p):
    g = random_graph(np.random.default_rng(seed), n, p)
    kv = vertex_connectivity(g).value
    ke = edge_connectivity(g).value
    bv = brute_force_connectivity(g, "vertex", n)
    be = brute_force_connectivity(g, "edge", max(n, 1))
    complete = g.num_edges == n * (n - 1) // 2
    if complete:
        assert bv is None and kv == max(n - 1, 0)
    else:
        assert bv == kv
    if n <= 1:
        assert be is None and ke == 0
    else:
        assert be == ke if ke > 0 else be == 0


# -- witness verification -----------------------------------------------------------


def test_verify_disconnecting_set():
    g = cycle_graph(6)
    assert verify_disconnecting_set(g, (0, 3))
    assert not verify_disconnecting_set(g, (0, 1))
    assert verify_disconnecting_set(g, ((0, 1), (2, 3)))
    assert not verify_disconnecting_set(g, ((0, 1),))
    with pytest.raises(ValueError):
        verify_disconnecting_set(g, (99,))
    with pytest.raises(ValueError):
        verify_disconnecting_set(g, ((0, 2),))  # not an edge
