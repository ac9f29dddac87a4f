"""Acceptance gate: one test per numbered criterion.

Each test registers with the conftest bookkeeping so the terminal
summary carries one [PASS]/[FAIL] line per criterion.  Tolerances are
exact (integer/rational equality) throughout; the stated runtime
budgets are asserted, not aspirational.
"""

import math
import time
from fractions import Fraction
from itertools import combinations

import numpy as np

from specpairs import (
    base_circulant_G,
    brute_force_connectivity,
    char_poly_adjacency,
    char_poly_laplacian,
    components,
    edge_connectivity,
    edge_pair,
    edge_pair_variant4,
    line_graph_family,
    max_edge_disjoint_paths,
    max_vertex_disjoint_paths,
    paper_witnesses,
    second_smallest_laplacian_eigenvalue,
    spectrum_symmetric,
    switch,
    two_coloring,
    verify_disconnecting_set,
    vertex_connectivity,
    vertex_pair,
    zero_root_multiplicity,
)
from tests.conftest import criterion, criterion_passed, random_graph

FIEDLER_TOL = Fraction(1, 1 << 20)


def _cospectral_both(fi):
    return (
        char_poly_adjacency(fi.gamma) == char_poly_adjacency(fi.gamma_prime)
        and char_poly_laplacian(fi.gamma) == char_poly_laplacian(fi.gamma_prime)
    )


def test_criterion_1_vertex_connectivity_family():
    criterion(1)
    for k in range(2, 6):
        t0 = time.perf_counter()
        fi = vertex_pair(k)
        assert fi.gamma.n == 6 * k and fi.gamma_prime.n == 6 * k
        for g in (fi.gamma, fi.gamma_prime):
            assert g.is_regular() and g.degree(0) == 2 * k
        assert _cospectral_both(fi)
        assert vertex_connectivity(fi.gamma).value == 2 * k
        assert vertex_connectivity(fi.gamma_prime).value == k + 1
        assert time.perf_counter() - t0 < 10.0
    criterion_passed(1)


def test_criterion_2_edge_connectivity_family():
    criterion(2)
    for k in (6, 8):
        t0 = time.perf_counter()
        fi = edge_pair(k)
        assert fi.gamma.n == 10 * k - 8 and fi.gamma_prime.n == 10 * k - 8
        for g in (fi.gamma, fi.gamma_prime):
            assert g.is_regular() and g.degree(0) == 3 * k - 5
        assert _cospectral_both(fi)
        assert edge_connectivity(fi.gamma).value == 3 * k - 5
        assert edge_connectivity(fi.gamma_prime).value == 3 * k - 6
        assert vertex_connectivity(fi.gamma).value == 3
        assert vertex_connectivity(fi.gamma_prime).value == 3
        assert time.perf_counter() - t0 < 60.0
    criterion_passed(2)


def test_criterion_3_order_36_variant():
    criterion(3)
    t0 = time.perf_counter()
    fi = edge_pair_variant4()
    assert fi.gamma.n == 36 and fi.gamma_prime.n == 36
    for g in (fi.gamma, fi.gamma_prime):
        assert g.is_regular() and g.degree(0) == 7
    assert _cospectral_both(fi)
    assert edge_connectivity(fi.gamma).value == 7
    assert edge_connectivity(fi.gamma_prime).value == 6
    assert time.perf_counter() - t0 < 30.0
    criterion_passed(3)


def test_criterion_4_line_graph_pairs():
    criterion(4)
    t0 = time.perf_counter()
    results = {}
    for tag, base in (("edge6", edge_pair(6)), ("variant4", edge_pair_variant4())):
        lf = line_graph_family(base)
        assert lf.gamma.is_regular() and lf.gamma_prime.is_regular()
        assert char_poly_adjacency(lf.gamma) == char_poly_adjacency(lf.gamma_prime)
        results[tag] = (
            vertex_connectivity(lf.gamma).value,
            vertex_connectivity(lf.gamma_prime).value,
        )
    assert time.perf_counter() - t0 < 600.0
    assert results["variant4"] == (7, 6)
    assert results["edge6"][1] == 12
    assert results["edge6"][0] == 13
    criterion_passed(4)


def test_criterion_5_advertised_disconnecting_sets():
    criterion(5)
    for k in range(2, 6):
        fi = vertex_pair(k)
        cut = paper_witnesses(fi)["vertex_cut_gamma_prime"]
        assert cut == tuple(range(k + 1))
        assert verify_disconnecting_set(fi.gamma_prime, cut)
    for fi in (edge_pair(6), edge_pair_variant4()):
        w = paper_witnesses(fi)
        assert verify_disconnecting_set(fi.gamma, w["vertex_cut"])
        assert verify_disconnecting_set(fi.gamma_prime, w["vertex_cut"])
        assert verify_disconnecting_set(fi.gamma_prime, w["edge_cut_gamma_prime"])
    fi = edge_pair(6)
    prime_cut = paper_witnesses(fi)["edge_cut_gamma_prime"]
    assert len(prime_cut) == (2 * 6 - 5) + (6 - 1)  # 12 edges
    criterion_passed(5)


def test_criterion_6_oracle_equivalence():
    criterion(6)
    t0 = time.perf_counter()
    rng = np.random.default_rng(20260816)
    scan_cap = 120_000
    sampled = 0
    validated_path_systems = 0
    while sampled < 500:
        n = int(rng.integers(2, 11))
        p = float(rng.uniform(0.15, 0.6))
        g = random_graph(rng, n, p)
        connected = components(g).count == 1
        delta = g.min_degree()
        if connected:
            m = g.num_edges
            cost = sum(math.comb(m, j) for j in range(1, delta + 1))
            if cost > scan_cap:
                continue
        sampled += 1
        kv = vertex_connectivity(g)
        ke = edge_connectivity(g)
        complete = g.num_edges == n * (n - 1) // 2
        bv = brute_force_connectivity(g, "vertex", n)
        if complete:
            assert bv is None and kv.value == n - 1
        else:
            assert bv == kv.value
        be = brute_force_connectivity(g, "edge", max(delta, 1) if connected else 1)
        assert be == ke.value
        if kv.witness is not None:
            assert verify_disconnecting_set(g, kv.witness)
        if ke.witness is not None:
            assert verify_disconnecting_set(g, ke.witness)
        if validated_path_systems < 120:
            vps = max_vertex_disjoint_paths(g, 0, n - 1)
            eps = max_edge_disjoint_paths(g, 0, n - 1)
            vps.validate(g)
            eps.validate(g)
            assert vps.count <= eps.count
            validated_path_systems += 1
    assert sampled >= 500
    assert time.perf_counter() - t0 < 300.0
    criterion_passed(6)


def test_criterion_7_property_suites():
    criterion(7)
    members = (
        [vertex_pair(k) for k in range(2, 6)]
        + [edge_pair(6), edge_pair(8)]
        + [edge_pair_variant4()]
    )
    # switch involution and exact cospectrality on every generated plan
    for fi in members:
        assert switch(fi.gamma, fi.plan) == fi.gamma_prime
        assert switch(fi.gamma_prime, fi.plan) == fi.gamma
        assert _cospectral_both(fi)
    # Whitney chain on every generated member ...
    graphs = [g for fi in members for g in (fi.gamma, fi.gamma_prime)]
    for g in graphs:
        kv = vertex_connectivity(g).value
        ke = edge_connectivity(g).value
        assert kv <= ke <= g.min_degree()
    # ... and on 100 seeded random graphs
    rng = np.random.default_rng(7151)
    randoms = [
        random_graph(rng, int(rng.integers(2, 13)), float(rng.uniform(0.1, 0.9)))
        for _ in range(100)
    ]
    for g in randoms:
        kv = vertex_connectivity(g).value
        ke = edge_connectivity(g).value
        assert kv <= ke <= g.min_degree()
    # Laplacian zero-root multiplicity counts components (100 seeded)
    rng = np.random.default_rng(90125)
    for _ in range(100):
        g = random_graph(rng, int(rng.integers(1, 13)), float(rng.uniform(0.1, 0.7)))
        assert zero_root_multiplicity(char_poly_laplacian(g)) == components(g).count
    # spectrum symmetry is exactly bipartite 2-colorability (100 seeded)
    rng = np.random.default_rng(41)
    for _ in range(100):
        g = random_graph(rng, int(rng.integers(1, 13)), float(rng.uniform(0.05, 0.6)))
        assert spectrum_symmetric(char_poly_adjacency(g)) == (
            two_coloring(g) is not None
        )
    # Fiedler upper bound on the generated connected, non-complete members
    for g in graphs:
        assert components(g).count == 1
        assert g.num_edges < g.n * (g.n - 1) // 2
        iv = second_smallest_laplacian_eigenvalue(g)
        assert iv.hi <= vertex_connectivity(g).value + FIEDLER_TOL
    criterion_passed(7)


def test_criterion_8_base_circulant_claims():
    criterion(8)
    t0 = time.perf_counter()
    for k in range(2, 9):
        g, ranges, _ = base_circulant_G(k)
        assert g.is_regular() and g.degree(0) == k
        a = g.adj.astype(int)
        assert not ((a @ a) * a).any()  # triangle-free
        assert vertex_connectivity(g).value == k
        # the V2-V3 matching: member i of V2 pairs with member i of V3
        for i in range(1, k):
            assert g.has_edge(k + i, 2 * k - 1 + i)
        v2 = range(*ranges["V2"])
        v3 = range(*ranges["V3"])
        assert len(v2) == k - 1 and len(v3) == k - 1
    assert time.perf_counter() - t0 < 10.0
    criterion_passed(8)
