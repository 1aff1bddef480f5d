from fractions import Fraction

import networkx as nx
import numpy as np
import pytest

from epgraph.catalog import build_spec
from epgraph.epg import Graph, complete_graph, enhanced_power_graph, graph_from_edges, proper_enhanced_power_graph
from epgraph.errors import Disconnected, EmptyGraph, SizeMismatch
from epgraph.invariants import (
    diameter,
    edge_connectivity,
    invariant_report,
    is_regular,
    min_degree,
    strong_product,
    strong_regularity,
    verify_graph_map,
    vertex_connectivity,
    wiener_index,
)

from oracles import all_minimum_cuts, bfs_wiener, brute_vertex_connectivity, to_nx

EMPTY3 = Graph(np.zeros((3, 3), dtype=bool))
C4 = graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
P3 = graph_from_edges(3, [(0, 1), (1, 2)])


class TestDegrees:
    def test_min_degree(self):
        assert min_degree(complete_graph(6)) == 5
        assert min_degree(enhanced_power_graph(build_spec("S(3)"))) == 1
        assert min_degree(enhanced_power_graph(build_spec("Q(8)"))) == 3

    def test_regular(self):
        assert is_regular(complete_graph(5)) == 4
        assert is_regular(EMPTY3) == 0
        assert is_regular(proper_enhanced_power_graph(build_spec("S(3)"))) is None

    def test_empty_graph(self):
        with pytest.raises(EmptyGraph):
            min_degree(Graph(np.zeros((0, 0), dtype=bool)))


class TestStrongRegularity:
    def test_complete(self):
        r = strong_regularity(complete_graph(5))
        assert r.is_srg and (r.params.n, r.params.k, r.params.lambda_, r.params.mu) == (5, 4, 3, None)

    def test_four_cycle(self):
        r = strong_regularity(C4)
        assert (r.params.n, r.params.k, r.params.lambda_, r.params.mu) == (4, 2, 0, 2)

    def test_irregular(self):
        assert not strong_regularity(P3).is_srg

    def test_regular_but_not_strongly(self):
        # the 6-cycle: non-adjacent pairs have 0 or 1 common neighbours
        c6 = graph_from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
        assert not strong_regularity(c6).is_srg

    def test_e32(self):
        r = strong_regularity(proper_enhanced_power_graph(build_spec("E(3,2)")))
        assert (r.params.n, r.params.k, r.params.lambda_, r.params.mu) == (8, 1, 0, 0)


class TestConnectivity:
    def test_examples(self, backend):
        assert vertex_connectivity(complete_graph(6), backend).kappa == 5
        s3 = vertex_connectivity(enhanced_power_graph(build_spec("S(3)")), backend)
        assert s3.kappa == 1 and s3.witness_cut == frozenset({0})
        q8 = vertex_connectivity(enhanced_power_graph(build_spec("Q(8)")), backend)
        assert q8.kappa == 2 and q8.witness_cut == frozenset({0, 2})

    def test_q8_cut_is_unique(self):
        g = enhanced_power_graph(build_spec("Q(8)"))
        assert brute_vertex_connectivity(g.adjacency) == 2
        assert all_minimum_cuts(g.adjacency, 2) == [frozenset({0, 2})]

    def test_edge_examples(self, backend):
        assert edge_connectivity(complete_graph(4), backend) == 3
        assert edge_connectivity(enhanced_power_graph(build_spec("S(3)")), backend) == 1
        assert edge_connectivity(P3, backend) == 1
        assert edge_connectivity(EMPTY3, backend) == 0

    def test_edge_needs_two_vertices(self):
        with pytest.raises(EmptyGraph):
            edge_connectivity(complete_graph(1))

    def test_small_epgs_against_brute_force(self, catalog):
        for G in catalog:
            if G.order <= 12:
                g = enhanced_power_graph(G)
                assert vertex_connectivity(g).kappa == brute_vertex_connectivity(g.adjacency), G.label

    def test_chain_on_catalog(self, catalog):
        for G in catalog:
            if G.order < 2:
                continue
            g = enhanced_power_graph(G)
            k, ke, d = vertex_connectivity(g).kappa, edge_connectivity(g), min_degree(g)
            assert k <= ke == d, G.label

    def test_catalog_against_networkx(self, catalog):
        for G in catalog:
            if 2 <= G.order <= 40 and not G.is_cyclic:
                h = to_nx(enhanced_power_graph(G).adjacency)
                assert vertex_connectivity(enhanced_power_graph(G)).kappa == nx.node_connectivity(h), G.label


class TestWiener:
    def test_examples(self):
        assert wiener_index(complete_graph(6)) == 15
        assert wiener_index(enhanced_power_graph(build_spec("E(2,2)"))) == 9
        assert wiener_index(enhanced_power_graph(build_spec("Q(8)"))) == 40

    def test_disconnected(self):
        with pytest.raises(Disconnected):
            wiener_index(EMPTY3)
        assert diameter(EMPTY3) is None

    def test_catalog_against_bfs_and_edge_counts(self, catalog):
        for G in catalog:
            g = enhanced_power_graph(G)
            n = g.vertex_count
            w = wiener_index(g)
            assert w == bfs_wiener(g.adjacency), G.label
            s1 = 2 * g.edge_count()
            s2 = n * (n - 1) - s1
            assert w == Fraction(s1 + 2 * s2, 2)


class TestStrongProduct:
    def test_completes(self):
        assert strong_product([complete_graph(2), complete_graph(3)]).same_edges(complete_graph(6))

    def test_trivial_factor(self):
        g = enhanced_power_graph(build_spec("Q(8)"))
        assert strong_product([g, complete_graph(1)]).same_edges(g)

    def test_disjoint_edges(self):
        g = strong_product([EMPTY3, complete_graph(2)])
        assert g.edges() == [(0, 1), (2, 3), (4, 5)]

    def test_against_networkx(self):
        a, b = to_nx(C4.adjacency), to_nx(P3.adjacency)
        ours = strong_product([C4, P3])
        theirs = nx.strong_product(a, b)
        idx = {(i, j): 3 * i + j for i in range(4) for j in range(3)}
        assert {frozenset((idx[u], idx[v])) for u, v in theirs.edges()} == {frozenset(e) for e in ours.edges()}

    def test_associative(self):
        a, b, c = C4, P3, EMPTY3
        left = strong_product([strong_product([a, b]), c])
        right = strong_product([a, strong_product([b, c])])
        assert verify_graph_map(left, right, np.arange(left.vertex_count))
        assert left.same_edges(strong_product([a, b, c]))

    def test_empty_list(self):
        with pytest.raises(EmptyGraph):
            strong_product([])


class TestGraphMap:
    def test_identity(self):
        assert verify_graph_map(C4, C4, range(4))

    def test_degree_breaking_swap(self):
        assert not verify_graph_map(P3, P3, [1, 0, 2])

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            verify_graph_map(C4, P3, range(4))
        with pytest.raises(SizeMismatch):
            verify_graph_map(C4, C4, [0, 0, 1, 2])


def test_report():
    r = invariant_report(enhanced_power_graph(build_spec("Q(8)")))
    assert r == {"n": 8, "min_degree": 3, "regular": None, "srg": None, "kappa": 2,
                 "kappa_edge": 3, "wiener": 40, "diameter": 2}
