import numpy as np
import pytest

from epgraph.catalog import build_spec
from epgraph.epg import (
    Graph,
    are_adjacent,
    commuting_graph,
    complete_graph,
    enhanced_power_graph,
    from_json,
    graph_from_edges,
    pairwise_cyclic_graph,
    power_graph,
    proper_enhanced_power_graph,
    to_dot,
    to_json,
)
from epgraph.errors import SameVertex, TrivialGroup
from epgraph.invariants import diameter, is_complete, is_connected

from oracles import epg_by_definition


class TestGraphType:
    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError):
            Graph(np.array([[False, True], [False, False]]))

    def test_rejects_loops(self):
        with pytest.raises(ValueError):
            Graph(np.array([[True]]))

    def test_read_only(self):
        g = complete_graph(3)
        with pytest.raises(ValueError):
            g.adjacency[0, 1] = False


class TestConstruction:
    def test_cyclic_is_complete(self):
        g = enhanced_power_graph(build_spec("Z(6)"))
        assert g.same_edges(complete_graph(6))

    def test_trivial(self):
        g = enhanced_power_graph(build_spec("Z(1)"))
        assert g.vertex_count == 1 and g.edge_count() == 0

    def test_s3(self):
        G = build_spec("S(3)")
        g = enhanced_power_graph(G)
        assert g.edge_count() == 6
        assert g.degrees()[0] == 5
        threes = [x for x in range(6) if G.element_orders[x] == 3]
        assert g.adjacency[threes[0], threes[1]]

    def test_proper_cyclic(self):
        assert proper_enhanced_power_graph(build_spec("Z(6)")).same_edges(complete_graph(5))

    def test_proper_klein_edgeless(self):
        g = proper_enhanced_power_graph(build_spec("E(2,2)"))
        assert g.vertex_count == 3 and g.edge_count() == 0

    def test_proper_q8(self):
        g = proper_enhanced_power_graph(build_spec("Q(8)"))
        assert g.vertex_count == 7
        deg = dict(zip(g.vertex_labels, g.degrees().tolist()))
        assert deg.pop("2") == 6  # -1 is the element a^2
        assert set(deg.values()) == {2}

    def test_proper_trivial(self):
        with pytest.raises(TrivialGroup):
            proper_enhanced_power_graph(build_spec("Z(1)"))


class TestAdjacency:
    def test_identity(self):
        G = build_spec("S(3)")
        assert all(are_adjacent(G, 0, x) for x in range(1, 6))

    def test_q8_i_j(self):
        # a (= i) is index 1, b (= j) is index 4
        assert not are_adjacent(build_spec("Q(8)"), 1, 4)

    def test_z2_z4(self):
        G = build_spec("Z(2)xZ(4)")
        assert not are_adjacent(G, 4, 1)  # (1,0) and (0,1)
        assert are_adjacent(G, 5, 2)  # (1,1) and (0,2)

    def test_same_vertex(self):
        with pytest.raises(SameVertex):
            are_adjacent(build_spec("Z(3)"), 1, 1)


class TestOracles:
    def test_clique_union_matches_definition(self, catalog):
        for G in catalog:
            if G.order <= 48:
                assert np.array_equal(enhanced_power_graph(G).adjacency, epg_by_definition(G.table)), G.label

    def test_clique_union_matches_pairwise_generation(self, catalog):
        for G in catalog:
            if G.order <= 48:
                assert enhanced_power_graph(G).same_edges(pairwise_cyclic_graph(G)), G.label

    def test_sandwich(self, catalog):
        for G in catalog:
            pg = power_graph(G).adjacency
            ep = enhanced_power_graph(G).adjacency
            cg = commuting_graph(G).adjacency
            assert not np.any(pg & ~ep) and not np.any(ep & ~cg), G.label

    def test_complete_iff_cyclic(self, catalog):
        for G in catalog:
            assert is_complete(enhanced_power_graph(G)) == G.is_cyclic

    def test_diameter_at_most_two(self, catalog):
        for G in catalog:
            g = enhanced_power_graph(G)
            assert is_connected(g) and diameter(g) <= 2


class TestExport:
    def test_json_round_trip(self, catalog):
        for G in catalog[:80]:
            g = enhanced_power_graph(G)
            assert from_json(to_json(g)).same_edges(g)

    def test_json_edges_sorted(self):
        import json

        data = json.loads(to_json(enhanced_power_graph(build_spec("D(12)"))))
        assert data["n"] == 12
        assert data["edges"] == sorted(data["edges"])
        assert all(i < j for i, j in data["edges"])

    def test_dot(self):
        text = to_dot(enhanced_power_graph(build_spec("Z(4)")), build_spec("Z(4)"), "z4")
        assert text.startswith('graph "z4" {')
        assert text.count(" -- ") == 6
        assert '1 [label="1 (o=4)"]' in text

    def test_graph_from_edges(self):
        g = graph_from_edges(3, [(0, 1), (1, 2)])
        assert g.edges() == [(0, 1), (1, 2)]
