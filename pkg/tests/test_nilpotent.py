import itertools

import numpy as np
import pytest

from epgraph.catalog import build_spec
from epgraph.epg import complete_graph, enhanced_power_graph
from epgraph.errors import NotNilpotent
from epgraph.groups import cyclic_subgroup
from epgraph.invariants import is_vertex_cut, min_degree, strong_product, verify_graph_map, vertex_connectivity
from epgraph.nilpotent import (
    component_subgroup_closure,
    epg_strong_product_decomposition,
    maximal_cyclic_products,
    min_degree_from_factors,
    predicted_kappa,
    subset_product,
    sylow_decomposition,
)

from oracles import all_minimum_cuts, cyclic_sets

EXTRA_ORDER_72 = ["Q(8)xZ(9)", "E(2,3)xZ(9)", "Z(2)xZ(4)xE(3,2)", "D(8)xZ(9)"]


class TestDecomposition:
    def test_z6(self):
        dec = sylow_decomposition(build_spec("Z(6)"))
        assert [(f.prime, f.exponent) for f in dec.factors] == [(2, 1), (3, 1)]
        assert set(dec.factors[0].members) == {0, 3}
        assert set(dec.factors[1].members) == {0, 2, 4}
        assert dec.component_map(1) == (3, 4)  # g -> (g^3, g^4)

    def test_q8(self):
        dec = sylow_decomposition(build_spec("Q(8)"))
        assert dec.r == 1 and dec.factors[0].order == 8
        assert all(dec.component_map(x) == (x,) for x in range(8))

    def test_q8_z3(self):
        dec = sylow_decomposition(build_spec("Q(8)xZ(3)"))
        assert [f.order for f in dec.factors] == [8, 3]
        assert dec.factors[0].group.order == 8 and not dec.factors[0].group.is_cyclic

    def test_s3(self):
        with pytest.raises(NotNilpotent):
            sylow_decomposition(build_spec("S(3)"))

    def test_components_multiply_back_and_commute(self, nilpotent_catalog):
        for G in nilpotent_catalog:
            dec = sylow_decomposition(G)
            for x in range(G.order):
                comps = dec.component_map(x)
                prod = 0
                for c in comps:
                    prod = G.mul(prod, c)
                assert prod == x
                for a, b in itertools.combinations(comps, 2):
                    assert G.mul(a, b) == G.mul(b, a)
                for f, c in zip(dec.factors, comps):
                    assert c in f.subgroup

    def test_json(self):
        import json

        data = json.loads(sylow_decomposition(build_spec("Z(2)xZ(2)xZ(3)")).to_json())
        assert data["primes"] == [2, 3] and data["factor_orders"] == [4, 3]
        assert len(data["components"]) == 12


class TestComponentClosure:
    def test_identity(self):
        dec = sylow_decomposition(build_spec("Z(6)"))
        assert [p.order for p in component_subgroup_closure(0, dec)] == [1, 1]

    def test_generator(self):
        dec = sylow_decomposition(build_spec("Z(6)"))
        assert [p.order for p in component_subgroup_closure(1, dec)] == [2, 3]

    def test_product_element(self):
        G = build_spec("Z(2)xZ(3)")
        dec = sylow_decomposition(G)
        parts = component_subgroup_closure(4, dec)  # (1, 1)
        assert [p.order for p in parts] == [2, 3]
        assert bin(subset_product(G, [p.mask for p in parts])).count("1") == 6

    def test_catalog(self, nilpotent_catalog):
        for G in nilpotent_catalog:
            dec = sylow_decomposition(G)
            for x in range(G.order):
                component_subgroup_closure(x, dec)


class TestStrongProduct:
    def test_z6(self):
        product, psi = epg_strong_product_decomposition(build_spec("Z(6)"))
        assert product.same_edges(complete_graph(6))
        assert sorted(psi) == list(range(6))

    @pytest.mark.parametrize("spec", ["Z(2)xZ(2)xZ(3)", "Q(8)xZ(3)", "Z(2)xZ(2)xZ(15)"])
    def test_map(self, spec):
        G = build_spec(spec)
        product, psi = epg_strong_product_decomposition(G)
        assert product.vertex_count == G.order
        assert verify_graph_map(enhanced_power_graph(G), product, psi)

    def test_explicit_factors(self):
        G = build_spec("Z(2)xZ(2)xZ(3)")
        product, _ = epg_strong_product_decomposition(G)
        expected = strong_product([enhanced_power_graph(build_spec("E(2,2)")), complete_graph(3)])
        assert product.same_edges(expected)

    def test_wrong_map_detected(self):
        G = build_spec("Q(8)xZ(3)")
        product, psi = epg_strong_product_decomposition(G)
        bad = psi.copy()
        # swap the image of an element of order 4 with one of order 2
        a, b = 3, 6
        bad[a], bad[b] = bad[b], bad[a]
        assert not verify_graph_map(enhanced_power_graph(G), product, bad)


def _adjacency_by_components_oracle(G):
    """x ~ y iff every differing Sylow component pair lies in a common cyclic subgroup."""
    dec = sylow_decomposition(G)
    cyc = cyclic_sets(G.table)
    n = G.order
    adj = np.zeros((n, n), dtype=bool)
    for x in range(n):
        for y in range(x + 1, n):
            ok = True
            for a, b in zip(dec.component_map(x), dec.component_map(y)):
                if a != b and not any(a in c and b in c for c in cyc):
                    ok = False
                    break
            adj[x, y] = adj[y, x] = ok
    return adj


class TestStructure:
    def test_adjacency_by_components(self, nilpotent_catalog):
        groups = [G for G in nilpotent_catalog if G.order <= 40] + [build_spec(s) for s in EXTRA_ORDER_72]
        for G in groups:
            assert np.array_equal(_adjacency_by_components_oracle(G), enhanced_power_graph(G).adjacency), G.label

    def test_maximal_cyclic_products(self, nilpotent_catalog):
        for G in nilpotent_catalog:
            direct = {M.mask for M in G.maximal_cyclic}
            assert maximal_cyclic_products(sylow_decomposition(G)) == direct, G.label

    def test_cyclic_sylow_in_every_maximal(self, nilpotent_catalog):
        for G in nilpotent_catalog:
            for f in sylow_decomposition(G).factors:
                if f.group.is_cyclic:
                    assert all(f.subgroup.issubset(M) for M in G.maximal_cyclic)

    def test_min_degree_from_factors(self, nilpotent_catalog):
        for G in nilpotent_catalog:
            if G.order > 1:
                assert min_degree(enhanced_power_graph(G)) == min_degree_from_factors(sylow_decomposition(G))


class TestPredictedKappa:
    def test_klein_times_z3(self):
        G = build_spec("Z(2)xZ(2)xZ(3)")
        pred = predicted_kappa(G)
        assert pred.kappa == 3 and not pred.quaternion
        dec = sylow_decomposition(G)
        assert pred.cut == frozenset(dec.factors[1].members)
        assert vertex_connectivity(enhanced_power_graph(G)).kappa == 3

    def test_quaternion_times_z3(self):
        G = build_spec("Q(8)xZ(3)")
        pred = predicted_kappa(G)
        assert pred.kappa == 6 and pred.quaternion and len(pred.cut) == 6
        g = enhanced_power_graph(G)
        assert vertex_connectivity(g).kappa == 6 and is_vertex_cut(g, pred.cut)

    @pytest.mark.parametrize("spec", ["Z(4)xZ(9)", "Q(8)", "E(2,2)", "E(2,2)xE(3,2)"])
    def test_outside_hypothesis(self, spec):
        assert predicted_kappa(build_spec(spec)) is None

    def test_unique_cut_small(self):
        for spec in ["Z(2)xZ(2)xZ(3)", "Z(2)xZ(2)xZ(5)"]:
            G = build_spec(spec)
            pred = predicted_kappa(G)
            assert all_minimum_cuts(enhanced_power_graph(G).adjacency, pred.kappa) == [pred.cut]

    def test_catalog(self, nilpotent_catalog):
        seen = 0
        for G in nilpotent_catalog:
            pred = predicted_kappa(G)
            if pred is None:
                continue
            seen += 1
            g = enhanced_power_graph(G)
            assert vertex_connectivity(g).kappa == pred.kappa == len(pred.cut), G.label
            assert is_vertex_cut(g, pred.cut)
        assert seen >= 20

    def test_single_prime_noncyclic_has_kappa_one(self, nilpotent_catalog):
        # p-groups other than cyclic and generalized quaternion: the identity alone is a cut
        from epgraph.groups import is_generalized_quaternion, is_p_group

        for G in nilpotent_catalog:
            if G.order == 1 or not is_p_group(G) or G.is_cyclic:
                continue
            if G.order % 2 or not is_generalized_quaternion(G):
                assert vertex_connectivity(enhanced_power_graph(G)).kappa == 1, G.label


def test_cyclic_subgroup_generators_in_component_closure():
    G = build_spec("Z(3)xQ(8)")
    dec = sylow_decomposition(G)
    for x in range(G.order):
        whole = cyclic_subgroup(G, x)
        assert subset_product(G, [cyclic_subgroup(G, int(c)).mask for c in dec.components[x]]) == whole.mask


@pytest.mark.slow
def test_quaternion_cut_unique_by_enumeration():
    G = build_spec("Q(8)xZ(3)")
    pred = predicted_kappa(G)
    assert all_minimum_cuts(enhanced_power_graph(G).adjacency, pred.kappa) == [pred.cut]
