"""Mechanical checks of the structural theorems about enhanced power graphs.

Every check returns a :class:`TheoremVerdict`. Checks whose hypothesis does
not cover the group raise :class:`~epgraph.errors.NotApplicable` (or
``NotNilpotent``); :func:`run_all` records those as ``not_applicable``.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence

import numpy as np

from .epg import (
    Graph,
    commuting_graph,
    enhanced_power_graph,
    power_graph,
    proper_enhanced_power_graph,
)
from .errors import NotApplicable, NotNilpotent
from .groups import (
    FiniteGroup,
    Subgroup,
    exponent,
    is_nilpotent,
    is_p_group,
    prime_factorization,
)
from .invariants import (
    diameter,
    edge_connectivity,
    fraction_json,
    is_complete,
    is_regular,
    is_vertex_cut,
    min_degree,
    strong_regularity,
    verify_graph_map,
    vertex_connectivity,
    wiener_index,
)
from .nilpotent import (
    epg_strong_product_decomposition,
    maximal_cyclic_products,
    min_degree_from_factors,
    predicted_kappa,
    sylow_decomposition,
)


class Status(str, enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    NOT_APPLICABLE = "not_applicable"


class TheoremId(str, enum.Enum):
    COMPLETE_IFF_CYCLIC = "complete_iff_cyclic"
    GRAPH_SANDWICH = "power_epg_commuting_sandwich"
    MIN_DEGREE = "min_degree"
    CONNECTIVITY_CHAIN = "connectivity_chain"
    CLOSURE_CUT_SET = "closure_cut_set"
    DELTA_KAPPA = "delta_kappa"
    REGULARITY = "regularity_classification"
    REGULAR_IFF_SRG = "regular_iff_strongly_regular"
    PGROUP_EXPONENT = "pgroup_exponent"
    ABELIAN_REGULAR = "abelian_regular"
    CONJECTURE = "conjecture"
    NILPOTENCY_CRITERIA = "nilpotency_criteria"
    MAXIMAL_CYCLIC_PRODUCTS = "maximal_cyclic_products"
    CYCLIC_SYLOW_CONTAINED = "cyclic_sylow_contained"
    COMPONENT_CLOSURE = "component_closure"
    ADJACENCY_BY_COMPONENTS = "adjacency_by_components"
    STRONG_PRODUCT = "strong_product"
    INTERSECTION_DOMINATES = "intersection_dominates"
    KAPPA_FORMULA = "kappa_formula"
    FACTOR_MIN_DEGREE = "factor_min_degree"
    WIENER_FORMULA = "wiener_formula"
    WIENER_BOUNDS = "wiener_bounds"
    WIENER_LOWER_ATTAINED = "wiener_lower_attained"
    WIENER_UPPER_ATTAINED = "wiener_upper_attained"
    SYLOW_WIENER_BOUND = "sylow_wiener_bound"
    WIENER_MONOTONE = "wiener_monotone"


THEOREM_NAMES = {
    TheoremId.COMPLETE_IFF_CYCLIC: "EPG complete iff G cyclic",
    TheoremId.GRAPH_SANDWICH: "power graph <= EPG <= commuting graph",
    TheoremId.MIN_DEGREE: "min degree = smallest maximal cyclic order - 1",
    TheoremId.CONNECTIVITY_CHAIN: "kappa <= kappa' = delta, diameter <= 2",
    TheoremId.CLOSURE_CUT_SET: "closure of a maximal cyclic subgroup is a cut-set",
    TheoremId.DELTA_KAPPA: "delta = kappa classification",
    TheoremId.REGULARITY: "proper EPG regularity classification",
    TheoremId.REGULAR_IFF_SRG: "proper EPG regular iff strongly regular",
    TheoremId.PGROUP_EXPONENT: "nilpotent: proper EPG regular iff p-group of exponent p",
    TheoremId.ABELIAN_REGULAR: "abelian: proper EPG regular iff elementary abelian",
    TheoremId.CONJECTURE: "conjecture: regular proper EPG forces exponent-p p-group",
    TheoremId.NILPOTENCY_CRITERIA: "normal Sylows iff coprime-order elements commute",
    TheoremId.MAXIMAL_CYCLIC_PRODUCTS: "maximal cyclics are products over Sylow factors",
    TheoremId.CYCLIC_SYLOW_CONTAINED: "cyclic Sylow factor lies in every maximal cyclic",
    TheoremId.COMPONENT_CLOSURE: "<x> is the product of its component subgroups",
    TheoremId.ADJACENCY_BY_COMPONENTS: "adjacency decided componentwise",
    TheoremId.STRONG_PRODUCT: "EPG is the strong product of Sylow EPGs",
    TheoremId.INTERSECTION_DOMINATES: "intersection of maximal cyclics is dominating",
    TheoremId.KAPPA_FORMULA: "vertex connectivity formula, one non-cyclic Sylow",
    TheoremId.FACTOR_MIN_DEGREE: "min degree from Sylow factors",
    TheoremId.WIENER_FORMULA: "Wiener index closed form",
    TheoremId.WIENER_BOUNDS: "Wiener index bounds",
    TheoremId.WIENER_LOWER_ATTAINED: "Wiener lower bound attained iff cyclic",
    TheoremId.WIENER_UPPER_ATTAINED: "Wiener upper bound attained iff |M| = p1...pr",
    TheoremId.SYLOW_WIENER_BOUND: "p-group non-adjacency and Wiener bounds",
    TheoremId.WIENER_MONOTONE: "Wiener index monotone in non-adjacency counts",
}


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return fraction_json(value)
    if isinstance(value, (frozenset, set)):
        return sorted(_jsonable(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    return value


@dataclass(frozen=True)
class TheoremVerdict:
    theorem_id: TheoremId
    status: Status
    group: str = ""
    lhs: Any = None
    rhs: Any = None
    witness: Optional[dict] = None
    detail: str = ""

    def __post_init__(self) -> None:
        if self.status is Status.FAILS and self.witness is None:
            object.__setattr__(self, "witness", {"group": self.group})

    @property
    def name(self) -> str:
        return THEOREM_NAMES[self.theorem_id]

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem_id.value,
            "name": self.name,
            "group": self.group,
            "status": self.status.value,
            "lhs": _jsonable(self.lhs),
            "rhs": _jsonable(self.rhs),
            "witness": _jsonable(self.witness),
            "detail": self.detail,
        }


def _verdict(tid: TheoremId, G: FiniteGroup, ok: bool, lhs=None, rhs=None, witness=None, detail="") -> TheoremVerdict:
    status = Status.HOLDS if ok else Status.FAILS
    if ok:
        witness = None
    return TheoremVerdict(tid, status, G.label, lhs, rhs, witness, detail)


def _require_nontrivial(G: FiniteGroup) -> None:
    if G.order < 2:
        raise NotApplicable("needs |G| >= 2")


def _require_noncyclic(G: FiniteGroup) -> None:
    if G.is_cyclic:
        raise NotApplicable("needs a non-cyclic group")


def _require_nilpotent(G: FiniteGroup) -> None:
    if not is_nilpotent(G):
        raise NotNilpotent(f"{G.label} is not nilpotent")


def _min_maximal_cyclic_order(G: FiniteGroup) -> int:
    return min(M.order for M in G.maximal_cyclic)


def _is_exponent_p_group(G: FiniteGroup) -> bool:
    return is_p_group(G) and exponent(G) == next(iter(prime_factorization(G.order)))


# ---------------------------------------------------------------------------
# basic structure


def check_complete_iff_cyclic(G: FiniteGroup) -> TheoremVerdict:
    complete = is_complete(enhanced_power_graph(G))
    return _verdict(TheoremId.COMPLETE_IFF_CYCLIC, G, complete == G.is_cyclic, complete, G.is_cyclic)


def check_graph_sandwich(G: FiniteGroup) -> TheoremVerdict:
    pg = power_graph(G).adjacency
    ep = enhanced_power_graph(G).adjacency
    cg = commuting_graph(G).adjacency
    low = np.argwhere(pg & ~ep)
    high = np.argwhere(ep & ~cg)
    ok = len(low) == 0 and len(high) == 0
    witness = {"power_not_epg": low[:1].tolist(), "epg_not_commuting": high[:1].tolist()}
    return _verdict(TheoremId.GRAPH_SANDWICH, G, ok, witness=witness)


def check_min_degree(G: FiniteGroup) -> TheoremVerdict:
    _require_nontrivial(G)
    delta = min_degree(enhanced_power_graph(G))
    m = _min_maximal_cyclic_order(G)
    return _verdict(TheoremId.MIN_DEGREE, G, delta == m - 1, delta, m - 1)


def check_connectivity_chain(G: FiniteGroup) -> TheoremVerdict:
    _require_nontrivial(G)
    graph = enhanced_power_graph(G)
    kappa = vertex_connectivity(graph).kappa
    kappa_edge = edge_connectivity(graph)
    delta = min_degree(graph)
    diam = diameter(graph)
    ok = kappa <= kappa_edge == delta and diam is not None and diam <= 2
    lhs = {"kappa": kappa, "kappa_edge": kappa_edge, "diameter": diam}
    return _verdict(TheoremId.CONNECTIVITY_CHAIN, G, ok, lhs, {"delta": delta}, witness=lhs)


def check_nilpotency_criteria(G: FiniteGroup) -> TheoremVerdict:
    orders = G.element_orders
    coprime = np.gcd.outer(orders, orders) == 1
    commute = G.table == G.table.T
    bad = np.argwhere(coprime & ~commute)
    criterion = len(bad) == 0
    nil = is_nilpotent(G)
    return _verdict(TheoremId.NILPOTENCY_CRITERIA, G, nil == criterion, nil, criterion,
                    witness={"noncommuting_coprime_pair": bad[:1].tolist()})


# ---------------------------------------------------------------------------
# delta = kappa


def _closure_mask(G: FiniteGroup, M: Subgroup) -> int:
    out = 0
    for x, cyc in enumerate(G.cyclic_masks):
        if not M.mask >> x & 1:
            out |= cyc & M.mask
    return out


def _generators(G: FiniteGroup, M: Subgroup) -> list[int]:
    return [y for y in M.members if G.element_orders[y] == M.order]


def closure_cut_set(G: FiniteGroup, M: Subgroup) -> frozenset:
    """Union of M & <x> over x outside M; checked to be a cut avoiding M's generators."""
    if G.is_cyclic:
        raise NotApplicable("closure cut-sets need a non-cyclic group")
    if not any(M.mask == K.mask for K in G.maximal_cyclic):
        raise NotApplicable("M is not a maximal cyclic subgroup")
    closure = frozenset(Subgroup(G, _closure_mask(G, M)).members)
    if any(y in closure for y in _generators(G, M)):
        raise AssertionError("closure contains a generator of M")
    if not is_vertex_cut(enhanced_power_graph(G), closure):
        raise AssertionError("closure is not a cut-set")
    return closure


def check_closure_cut_sets(G: FiniteGroup) -> TheoremVerdict:
    _require_noncyclic(G)
    graph = enhanced_power_graph(G)
    for M in G.maximal_cyclic:
        closure = frozenset(Subgroup(G, _closure_mask(G, M)).members)
        gens = _generators(G, M)
        has_gen = any(y in closure for y in gens)
        if has_gen or not is_vertex_cut(graph, closure):
            return _verdict(TheoremId.CLOSURE_CUT_SET, G, False,
                            witness={"M": list(M.members), "closure": closure, "contains_generator": has_gen})
    return _verdict(TheoremId.CLOSURE_CUT_SET, G, True, len(G.maximal_cyclic))


def check_delta_kappa(G: FiniteGroup) -> TheoremVerdict:
    _require_nontrivial(G)
    graph = enhanced_power_graph(G)
    delta = min_degree(graph)
    conn = vertex_connectivity(graph)
    predicate = G.is_cyclic or any(M.order == 2 for M in G.maximal_cyclic)
    equal = delta == conn.kappa
    return _verdict(TheoremId.DELTA_KAPPA, G, equal == predicate,
                    {"delta": delta, "kappa": conn.kappa}, predicate,
                    witness={"delta": delta, "kappa": conn.kappa, "cut": conn.witness_cut,
                             "maximal_cyclic_orders": sorted(M.order for M in G.maximal_cyclic)})


# ---------------------------------------------------------------------------
# regularity


def _partition_condition(G: FiniteGroup) -> bool:
    """All maximal cyclic subgroups share one order and meet only in the identity."""
    ms = G.maximal_cyclic
    if len({M.order for M in ms}) > 1:
        return False
    return all(a.mask & b.mask == 1 for a, b in itertools.combinations(ms, 2))


def check_regularity_classification(G: FiniteGroup) -> TheoremVerdict:
    _require_nontrivial(G)
    regular = is_regular(proper_enhanced_power_graph(G)) is not None
    predicate = G.is_cyclic or _partition_condition(G)
    return _verdict(TheoremId.REGULARITY, G, regular == predicate, regular, predicate)


def check_regular_iff_strongly_regular(G: FiniteGroup) -> TheoremVerdict:
    _require_nontrivial(G)
    proper = proper_enhanced_power_graph(G)
    k = is_regular(proper)
    report = strong_regularity(proper)
    ok = (k is not None) == report.is_srg
    detail = ""
    rhs = None
    if ok and k is not None and not G.is_cyclic:
        m = G.maximal_cyclic[0].order
        p = report.params
        if m >= 3:
            rhs = {"k": m - 2, "lambda": m - 3, "mu": 0}
            ok = (p.k, p.lambda_, p.mu) == (m - 2, m - 3, 0)
        else:
            rhs = {"k": 0, "lambda": None, "mu": 0}
            ok = p.k == 0 and p.lambda_ is None
        detail = f"proper graph has {proper.vertex_count} vertices, m = {m}"
    lhs = {"regular": k, "srg": None if report.params is None else vars(report.params)}
    return _verdict(TheoremId.REGULAR_IFF_SRG, G, ok, lhs, rhs, witness=lhs, detail=detail)


def check_pgroup_exponent(G: FiniteGroup) -> TheoremVerdict:
    _require_noncyclic(G)
    if not is_nilpotent(G):
        raise NotApplicable("needs a nilpotent group")
    regular = is_regular(proper_enhanced_power_graph(G)) is not None
    predicate = _is_exponent_p_group(G)
    return _verdict(TheoremId.PGROUP_EXPONENT, G, regular == predicate, regular, predicate)


def check_abelian_regular(G: FiniteGroup) -> TheoremVerdict:
    _require_noncyclic(G)
    if not G.is_abelian:
        raise NotApplicable("needs an abelian group")
    regular = is_regular(proper_enhanced_power_graph(G)) is not None
    predicate = _is_exponent_p_group(G)
    return _verdict(TheoremId.ABELIAN_REGULAR, G, regular == predicate, regular, predicate)


def check_conjecture(G: FiniteGroup) -> TheoremVerdict:
    _require_noncyclic(G)
    regular = is_regular(proper_enhanced_power_graph(G)) is not None
    target = _is_exponent_p_group(G)
    ok = not regular or target
    return _verdict(TheoremId.CONJECTURE, G, ok, regular, target,
                    witness={"group": G.label, "order": G.order, "exponent": exponent(G)})


def conjecture_scan(catalog: Iterable[FiniteGroup]) -> list[TheoremVerdict]:
    """Conjecture verdicts for the non-cyclic groups of the catalog, in input order."""
    return [check_conjecture(G) for G in catalog if not G.is_cyclic]


# ---------------------------------------------------------------------------
# nilpotent structure


def check_maximal_cyclic_products(G: FiniteGroup) -> TheoremVerdict:
    _require_nilpotent(G)
    dec = sylow_decomposition(G)
    direct = {M.mask for M in G.maximal_cyclic}
    products = maximal_cyclic_products(dec)
    return _verdict(TheoremId.MAXIMAL_CYCLIC_PRODUCTS, G, direct == products, len(direct), len(products))


def check_cyclic_sylow_contained(G: FiniteGroup) -> TheoremVerdict:
    _require_nilpotent(G)
    dec = sylow_decomposition(G)
    cyclic = [f for f in dec.factors if f.group.is_cyclic]
    if not cyclic:
        raise NotApplicable("no cyclic Sylow factor")
    for f in cyclic:
        for M in G.maximal_cyclic:
            if not f.subgroup.issubset(M):
                return _verdict(TheoremId.CYCLIC_SYLOW_CONTAINED, G, False,
                                witness={"prime": f.prime, "M": list(M.members)})
    return _verdict(TheoremId.CYCLIC_SYLOW_CONTAINED, G, True, [f.prime for f in cyclic])


def check_component_closure(G: FiniteGroup) -> TheoremVerdict:
    from .nilpotent import component_subgroup_closure

    _require_nilpotent(G)
    dec = sylow_decomposition(G)
    for x in range(G.order):
        try:
            component_subgroup_closure(x, dec)
        except AssertionError as exc:
            return _verdict(TheoremId.COMPONENT_CLOSURE, G, False, witness={"element": x, "reason": str(exc)})
    return _verdict(TheoremId.COMPONENT_CLOSURE, G, True, G.order)


def check_adjacency_by_components(G: FiniteGroup) -> TheoremVerdict:
    _require_nilpotent(G)
    dec = sylow_decomposition(G)
    ok = np.ones((G.order, G.order), dtype=bool)
    for i, f in enumerate(dec.factors):
        loc = dec.local[:, i]
        sub = enhanced_power_graph(f.group).adjacency
        ok &= (loc[:, None] == loc[None, :]) | sub[np.ix_(loc, loc)]
    np.fill_diagonal(ok, False)
    bad = np.argwhere(ok != enhanced_power_graph(G).adjacency)
    return _verdict(TheoremId.ADJACENCY_BY_COMPONENTS, G, len(bad) == 0,
                    witness={"pair": bad[:1].tolist()})


def check_strong_product(G: FiniteGroup) -> TheoremVerdict:
    _require_nilpotent(G)
    product, psi = epg_strong_product_decomposition(G)
    ok = verify_graph_map(enhanced_power_graph(G), product, psi)
    return _verdict(TheoremId.STRONG_PRODUCT, G, ok, G.order, product.vertex_count,
                    witness={"psi": psi})


def check_intersection_dominates(G: FiniteGroup) -> TheoremVerdict:
    _require_nontrivial(G)
    common = -1
    for M in G.maximal_cyclic:
        common &= M.mask
    members = Subgroup(G, common).members
    deg = enhanced_power_graph(G).degrees()
    low = [t for t in members if deg[t] != G.order - 1]
    return _verdict(TheoremId.INTERSECTION_DOMINATES, G, not low, len(members), None,
                    witness={"intersection": list(members), "not_dominating": low})


def _unique_minimum_cut(graph: Graph, size: int) -> list[frozenset]:
    return [frozenset(c) for c in itertools.combinations(range(graph.vertex_count), size)
            if is_vertex_cut(graph, c)]


UNIQUENESS_ORDER_LIMIT = 16


def check_kappa_formula(G: FiniteGroup) -> TheoremVerdict:
    """Closed-form connectivity against max-flow; exhaustive uniqueness for small groups."""
    _require_nilpotent(G)
    pred = predicted_kappa(G)
    if pred is None:
        raise NotApplicable("needs r >= 2 Sylow factors with exactly one non-cyclic")
    graph = enhanced_power_graph(G)
    conn = vertex_connectivity(graph)
    ok = pred.kappa == conn.kappa == len(pred.cut) and is_vertex_cut(graph, pred.cut)
    witness = {"predicted": pred.kappa, "max_flow": conn.kappa, "predicted_cut": pred.cut,
               "flow_cut": conn.witness_cut}
    detail = "quaternion branch" if pred.quaternion else ""
    if ok and G.order <= UNIQUENESS_ORDER_LIMIT:
        cuts = _unique_minimum_cut(graph, pred.kappa)
        ok = cuts == [pred.cut]
        witness["minimum_cuts"] = cuts
        detail = (detail + "; " if detail else "") + "uniqueness checked exhaustively"
    return _verdict(TheoremId.KAPPA_FORMULA, G, ok, pred.kappa, conn.kappa, witness=witness, detail=detail)


def check_factor_min_degree(G: FiniteGroup) -> TheoremVerdict:
    _require_nilpotent(G)
    _require_nontrivial(G)
    dec = sylow_decomposition(G)
    delta = min_degree(enhanced_power_graph(G))
    expected = min_degree_from_factors(dec)
    return _verdict(TheoremId.FACTOR_MIN_DEGREE, G, delta == expected, delta, expected)


# ---------------------------------------------------------------------------
# Wiener index


@dataclass(frozen=True)
class WienerBreakdown:
    primes: tuple[int, ...]
    exponents: tuple[int, ...]
    m: tuple[int, ...]  # ordered non-adjacent distinct pairs in each Sylow EPG
    formula_value: Fraction
    oracle_value: Fraction
    lower_bound: Fraction
    upper_bound: Fraction
    factor_wiener: tuple[Fraction, ...] = field(default=())

    def to_json_dict(self) -> dict:
        return {
            "primes": list(self.primes),
            "exponents": list(self.exponents),
            "m": list(self.m),
            "formula": fraction_json(self.formula_value),
            "oracle": fraction_json(self.oracle_value),
            "lower_bound": fraction_json(self.lower_bound),
            "upper_bound": fraction_json(self.upper_bound),
        }


def non_adjacent_ordered_pairs(graph: Graph) -> int:
    n = graph.vertex_count
    return n * (n - 1) - 2 * graph.edge_count()


def wiener_formula(n: int, sylow_orders: Sequence[int], m: Sequence[int]) -> Fraction:
    return Fraction(2 * n * n - n - math.prod(q * q - mi for q, mi in zip(sylow_orders, m)), 2)


def wiener_upper_bound(n: int, primes: Sequence[int], exponents: Sequence[int]) -> Fraction:
    term = math.prod(p ** (lam + 1) + p**lam - p for p, lam in zip(primes, exponents))
    return Fraction(2 * n * n - n - term, 2)


def wiener_breakdown(G: FiniteGroup) -> WienerBreakdown:
    dec = sylow_decomposition(G)
    n = G.order
    graphs = [enhanced_power_graph(f.group) for f in dec.factors]
    m = tuple(non_adjacent_ordered_pairs(g) for g in graphs)
    primes = tuple(f.prime for f in dec.factors)
    exps = tuple(f.exponent for f in dec.factors)
    return WienerBreakdown(
        primes,
        exps,
        m,
        wiener_formula(n, [f.order for f in dec.factors], m),
        wiener_index(enhanced_power_graph(G)),
        Fraction(n * (n - 1), 2),
        wiener_upper_bound(n, primes, exps),
        tuple(wiener_index(g) for g in graphs),
    )


def wiener_analysis(G: FiniteGroup) -> tuple[WienerBreakdown, list[TheoremVerdict]]:
    _require_nilpotent(G)
    wb = wiener_breakdown(G)
    w = wb.oracle_value
    verdicts = [
        _verdict(TheoremId.WIENER_FORMULA, G, wb.formula_value == w, wb.formula_value, w,
                 witness=wb.to_json_dict()),
        _verdict(TheoremId.WIENER_BOUNDS, G, wb.lower_bound <= w <= wb.upper_bound,
                 w, [wb.lower_bound, wb.upper_bound], witness=wb.to_json_dict()),
        _verdict(TheoremId.WIENER_LOWER_ATTAINED, G, (w == wb.lower_bound) == G.is_cyclic,
                 w == wb.lower_bound, G.is_cyclic),
    ]
    radical = math.prod(wb.primes)
    all_radical = all(M.order == radical for M in G.maximal_cyclic)
    verdicts.append(_verdict(TheoremId.WIENER_UPPER_ATTAINED, G, (w == wb.upper_bound) == all_radical,
                             w == wb.upper_bound, all_radical))
    bad = []
    for p, lam, mi, wi in zip(wb.primes, wb.exponents, wb.m, wb.factor_wiener):
        q = p**lam
        if mi % 2 or mi > (q - p) * (q - 1) or wi > Fraction((q - 1) * (2 * q - p), 2):
            bad.append({"prime": p, "m": mi, "wiener": wi})
    verdicts.append(_verdict(TheoremId.SYLOW_WIENER_BOUND, G, not bad, list(wb.m), None, witness={"factors": bad}))
    return wb, verdicts


def order_profile(G: FiniteGroup) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(prime_factorization(G.order).items()))


def check_wiener_monotone(G: FiniteGroup, H: FiniteGroup) -> TheoremVerdict:
    """If every m_i(G) <= m_i(H) on a shared order profile then W(G) <= W(H)."""
    _require_nilpotent(G)
    _require_nilpotent(H)
    if order_profile(G) != order_profile(H):
        raise NotApplicable("groups have different order profiles")
    a, b = wiener_breakdown(G), wiener_breakdown(H)
    if not all(x <= y for x, y in zip(a.m, b.m)):
        raise NotApplicable("non-adjacency counts are not dominated")
    ok = a.oracle_value <= b.oracle_value
    return TheoremVerdict(TheoremId.WIENER_MONOTONE, Status.HOLDS if ok else Status.FAILS,
                          f"{G.label} vs {H.label}", a.oracle_value, b.oracle_value,
                          None if ok else {"m": [a.m, b.m]})


# ---------------------------------------------------------------------------


SINGLE_CHECKS = (
    (TheoremId.COMPLETE_IFF_CYCLIC, check_complete_iff_cyclic),
    (TheoremId.GRAPH_SANDWICH, check_graph_sandwich),
    (TheoremId.MIN_DEGREE, check_min_degree),
    (TheoremId.CONNECTIVITY_CHAIN, check_connectivity_chain),
    (TheoremId.NILPOTENCY_CRITERIA, check_nilpotency_criteria),
    (TheoremId.CLOSURE_CUT_SET, check_closure_cut_sets),
    (TheoremId.DELTA_KAPPA, check_delta_kappa),
    (TheoremId.REGULARITY, check_regularity_classification),
    (TheoremId.REGULAR_IFF_SRG, check_regular_iff_strongly_regular),
    (TheoremId.PGROUP_EXPONENT, check_pgroup_exponent),
    (TheoremId.ABELIAN_REGULAR, check_abelian_regular),
    (TheoremId.CONJECTURE, check_conjecture),
    (TheoremId.MAXIMAL_CYCLIC_PRODUCTS, check_maximal_cyclic_products),
    (TheoremId.CYCLIC_SYLOW_CONTAINED, check_cyclic_sylow_contained),
    (TheoremId.COMPONENT_CLOSURE, check_component_closure),
    (TheoremId.ADJACENCY_BY_COMPONENTS, check_adjacency_by_components),
    (TheoremId.STRONG_PRODUCT, check_strong_product),
    (TheoremId.INTERSECTION_DOMINATES, check_intersection_dominates),
    (TheoremId.KAPPA_FORMULA, check_kappa_formula),
    (TheoremId.FACTOR_MIN_DEGREE, check_factor_min_degree),
)

WIENER_IDS = (
    TheoremId.WIENER_FORMULA,
    TheoremId.WIENER_BOUNDS,
    TheoremId.WIENER_LOWER_ATTAINED,
    TheoremId.WIENER_UPPER_ATTAINED,
    TheoremId.SYLOW_WIENER_BOUND,
)


def _skipped(tid: TheoremId, G: FiniteGroup, reason: str) -> TheoremVerdict:
    return TheoremVerdict(tid, Status.NOT_APPLICABLE, G.label, detail=reason)


def run_all(G: FiniteGroup) -> list[TheoremVerdict]:
    """Every check on one group, in a fixed order; hypotheses that fail become not_applicable."""
    out = []
    for tid, check in SINGLE_CHECKS:
        try:
            out.append(check(G))
        except (NotApplicable, NotNilpotent) as exc:
            out.append(_skipped(tid, G, str(exc)))
    try:
        out.extend(wiener_analysis(G)[1])
    except (NotApplicable, NotNilpotent) as exc:
        out.extend(_skipped(tid, G, str(exc)) for tid in WIENER_IDS)
    return out


def summarize(verdicts: Iterable[TheoremVerdict]) -> dict[str, int]:
    counts = {s.value: 0 for s in Status}
    for v in verdicts:
        counts[v.status.value] += 1
    return counts
