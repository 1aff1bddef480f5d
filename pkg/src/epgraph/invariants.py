"""Graph invariants used by the theorem checks.

Connectivity and distances go through the kernel backend picked in
:mod:`epgraph._backend`; everything else is small numpy.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass
from fractions import Fraction
from types import ModuleType
from typing import Optional, Sequence

import numpy as np

from . import _backend
from .epg import Graph
from .errors import Disconnected, EmptyGraph, SizeMismatch


@dataclass(frozen=True)
class SrgParams:
    n: int
    k: int
    lambda_: Optional[int]
    mu: Optional[int]


@dataclass(frozen=True)
class StrongRegularityReport:
    is_srg: bool
    params: Optional[SrgParams] = None


@dataclass(frozen=True)
class ConnectivityResult:
    kappa: int
    witness_cut: frozenset


def _nonempty(graph: Graph) -> None:
    if graph.vertex_count == 0:
        raise EmptyGraph("graph has no vertices")


def _kernels(backend: Optional[str]) -> ModuleType:
    return _backend.kernels if backend is None else _backend.load(backend)


def min_degree(graph: Graph) -> int:
    _nonempty(graph)
    return int(graph.degrees().min())


def is_regular(graph: Graph) -> Optional[int]:
    """Common degree if every vertex has the same degree, else None."""
    _nonempty(graph)
    deg = graph.degrees()
    return int(deg[0]) if np.all(deg == deg[0]) else None


def is_complete(graph: Graph) -> bool:
    n = graph.vertex_count
    return graph.edge_count() == n * (n - 1) // 2


def strong_regularity(graph: Graph) -> StrongRegularityReport:
    """Regular, with constant common-neighbour counts on edges and on non-edges.

    A count is reported as None when the graph has no pair of that kind, so
    complete and edgeless graphs come out strongly regular.
    """
    k = is_regular(graph)
    if k is None:
        return StrongRegularityReport(False)
    adj = graph.adjacency
    a = adj.astype(np.int64)
    common = a @ a
    off = ~np.eye(graph.vertex_count, dtype=bool)
    on_edges = np.unique(common[adj])
    on_non_edges = np.unique(common[off & ~adj])
    if len(on_edges) > 1 or len(on_non_edges) > 1:
        return StrongRegularityReport(False)
    lam = int(on_edges[0]) if len(on_edges) else None
    mu = int(on_non_edges[0]) if len(on_non_edges) else None
    return StrongRegularityReport(True, SrgParams(graph.vertex_count, k, lam, mu))


def is_vertex_cut(graph: Graph, removed) -> bool:
    """True iff deleting ``removed`` leaves a disconnected graph or at most one vertex."""
    keep = np.ones(graph.vertex_count, dtype=bool)
    keep[list(removed)] = False
    rest = np.flatnonzero(keep)
    if len(rest) <= 1:
        return True
    return not is_connected(graph.induced(rest))


def is_connected(graph: Graph) -> bool:
    n = graph.vertex_count
    if n <= 1:
        return True
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    frontier = seen.copy()
    adj = graph.adjacency
    while frontier.any():
        frontier = adj[frontier].any(axis=0) & ~seen
        seen |= frontier
    return bool(seen.all())


_KAPPA_CACHE: "weakref.WeakKeyDictionary[Graph, ConnectivityResult]" = weakref.WeakKeyDictionary()


def vertex_connectivity(graph: Graph, backend: Optional[str] = None) -> ConnectivityResult:
    """Vertex connectivity with a minimum cut.

    Complete graphs give n-1 and an empty cut. Otherwise the Esfahanian-Hakimi
    pair set is searched: a minimum-degree vertex v against each non-neighbour,
    then every non-adjacent pair of neighbours of v.
    """
    _nonempty(graph)
    if backend is None and graph in _KAPPA_CACHE:
        return _KAPPA_CACHE[graph]
    n = graph.vertex_count
    adj = graph.adjacency
    if is_complete(graph):
        result = ConnectivityResult(n - 1, frozenset())
    else:
        net = _kernels(backend).VertexFlow(adj)
        v = int(np.argmin(graph.degrees()))
        pairs = [(v, w) for w in np.flatnonzero(~adj[v]) if w != v]
        nbrs = np.flatnonzero(adj[v])
        for i, x in enumerate(nbrs):
            for y in nbrs[i + 1 :]:
                if not adj[x, y]:
                    pairs.append((x, y))
        best, best_pair = n, None
        for s, t in pairs:
            f = net.flow(int(s), int(t), best)
            if f < best:
                best, best_pair = f, (int(s), int(t))
                if best == 0:
                    break
        value, cut = net.cut(*best_pair)
        result = ConnectivityResult(value, frozenset(int(c) for c in cut))
    if backend is None:
        _KAPPA_CACHE[graph] = result
    return result


def edge_connectivity(graph: Graph, backend: Optional[str] = None) -> int:
    """Minimum over t != 0 of the unit-capacity max-flow from vertex 0 to t."""
    if graph.vertex_count < 2:
        raise EmptyGraph("edge connectivity needs at least two vertices")
    best = min_degree(graph)
    if best == 0:
        return 0
    net = _kernels(backend).EdgeFlow(graph.adjacency)
    for t in range(1, graph.vertex_count):
        best = min(best, net.flow(0, t, best))
        if best == 0:
            break
    return int(best)


def distance_matrix(graph: Graph, backend: Optional[str] = None) -> np.ndarray:
    return _kernels(backend).distance_matrix(graph.adjacency)


def diameter(graph: Graph) -> Optional[int]:
    """Largest distance, or None when the graph is disconnected."""
    _nonempty(graph)
    d = distance_matrix(graph)
    if np.any(d < 0):
        return None
    return int(d.max())


def wiener_index(graph: Graph, backend: Optional[str] = None) -> Fraction:
    """Half the sum of distances over ordered vertex pairs."""
    d = distance_matrix(graph, backend)
    if np.any(d < 0):
        raise Disconnected("Wiener index is undefined on a disconnected graph")
    return Fraction(int(d.sum(dtype=np.int64)), 2)


def strong_product(graphs: Sequence[Graph]) -> Graph:
    """Strong product with vertices in row-major order over the factors."""
    if not graphs:
        raise EmptyGraph("strong product of an empty list")
    closed = np.ones((1, 1), dtype=np.int64)
    for g in graphs:
        _nonempty(g)
        closed = np.kron(closed, g.adjacency.astype(np.int64) + np.eye(g.vertex_count, dtype=np.int64))
    adj = closed.astype(bool)
    np.fill_diagonal(adj, False)
    return Graph(adj)


def verify_graph_map(g1: Graph, g2: Graph, mapping: Sequence[int]) -> bool:
    """True iff ``mapping`` carries adjacency and non-adjacency of g1 onto g2."""
    m = np.asarray(mapping, dtype=np.int64)
    n = g1.vertex_count
    if g2.vertex_count != n or m.shape != (n,):
        raise SizeMismatch(f"graphs of sizes {n} and {g2.vertex_count} with a map of length {len(m)}")
    if not np.array_equal(np.sort(m), np.arange(n)):
        raise SizeMismatch("mapping is not a bijection")
    return bool(np.array_equal(g2.adjacency[np.ix_(m, m)], g1.adjacency))


def fraction_json(value: Optional[Fraction]):
    if value is None:
        return None
    return int(value) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def invariant_report(graph: Graph) -> dict:
    """Invariants in a JSON-ready dict; disconnected graphs get null distances."""
    srg = strong_regularity(graph)
    diam = diameter(graph)
    report = {
        "n": graph.vertex_count,
        "min_degree": min_degree(graph),
        "regular": is_regular(graph),
        "srg": None,
        "kappa": vertex_connectivity(graph).kappa,
        "kappa_edge": edge_connectivity(graph) if graph.vertex_count >= 2 else 0,
        "wiener": fraction_json(wiener_index(graph)) if diam is not None else None,
        "diameter": diam,
    }
    if srg.is_srg:
        p = srg.params
        report["srg"] = {"n": p.n, "k": p.k, "lambda": p.lambda_, "mu": p.mu}
    return report
