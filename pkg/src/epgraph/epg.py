"""Enhanced power graphs and their plain-text exports."""

from __future__ import annotations

import json
import weakref
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .errors import SameVertex, TrivialGroup
from .groups import FiniteGroup, cyclic_subgroup, element_order


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph with a dense boolean adjacency matrix.

    ``vertex_labels[i]``, when present, names the group element behind vertex i.
    """

    adjacency: np.ndarray
    vertex_labels: Optional[tuple[str, ...]] = field(default=None)

    def __post_init__(self) -> None:
        adj = np.ascontiguousarray(self.adjacency, dtype=bool)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError(f"adjacency must be square, got shape {adj.shape}")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency must be symmetric")
        if np.any(np.diagonal(adj)):
            raise ValueError("adjacency must have an empty diagonal")
        adj.setflags(write=False)
        object.__setattr__(self, "adjacency", adj)

    @property
    def vertex_count(self) -> int:
        return int(self.adjacency.shape[0])

    @property
    def n(self) -> int:
        return self.vertex_count

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    def edge_count(self) -> int:
        return int(self.adjacency.sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        rows, cols = np.nonzero(np.triu(self.adjacency, 1))
        return [(int(i), int(j)) for i, j in zip(rows, cols)]

    def induced(self, vertices: Sequence[int]) -> "Graph":
        idx = np.asarray(vertices, dtype=np.int64)
        labels = None
        if self.vertex_labels is not None:
            labels = tuple(self.vertex_labels[i] for i in idx)
        return Graph(self.adjacency[np.ix_(idx, idx)], labels)

    def same_edges(self, other: "Graph") -> bool:
        return np.array_equal(self.adjacency, other.adjacency)


def graph_from_edges(n: int, edges: Sequence[Sequence[int]]) -> Graph:
    adj = np.zeros((n, n), dtype=bool)
    for i, j in edges:
        adj[i, j] = adj[j, i] = True
    return Graph(adj)


def complete_graph(n: int) -> Graph:
    return Graph(~np.eye(n, dtype=bool))


_EPG_CACHE: "weakref.WeakKeyDictionary[FiniteGroup, Graph]" = weakref.WeakKeyDictionary()


def enhanced_power_graph(G: FiniteGroup) -> Graph:
    """Union of the cliques on the maximal cyclic subgroups of G."""
    cached = _EPG_CACHE.get(G)
    if cached is not None:
        return cached
    n = G.order
    adj = np.zeros((n, n), dtype=bool)
    for M in G.maximal_cyclic:
        idx = np.array(M.members, dtype=np.int64)
        adj[np.ix_(idx, idx)] = True
    np.fill_diagonal(adj, False)
    graph = Graph(adj, tuple(str(i) for i in range(n)))
    _EPG_CACHE[G] = graph
    return graph


def proper_enhanced_power_graph(G: FiniteGroup) -> Graph:
    """EPG with the identity removed; vertex j is element j+1 (see vertex_labels)."""
    if G.order < 2:
        raise TrivialGroup("the trivial group has an empty proper enhanced power graph")
    return enhanced_power_graph(G).induced(range(1, G.order))


def are_adjacent(G: FiniteGroup, x: int, y: int) -> bool:
    if x == y:
        raise SameVertex(f"vertex {x} compared with itself")
    both = (1 << int(x)) | (1 << int(y))
    return any(M.mask & both == both for M in G.maximal_cyclic)


# ---------------------------------------------------------------------------
# oracles: kept independent of the clique-union construction


def generated_subgroup_mask(G: FiniteGroup, gens: Sequence[int]) -> int:
    """Closure of a generating set by breadth-first multiplication."""
    seen = {0}
    frontier = [0]
    gens = [int(g) for g in gens]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = int(G.table[a, g])
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    mask = 0
    for i in seen:
        mask |= 1 << i
    return mask


def pairwise_cyclic_graph(G: FiniteGroup) -> Graph:
    """Adjacency iff <x, y> is cyclic, decided by subgroup generation."""
    n = G.order
    orders = G.element_orders
    adj = np.zeros((n, n), dtype=bool)
    for x in range(n):
        for y in range(x + 1, n):
            mask = generated_subgroup_mask(G, (x, y))
            size = mask.bit_count()
            members = [i for i in range(n) if mask >> i & 1]
            if any(orders[z] == size for z in members):
                adj[x, y] = adj[y, x] = True
    return Graph(adj)


def power_graph(G: FiniteGroup) -> Graph:
    n = G.order
    adj = np.zeros((n, n), dtype=bool)
    for x in range(n):
        for y in cyclic_subgroup(G, x).members:
            adj[x, y] = adj[y, x] = True
    np.fill_diagonal(adj, False)
    return Graph(adj)


def commuting_graph(G: FiniteGroup) -> Graph:
    adj = G.table == G.table.T
    np.fill_diagonal(adj, False)
    return Graph(adj)


# ---------------------------------------------------------------------------
# exports


def to_json_dict(graph: Graph) -> dict:
    return {"n": graph.vertex_count, "edges": [[i, j] for i, j in graph.edges()]}


def to_json(graph: Graph) -> str:
    return json.dumps(to_json_dict(graph))


def from_json(text: str) -> Graph:
    data = json.loads(text)
    return graph_from_edges(int(data["n"]), data["edges"])


def to_dot(graph: Graph, G: Optional[FiniteGroup] = None, name: str = "epg") -> str:
    """Graphviz text; with a group, vertices show element index and order."""
    lines = [f'graph "{name}" {{']
    for v in range(graph.vertex_count):
        elem = graph.vertex_labels[v] if graph.vertex_labels is not None else str(v)
        if G is not None and elem.isdigit():
            text = f"{elem} (o={element_order(G, int(elem))})"
        else:
            text = elem
        lines.append(f'  {v} [label="{text}"];')
    for i, j in graph.edges():
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
