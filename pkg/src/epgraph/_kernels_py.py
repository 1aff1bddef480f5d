"""Pure-Python kernels; same surface as the compiled ``_kernels`` module."""

from __future__ import annotations

from collections import deque

import numpy as np

from ._network import csr_neighbors, undirected_unit_network, vertex_split_network

NAME = "python"


def distance_matrix(adj: np.ndarray) -> np.ndarray:
    """All-pairs BFS distances; -1 marks unreachable pairs."""
    n = adj.shape[0]
    start, nbrs = csr_neighbors(adj)
    start, nbrs = start.tolist(), nbrs.tolist()
    out = np.full((n, n), -1, dtype=np.int32)
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = dist[u] + 1
            for w in nbrs[start[u] : start[u + 1]]:
                if dist[w] < 0:
                    dist[w] = du
                    queue.append(w)
        out[s] = dist
    return out


class _FlowNetwork:
    def __init__(self, arrays) -> None:
        heads, caps, start, order = arrays
        self.heads = heads.tolist()
        self.caps0 = caps.tolist()
        self.nodes = len(start) - 1
        order = order.tolist()
        start = start.tolist()
        self.out = [order[start[u] : start[u + 1]] for u in range(self.nodes)]

    def _max_flow(self, source: int, sink: int, limit: int) -> tuple[int, list[int]]:
        heads, out = self.heads, self.out
        cap = list(self.caps0)
        flow = 0
        while limit < 0 or flow < limit:
            parent = [-2] * self.nodes
            parent[source] = -1
            queue = deque([source])
            found = False
            while queue and not found:
                u = queue.popleft()
                for a in out[u]:
                    if cap[a] > 0:
                        v = heads[a]
                        if parent[v] == -2:
                            parent[v] = a
                            if v == sink:
                                found = True
                                break
                            queue.append(v)
            if not found:
                break
            bottleneck = None
            v = sink
            while v != source:
                a = parent[v]
                bottleneck = cap[a] if bottleneck is None else min(bottleneck, cap[a])
                v = heads[a ^ 1]
            v = sink
            while v != source:
                a = parent[v]
                cap[a] -= bottleneck
                cap[a ^ 1] += bottleneck
                v = heads[a ^ 1]
            flow += bottleneck
        return flow, cap

    def _reachable(self, source: int, cap: list[int]) -> list[bool]:
        seen = [False] * self.nodes
        seen[source] = True
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for a in self.out[u]:
                v = self.heads[a]
                if cap[a] > 0 and not seen[v]:
                    seen[v] = True
                    queue.append(v)
        return seen


class VertexFlow(_FlowNetwork):
    """Vertex-disjoint path counting between non-adjacent vertices."""

    def __init__(self, adj: np.ndarray) -> None:
        super().__init__(vertex_split_network(np.asarray(adj, dtype=bool)))
        self.n = self.nodes // 2

    def flow(self, s: int, t: int, limit: int = -1) -> int:
        return self._max_flow(2 * s + 1, 2 * t, limit)[0]

    def cut(self, s: int, t: int) -> tuple[int, list[int]]:
        value, cap = self._max_flow(2 * s + 1, 2 * t, -1)
        seen = self._reachable(2 * s + 1, cap)
        return value, [v for v in range(self.n) if seen[2 * v] and not seen[2 * v + 1]]


class EdgeFlow(_FlowNetwork):
    """Edge-disjoint path counting with unit capacity per undirected edge."""

    def __init__(self, adj: np.ndarray) -> None:
        super().__init__(undirected_unit_network(np.asarray(adj, dtype=bool)))

    def flow(self, s: int, t: int, limit: int = -1) -> int:
        return self._max_flow(s, t, limit)[0]
