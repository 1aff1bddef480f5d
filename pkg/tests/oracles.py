"""Reference computations that share no code with the package kernels.

Everything here works from a raw Cayley table or adjacency matrix with plain
Python loops, networkx, or exhaustive enumeration.
"""

from __future__ import annotations

import itertools
from collections import deque
from fractions import Fraction
from math import gcd

import networkx as nx
import numpy as np


def cyclic_sets(table) -> list[frozenset]:
    """<x> for every element x, by repeated multiplication."""
    t = np.asarray(table)
    out = []
    for x in range(len(t)):
        seen, cur = {0}, x
        while cur != 0:
            seen.add(cur)
            cur = int(t[cur, x])
        out.append(frozenset(seen))
    return out


def orders(table) -> list[int]:
    return [len(c) for c in cyclic_sets(table)]


def maximal_cyclic_sets(table) -> set[frozenset]:
    cyc = set(cyclic_sets(table))
    return {c for c in cyc if not any(c < d for d in cyc)}


def epg_by_definition(table) -> np.ndarray:
    """x ~ y iff x != y and both lie in some <z>."""
    n = len(table)
    adj = np.zeros((n, n), dtype=bool)
    for c in cyclic_sets(table):
        for x in c:
            for y in c:
                if x != y:
                    adj[x, y] = True
    return adj


def to_nx(adj) -> nx.Graph:
    g = nx.Graph()
    a = np.asarray(adj)
    g.add_nodes_from(range(len(a)))
    g.add_edges_from((int(i), int(j)) for i, j in zip(*np.nonzero(np.triu(a, 1))))
    return g


def bfs_distances(adj) -> list[list[int]]:
    a = np.asarray(adj)
    n = len(a)
    nbrs = [list(np.flatnonzero(a[v])) for v in range(n)]
    out = []
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        q = deque([s])
        while q:
            v = q.popleft()
            for w in nbrs[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    q.append(w)
        out.append(dist)
    return out


def bfs_wiener(adj) -> Fraction:
    return Fraction(sum(sum(row) for row in bfs_distances(adj)), 2)


def _connected_after_removal(adj, removed) -> bool:
    a = np.asarray(adj)
    keep = [v for v in range(len(a)) if v not in removed]
    if len(keep) <= 1:
        return False
    seen = {keep[0]}
    stack = [keep[0]]
    while stack:
        v = stack.pop()
        for w in np.flatnonzero(a[v]):
            w = int(w)
            if w not in removed and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(keep)


def brute_vertex_connectivity(adj) -> int:
    """Smallest k such that some k vertices disconnect the graph or leave one vertex."""
    n = len(adj)
    for k in range(n):
        for subset in itertools.combinations(range(n), k):
            if not _connected_after_removal(adj, set(subset)):
                return k
    return max(n - 1, 0)


def all_minimum_cuts(adj, k: int) -> list[frozenset]:
    return [frozenset(s) for s in itertools.combinations(range(len(adj)), k)
            if not _connected_after_removal(adj, set(s))]


def brute_edge_connectivity(adj) -> int:
    """Minimum number of edges crossing a bipartition of the vertices."""
    a = np.asarray(adj)
    n = len(a)
    best = None
    for bits in range(1, 2 ** (n - 1)):
        side = np.array([(bits >> v) & 1 for v in range(n)], dtype=bool)
        crossing = int(a[np.ix_(side, ~side)].sum())
        best = crossing if best is None else min(best, crossing)
    return best if best is not None else 0


def coprime_commute(table) -> bool:
    """Elements of coprime order commute."""
    t = np.asarray(table)
    o = orders(t)
    n = len(t)
    return all(t[x, y] == t[y, x] for x in range(n) for y in range(n) if gcd(o[x], o[y]) == 1)
