"""Arc arrays for the unit-capacity flow networks used by both kernel backends.

Arcs come in pairs: arc 2k is a forward arc and 2k+1 its residual twin, so the
twin of arc a is a ^ 1 and the tail of a is head[a ^ 1]. ``order`` lists arc ids
grouped by tail; node u owns ``order[start[u]:start[u+1]]``.
"""

from __future__ import annotations

import numpy as np


def _pack(tails: np.ndarray, heads: np.ndarray, caps: np.ndarray, nodes: int):
    order = np.argsort(tails, kind="stable").astype(np.int32)
    start = np.searchsorted(tails[order], np.arange(nodes + 1)).astype(np.int32)
    return heads.astype(np.int32), caps.astype(np.int32), start, order


def vertex_split_network(adj: np.ndarray):
    """Each vertex v becomes 2v -> 2v+1 with capacity 1; edges get capacity n."""
    n = adj.shape[0]
    big = max(n, 1)
    v = np.arange(n)
    us, ws = np.nonzero(adj)
    fwd_t = np.concatenate([2 * v, 2 * us + 1])
    fwd_h = np.concatenate([2 * v + 1, 2 * ws])
    fwd_c = np.concatenate([np.ones(n, dtype=np.int64), np.full(len(us), big)])
    tails = np.empty(2 * len(fwd_t), dtype=np.int64)
    heads = np.empty_like(tails)
    caps = np.zeros_like(tails)
    tails[0::2], tails[1::2] = fwd_t, fwd_h
    heads[0::2], heads[1::2] = fwd_h, fwd_t
    caps[0::2] = fwd_c
    return _pack(tails, heads, caps, 2 * n)


def undirected_unit_network(adj: np.ndarray):
    """Each edge {u, w} becomes a pair of unit arcs that are each other's twin."""
    n = adj.shape[0]
    us, ws = np.nonzero(np.triu(adj, 1))
    tails = np.empty(2 * len(us), dtype=np.int64)
    heads = np.empty_like(tails)
    tails[0::2], tails[1::2] = us, ws
    heads[0::2], heads[1::2] = ws, us
    caps = np.ones_like(tails)
    return _pack(tails, heads, caps, n)


def csr_neighbors(adj: np.ndarray):
    n = adj.shape[0]
    us, ws = np.nonzero(adj)
    start = np.searchsorted(us, np.arange(n + 1)).astype(np.int32)
    return start, ws.astype(np.int32)
