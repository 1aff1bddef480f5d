# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled kernels: all-pairs BFS and unit-capacity augmenting-path max-flow."""

import numpy as np

from ._network import csr_neighbors, undirected_unit_network, vertex_split_network

NAME = "cython"


def distance_matrix(adj):
    """All-pairs BFS distances; -1 marks unreachable pairs."""
    cdef Py_ssize_t n = adj.shape[0]
    start_arr, nbrs_arr = csr_neighbors(np.asarray(adj, dtype=bool))
    cdef int[::1] start = start_arr
    cdef int[::1] nbrs = nbrs_arr
    out_arr = np.full((n, n), -1, dtype=np.int32)
    cdef int[:, ::1] out = out_arr
    queue_arr = np.empty(max(n, 1), dtype=np.int32)
    cdef int[::1] queue = queue_arr
    cdef Py_ssize_t s, qh, qt, k
    cdef int u, w, du
    with nogil:
        for s in range(n):
            out[s, s] = 0
            queue[0] = <int>s
            qh = 0
            qt = 1
            while qh < qt:
                u = queue[qh]
                qh += 1
                du = out[s, u] + 1
                for k in range(start[u], start[u + 1]):
                    w = nbrs[k]
                    if out[s, w] < 0:
                        out[s, w] = du
                        queue[qt] = w
                        qt += 1
    return out_arr


cdef int _augment(int nodes, int[::1] heads, int[::1] cap, int[::1] start, int[::1] order,
                  int source, int sink, int[::1] parent, int[::1] queue) noexcept nogil:
    cdef int i, u, v, a, qh = 0, qt = 1, b
    cdef bint found = False
    for i in range(nodes):
        parent[i] = -2
    parent[source] = -1
    queue[0] = source
    while qh < qt and not found:
        u = queue[qh]
        qh += 1
        for i in range(start[u], start[u + 1]):
            a = order[i]
            if cap[a] > 0:
                v = heads[a]
                if parent[v] == -2:
                    parent[v] = a
                    if v == sink:
                        found = True
                        break
                    queue[qt] = v
                    qt += 1
    if not found:
        return 0
    v = sink
    b = cap[parent[v]]
    while v != source:
        a = parent[v]
        if cap[a] < b:
            b = cap[a]
        v = heads[a ^ 1]
    v = sink
    while v != source:
        a = parent[v]
        cap[a] -= b
        cap[a ^ 1] += b
        v = heads[a ^ 1]
    return b


cdef class _FlowNetwork:
    cdef int nodes
    cdef object heads_arr, caps0_arr, start_arr, order_arr, cap_arr, parent_arr, queue_arr
    cdef int[::1] heads, caps0, start, order, cap, parent, queue

    def __init__(self, arrays):
        heads, caps, start, order = arrays
        self.heads_arr, self.caps0_arr = heads, caps
        self.start_arr, self.order_arr = start, order
        self.heads, self.caps0, self.start, self.order = heads, caps, start, order
        self.nodes = len(start) - 1
        self.cap_arr = caps.copy()
        self.parent_arr = np.empty(max(self.nodes, 1), dtype=np.int32)
        self.queue_arr = np.empty(max(self.nodes, 1), dtype=np.int32)
        self.cap, self.parent, self.queue = self.cap_arr, self.parent_arr, self.queue_arr

    cdef int _max_flow(self, int source, int sink, int limit):
        cdef int flow = 0, b
        self.cap[:] = self.caps0
        with nogil:
            while limit < 0 or flow < limit:
                b = _augment(self.nodes, self.heads, self.cap, self.start, self.order,
                             source, sink, self.parent, self.queue)
                if b == 0:
                    break
                flow += b
        return flow

    cdef list _reachable(self, int source):
        cdef int u, v, a, i, qh = 0, qt = 1
        seen = np.zeros(self.nodes, dtype=np.uint8)
        cdef unsigned char[::1] s = seen
        s[source] = 1
        self.queue[0] = source
        while qh < qt:
            u = self.queue[qh]
            qh += 1
            for i in range(self.start[u], self.start[u + 1]):
                a = self.order[i]
                v = self.heads[a]
                if self.cap[a] > 0 and not s[v]:
                    s[v] = 1
                    self.queue[qt] = v
                    qt += 1
        return seen.astype(bool).tolist()


cdef class VertexFlow(_FlowNetwork):
    """Vertex-disjoint path counting between non-adjacent vertices."""

    cdef public int n

    def __init__(self, adj):
        super().__init__(vertex_split_network(np.asarray(adj, dtype=bool)))
        self.n = self.nodes // 2

    def flow(self, int s, int t, int limit=-1):
        return self._max_flow(2 * s + 1, 2 * t, limit)

    def cut(self, int s, int t):
        value = self._max_flow(2 * s + 1, 2 * t, -1)
        seen = self._reachable(2 * s + 1)
        return value, [v for v in range(self.n) if seen[2 * v] and not seen[2 * v + 1]]


cdef class EdgeFlow(_FlowNetwork):
    """Edge-disjoint path counting with unit capacity per undirected edge."""

    def __init__(self, adj):
        super().__init__(undirected_unit_network(np.asarray(adj, dtype=bool)))

    def flow(self, int s, int t, int limit=-1):
        return self._max_flow(s, t, limit)
