"""Time the compiled and pure-Python kernels on enhanced power graphs.

    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --specs "D(200)" "Q(64)xZ(3)" --repeat 3
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from epgraph import _backend
from epgraph.catalog import build_spec, default_catalog_specs
from epgraph.epg import enhanced_power_graph
from epgraph.invariants import distance_matrix, edge_connectivity, vertex_connectivity

DEFAULT_SPECS = ["S(4)", "Q(32)", "D(64)xZ(3)", "E(2,2)xQ(16)", "Q(8)xZ(15)", "D(256)", "Z(2)xS(4)xZ(5)"]


def time_call(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench(graphs, backends, repeat):
    rows = []
    for label, g in graphs:
        row = {"graph": label, "n": g.vertex_count}
        results = {}
        for name in backends:
            # fresh calls each time: an explicit backend bypasses the connectivity cache
            row[f"kappa[{name}]"] = time_call(lambda: vertex_connectivity(g, backend=name), repeat)
            row[f"edge[{name}]"] = time_call(lambda: edge_connectivity(g, backend=name), repeat)
            row[f"dist[{name}]"] = time_call(lambda: distance_matrix(g, backend=name), repeat)
            results[name] = (vertex_connectivity(g, backend=name).kappa, edge_connectivity(g, backend=name),
                             distance_matrix(g, backend=name))
        first = next(iter(results.values()))
        for other in results.values():
            assert other[:2] == first[:2] and np.array_equal(other[2], first[2]), f"backends disagree on {label}"
        rows.append(row)
    return rows


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--specs", nargs="*", default=DEFAULT_SPECS)
    parser.add_argument("--catalog", action="store_true", help="also time the whole default catalog")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = _backend.available()
    if len(backends) < 2:
        print("compiled extension not built; timing the Python kernels only")
    graphs = [(s, enhanced_power_graph(build_spec(s))) for s in args.specs]
    rows = bench(graphs, backends, args.repeat)

    cols = ["graph", "n"] + [f"{k}[{b}]" for k in ("kappa", "edge", "dist") for b in backends]
    print("  ".join(f"{c:>16}" for c in cols))
    for row in rows:
        print("  ".join(f"{row[c]:>16}" if c in ("graph", "n") else f"{row[c] * 1e3:>14.2f}ms" for c in cols))
    if len(backends) == 2:
        for kind in ("kappa", "edge", "dist"):
            total = {b: sum(r[f"{kind}[{b}]"] for r in rows) for b in backends}
            print(f"{kind:>6}: python/cython speed-up {total['python'] / total['cython']:.1f}x")

    if args.catalog:
        catalog = [enhanced_power_graph(build_spec(s)) for s in default_catalog_specs(64)]
        for name in backends:
            start = time.perf_counter()
            for g in catalog:
                vertex_connectivity(g, backend=name)
                distance_matrix(g, backend=name)
            print(f"catalog ({len(catalog)} graphs) kappa + distances with {name}: "
                  f"{time.perf_counter() - start:.2f}s")


if __name__ == "__main__":
    main()
