"""Command-line front end: ``epgraph analyze | verify | export | scan``.

Exit codes: 0 success, 1 a theorem check failed, 2 usage or input error,
3 order cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Optional, Sequence

from . import _backend
from .catalog import default_catalog_specs, load_catalog, load_group
from .epg import enhanced_power_graph, proper_enhanced_power_graph, to_dot, to_json_dict
from .errors import EpgraphError, NotNilpotent, OrderCapExceeded
from .groups import FiniteGroup, exponent, is_nilpotent, maximal_cyclic_subgroups
from .invariants import invariant_report, is_regular, min_degree, strong_regularity, vertex_connectivity, strong_product
from .nilpotent import predicted_kappa, sylow_decomposition
from .theorems import Status, TheoremVerdict, conjecture_scan, run_all, summarize

EXIT_OK, EXIT_FAILS, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


def analyze_group(G: FiniteGroup) -> dict:
    """Invariant report of the EPG plus group-level facts."""
    graph = enhanced_power_graph(G)
    report = {"label": G.label, "order": G.order, "backend": _backend.BACKEND}
    report.update(invariant_report(graph))
    report["kappa_cut"] = sorted(vertex_connectivity(graph).witness_cut)
    orders = sorted(M.order for M in maximal_cyclic_subgroups(G))
    report.update(
        cyclic=G.is_cyclic,
        abelian=G.is_abelian,
        nilpotent=is_nilpotent(G),
        exponent=exponent(G),
        maximal_cyclic_count=len(orders),
        maximal_cyclic_orders=orders,
    )
    if G.order >= 2:
        proper = proper_enhanced_power_graph(G)
        srg = strong_regularity(proper)
        report["proper"] = {
            "n": proper.vertex_count,
            "min_degree": min_degree(proper),
            "regular": is_regular(proper),
            "srg": None if not srg.is_srg else {
                "n": srg.params.n, "k": srg.params.k, "lambda": srg.params.lambda_, "mu": srg.params.mu,
            },
        }
    else:
        report["proper"] = None
    if report["nilpotent"]:
        dec = sylow_decomposition(G)
        pred = predicted_kappa(G)
        report["sylow"] = {
            "primes": [f.prime for f in dec.factors],
            "exponents": [f.exponent for f in dec.factors],
        }
        report["predicted_kappa"] = None if pred is None else pred.kappa
    return report


def _format_text(report: dict) -> str:
    return "\n".join(f"{k}: {json.dumps(v)}" for k, v in report.items()) + "\n"


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _verify_spec(spec: str) -> list[TheoremVerdict]:
    return run_all(load_group(spec))


def _verdict_lines(verdicts: Sequence[TheoremVerdict], verbose: bool) -> list[str]:
    lines = []
    for v in verdicts:
        if verbose or v.status is Status.FAILS:
            tail = f" ({v.detail})" if v.detail else ""
            lines.append(f"[{v.status.value}] {v.group}: {v.name}{tail}")
            if v.status is Status.FAILS:
                lines.append(f"    lhs={v.lhs!r} rhs={v.rhs!r} witness={json.dumps(v.to_json_dict()['witness'])}")
    return lines


def _groups_and_jobs(args) -> tuple[list, bool]:
    """Work items for verify/scan: spec strings when workers can rebuild them."""
    if args.specs:
        return list(args.specs), True
    if args.catalog == "default":
        return default_catalog_specs(args.limit), True
    return load_catalog(args.catalog, args.limit, args.order_cap), False


def _map(fn, items, jobs: int):
    if jobs <= 1:
        return [fn(i) for i in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=4))


def cmd_analyze(args) -> int:
    G = load_group(args.spec, args.order_cap)
    report = analyze_group(G)
    if args.format == "text":
        _emit(_format_text(report), args.out)
    else:
        _emit(json.dumps(report, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    items, by_spec = _groups_and_jobs(args)
    if by_spec:
        per_group = _map(_verify_spec, items, args.jobs)
    else:
        per_group = _map(run_all, items, args.jobs)
    verdicts = [v for group in per_group for v in group]
    counts = summarize(verdicts)
    if args.format == "json":
        _emit(json.dumps([v.to_json_dict() for v in verdicts], indent=2) + "\n", args.out)
    else:
        lines = _verdict_lines(verdicts, args.verbose)
        lines.append(
            f"{len(per_group)} groups: {counts['holds']} holds, {counts['fails']} fails, "
            f"{counts['not_applicable']} not applicable"
        )
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_FAILS if counts["fails"] else EXIT_OK


def _scan_spec(spec: str) -> list[TheoremVerdict]:
    return conjecture_scan([load_group(spec)])


def cmd_scan(args) -> int:
    items, by_spec = _groups_and_jobs(args)
    if by_spec:
        verdicts = [v for group in _map(_scan_spec, items, args.jobs) for v in group]
    else:
        verdicts = conjecture_scan(items)
    bad = [v for v in verdicts if v.status is Status.FAILS]
    if args.format == "json":
        payload = {
            "limit": args.limit,
            "scanned": len(verdicts),
            "counterexamples": [v.to_json_dict() for v in bad],
            "verdicts": [v.to_json_dict() for v in verdicts],
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        lines = []
        if args.verbose:
            lines += [f"[{v.status.value}] {v.group}" for v in verdicts]
        lines += [f"counterexample: {v.group} (order {v.witness['order']}, exponent {v.witness['exponent']})" for v in bad]
        lines.append(f"scanned {len(verdicts)} non-cyclic groups (order <= {args.limit}): {len(bad)} counterexamples")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_FAILS if bad else EXIT_OK


def cmd_export(args) -> int:
    G = load_group(args.spec, args.order_cap)
    what = "proper" if args.proper else args.what
    if args.format is None:
        args.format = "json" if what == "decomposition" else "dot"
    if what == "decomposition":
        if args.format != "json":
            raise EpgraphError("the decomposition export is JSON only")
        _emit(sylow_decomposition(G).to_json() + "\n", args.out)
        return EXIT_OK
    if what == "factors":
        dec = sylow_decomposition(G)
        graphs = [(f"{G.label}_P{f.prime}", enhanced_power_graph(f.group), f.group) for f in dec.factors]
        if args.format == "json":
            data = {"factors": [{"prime": f.prime, "graph": to_json_dict(g)} for f, (_, g, _) in zip(dec.factors, graphs)]}
            _emit(json.dumps(data) + "\n", args.out)
        else:
            _emit("".join(to_dot(g, H, name) for name, g, H in graphs), args.out)
        return EXIT_OK
    if what == "product":
        dec = sylow_decomposition(G)
        graph = strong_product([enhanced_power_graph(f.group) for f in dec.factors])
        group = None
    elif what == "proper":
        graph, group = proper_enhanced_power_graph(G), G
    else:
        graph, group = enhanced_power_graph(G), G
    if args.format == "json":
        _emit(json.dumps(to_json_dict(graph)) + "\n", args.out)
    else:
        _emit(to_dot(graph, group, f"{G.label} {what}"), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="epgraph", description=__doc__.splitlines()[0])
    parser.add_argument("--order-cap", type=int, default=None,
                        help="largest group order to construct (default: $EPGRAPH_ORDER_CAP or 10000)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="invariant report for one group")
    p.add_argument("spec", help="spec string, Cayley-table .json, or permutation-generator file")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_analyze)

    for name, func, helptext in (
        ("verify", cmd_verify, "run every theorem check"),
        ("scan", cmd_scan, "search a catalog for counterexamples to the regularity conjecture"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("specs", nargs="*", help="groups to check (default: the catalog)")
        p.add_argument("--catalog", default="default", help="'default' or a catalog file")
        p.add_argument("--limit", type=int, default=64, help="largest catalog group order")
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--verbose", "-v", action="store_true")
        p.add_argument("--out")
        p.set_defaults(func=func)

    p = sub.add_parser("export", help="write a graph as DOT or JSON")
    p.add_argument("spec")
    p.add_argument("--format", choices=("dot", "json"), default=None,
                   help="default: json for the decomposition, dot otherwise")
    p.add_argument("--what", choices=("epg", "proper", "factors", "product", "decomposition"), default="epg")
    p.add_argument("--proper", action="store_true", help="shorthand for --what proper")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.order_cap is not None and args.order_cap < 1:
        parser.error("--order-cap must be >= 1")
    try:
        return args.func(args)
    except OrderCapExceeded as exc:
        print(f"epgraph: {exc}", file=sys.stderr)
        return EXIT_CAP
    except NotNilpotent as exc:
        print(f"epgraph: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (EpgraphError, OSError) as exc:
        print(f"epgraph: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
