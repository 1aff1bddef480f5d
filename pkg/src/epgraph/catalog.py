"""Group spec strings, input files, and the built-in catalog.

Spec strings name family groups and join them with ``x`` for direct products:
``Z(n)``, ``D(2n)``, ``Dic(4m)``, ``Q(2^a)``, ``S(d)``, ``E(p,k)``, e.g.
``Q(8)xZ(3)``. Arguments are group orders except for ``S`` (degree) and ``E``.
"""

from __future__ import annotations

import json
import math
import re
from pathlib import Path
from typing import Iterable, Iterator, Optional

from .errors import EpgraphError, ParseError
from .groups import (
    Cyclic,
    Dicyclic,
    Dihedral,
    ElementaryAbelian,
    FamilySpec,
    FiniteGroup,
    Symmetric,
    _family_order,
    build_family,
    from_cayley_table,
    from_permutation_generators,
    parse_generator_lines,
    prime_factorization,
    product_of,
)

_FACTOR = re.compile(r"^\s*(Dic|Z|D|Q|S|E)\s*\(([^()]*)\)\s*$")
_NUMBER = re.compile(r"^\s*(\d+)(?:\s*\^\s*(\d+))?\s*$")


def _number(text: str, spec: str) -> int:
    m = _NUMBER.match(text)
    if not m:
        raise ParseError(f"bad argument {text!r} in {spec!r}")
    base = int(m.group(1))
    return base ** int(m.group(2)) if m.group(2) else base


def _split_factors(spec: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in spec:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced parentheses in {spec!r}")
        if ch in "x×" and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise ParseError(f"unbalanced parentheses in {spec!r}")
    parts.append("".join(cur))
    return parts


def parse_factor(text: str) -> FamilySpec:
    m = _FACTOR.match(text)
    if not m:
        raise ParseError(f"cannot parse group factor {text!r}")
    name, raw = m.group(1), m.group(2)
    args = [_number(a, text) for a in raw.split(",")] if raw.strip() else []
    want = 2 if name == "E" else 1
    if len(args) != want:
        raise ParseError(f"{name}(...) takes {want} argument(s), got {len(args)} in {text!r}")
    if name == "Z":
        return Cyclic(args[0])
    if name == "D":
        return Dihedral(args[0])
    if name == "Dic":
        return Dicyclic(args[0])
    if name == "Q":
        n = args[0]
        if n < 8 or n & (n - 1):
            raise ParseError(f"Q(n) needs a power of two n >= 8, got {n}")
        return Dicyclic(n)
    if name == "S":
        return Symmetric(args[0])
    return ElementaryAbelian(args[0], args[1])


def parse_spec(spec: str) -> list[FamilySpec]:
    if not spec or not spec.strip():
        raise ParseError("empty group spec")
    return [parse_factor(part) for part in _split_factors(spec)]


def spec_label(factors: Iterable[FamilySpec]) -> str:
    return "x".join(f.label for f in factors)


def build_spec(spec: str, order_cap: Optional[int] = None) -> FiniteGroup:
    factors = parse_spec(spec)
    groups = [build_family(f, order_cap) for f in factors]
    G = product_of(groups, order_cap)
    G.label = spec_label(factors)
    return G


# ---------------------------------------------------------------------------
# files


def cayley_json_dict(G: FiniteGroup) -> dict:
    return {"label": G.label, "order": G.order, "table": G.table.tolist()}


def group_from_json_dict(data: dict) -> FiniteGroup:
    try:
        table = data["table"]
    except (KeyError, TypeError) as exc:
        raise ParseError("Cayley-table JSON needs a 'table' field") from exc
    G = from_cayley_table(table, str(data.get("label", "")))
    if "order" in data and int(data["order"]) != G.order:
        raise ParseError(f"declared order {data['order']} does not match table size {G.order}")
    return G


def load_group(arg: str, order_cap: Optional[int] = None) -> FiniteGroup:
    """A DSL string, a ``.json`` Cayley table, or a text file of permutation generators."""
    path = Path(arg)
    if not path.is_file():
        return build_spec(arg, order_cap)
    text = path.read_text()
    if path.suffix == ".json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{arg}: {exc}") from exc
        return group_from_json_dict(data)
    gens = parse_generator_lines(text.splitlines())
    return from_permutation_generators(gens, path.stem, order_cap=order_cap)


# ---------------------------------------------------------------------------
# default catalog


def _base_factors(limit: int) -> list[FamilySpec]:
    out: list[FamilySpec] = [Cyclic(n) for n in range(2, limit + 1)]
    out += [Dihedral(2 * n) for n in range(3, limit // 2 + 1)]
    out += [Dicyclic(4 * m) for m in range(2, limit // 4 + 1)]
    out += [Symmetric(d) for d in (3, 4) if math.factorial(d) <= limit]
    for p in (q for q in range(2, limit + 1) if prime_factorization(q) == {q: 1}):
        k = 2
        while p**k <= limit:
            out.append(ElementaryAbelian(p, k))
            k += 1
    return out


def _product_key(factors: tuple[FamilySpec, ...]) -> tuple:
    """Non-abelian factor labels plus the primary invariants of the abelian part.

    Equal keys mean isomorphic products. Different keys can still be isomorphic
    (D(12) and D(6)xZ(2)); no isomorphism test is attempted.
    """
    parts, other = [], []
    for f in factors:
        if isinstance(f, Cyclic):
            parts += [p**a for p, a in prime_factorization(f.n).items()]
        elif isinstance(f, ElementaryAbelian):
            parts += [f.p] * f.k
        else:
            other.append(f.label)
    return tuple(sorted(other)), tuple(sorted(parts))


def _multisets(base: list[FamilySpec], limit: int) -> Iterator[tuple[FamilySpec, ...]]:
    orders = [_family_order(f) for f in base]

    def extend(start: int, acc: tuple, size: int):
        for i in range(start, len(base)):
            if size * orders[i] > limit:
                continue
            nxt = acc + (base[i],)
            yield nxt
            yield from extend(i, nxt, size * orders[i])

    yield from extend(0, (), 1)


def default_catalog_specs(limit: int = 64) -> list[str]:
    """Family groups and their direct products of order <= limit.

    Spellings of the same product (Z(2)xZ(3) and Z(6)) are merged, keeping the
    one with the fewest factors.
    """
    seen: set = set()
    entries: list[tuple[int, str]] = [(1, "Z(1)")] if limit >= 1 else []
    combos = sorted(_multisets(_base_factors(limit), limit), key=len)
    for combo in combos:
        key = _product_key(combo)
        if key in seen:
            continue
        seen.add(key)
        entries.append((math.prod(_family_order(f) for f in combo), spec_label(combo)))
    entries.sort(key=lambda e: (e[0], e[1]))
    return [label for _, label in entries]


def load_catalog(source: str = "default", limit: int = 64, order_cap: Optional[int] = None) -> list[FiniteGroup]:
    """Groups of order <= limit from the default catalog or a file.

    Files: ``.json`` holds one Cayley-table object or a list of them; any other
    file holds one spec string per line.
    """
    if source == "default":
        return [build_spec(s, order_cap) for s in default_catalog_specs(limit)]
    path = Path(source)
    if not path.is_file():
        raise EpgraphError(f"catalog file not found: {source}")
    if path.suffix == ".json":
        try:
            data = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise ParseError(f"{source}: {exc}") from exc
        items = data if isinstance(data, list) else [data]
        groups = [group_from_json_dict(d) for d in items]
    else:
        lines = [ln.split("#", 1)[0].strip() for ln in path.read_text().splitlines()]
        groups = [build_spec(ln, order_cap) for ln in lines if ln]
    return [G for G in groups if G.order <= limit]


def iter_default_catalog(limit: int = 64) -> Iterator[FiniteGroup]:
    for s in default_catalog_specs(limit):
        yield build_spec(s)


__all__ = [
    "build_spec",
    "cayley_json_dict",
    "default_catalog_specs",
    "group_from_json_dict",
    "iter_default_catalog",
    "load_catalog",
    "load_group",
    "parse_spec",
]
