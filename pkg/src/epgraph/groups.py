"""Finite groups as dense Cayley tables on element indices 0..n-1.

The identity is always index 0. Subgroups are stored as Python ints used as
bitsets keyed by element index, so inclusion and intersection are word ops.
"""

from __future__ import annotations

import math
import os
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .errors import NotAGroup, NotAPGroup, OrderCapExceeded, UnsupportedSpec

DEFAULT_ORDER_CAP = 10000


def default_order_cap() -> int:
    """Order cap from ``EPGRAPH_ORDER_CAP`` if set, else 10000."""
    raw = os.environ.get("EPGRAPH_ORDER_CAP")
    if raw is None or not raw.strip():
        return DEFAULT_ORDER_CAP
    cap = int(raw)
    if cap < 1:
        raise ValueError(f"EPGRAPH_ORDER_CAP must be >= 1, got {cap}")
    return cap


def _index_dtype(n: int):
    return np.int16 if n <= np.iinfo(np.int16).max else np.int32


def mask_from_indices(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << int(i)
    return mask


def mask_from_bools(flags: np.ndarray) -> int:
    packed = np.packbits(np.asarray(flags, dtype=bool), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def indices_from_mask(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        low = mask & -mask
        i = low.bit_length() - 1
        out.append(i)
        mask ^= low
    return tuple(out)


def prime_factorization(n: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def is_prime(n: int) -> bool:
    return n >= 2 and prime_factorization(n) == {n: 1}


class FiniteGroup:
    """A finite group given by its full multiplication table.

    ``table[a, b]`` is the index of ``a * b``. Instances are immutable; derived
    data (element orders, cyclic subgroups) is computed lazily and cached.
    Construct through :func:`from_cayley_table`, :func:`from_permutation_generators`,
    :func:`build_family` or :func:`direct_product` rather than directly.
    """

    def __init__(self, table: np.ndarray, label: str = "") -> None:
        n = int(table.shape[0])
        table = np.ascontiguousarray(table, dtype=_index_dtype(n))
        table.setflags(write=False)
        self.table = table
        self.order = n
        self.label = label
        self.identity = 0
        rows, cols = np.nonzero(table == 0)
        inverse = np.empty(n, dtype=np.int64)
        inverse[rows] = cols
        inverse.setflags(write=False)
        self.inverse = inverse

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label or '?'}, order={self.order})"

    def __len__(self) -> int:
        return self.order

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def power(self, x: int, k: int) -> int:
        o = int(self.element_orders[x])
        return int(self._powers[k % o, x])

    @cached_property
    def _powers(self) -> np.ndarray:
        # row k holds x**k for every x, for k < exponent
        n = self.order
        rows = [np.zeros(n, dtype=np.int64)]
        cols = np.arange(n)
        cur = cols.copy()
        while not np.all(cur == 0):
            rows.append(cur)
            cur = self.table[cur, cols].astype(np.int64)
        return np.vstack(rows)

    @cached_property
    def element_orders(self) -> np.ndarray:
        powers = self._powers
        n = self.order
        orders = np.full(n, powers.shape[0], dtype=np.int64)
        for k in range(powers.shape[0] - 1, 0, -1):
            orders[powers[k] == 0] = k
        orders[0] = 1
        orders.setflags(write=False)
        return orders

    @cached_property
    def cyclic_masks(self) -> tuple[int, ...]:
        """Bitset of <x> for every element x."""
        powers = self._powers
        out = []
        for x in range(self.order):
            flags = np.zeros(self.order, dtype=bool)
            flags[powers[: self.element_orders[x], x]] = True
            out.append(mask_from_bools(flags))
        return tuple(out)

    @cached_property
    def maximal_cyclic(self) -> tuple["Subgroup", ...]:
        masks = self.cyclic_masks
        seen: dict[int, int] = {}
        for x, m in enumerate(masks):
            seen.setdefault(m, x)
        distinct = sorted(seen, key=lambda m: (-m.bit_count(), m))
        maximal: list[int] = []
        # larger sets first; a set is maximal iff no already-kept set contains it
        for m in distinct:
            if not any(m & big == m for big in maximal):
                maximal.append(m)
        subs = [Subgroup(self, m, seen[m]) for m in maximal]
        subs.sort(key=lambda s: s.members)
        return tuple(subs)

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    @cached_property
    def is_cyclic(self) -> bool:
        return bool(np.any(self.element_orders == self.order))

    def subgroup_group(self, sub: "Subgroup", label: str = "") -> tuple["FiniteGroup", np.ndarray]:
        """The subgroup as a standalone group plus its local-to-parent index map.

        Local index 0 is the identity; the rest follow increasing parent index.
        """
        members = np.array(sub.members, dtype=np.int64)
        local = np.full(self.order, -1, dtype=np.int64)
        local[members] = np.arange(len(members))
        table = local[self.table[np.ix_(members, members)]]
        if np.any(table < 0):
            raise NotAGroup("member set is not closed under multiplication")
        return FiniteGroup(table, label or f"{self.label}[{len(members)}]"), members


@dataclass(frozen=True)
class Subgroup:
    """A subgroup as a bitset of element indices of its parent group."""

    parent: FiniteGroup = field(compare=False, repr=False)
    mask: int
    generator: Optional[int] = field(default=None, compare=False)

    @cached_property
    def members(self) -> tuple[int, ...]:
        return indices_from_mask(self.mask)

    @property
    def order(self) -> int:
        return self.mask.bit_count()

    def __len__(self) -> int:
        return self.order

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> int(x) & 1)

    def issubset(self, other: "Subgroup") -> bool:
        return self.mask & other.mask == self.mask


# ---------------------------------------------------------------------------
# construction


def _relabel_identity_first(table: np.ndarray, e: int) -> np.ndarray:
    if e == 0:
        return table
    perm = np.arange(table.shape[0])
    perm[0], perm[e] = e, 0
    # perm is an involution, so it is its own inverse
    return perm[table[np.ix_(perm, perm)]]


def _check_associative(table: np.ndarray) -> Optional[tuple[int, int, int]]:
    n = table.shape[0]
    t = table.astype(np.int64)
    chunk = max(1, 2_000_000 // max(1, n * n))
    for start in range(0, n, chunk):
        rows = t[start : start + chunk]
        lhs = t[rows]  # (ab)c
        rhs = rows[:, t]  # a(bc)
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            a, b, c = bad[0]
            return int(a) + start, int(b), int(c)
    return None


def from_cayley_table(table: Sequence[Sequence[int]], label: str = "") -> FiniteGroup:
    """Validate a Cayley table and return it as a group with identity at 0.

    Raises NotAGroup naming the first axiom that fails.
    """
    t = np.asarray(table)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise NotAGroup(f"table must be a non-empty square array, got shape {t.shape}")
    if not np.issubdtype(t.dtype, np.integer):
        raise NotAGroup("table entries must be integers")
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        raise NotAGroup(f"table entries must lie in 0..{n - 1}")
    expected = np.arange(n)
    if not (np.all(np.sort(t, axis=1) == expected) and np.all(np.sort(t, axis=0) == expected[:, None])):
        raise NotAGroup("table is not a Latin square")
    ids = [e for e in range(n) if np.array_equal(t[e], expected) and np.array_equal(t[:, e], expected)]
    if not ids:
        raise NotAGroup("no two-sided identity element")
    e = ids[0]
    # in a Latin square with identity e every row contains e exactly once;
    # two-sidedness of inverses still has to be checked
    for a in range(n):
        b = int(np.flatnonzero(t[a] == e)[0])
        if t[b, a] != e:
            raise NotAGroup(f"element {a} has no two-sided inverse")
    witness = _check_associative(t)
    if witness is not None:
        a, b, c = witness
        raise NotAGroup(f"associativity fails for ({a}, {b}, {c})")
    return FiniteGroup(_relabel_identity_first(t.astype(np.int64), e), label)


def _compose_table(perms: np.ndarray) -> np.ndarray:
    """Table of 'i then j' over an array of permutations (rows are images)."""
    n, d = perms.shape
    weights = np.int64(d) ** np.arange(d, dtype=np.int64)
    codes = perms.astype(np.int64) @ weights
    order = np.argsort(codes)
    sorted_codes = codes[order]
    table = np.empty((n, n), dtype=_index_dtype(n))
    chunk = max(1, 4_000_000 // max(1, n * d))
    for start in range(0, n, chunk):
        block = perms[start : start + chunk]
        # (i then j)(x) = perms[j][perms[i][x]]
        prod = perms[:, block].transpose(1, 0, 2)
        pos = np.searchsorted(sorted_codes, prod.astype(np.int64) @ weights)
        table[start : start + chunk] = order[pos]
    return table


def from_permutation_generators(
    generators: Sequence[Sequence[int]],
    label: str = "",
    order_cap: Optional[int] = None,
) -> FiniteGroup:
    """Close a set of permutations of {0..d-1} under composition.

    Elements are indexed in breadth-first discovery order starting from the
    identity. The product ``a * b`` means "apply a, then b".
    """
    cap = default_order_cap() if order_cap is None else order_cap
    gens = [tuple(int(v) for v in g) for g in generators]
    degree = len(gens[0]) if gens else 1
    for g in gens:
        if len(g) != degree or sorted(g) != list(range(degree)):
            raise NotAGroup(f"generator {g} is not a bijection on 0..{degree - 1}")
    ident = tuple(range(degree))
    index = {ident: 0}
    elements = [ident]
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = tuple(s[v] for v in g)
            if h not in index:
                if len(elements) >= cap:
                    raise OrderCapExceeded(f"closure exceeds order cap {cap}")
                index[h] = len(elements)
                elements.append(h)
                queue.append(h)
    return FiniteGroup(_compose_table(np.array(elements, dtype=np.int64)), label)


def parse_cycles(text: str, degree: Optional[int] = None) -> list[int]:
    """Parse cycle notation such as ``"(0 1 2)(3 4)"`` into an image list."""
    from .errors import ParseError

    cycles = []
    rest = text.strip()
    while rest:
        if not rest.startswith("(") or ")" not in rest:
            raise ParseError(f"bad cycle notation: {text!r}")
        close = rest.index(")")
        body = rest[1:close].replace(",", " ").split()
        try:
            cycles.append([int(v) for v in body])
        except ValueError as exc:
            raise ParseError(f"bad cycle notation: {text!r}") from exc
        rest = rest[close + 1 :].strip()
    points = [v for c in cycles for v in c]
    if any(v < 0 for v in points) or len(points) != len(set(points)):
        raise ParseError(f"cycles must be disjoint non-negative points: {text!r}")
    d = max(points, default=-1) + 1
    if degree is not None:
        if d > degree:
            raise ParseError(f"point {d - 1} outside domain of size {degree}")
        d = degree
    image = list(range(d))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            image[a] = b
    return image


def parse_generator_lines(lines: Iterable[str]) -> list[list[int]]:
    """One generator per non-blank line; '#' starts a comment."""
    raw = [ln.split("#", 1)[0].strip() for ln in lines]
    raw = [ln for ln in raw if ln]
    first = [parse_cycles(ln) for ln in raw]
    degree = max((len(g) for g in first), default=1)
    return [parse_cycles(ln, degree) for ln in raw]


# ---------------------------------------------------------------------------
# families


@dataclass(frozen=True)
class Cyclic:
    n: int

    @property
    def label(self) -> str:
        return f"Z({self.n})"


@dataclass(frozen=True)
class Dihedral:
    """Dihedral group of the given order 2n: <r, s | r^n = s^2 = e, srs = r^-1>."""

    order: int

    @property
    def label(self) -> str:
        return f"D({self.order})"


@dataclass(frozen=True)
class Dicyclic:
    """Dicyclic group of order 4m: <a, b | a^2m = e, b^2 = a^m, b^-1 a b = a^-1>."""

    order: int

    @property
    def label(self) -> str:
        m = self.order // 4
        if self.order >= 8 and m & (m - 1) == 0:
            return f"Q({self.order})"
        return f"Dic({self.order})"


@dataclass(frozen=True)
class Symmetric:
    degree: int

    @property
    def label(self) -> str:
        return f"S({self.degree})"


@dataclass(frozen=True)
class ElementaryAbelian:
    p: int
    k: int

    @property
    def label(self) -> str:
        return f"E({self.p},{self.k})"


FamilySpec = Union[Cyclic, Dihedral, Dicyclic, Symmetric, ElementaryAbelian]


def _family_order(spec: FamilySpec) -> int:
    if isinstance(spec, Cyclic):
        return spec.n
    if isinstance(spec, (Dihedral, Dicyclic)):
        return spec.order
    if isinstance(spec, Symmetric):
        return math.factorial(spec.degree)
    return spec.p**spec.k


def build_family(spec: FamilySpec, order_cap: Optional[int] = None) -> FiniteGroup:
    """Build one of the supported named families.

    Index layouts: Z(n) uses residues; D(2n) puts r^k s^j at k + n*j;
    Dic(4m) puts a^k b^j at k + 2m*j; E(p,k) uses base-p digit vectors.
    """
    cap = default_order_cap() if order_cap is None else order_cap
    if isinstance(spec, Cyclic):
        if spec.n < 1:
            raise UnsupportedSpec(f"Z(n) needs n >= 1, got {spec.n}")
    elif isinstance(spec, Dihedral):
        if spec.order < 2 or spec.order % 2:
            raise UnsupportedSpec(f"D(2n) needs an even order >= 2, got {spec.order}")
    elif isinstance(spec, Dicyclic):
        if spec.order < 4 or spec.order % 4:
            raise UnsupportedSpec(f"Dic(4m) needs an order divisible by 4, got {spec.order}")
    elif isinstance(spec, Symmetric):
        if not 1 <= spec.degree <= 7:
            raise UnsupportedSpec(f"S(d) needs 1 <= d <= 7, got {spec.degree}")
    elif isinstance(spec, ElementaryAbelian):
        if not is_prime(spec.p) or spec.k < 1:
            raise UnsupportedSpec(f"E(p,k) needs prime p and k >= 1, got ({spec.p},{spec.k})")
    else:
        raise UnsupportedSpec(f"unknown family descriptor {spec!r}")
    n = _family_order(spec)
    if n > cap:
        raise OrderCapExceeded(f"{spec.label} has order {n} > cap {cap}")

    if isinstance(spec, Cyclic):
        i = np.arange(n)
        return FiniteGroup((i[:, None] + i[None, :]) % n, spec.label)

    if isinstance(spec, (Dihedral, Dicyclic)):
        half = n // 2
        idx = np.arange(n)
        k, j = idx % half, idx // half
        k1, j1 = k[:, None], j[:, None]
        k2, j2 = k[None, :], j[None, :]
        rot = k1 + np.where(j1 == 1, -k2, k2)
        if isinstance(spec, Dicyclic):
            rot = rot + np.where((j1 == 1) & (j2 == 1), half // 2, 0)
        return FiniteGroup(rot % half + half * (j1 ^ j2), spec.label)

    if isinstance(spec, Symmetric):
        d = spec.degree
        if d == 1:
            return FiniteGroup(np.zeros((1, 1), dtype=np.int64), spec.label)
        gens = [list(range(1, d)) + [0], [1, 0] + list(range(2, d))]
        return from_permutation_generators(gens, spec.label, order_cap=cap)

    p, k = spec.p, spec.k
    digits = (np.arange(n)[:, None] // p ** np.arange(k)) % p
    summed = (digits[:, None, :] + digits[None, :, :]) % p
    return FiniteGroup(summed @ (p ** np.arange(k)), spec.label)


def direct_product(a: FiniteGroup, b: FiniteGroup, order_cap: Optional[int] = None) -> FiniteGroup:
    """Componentwise product; the pair (x, y) gets index x*|B| + y."""
    cap = default_order_cap() if order_cap is None else order_cap
    n = a.order * b.order
    if n > cap:
        raise OrderCapExceeded(f"|{a.label} x {b.label}| = {n} > cap {cap}")
    ta = a.table.astype(np.int64)
    tb = b.table.astype(np.int64)
    table = (ta[:, None, :, None] * b.order + tb[None, :, None, :]).reshape(n, n)
    return FiniteGroup(table, f"{a.label}x{b.label}")


def product_of(groups: Sequence[FiniteGroup], order_cap: Optional[int] = None) -> FiniteGroup:
    return reduce(lambda x, y: direct_product(x, y, order_cap), groups)


# ---------------------------------------------------------------------------
# queries


def element_order(G: FiniteGroup, x: int) -> int:
    return int(G.element_orders[x])


def cyclic_subgroup(G: FiniteGroup, x: int) -> Subgroup:
    return Subgroup(G, G.cyclic_masks[x], int(x))


def maximal_cyclic_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Cyclic subgroups not strictly inside another cyclic subgroup, sorted by members."""
    return list(G.maximal_cyclic)


def exponent(G: FiniteGroup) -> int:
    return math.lcm(*(int(o) for o in np.unique(G.element_orders)))


def center(G: FiniteGroup) -> Subgroup:
    t = G.table
    central = np.all(t == t.T, axis=1)
    return Subgroup(G, mask_from_bools(central))


def is_cyclic(G: FiniteGroup) -> bool:
    return G.is_cyclic


def p_elements(G: FiniteGroup, p: int) -> np.ndarray:
    """Indices of elements whose order is a power of p."""
    orders = G.element_orders
    reduced = orders.copy()
    while True:
        step = reduced % p == 0
        if not step.any():
            break
        reduced[step] //= p
    return np.flatnonzero(reduced == 1)


def is_nilpotent(G: FiniteGroup) -> bool:
    """True iff each set of p-power-order elements is closed, i.e. a normal Sylow subgroup."""
    for p in prime_factorization(G.order):
        members = p_elements(G, p)
        inside = np.zeros(G.order, dtype=bool)
        inside[members] = True
        if not inside[G.table[np.ix_(members, members)]].all():
            return False
    return True


def is_p_group(G: FiniteGroup) -> bool:
    return len(prime_factorization(G.order)) == 1


def is_generalized_quaternion(P: FiniteGroup) -> bool:
    n = P.order
    if n < 2 or n & (n - 1):
        raise NotAPGroup(f"order {n} is not a power of 2")
    if n < 8 or P.is_cyclic:
        return False
    return int(np.count_nonzero(P.element_orders == 2)) == 1
