"""Sylow decomposition of nilpotent groups and the strong-product view of their EPGs."""

from __future__ import annotations

import json
import weakref
from dataclasses import dataclass
from functools import reduce
from math import prod
from typing import Optional

import numpy as np

from .epg import Graph, enhanced_power_graph
from .errors import NotNilpotent
from .groups import (
    FiniteGroup,
    Subgroup,
    center,
    cyclic_subgroup,
    is_generalized_quaternion,
    is_nilpotent,
    mask_from_indices,
    p_elements,
    prime_factorization,
)
from .invariants import strong_product


@dataclass(frozen=True, eq=False)
class SylowFactor:
    prime: int
    exponent: int
    subgroup: Subgroup
    group: FiniteGroup  # the factor as a standalone group
    members: np.ndarray  # local index -> parent index

    @property
    def order(self) -> int:
        return self.prime**self.exponent


@dataclass(frozen=True, eq=False)
class SylowDecomposition:
    """Sylow factors sorted by prime, with x = x_1 x_2 ... x_r for every element.

    ``components[x, i]`` is the parent index of x_i and ``local[x, i]`` its index
    inside factor i.
    """

    parent: FiniteGroup
    factors: tuple[SylowFactor, ...]
    components: np.ndarray
    local: np.ndarray

    @property
    def r(self) -> int:
        return len(self.factors)

    def component_map(self, x: int) -> tuple[int, ...]:
        return tuple(int(c) for c in self.components[x])

    def support(self, x: int) -> frozenset:
        """Positions i with a non-identity component x_i."""
        return frozenset(i for i, c in enumerate(self.components[x]) if c != 0)

    def psi(self) -> np.ndarray:
        """Row-major flattened index of (x_1, ..., x_r) for each element x."""
        sizes = [f.group.order for f in self.factors]
        flat = np.zeros(self.parent.order, dtype=np.int64)
        for i, size in enumerate(sizes):
            flat = flat * size + self.local[:, i]
        return flat

    def to_json_dict(self) -> dict:
        return {
            "label": self.parent.label,
            "order": self.parent.order,
            "primes": [f.prime for f in self.factors],
            "exponents": [f.exponent for f in self.factors],
            "factor_orders": [f.order for f in self.factors],
            "factor_members": [[int(m) for m in f.members] for f in self.factors],
            "components": self.components.tolist(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


_DEC_CACHE: "weakref.WeakKeyDictionary[FiniteGroup, SylowDecomposition]" = weakref.WeakKeyDictionary()


def _component_exponent(order: int, p: int) -> int:
    """a with a = 1 mod (p-part of order) and a = 0 mod the rest."""
    q = 1
    while order % (q * p) == 0:
        q *= p
    if q == 1:
        return 0
    rest = order // q
    return rest * pow(rest, -1, q) % order


def sylow_decomposition(G: FiniteGroup) -> SylowDecomposition:
    if G in _DEC_CACHE:
        return _DEC_CACHE[G]
    if not is_nilpotent(G):
        raise NotNilpotent(f"{G.label or 'group'} is not nilpotent")
    factors = []
    for p, lam in sorted(prime_factorization(G.order).items()):
        sub = Subgroup(G, mask_from_indices(p_elements(G, p)))
        group, members = G.subgroup_group(sub, f"{G.label}_{p}")
        factors.append(SylowFactor(p, lam, sub, group, members))
    n, r = G.order, len(factors)
    components = np.zeros((n, r), dtype=np.int64)
    local = np.zeros((n, r), dtype=np.int64)
    for i, f in enumerate(factors):
        to_local = np.full(n, -1, dtype=np.int64)
        to_local[f.members] = np.arange(len(f.members))
        for x in range(n):
            o = int(G.element_orders[x])
            components[x, i] = G.power(x, _component_exponent(o, f.prime))
        local[:, i] = to_local[components[:, i]]
    dec = SylowDecomposition(G, tuple(factors), components, local)
    _DEC_CACHE[G] = dec
    return dec


def subset_product(G: FiniteGroup, masks) -> int:
    """Bitset of {a_1 a_2 ... a_k : a_i in set i}."""

    def times(acc: int, mask: int) -> int:
        left = [i for i in range(G.order) if acc >> i & 1]
        right = [i for i in range(G.order) if mask >> i & 1]
        return mask_from_indices(G.table[np.ix_(left, right)].ravel())

    return reduce(times, masks, 1)


def component_subgroup_closure(x: int, dec: SylowDecomposition) -> list[Subgroup]:
    """[<x_1>, ..., <x_r>], checked to lie in <x> and to multiply out to <x>."""
    G = dec.parent
    whole = cyclic_subgroup(G, x)
    parts = [cyclic_subgroup(G, int(c)) for c in dec.components[x]]
    for part in parts:
        if not part.issubset(whole):
            raise AssertionError(f"<{part.generator}> is not inside <{x}>")
    if subset_product(G, [p.mask for p in parts]) != whole.mask:
        raise AssertionError(f"component subgroups of {x} do not multiply out to <{x}>")
    return parts


def epg_strong_product_decomposition(G: FiniteGroup) -> tuple[Graph, np.ndarray]:
    """Strong product of the Sylow-factor EPGs and the map x -> (x_1, ..., x_r)."""
    dec = sylow_decomposition(G)
    if dec.r == 0:
        return enhanced_power_graph(G), dec.psi()
    product = strong_product([enhanced_power_graph(f.group) for f in dec.factors])
    return product, dec.psi()


def maximal_cyclic_products(dec: SylowDecomposition) -> set[int]:
    """Bitsets of M_1 M_2 ... M_r over all choices of maximal cyclic M_i of P_i."""
    per_factor = []
    for f in dec.factors:
        per_factor.append(
            [mask_from_indices(f.members[list(M.members)]) for M in f.group.maximal_cyclic]
        )
    out = {1}
    for choices in per_factor:
        out = {subset_product(dec.parent, (acc, m)) for acc in out for m in choices}
    return out


@dataclass(frozen=True)
class KappaPrediction:
    kappa: int
    cut: frozenset
    quaternion: bool
    prime: int  # prime of the single non-cyclic Sylow factor


def predicted_kappa(G: FiniteGroup) -> Optional[KappaPrediction]:
    """Closed-form connectivity when exactly one Sylow factor is non-cyclic.

    Returns None for cyclic groups, p-groups, and groups with two or more
    non-cyclic Sylow factors.
    """
    dec = sylow_decomposition(G)
    if G.is_cyclic or dec.r < 2:
        return None
    noncyclic = [i for i, f in enumerate(dec.factors) if not f.group.is_cyclic]
    if len(noncyclic) != 1:
        return None
    k = noncyclic[0]
    f = dec.factors[k]
    n = G.order
    quaternion = f.prime == 2 and is_generalized_quaternion(f.group)
    if quaternion:
        allowed = set(int(f.members[z]) for z in center(f.group).members)
        kappa = n // 2 ** (f.exponent - 1)
    else:
        allowed = {0}
        kappa = n // f.order
    cut = frozenset(x for x in range(n) if int(dec.components[x, k]) in allowed)
    return KappaPrediction(kappa, cut, quaternion, f.prime)


def min_degree_from_factors(dec: SylowDecomposition) -> int:
    """(prod_i min |M'| over maximal cyclic M' of P_i) - 1."""
    return prod(min(M.order for M in f.group.maximal_cyclic) for f in dec.factors) - 1
