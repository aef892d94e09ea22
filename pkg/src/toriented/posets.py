"""Finite posets, maximal-chain parity and order polytopes.

Chain length counts *elements*: a maximal chain ``a1 < ... < ak`` has
length k.  With that convention a one-element poset gives the segment
(RP^1, orientable) and a two-element chain gives the triangle (RP^2, not
orientable).  Combinatorics texts usually count covers instead; do not mix
the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Iterator, Sequence

from .errors import ResourceLimitError, ValidationError
from .lattice import FacetData, LatticePolytope
from .orientability import polytope_toric_orientable, spherical_orientable

DEFAULT_CHAIN_CAP = 20


@dataclass(frozen=True, eq=False)
class FinitePoset:
    """Poset on ``elements`` given by relations ``a < b``.

    Input relations may be redundant (any generating set of the order);
    ``covers`` always holds the transitive reduction.
    """

    elements: tuple[Hashable, ...]
    relations: tuple[tuple[Hashable, Hashable], ...] = ()

    def __post_init__(self):
        elems = tuple(self.elements)
        object.__setattr__(self, "elements", elems)
        if len(set(elems)) != len(elems):
            raise ValidationError("duplicate poset elements")
        index = {e: i for i, e in enumerate(elems)}
        n = len(elems)
        above = [0] * n  # bitmask of strictly greater elements
        for a, b in self.relations:
            if a not in index or b not in index:
                raise ValidationError(f"relation ({a!r}, {b!r}) mentions an unknown element")
            if a == b:
                raise ValidationError(f"relation ({a!r}, {a!r}) is reflexive; relations must be strict")
            above[index[a]] |= 1 << index[b]
        # transitive closure (Warshall on bitmasks)
        for k in range(n):
            bit = 1 << k
            for i in range(n):
                if above[i] & bit:
                    above[i] |= above[k]
        for i in range(n):
            if (above[i] >> i) & 1:
                raise ValidationError(f"relations contain a cycle through {elems[i]!r}")
        object.__setattr__(self, "_above", tuple(above))
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_covers(cls, elements: Iterable[Hashable], covers: Iterable[Sequence[Hashable]]) -> "FinitePoset":
        return cls(tuple(elements), tuple((a, b) for a, b in covers))

    from_relations = from_covers

    def __eq__(self, other):
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return self.elements == other.elements and self._above == other._above

    def __hash__(self):
        return hash((self.elements, self._above))

    def __len__(self):
        return len(self.elements)

    def less(self, a: Hashable, b: Hashable) -> bool:
        return bool((self._above[self._index[a]] >> self._index[b]) & 1)

    @cached_property
    def cover_indices(self) -> tuple[tuple[int, int], ...]:
        n = len(self.elements)
        out = []
        for i in range(n):
            up = self._above[i]
            implied = 0
            for j in range(n):
                if (up >> j) & 1:
                    implied |= self._above[j]
            direct = up & ~implied
            out.extend((i, j) for j in range(n) if (direct >> j) & 1)
        return tuple(out)

    @property
    def covers(self) -> tuple[tuple[Hashable, Hashable], ...]:
        e = self.elements
        return tuple((e[i], e[j]) for i, j in self.cover_indices)

    @cached_property
    def _below(self) -> tuple[int, ...]:
        n = len(self.elements)
        below = [0] * n
        for i in range(n):
            for j in range(n):
                if (self._above[i] >> j) & 1:
                    below[j] |= 1 << i
        return tuple(below)

    def minimal_indices(self) -> list[int]:
        return [i for i in range(len(self.elements)) if not self._below[i]]

    def maximal_indices(self) -> list[int]:
        return [i for i in range(len(self.elements)) if not self._above[i]]

    def upsets(self) -> Iterator[int]:
        """Bitmasks of all upward-closed subsets."""
        n = len(self.elements)
        for mask in range(1 << n):
            if all(not (mask >> i) & 1 or (self._above[i] & ~mask) == 0 for i in range(n)):
                yield mask


@dataclass(frozen=True)
class ChainReport:
    maximal_chains: tuple[tuple[Hashable, ...], ...]
    lengths: tuple[int, ...]
    all_odd: bool
    ranked_mod2: bool


def _chain_indices(p: FinitePoset, cap: int) -> list[tuple[int, ...]]:
    if len(p) > cap:
        raise ResourceLimitError(f"poset has {len(p)} elements, chain enumeration cap is {cap}")
    succ: dict[int, list[int]] = {i: [] for i in range(len(p))}
    for a, b in p.cover_indices:
        succ[a].append(b)
    chains = []

    def walk(path):
        nxt = succ[path[-1]]
        if not nxt:
            chains.append(tuple(path))
            return
        for b in nxt:
            path.append(b)
            walk(path)
            path.pop()

    for m in p.minimal_indices():
        walk([m])
    return chains


def maximal_chains(p: FinitePoset, cap: int = DEFAULT_CHAIN_CAP) -> ChainReport:
    chains = _chain_indices(p, cap)
    lengths = tuple(len(c) for c in chains)
    parities = {k % 2 for k in lengths}
    return ChainReport(
        maximal_chains=tuple(tuple(p.elements[i] for i in c) for c in chains),
        lengths=lengths,
        all_odd=parities == {1},
        ranked_mod2=len(parities) <= 1,
    )


def _unit(n: int, i: int, sign: int = 1) -> tuple[int, ...]:
    return tuple(sign if j == i else 0 for j in range(n))


def order_polytope(p: FinitePoset) -> LatticePolytope:
    """H-representation of O(P) in coordinates ordered like ``p.elements``.

    Facets, in this order: ``y_a >= 0`` for minimal a, ``-y_b >= -1`` for
    maximal b, ``y_b - y_a >= 0`` for each cover a < b.
    """
    n = len(p)
    if n == 0:
        raise ValidationError("order polytope of the empty poset is not defined")
    e = p.elements
    facets = []
    for a in p.minimal_indices():
        facets.append(FacetData(_unit(n, a), 0, f"min({e[a]})"))
    for b in p.maximal_indices():
        facets.append(FacetData(_unit(n, b, -1), -1, f"max({e[b]})"))
    for a, b in p.cover_indices:
        normal = tuple(1 if j == b else -1 if j == a else 0 for j in range(n))
        facets.append(FacetData(normal, 0, f"cover({e[a]}<{e[b]})"))

    def vertices():
        return tuple(sorted(tuple((mask >> i) & 1 for i in range(n)) for mask in p.upsets()))

    return LatticePolytope(n, tuple(facets), vertices)


def chain_facet_indices(p: FinitePoset, chain: Sequence[Hashable]) -> list[int]:
    """Facets of O(P) attached to a maximal chain: min, each cover, max (k+1 of them)."""
    e = p.elements
    labels = [f"min({chain[0]})"]
    labels += [f"cover({a}<{b})" for a, b in zip(chain, chain[1:])]
    labels.append(f"max({chain[-1]})")
    poly = order_polytope(p)
    where = {f.label: i for i, f in enumerate(poly.facets)}
    missing = [lab for lab in labels if lab not in where]
    if missing:
        raise ValidationError(f"{list(chain)} is not a maximal chain of the poset over {list(e)}")
    return [where[lab] for lab in labels]


def theorem4_check(p: FinitePoset) -> bool:
    """Real toric variety of O(P) is orientable iff every maximal chain has odd length."""
    return maximal_chains(p).all_odd


def theorem6_check(p: FinitePoset) -> bool:
    """Spherical toric variety of O(P) is orientable iff P is ranked mod 2."""
    return maximal_chains(p).ranked_mod2


def cross_validate(p: FinitePoset) -> dict[str, bool]:
    """Chain-parity predictions against the general polytope machinery."""
    poly = order_polytope(p)
    toric = polytope_toric_orientable(poly)[0].orientable
    sph = spherical_orientable(poly)[0].orientable
    t4 = theorem4_check(p)
    t6 = theorem6_check(p)
    return {
        "chains_all_odd": t4,
        "ranked_mod2": t6,
        "toric_orientable": toric,
        "spherical_orientable": sph,
        "agree": t4 == toric and t6 == sph,
    }


def all_posets(n: int) -> Iterator[FinitePoset]:
    """Every labelled strict partial order on ``range(n)``.

    Element k is added on top of each poset on ``range(k)`` by choosing a
    down-closed set below it and an up-closed set above it, with every chosen
    lower element below every chosen upper one.
    """
    def extend(k, above):
        if k == n:
            yield above
            return
        below = [0] * k
        for i in range(k):
            for j in range(k):
                if (above[i] >> j) & 1:
                    below[j] |= 1 << i
        full = (1 << k) - 1
        downs = [m for m in range(1 << k) if all(not (m >> i) & 1 or (below[i] & ~m) == 0 for i in range(k))]
        ups = [m for m in range(1 << k) if all(not (m >> i) & 1 or (above[i] & ~m) == 0 for i in range(k))]
        for d in downs:
            common_above = full
            for i in range(k):
                if (d >> i) & 1:
                    common_above &= above[i]
            for u in ups:
                if u & d or (u & ~common_above):
                    continue
                new = list(above)
                for i in range(k):
                    if (d >> i) & 1:
                        new[i] |= 1 << k
                new.append(u)
                yield from extend(k + 1, new)

    for above in extend(0, []):
        rels = tuple((i, j) for i in range(n) for j in range(n) if (above[i] >> j) & 1)
        yield FinitePoset(tuple(range(n)), rels)
