"""Numerical semigroups and their relative ideals.

A numerical semigroup ``H`` is a cofinite additive submonoid of the
non-negative integers.  Values here are immutable; every operation returns a
new object.  The semigroup ring ``k[[t^H]]`` is never built: everything is
decided on exponent sets.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from math import gcd
from functools import reduce
from typing import Iterable, Sequence

from .errors import MixedBase, NotContained, NotMember, NotNumerical


def _apery_dijkstra(gens: Sequence[int], m: int) -> tuple[int, ...]:
    # shortest path over residues mod m; edge weights are the generators
    dist = [-1] * m
    heap = [(0, 0)]
    while heap:
        w, r = heapq.heappop(heap)
        if dist[r] != -1:
            continue
        dist[r] = w
        for g in gens:
            nr = (r + g) % m
            if dist[nr] == -1:
                heapq.heappush(heap, (w + g, nr))
    return tuple(dist)


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup, identified by its minimal generating set.

    Build instances with :func:`semigroup_from_generators`.  Equality and
    hashing use the minimal generators only.
    """

    generators: tuple[int, ...]
    frobenius: int = field(compare=False)
    gaps: tuple[int, ...] = field(compare=False, repr=False)
    _apery: tuple[int, ...] = field(compare=False, repr=False)
    _table: bytes = field(compare=False, repr=False)

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        if x < len(self._table):
            return bool(self._table[x])
        return True

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.generators)) + ">"

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def conductor(self) -> int:
        return self.frobenius + 1

    @property
    def type(self) -> int:
        return len(pseudo_frobenius(self))

    def is_full(self) -> bool:
        """True for the semigroup of all non-negative integers."""
        return self.frobenius == -1

    def elements_upto(self, bound: int) -> list[int]:
        return [x for x in range(bound + 1) if x in self]

    def issubset(self, other: NumericalSemigroup) -> bool:
        return all(g in other for g in self.generators)

    @classmethod
    def from_generators(cls, gens: Iterable[int]) -> NumericalSemigroup:
        return semigroup_from_generators(gens)

    @classmethod
    def from_gaps(cls, gaps: Iterable[int]) -> NumericalSemigroup:
        """Semigroup with the given gap set; ``ValueError`` if the complement
        is not closed under addition."""
        gapset = frozenset(gaps)
        if not gapset:
            return semigroup_from_generators([1])
        if min(gapset) < 1:
            raise ValueError("gaps must be positive integers")
        top = max(gapset)
        m = next(x for x in range(1, top + 2) if x not in gapset)
        cand = [x for x in range(1, top + m + 1) if x not in gapset]
        H = semigroup_from_generators(cand)
        if frozenset(H.gaps) != gapset:
            raise ValueError(f"{sorted(gapset)} is not the gap set of a semigroup")
        return H


def semigroup_from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    gens = sorted(set(int(g) for g in gens))
    if not gens:
        raise ValueError("at least one generator is required")
    if gens[0] < 1:
        raise ValueError("generators must be positive integers")
    if reduce(gcd, gens) != 1:
        raise NotNumerical(f"gcd of {gens} is {reduce(gcd, gens)}, not 1")

    m = gens[0]
    apery = _apery_dijkstra(gens, m)
    frob = max(apery) - m
    size = max(frob + gens[-1], 0) + 1
    table = bytes(1 if x >= apery[x % m] else 0 for x in range(size))

    def member(x: int) -> bool:
        return x >= 0 and (x >= size or bool(table[x]))

    minimal: list[int] = []
    for g in gens:
        if not any(member(g - h) for h in minimal):
            minimal.append(g)
    gaps = tuple(x for x in range(1, frob + 1) if not table[x])
    return NumericalSemigroup(tuple(minimal), frob, gaps, apery, table)


def apery_set(H: NumericalSemigroup, m: int) -> list[int]:
    """Least element of ``H`` in each residue class mod ``m``, by residue."""
    if m <= 0 or m not in H:
        raise NotMember(f"{m} is not a nonzero element of {H}")
    out = []
    for r in range(m):
        w = r
        while w not in H:
            w += m
        out.append(w)
    return out


def pseudo_frobenius(H: NumericalSemigroup) -> list[int]:
    """Gaps ``x`` with ``x + h`` in ``H`` for every nonzero ``h`` in ``H``.

    Testing the minimal generators is enough.  ``PF(N) = [-1]`` by convention,
    so the full semigroup has type 1.
    """
    if H.is_full():
        return [-1]
    return [x for x in H.gaps if all((x + g) in H for g in H.generators)]


def _reduce_generators(H: NumericalSemigroup, gens: Iterable[int]) -> tuple[int, ...]:
    kept: list[int] = []
    for g in sorted(set(gens)):
        if not any((g - k) in H for k in kept):
            kept.append(g)
    return tuple(kept)


@dataclass(frozen=True)
class RelativeIdeal:
    """An ``H``-stable set ``E = U (g + H)`` stored by reduced generators."""

    base: NumericalSemigroup
    generators: tuple[int, ...]

    def __contains__(self, x: int) -> bool:
        return any((x - g) in self.base for g in self.generators)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.generators)) + ")+" + str(self.base)

    @property
    def min_value(self) -> int:
        return self.generators[0]

    @property
    def stable_bound(self) -> int:
        """Every integer above this bound belongs to the ideal."""
        return self.generators[0] + self.base.frobenius

    def __add__(self, other: RelativeIdeal | int) -> RelativeIdeal:
        if isinstance(other, int):
            return RelativeIdeal(self.base, tuple(g + other for g in self.generators))
        return ideal_sum(self, other)

    __radd__ = __add__

    def power(self, n: int) -> RelativeIdeal:
        if n < 0:
            raise ValueError("negative power")
        out = ideal_from_generators(self.base, [0])
        for _ in range(n):
            out = ideal_sum(out, self)
        return out

    def issubset(self, other: RelativeIdeal) -> bool:
        return all(g in other for g in self.generators)

    def is_integral(self) -> bool:
        return all(g in self.base for g in self.generators)

    def elements_between(self, lo: int, hi: int) -> list[int]:
        return [x for x in range(lo, hi + 1) if x in self]


def ideal_from_generators(H: NumericalSemigroup, gens: Iterable[int]) -> RelativeIdeal:
    gens = list(gens)
    if not gens:
        raise ValueError("an ideal needs at least one generator")
    return RelativeIdeal(H, _reduce_generators(H, gens))


def ideal_sum(E: RelativeIdeal, F: RelativeIdeal) -> RelativeIdeal:
    """Minkowski sum ``E + F``, the product of the monomial ideals."""
    if E.base != F.base:
        raise MixedBase(f"ideals over {E.base} and {F.base}")
    sums = [a + b for a in E.generators for b in F.generators]
    return RelativeIdeal(E.base, _reduce_generators(E.base, sums))


def colength(E: RelativeIdeal, F: RelativeIdeal) -> int:
    """``|E \\ F|`` for ``F`` contained in ``E``."""
    if E.base != F.base:
        raise MixedBase(f"ideals over {E.base} and {F.base}")
    if not F.issubset(E):
        raise NotContained(f"{F} is not contained in {E}")
    hi = F.generators[-1] + F.base.frobenius + 1
    return sum(1 for x in range(E.min_value, hi + 1) if x in E and x not in F)
