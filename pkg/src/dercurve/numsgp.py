"""Numerical semigroups: membership, Apery sets, pseudo-Frobenius numbers, lengths.

A semigroup is stored through its Apery set with respect to the smallest
generator; every other invariant is derived from that table.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property, reduce
from math import gcd
from typing import Iterable, Sequence

from .errors import Duplicate, GcdNotOne, NotMember, NotMinimal


def _apery_table(gens: Sequence[int], m: int) -> list[int]:
    # Dijkstra on residues mod m; edge r -> r+g costs g.
    dist: list[int | None] = [None] * m
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if d > dist[r]:
            continue
        for g in gens:
            nd = d + g
            nr = nd % m
            if dist[nr] is None or nd < dist[nr]:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    return dist


def representable(x: int, gens: Iterable[int]) -> bool:
    """Bounded coin-problem DP: is ``x`` a nonnegative combination of ``gens``?"""
    if x < 0:
        return False
    gens = [g for g in gens if g <= x]
    reach = bytearray(x + 1)
    reach[0] = 1
    for g in gens:
        for y in range(g, x + 1):
            if reach[y - g]:
                reach[y] = 1
    return bool(reach[x])


def minimalize(gens: Iterable[int]) -> list[int]:
    """Sorted, deduplicated minimal generating subset of ``gens``."""
    out: list[int] = []
    for g in sorted(set(gens)):
        if not representable(g, out):
            out.append(g)
    return out


class NumericalSemigroup:
    """Immutable numerical semigroup with cached invariants."""

    def __init__(self, gens: Sequence[int]):
        gens = list(gens)
        if not gens:
            raise ValueError("empty generator list")
        if any((not isinstance(g, int)) or g < 1 for g in gens):
            raise ValueError(f"generators must be positive integers: {gens}")
        if len(set(gens)) != len(gens):
            raise Duplicate(f"repeated generators in {gens}")
        if reduce(gcd, gens) != 1:
            raise GcdNotOne(f"gcd{tuple(gens)} = {reduce(gcd, gens)}")
        for i, g in enumerate(gens):
            others = gens[:i] + gens[i + 1:]
            if representable(g, others):
                raise NotMinimal(i, g)
        self._gens = tuple(sorted(gens))
        self._ap = tuple(_apery_table(self._gens, self._gens[0]))

    def __repr__(self):
        return f"NumericalSemigroup({list(self._gens)})"

    def __eq__(self, other):
        return isinstance(other, NumericalSemigroup) and self._gens == other._gens

    def __hash__(self):
        return hash(self._gens)

    @property
    def generators(self) -> tuple[int, ...]:
        return self._gens

    @property
    def multiplicity(self) -> int:
        return self._gens[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self._gens)

    @property
    def is_N(self) -> bool:
        return self._gens == (1,)

    @cached_property
    def frobenius(self) -> int:
        return max(self._ap) - self._gens[0]

    @property
    def conductor(self) -> int:
        return self.frobenius + 1

    @cached_property
    def gaps(self) -> frozenset[int]:
        return frozenset(x for x in range(1, self.conductor) if x not in self)

    def __contains__(self, x: int) -> bool:
        return x >= 0 and x >= self._ap[x % self._gens[0]]

    def contains(self, x: int) -> bool:
        return x in self

    def apery(self, m: int | None = None) -> list[int]:
        """Least element of each residue class mod ``m`` (default: multiplicity)."""
        if m is None or m == self._gens[0]:
            return list(self._ap)
        if m < 1 or m not in self:
            raise NotMember(f"{m} is not a nonzero element of {self!r}")
        return _apery_table(self._gens, m)

    @cached_property
    def pseudo_frobenius(self) -> frozenset[int]:
        # maximal Apery elements under a <= b iff b - a in S
        ap = self._ap
        maximal = [
            a for a in ap
            if not any(b != a and (b - a) in self for b in ap)
        ]
        return frozenset(a - self._gens[0] for a in maximal)

    @property
    def type(self) -> int:
        return len(self.pseudo_frobenius)

    def length_set(self, s: int) -> frozenset[int]:
        """All factorization lengths of ``s`` in the generators."""
        if s == 0 or s not in self:
            raise NotMember(f"{s} is not a nonzero element of {self!r}")
        gens = self._gens[::-1]
        lengths: set[int] = set()

        def dfs(i, rest, used):
            g = gens[i]
            if i == len(gens) - 1:
                if rest % g == 0:
                    lengths.add(used + rest // g)
                return
            for k in range(rest // g + 1):
                dfs(i + 1, rest - k * g, used + k)

        dfs(0, s, 0)
        return frozenset(lengths)

    @cached_property
    def is_homogeneous(self) -> bool:
        return all(len(self.length_set(a)) == 1 for a in self._ap if a)


@dataclass(frozen=True)
class LengthSet:
    element: int
    lengths: frozenset[int]


def new_semigroup(gens: Sequence[int]) -> NumericalSemigroup:
    return NumericalSemigroup(gens)


def contains(S: NumericalSemigroup, x: int) -> bool:
    return x in S


def apery(S: NumericalSemigroup, m: int) -> list[int]:
    return S.apery(m)


def pseudo_frobenius(S: NumericalSemigroup) -> frozenset[int]:
    return S.pseudo_frobenius


def length_set(S: NumericalSemigroup, s: int) -> LengthSet:
    return LengthSet(s, S.length_set(s))


def is_homogeneous(S: NumericalSemigroup) -> bool:
    return S.is_homogeneous


N = NumericalSemigroup([1])
