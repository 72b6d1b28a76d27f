"""The plane semigroup of the projective closure of a monomial curve.

Points are pairs ``(a, b)`` = (v-exponent, u-exponent). Every generator
``(n_i, n_e - n_i)`` has coordinate sum ``n_e``, so membership of ``(a, b)``
reduces to: ``a`` is a sum of exactly ``k = (a+b)/n_e`` terms drawn from
``{0, n_1, ..., n_e}``.
"""
from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from typing import Sequence, Union

from .numsgp import NumericalSemigroup, minimalize

PlanePoint = tuple[int, int]

BOUND_ENV = "DERCURVE_BOUND"


def env_bound() -> int | None:
    """Degree bound forced through the environment, if any."""
    raw = os.environ.get(BOUND_ENV)
    if not raw:
        return None
    value = int(raw)
    if value < 1:
        raise ValueError(f"{BOUND_ENV} must be a positive integer, got {raw!r}")
    return value


@dataclass(frozen=True)
class CmVerdict:
    bound: int
    counterexample: PlanePoint | None = None

    @property
    def equal(self) -> bool:
        return self.counterexample is None

    @property
    def status(self) -> str:
        return "EqualUpTo" if self.equal else "CounterexampleAt"

    def to_dict(self):
        return {
            "status": self.status,
            "bound": self.bound,
            "counterexample": list(self.counterexample) if self.counterexample else None,
        }


class PlaneSemigroup:
    """Semigroup in N^2 generated by (n_i, n_e - n_i), 0 <= i <= e, with n_0 = 0.

    ``contains`` grows a per-degree bitset cache under a lock, so one instance
    may be shared between threads.
    """

    def __init__(self, gens: Union[NumericalSemigroup, Sequence[int]]):
        if isinstance(gens, NumericalSemigroup):
            raw = list(gens.generators)
            self.gamma1 = gens
        else:
            # relaxed path: the list need not be minimal (used to reach Gamma1 = N)
            raw = sorted(set(gens))
            self.gamma1 = NumericalSemigroup(minimalize(raw))
        if len(raw) < 2:
            raise ValueError("the plane semigroup needs at least two generators")
        self.curve_generators = tuple(raw)
        self.n_e = raw[-1]
        self.gamma2_raw = tuple(sorted({self.n_e - n for n in raw[:-1]} | {self.n_e}))
        self.gamma2 = NumericalSemigroup(minimalize(self.gamma2_raw))
        self.generator_points = tuple((n, self.n_e - n) for n in (0, *raw))
        self._steps = (0, *raw)
        self._reach = [1]  # bitset of first coordinates reachable with exactly k terms
        self._lock = threading.Lock()

    def __repr__(self):
        return f"PlaneSemigroup({list(self.curve_generators)})"

    @property
    def mixed_generators(self) -> tuple[int, ...]:
        return self.curve_generators[:-1]

    def in_lattice(self, p: PlanePoint) -> bool:
        return (p[0] + p[1]) % self.n_e == 0

    def _degree_bits(self, k: int) -> int:
        reach = self._reach
        if k >= len(reach):
            with self._lock:
                while len(reach) <= k:
                    prev = reach[-1]
                    bits = 0
                    for g in self._steps:
                        bits |= prev << g
                    reach.append(bits)
        return reach[k]

    def degree(self, p: PlanePoint) -> int:
        return (p[0] + p[1]) // self.n_e

    def __contains__(self, p: PlanePoint) -> bool:
        a, b = p
        if a < 0 or b < 0 or (a + b) % self.n_e:
            return False
        return bool(self._degree_bits((a + b) // self.n_e) >> a & 1)

    def contains(self, p: PlanePoint) -> bool:
        return p in self

    def box_member(self, p: PlanePoint) -> bool:
        a, b = p
        return a in self.gamma1 and b in self.gamma2 and self.in_lattice(p)

    def default_cm_bound(self) -> int:
        forced = env_bound()
        if forced is not None:
            return forced
        f = self.gamma1.frobenius + self.gamma2.frobenius
        return -(-f // self.n_e) + 2

    def cm_check(self, degree_bound: int | None = None) -> CmVerdict:
        """Compare the semigroup with (Gamma1 x Gamma2) ∩ L degree by degree."""
        if degree_bound is None:
            degree_bound = self.default_cm_bound()
        if degree_bound < 1:
            raise ValueError("degree_bound must be >= 1")
        for k in range(1, degree_bound + 1):
            top = k * self.n_e
            for a in range(top + 1):
                p = (a, top - a)
                if self.box_member(p) and p not in self:
                    return CmVerdict(degree_bound, p)
        return CmVerdict(degree_bound)


def build_plane(S: Union[NumericalSemigroup, Sequence[int]]) -> PlaneSemigroup:
    return PlaneSemigroup(S)


def in_lattice(P: PlaneSemigroup, p: PlanePoint) -> bool:
    return P.in_lattice(p)


def contains(P: PlaneSemigroup, p: PlanePoint) -> bool:
    return p in P


def box_member(P: PlaneSemigroup, p: PlanePoint) -> bool:
    return P.box_member(p)


def cm_check(P: PlaneSemigroup, degree_bound: int | None = None) -> CmVerdict:
    return P.cm_check(degree_bound)
