"""Generators of the derivation module of K[plane semigroup] and its ideal form.

Monomials are written v^a u^b and stored as points (a, b). The module is
generated by two families of derivations, one along d/du indexed by
PF(Gamma2) and one along d/dv indexed by PF(Gamma1), plus the two Euler
derivations. When Gamma2 (resp. Gamma1) is N the family collapses to a
single degenerate generator found by a separate scan.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from .errors import NotCohenMacaulay, PointOutsideSemigroup, SearchExhausted
from .plane import PlanePoint, PlaneSemigroup, env_bound


class Kind(str, Enum):
    EULER_U = "EulerU"
    EULER_V = "EulerV"
    D1 = "D1"
    D1_DEGENERATE = "D1Degenerate"
    D2 = "D2"
    D2_DEGENERATE = "D2Degenerate"


DU = "d/du"
DV = "d/dv"


@dataclass(frozen=True)
class DerGenerator:
    kind: Kind
    v_exp: int
    u_exp: int
    partial: str
    witness: tuple[tuple[str, int], ...] = ()

    @property
    def monomial(self) -> PlanePoint:
        return (self.v_exp, self.u_exp)

    def witness_value(self, name: str) -> int:
        return dict(self.witness)[name]

    def render(self) -> str:
        parts = []
        if self.v_exp:
            parts.append("v" if self.v_exp == 1 else f"v^{self.v_exp}")
        if self.u_exp:
            parts.append("u" if self.u_exp == 1 else f"u^{self.u_exp}")
        return "".join(parts or ["1"]) + " " + self.partial

    def to_dict(self):
        return {
            "kind": self.kind.value,
            "v_exp": self.v_exp,
            "u_exp": self.u_exp,
            "partial": self.partial,
            "witness": dict(self.witness),
            "text": self.render(),
        }


EULER_U = DerGenerator(Kind.EULER_U, 0, 1, DU)
EULER_V = DerGenerator(Kind.EULER_V, 1, 0, DV)


@dataclass(frozen=True)
class DerivationModule:
    generators: tuple[DerGenerator, ...]
    ideal: tuple[PlanePoint, ...]
    minimal_ideal: tuple[PlanePoint, ...]
    annihilation: bool
    h1: int
    h2: int
    cm_bound: int = 0

    @property
    def mu(self) -> int:
        return len(self.generators)

    @property
    def minimal_ideal_count(self) -> int:
        return len(self.minimal_ideal)

    def of_kind(self, *kinds: Kind) -> list[DerGenerator]:
        return [g for g in self.generators if g.kind in kinds]

    @property
    def d1(self) -> list[DerGenerator]:
        return self.of_kind(Kind.D1, Kind.D1_DEGENERATE)

    @property
    def d2(self) -> list[DerGenerator]:
        return self.of_kind(Kind.D2, Kind.D2_DEGENERATE)


def default_search_bound(P: PlaneSemigroup) -> int:
    forced = env_bound()
    if forced is not None:
        return forced * P.n_e
    return P.gamma1.conductor + P.gamma2.conductor + 4 * P.n_e


def default_iteration_bound(P: PlaneSemigroup) -> int:
    forced = env_bound()
    if forced is not None:
        return forced
    return 4 * P.n_e


def d1_conditions(P: PlaneSemigroup, beta: int, alpha_minus_1: int) -> bool:
    return all(
        (beta + n, alpha_minus_1 + P.n_e - n) in P
        for n in (0, *P.mixed_generators)
    )


def d2_conditions(P: PlaneSemigroup, delta_minus_1: int, gamma: int) -> bool:
    return all(
        (delta_minus_1 + n, gamma + P.n_e - n) in P
        for n in P.curve_generators
    )


def d2_degenerate_conditions(P: PlaneSemigroup, e_prime: int) -> bool:
    return all(
        (n - 1, 1 + e_prime * P.n_e + P.n_e - n) in P
        for n in P.mixed_generators
    )


def _first_in_class(residue: int, n_e: int) -> int:
    r = residue % n_e
    return r if r else n_e


def least_beta(P: PlaneSemigroup, alpha_minus_1: int, bound: int) -> int:
    for beta in range(_first_in_class(-alpha_minus_1, P.n_e), bound + 1, P.n_e):
        if beta in P.gamma1 and d1_conditions(P, beta, alpha_minus_1):
            return beta
    raise SearchExhausted(bound, f"beta for alpha-1 = {alpha_minus_1}")


def least_gamma(P: PlaneSemigroup, delta_minus_1: int, bound: int) -> int:
    for gamma in range(_first_in_class(-delta_minus_1, P.n_e), bound + 1, P.n_e):
        if gamma in P.gamma2 and d2_conditions(P, delta_minus_1, gamma):
            return gamma
    raise SearchExhausted(bound, f"gamma for delta-1 = {delta_minus_1}")


def least_c_prime(P: PlaneSemigroup, iterations: int) -> int:
    for c in range(iterations + 1):
        if d1_conditions(P, 1 + c * P.n_e, -1):
            return c
    raise SearchExhausted(iterations, "c'")


def least_e_prime(P: PlaneSemigroup, iterations: int) -> int:
    for c in range(iterations + 1):
        if d2_degenerate_conditions(P, c):
            return c
    raise SearchExhausted(iterations, "e'")


def compute_d1(P: PlaneSemigroup, search_bound: int | None = None) -> list[DerGenerator]:
    if P.gamma2.is_N:
        c = least_c_prime(P, search_bound or default_iteration_bound(P))
        return [DerGenerator(Kind.D1_DEGENERATE, 1 + c * P.n_e, 0, DU, (("c_prime", c),))]
    bound = search_bound or default_search_bound(P)
    out = []
    for pf in sorted(P.gamma2.pseudo_frobenius):
        beta = least_beta(P, pf, bound)
        out.append(DerGenerator(Kind.D1, beta, pf + 1, DU, (("alpha", pf + 1), ("beta", beta))))
    return out


def compute_d2(P: PlaneSemigroup, search_bound: int | None = None) -> list[DerGenerator]:
    if P.gamma1.is_N:
        e = least_e_prime(P, search_bound or default_iteration_bound(P))
        return [DerGenerator(Kind.D2_DEGENERATE, 0, 1 + e * P.n_e, DV, (("e_prime", e),))]
    bound = search_bound or default_search_bound(P)
    out = []
    for pf in sorted(P.gamma1.pseudo_frobenius):
        gamma = least_gamma(P, pf, bound)
        out.append(DerGenerator(Kind.D2, pf + 1, gamma, DV, (("delta", pf + 1), ("gamma", gamma))))
    return out


def ideal_point(g: DerGenerator, n_e: int) -> PlanePoint:
    """Image of one generator in the ideal isomorphic to the derivation module."""
    if g.kind is Kind.D1:
        return (g.v_exp, g.u_exp - 1 + n_e)
    if g.kind is Kind.D1_DEGENERATE:
        return (g.v_exp, n_e - 1)
    if g.kind is Kind.D2:
        return (g.v_exp - 1 + n_e, g.u_exp)
    if g.kind is Kind.D2_DEGENERATE:
        return (n_e - 1, g.u_exp)
    if g.kind is Kind.EULER_U:
        return (0, n_e)
    return (n_e, 0)


def to_ideal(M: DerivationModule | Iterable[DerGenerator], P: PlaneSemigroup) -> list[PlanePoint]:
    gens = M.generators if isinstance(M, DerivationModule) else M
    return [ideal_point(g, P.n_e) for g in gens]


def _check_points(points: Iterable[PlanePoint], P: PlaneSemigroup) -> None:
    for p in points:
        if p not in P:
            raise PointOutsideSemigroup(f"{p} is not in {P!r}")


def annihilation_check(points: Iterable[PlanePoint], P: PlaneSemigroup) -> bool:
    """Every non-corner point times every mixed generator vanishes mod (u^n_e, v^n_e)."""
    points = list(points)
    _check_points(points, P)
    n_e = P.n_e
    corners = {(0, n_e), (n_e, 0)}
    for a, b in points:
        if (a, b) in corners:
            continue
        for n in P.mixed_generators:
            x, y = a + n, b + n_e - n
            if (x - n_e, y) not in P and (x, y - n_e) not in P:
                return False
    return True


def minimal_generators(points: Iterable[PlanePoint], P: PlaneSemigroup) -> list[PlanePoint]:
    pts = list(dict.fromkeys(points))
    _check_points(pts, P)
    return [
        g for g in pts
        if not any(h != g and (g[0] - h[0], g[1] - h[1]) in P for h in pts)
    ]


def derivation_module(P: PlaneSemigroup, search_bound: int | None = None) -> DerivationModule:
    verdict = P.cm_check()
    if not verdict.equal:
        raise NotCohenMacaulay(verdict.counterexample)
    gens = (*compute_d1(P, search_bound), EULER_U, *compute_d2(P, search_bound), EULER_V)
    ideal = tuple(to_ideal(gens, P))
    return DerivationModule(
        generators=gens,
        ideal=ideal,
        minimal_ideal=tuple(minimal_generators(ideal, P)),
        annihilation=annihilation_check(ideal, P),
        h1=P.gamma1.type,
        h2=P.gamma2.type,
        cm_bound=verdict.bound,
    )
