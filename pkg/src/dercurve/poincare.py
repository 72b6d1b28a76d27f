"""Poincare-series bookkeeping for the derivation module.

The residue-field series P_K is always an input (truncated coefficients or a
rational function); these helpers only apply the transforms
``P_Der = 1 + (h1+h2) P_K``, ``P_D = 1 + h P_K`` and multiplication by ``1+z``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import sympy

from .errors import BadResidueField, ParseError

_z = sympy.Symbol("z")


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients c_0..c_N of a power series.

    ``exact`` marks a polynomial (nothing beyond c_N); otherwise terms of degree
    > N are unknown and results are cut back to order N.
    """

    coeffs: tuple[int, ...]
    exact: bool = False

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("empty series")
        if any(c < 0 for c in self.coeffs):
            raise ValueError(f"Betti numbers are nonnegative: {self.coeffs}")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)


@dataclass(frozen=True)
class RationalSeries:
    """numerator/denominator with integer coefficients (ascending), denominator(0) = 1."""

    numerator: tuple[int, ...]
    denominator: tuple[int, ...]

    def __post_init__(self):
        if not self.denominator or self.denominator[0] != 1:
            raise ValueError(f"denominator must have constant term 1: {self.denominator}")

    @classmethod
    def reduced(cls, numerator: Sequence[int], denominator: Sequence[int]) -> "RationalSeries":
        p = sympy.Poly(list(reversed(numerator)), _z, domain="ZZ")
        q = sympy.Poly(list(reversed(denominator)), _z, domain="ZZ")
        if q.is_zero or q.eval(0) == 0:
            raise ValueError(f"denominator must not vanish at 0: {denominator}")
        g = sympy.gcd(p, q) if not p.is_zero else q
        # g(0) = +-1 by Gauss's lemma, so integer quotients stay integral
        p, q = p.exquo(g), q.exquo(g)
        c0 = q.eval(0)
        if c0 != 1:
            if c0 == -1:
                p, q = -p, -q
            else:
                raise ValueError(f"denominator constant term {c0} after reduction; not invertible over Z")
        return cls(_coeffs(p), _coeffs(q))

    def expand(self, order: int) -> list[int]:
        """Power-series coefficients c_0..c_order."""
        p, q = self.numerator, self.denominator
        out = []
        for i in range(order + 1):
            c = p[i] if i < len(p) else 0
            c -= sum(q[j] * out[i - j] for j in range(1, min(i, len(q) - 1) + 1))
            out.append(c)
        return out

    def wire(self) -> str:
        return ",".join(map(str, self.numerator)) + ";" + ",".join(map(str, self.denominator))


def _coeffs(poly: sympy.Poly) -> tuple[int, ...]:
    cs = [int(c) for c in reversed(poly.all_coeffs())]
    while len(cs) > 1 and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def times_one_plus_z(s: TruncatedSeries) -> TruncatedSeries:
    c = s.coeffs
    out = [c[0]] + [c[i] + c[i - 1] for i in range(1, len(c))]
    if s.exact:
        out.append(c[-1])
    return TruncatedSeries(tuple(out), s.exact)


def _check_residue(pK: TruncatedSeries) -> None:
    if pK.coeffs[0] != 1:
        raise BadResidueField(f"P_K must start with beta_0 = 1, got {pK.coeffs[0]}")


def one_plus_multiple(h: int, pK: TruncatedSeries) -> TruncatedSeries:
    """1 + h * P_K."""
    _check_residue(pK)
    out = [h * c for c in pK.coeffs]
    out[0] += 1
    return TruncatedSeries(tuple(out), pK.exact)


def der_series(h1: int, h2: int, pK: TruncatedSeries) -> TruncatedSeries:
    return one_plus_multiple(h1 + h2, pK)


def d_branch_series(h: int, is_N: bool, pK: TruncatedSeries) -> TruncatedSeries:
    return one_plus_multiple(1 if is_N else h, pK)


def der_series_rational(h1: int, h2: int, pK: RationalSeries) -> RationalSeries:
    p, q = pK.numerator, pK.denominator
    k = h1 + h2
    size = max(len(p), len(q))
    num = [
        (q[i] if i < len(q) else 0) + k * (p[i] if i < len(p) else 0)
        for i in range(size)
    ]
    return RationalSeries.reduced(num, q)


def betti_of_der(i: int, betti_K: int, h1: int, h2: int) -> int:
    """i-th Betti number of Der from that of K (coefficient comparison)."""
    if i == 0:
        if betti_K != 1:
            raise BadResidueField(f"beta_0(K) must be 1, got {betti_K}")
        return 1 + h1 + h2
    return (h1 + h2) * betti_K


def relation_text(h1: int, h2: int) -> str:
    return f"1+{h1 + h2}·P_K"


def parse_coeffs(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError as exc:
        raise ParseError(f"bad coefficient list {text!r}") from exc


def parse_rational(text: str) -> RationalSeries:
    if text.count(";") != 1:
        raise ParseError(f"rational form must be 'p;q', got {text!r}")
    num, den = text.split(";")
    p, q = parse_coeffs(num), parse_coeffs(den)
    if not p or not q:
        raise ParseError(f"empty polynomial in {text!r}")
    try:
        return RationalSeries.reduced(p, q)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
