import random

import pytest
from hypothesis import given, strategies as st

import oracles
from dercurve.errors import BadResidueField, ParseError
from dercurve.poincare import (
    RationalSeries,
    TruncatedSeries,
    betti_of_der,
    d_branch_series,
    der_series,
    der_series_rational,
    parse_rational,
    relation_text,
    times_one_plus_z,
)


def T(*c, exact=False):
    return TruncatedSeries(c, exact)


def test_times_one_plus_z():
    assert times_one_plus_z(T(1, 5, 2)).coeffs == (1, 6, 7)
    assert times_one_plus_z(T(1, exact=True)).coeffs == (1, 1)
    assert times_one_plus_z(T(0, 0, exact=True)).coeffs == (0, 0, 0)


def test_times_one_plus_z_matches_convolution():
    assert times_one_plus_z(T(3, 1, 4, 1, 5, exact=True)).coeffs == tuple(
        oracles.series_times([3, 1, 4, 1, 5], [1, 1], 5)
    )


def test_der_series():
    assert der_series(3, 1, T(1, 5)).coeffs == (5, 20)
    assert der_series(1, 1, T(1)).coeffs == (3,)
    assert der_series(8, 1, T(1)).coeffs == (10,)


def test_bad_residue_field():
    with pytest.raises(BadResidueField):
        der_series(3, 1, T(2, 5))
    with pytest.raises(BadResidueField):
        betti_of_der(0, 2, 1, 1)


def test_d_branch_series():
    assert d_branch_series(3, False, T(1, 5)).coeffs == (4, 15)
    assert d_branch_series(17, True, T(1, 5)).coeffs == (2, 5)
    assert d_branch_series(1, False, T(1)).coeffs == (2,)


def test_der_series_rational():
    assert der_series_rational(1, 1, RationalSeries((1,), (1, -2))) == RationalSeries((3, -2), (1, -2))
    assert der_series_rational(3, 1, RationalSeries((1,), (1,))) == RationalSeries((5,), (1,))


def test_reduction_cancels_common_factor():
    # (1+z)/(1-z^2) = 1/(1-z)
    assert RationalSeries.reduced([1, 1], [1, 0, -1]) == RationalSeries((1,), (1, -1))
    assert RationalSeries.reduced([-1, -1], [-1, 0, 1]) == RationalSeries((1,), (1, -1))


def test_expand_matches_oracle():
    r = RationalSeries((1, 2), (1, -1, -1))
    c = r.expand(10)
    assert oracles.series_times(c, [1, -1, -1], 10)[:2] == [1, 2]
    assert oracles.series_times(c, [1, -1, -1], 10)[2:] == [0] * 9


@pytest.mark.parametrize("i, bK, expected", [(0, 1, 5), (1, 5, 20), (2, 0, 0)])
def test_betti_of_der(i, bK, expected):
    assert betti_of_der(i, bK, 3, 1) == expected


def test_relation_text():
    assert relation_text(1, 1) == "1+2·P_K"


@pytest.mark.parametrize("text", ["1,2", "1;", "a;1", "1;0,1"])
def test_parse_rational_errors(text):
    with pytest.raises(ParseError):
        parse_rational(text)


@given(st.integers(1, 20), st.integers(1, 20), st.lists(st.integers(0, 50), max_size=8))
def test_constant_term_and_linearity(h1, h2, tail):
    pK = T(1, *tail)
    out = der_series(h1, h2, pK)
    assert out[0] == 1 + h1 + h2
    doubled = der_series(h1, h2, T(1, *[2 * c for c in tail]))
    assert list(doubled.coeffs[1:]) == [2 * c for c in out.coeffs[1:]]
    assert list(out.coeffs[1:]) == [betti_of_der(i + 1, c, h1, h2) for i, c in enumerate(tail)]


@given(st.lists(st.integers(0, 30), min_size=1, max_size=10))
def test_times_one_plus_z_partial_sums(coeffs):
    out = times_one_plus_z(T(*coeffs)).coeffs
    assert all(c >= 0 for c in out)
    assert sum(out) >= sum(coeffs)
    partial = [sum(out[: i + 1]) for i in range(len(out))]
    assert partial == sorted(partial)


def random_rational(rng):
    """Nonnegative expansion: p >= 0 with p(0) = 1 over q = 1 - (nonnegative terms)."""
    p = [1] + [rng.randint(0, 4) for _ in range(rng.randint(0, 3))]
    q = [1] + [-rng.randint(0, 3) for _ in range(rng.randint(0, 3))]
    return RationalSeries.reduced(p, q)


def test_rational_truncated_agreement():
    rng = random.Random(2024)
    for _ in range(30):
        pK = random_rational(rng)
        h1, h2 = rng.randint(1, 6), rng.randint(1, 6)
        left = der_series_rational(h1, h2, pK).expand(10)
        right = der_series(h1, h2, TruncatedSeries(tuple(pK.expand(10)))).coeffs
        assert tuple(left) == right
