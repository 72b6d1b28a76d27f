import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from dercurve.errors import Duplicate, GcdNotOne, NotMember, NotMinimal
from dercurve.numsgp import (
    N,
    NumericalSemigroup,
    apery,
    contains,
    is_homogeneous,
    length_set,
    minimalize,
    new_semigroup,
    pseudo_frobenius,
)

S6 = NumericalSemigroup([6, 7, 9, 10])


def test_frobenius_matches_dp_oracle():
    assert S6.frobenius == oracles.frobenius([6, 7, 9, 10]) == 11
    assert S6.conductor == 12


def test_N():
    assert N.frobenius == -1
    assert N.is_N
    assert N.gaps == frozenset()
    assert N.pseudo_frobenius == {-1}
    assert N.type == 1


def test_generators_sorted():
    assert new_semigroup([10, 6, 9, 7]).generators == (6, 7, 9, 10)


@pytest.mark.parametrize("gens, exc", [
    ([4, 6], GcdNotOne),
    ([3, 5, 8], NotMinimal),
    ([3, 3, 5], Duplicate),
])
def test_validation_errors(gens, exc):
    with pytest.raises(exc):
        new_semigroup(gens)


def test_not_minimal_reports_index():
    with pytest.raises(NotMinimal) as info:
        new_semigroup([3, 5, 8])
    assert info.value.index == 2


@pytest.mark.parametrize("bad", [[], [0, 1], [-2, 3]])
def test_rejects_nonpositive(bad):
    with pytest.raises(ValueError):
        new_semigroup(bad)


@pytest.mark.parametrize("x, expected", [(11, False), (0, True), (21, True), (-1, False), (12, True)])
def test_contains(x, expected):
    assert contains(S6, x) is expected


def test_apery_examples():
    assert apery(S6, 6) == oracles.apery_scan([6, 7, 9, 10], 6) == [0, 7, 14, 9, 10, 17]
    assert apery(N, 1) == [0]
    assert apery(NumericalSemigroup([3, 4]), 3) == [0, 4, 8]


def test_apery_other_modulus():
    assert apery(S6, 13) == oracles.apery_scan([6, 7, 9, 10], 13)


def test_apery_requires_member():
    with pytest.raises(NotMember):
        apery(S6, 11)


def test_pseudo_frobenius_examples():
    assert pseudo_frobenius(S6) == oracles.pf_by_definition([6, 7, 9, 10]) == {3, 8, 11}
    assert pseudo_frobenius(NumericalSemigroup([5, 6, 9])) == {13}
    assert NumericalSemigroup([5, 6, 9]).gaps == {1, 2, 3, 4, 7, 8, 13}


def test_length_set_examples():
    assert length_set(S6, 17).lengths == {2} == oracles.factorization_lengths([6, 7, 9, 10], 17)
    assert length_set(S6, 6).lengths == {1}
    assert length_set(N, 5).lengths == {5}
    assert length_set(S6, 42).lengths == oracles.factorization_lengths([6, 7, 9, 10], 42)


@pytest.mark.parametrize("s", [0, 11])
def test_length_set_rejects(s):
    with pytest.raises(NotMember):
        length_set(S6, s)


def test_homogeneous_examples():
    assert is_homogeneous(S6)
    assert is_homogeneous(NumericalSemigroup([67, 70, 74, 75]))
    assert is_homogeneous(N)


def test_not_homogeneous_example():
    # 18 = 9+9 = 6+6+6 is in Ap(<5,6,9>, 5)
    S = NumericalSemigroup([5, 6, 9])
    assert 18 in S.apery()
    assert oracles.factorization_lengths([5, 6, 9], 18) == {2, 3}
    assert not S.is_homogeneous


def test_minimalize():
    assert minimalize([4, 3, 1, 10]) == [1]
    assert minimalize([4, 3, 9]) == [3, 4]
    assert minimalize([6, 3, 3, 5]) == [3, 5]


# ------------------------------------------------------------- properties


@st.composite
def semigroups(draw, max_gen=40):
    gens = draw(st.lists(st.integers(2, max_gen), min_size=2, max_size=5, unique=True))
    gens = minimalize(gens)
    if oracles.gcd_all(gens) != 1:
        gens = minimalize(gens + [max(gens) + 1])
    return gens


@settings(max_examples=60, deadline=None)
@given(semigroups())
def test_membership_matches_oracle(gens):
    S = NumericalSemigroup(gens)
    limit = 3 * S.conductor + 3
    flags = oracles.members_upto(gens, limit)
    assert [x in S for x in range(limit + 1)] == flags


@settings(max_examples=60, deadline=None)
@given(semigroups(), st.data())
def test_apery_invariants(gens, data):
    S = NumericalSemigroup(gens)
    m = data.draw(st.sampled_from([g for g in gens] + [gens[0] + gens[-1]]))
    ap = S.apery(m)
    assert len(ap) == m
    assert sorted(a % m for a in ap) == list(range(m))
    assert all(a in S for a in ap)
    assert all((a - m) not in S for a in ap if a)


@settings(max_examples=60, deadline=None)
@given(semigroups())
def test_pf_matches_definition(gens):
    S = NumericalSemigroup(gens)
    assert S.pseudo_frobenius == oracles.pf_by_definition(gens)
    assert max(S.pseudo_frobenius) == S.frobenius
    assert S.pseudo_frobenius <= S.gaps | {-1}


@settings(max_examples=40, deadline=None)
@given(semigroups(max_gen=25), st.randoms(use_true_random=False))
def test_homogeneity_permutation_invariant(gens, rnd):
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    assert NumericalSemigroup(shuffled).is_homogeneous == NumericalSemigroup(gens).is_homogeneous


def test_homogeneity_matches_oracle_on_random_sample():
    rng = random.Random(7)
    for _ in range(20):
        gens = minimalize(rng.sample(range(3, 20), 3))
        if oracles.gcd_all(gens) != 1:
            continue
        S = NumericalSemigroup(gens)
        expected = all(len(oracles.factorization_lengths(gens, a)) == 1 for a in S.apery() if a)
        assert S.is_homogeneous is expected


def test_frozen_semantics():
    assert NumericalSemigroup([7, 6, 10, 9]) == S6
    assert hash(NumericalSemigroup([6, 7, 9, 10])) == hash(S6)
