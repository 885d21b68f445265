from math import gcd

import pytest

from negafactor.cosets import (
    Transition,
    uniform_parity,
    coset,
    coset_split_structure,
    mult_order_mod,
    predicted_transition,
    representative_sets,
    theta,
    two_adic,
)
from negafactor.errors import NotCoprime


def brute_order(n, q):
    if n == 1:
        return 1
    t, x = 1, q % n
    while x != 1:
        x, t = x * q % n, t + 1
    return t


def test_theta_examples():
    assert theta(12, 8) == 3
    assert theta(7, 0) == 1
    assert theta(44, 11) == 4


def test_mult_order_examples():
    assert mult_order_mod(11, 5) == 5
    assert mult_order_mod(1, 7) == 1
    assert mult_order_mod(16, 3) == 4
    with pytest.raises(NotCoprime):
        mult_order_mod(9, 3)


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 13, 25, 27])
def test_mult_order_matches_brute_force(q):
    for n in range(1, 400):
        if gcd(n, q) == 1:
            assert mult_order_mod(n, q) == brute_order(n, q)


def test_two_adic_examples():
    assert two_adic(8) == 3
    assert two_adic(24) == 3
    assert two_adic(7) == 0


def test_coset_examples():
    assert coset(3, 8, 1).elements == (1, 3)
    assert coset(7, 20, 0).elements == (0,)
    c = coset(5, 44, 11)
    assert c.elements == (11,)
    assert len(c.elements) == mult_order_mod(theta(44, 11), 5) == 1
    assert coset(3, 8, 3).rep == 1
    with pytest.raises(NotCoprime):
        coset(3, 12, 1)


def test_coset_json():
    assert coset(3, 8, 3).to_json() == {"n": 8, "q": 3, "rep": 1, "elements": [1, 3]}


def test_representative_sets_examples():
    r = representative_sets(5, 44)
    assert len(r.odd_reps) == 6
    r = representative_sets(3, 2)
    assert r.all_reps == (0, 1) and r.odd_reps == (1,)
    assert len(representative_sets(3, 16).odd_reps) == 2
    assert representative_sets(3, 2).to_json() == {"all": [0, 1], "odd": [1], "even": [0]}


def test_representative_sets_partition_and_size():
    for q, n in [(5, 44), (3, 80), (7, 90), (9, 56), (13, 120)]:
        r = representative_sets(q, n)
        elems = [b for c in r.cosets for b in c.elements]
        assert sorted(elems) == list(range(n))
        for c in r.cosets:
            assert c.rep == min(c.elements)
            assert len(c.elements) == mult_order_mod(theta(n, c.rep), q)


def test_uniform_parity_examples():
    assert uniform_parity(5, 44)
    assert uniform_parity(3, 4)
    assert uniform_parity(7, 2)


@pytest.mark.parametrize(
    "q,n_prime,i,expected",
    [(5, 1, 2, Transition.MERGES), (3, 1, 2, Transition.SPLITS), (3, 1, 1, Transition.MERGES)],
)
def test_split_structure_examples(q, n_prime, i, expected):
    assert coset_split_structure(q, n_prime, i) is expected
    assert predicted_transition(q, n_prime, i) is expected


def test_split_structure_mixed_below_merge_range():
    # ord_15(7) = 4: below the merge range some odd cosets split and others merge
    assert predicted_transition(7, 15, 1) is None
    assert coset_split_structure(7, 15, 1) is Transition.MIXED


def test_split_structure_rejects_bad_input():
    with pytest.raises(NotCoprime):
        coset_split_structure(3, 3, 1)
    with pytest.raises(ValueError):
        coset_split_structure(3, 4, 1)
    with pytest.raises(ValueError):
        coset_split_structure(3, 1, 0)
