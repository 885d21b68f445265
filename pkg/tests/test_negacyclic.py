import pytest

from negafactor.errors import BelowThreshold, CapabilityExceeded, IncompatibleLengths, NotADivisor
from negafactor.gf import make_field
from negafactor.negacyclic import (
    CodeFamily,
    count_codes,
    enumerate_codes,
    lift_generator,
    lifted_family_is_bijective,
    lift_threshold,
)
from negafactor.poly import Poly

F3, F5, F9 = make_field(3), make_field(5), make_field(3, 2)


def test_lift_threshold_examples():
    assert lift_threshold(3, 1) == 2
    assert lift_threshold(5, 1) == 1
    assert lift_threshold(3, 5) == 3


def test_count_codes_examples():
    assert count_codes(3, 4) == 4
    assert count_codes(3, 12) == 16
    assert count_codes(5, 2) == 4


def test_count_codes_below_threshold():
    with pytest.raises(BelowThreshold) as info:
        count_codes(3, 2)
    # x^2 + 1 is irreducible over F_3
    assert info.value.direct_count == 2
    assert count_codes(3, 2, strict=False) == 2


def test_enumerate_x4_plus_1_over_f3():
    gens = [c.generator for c in enumerate_codes(F3, 4)]
    assert gens == [Poly.one(F3), Poly(F3, [2, 1, 1]), Poly(F3, [2, 2, 1]), Poly.x_pow_plus(F3, 4)]
    assert [c.dimension for c in enumerate_codes(F3, 4)] == [4, 2, 2, 0]


@pytest.mark.parametrize("q_pm,n", [((3, 1), 12), ((5, 1), 44), ((3, 2), 8), ((7, 1), 56), ((5, 1), 10)])
def test_enumeration_is_complete_and_exact(q_pm, n):
    F = make_field(*q_pm)
    target = Poly.x_pow_plus(F, n)
    gens = [c.generator for c in enumerate_codes(F, n)]
    assert len(gens) == len(set(gens)) == count_codes(F.q, n, strict=False)
    assert gens[0] == Poly.one(F) and gens[-1] == target
    for g in gens:
        assert (target % g).is_zero()


def test_cap_and_truncation():
    fam = CodeFamily(F5, 44, cap=5)
    assert len(list(fam.codes())) == 5
    assert fam.header() == {"k": 1, "count": "64", "truncated": True}
    assert not CodeFamily(F5, 44).truncated


def test_hard_limit_without_cap(monkeypatch):
    import negafactor.negacyclic as neg

    monkeypatch.setattr(neg, "HARD_LIMIT", 10)
    with pytest.raises(CapabilityExceeded):
        next(enumerate_codes(F5, 44))
    assert len(list(enumerate_codes(F5, 44, cap=3))) == 3


def test_count_as_decimal_string_for_large_families():
    fam = CodeFamily(make_field(13), 13 * 8 * 105)
    assert fam.header()["count"] == str(fam.count)
    assert int(fam.header()["count"]) > 2**64


def test_lift_examples():
    assert lift_generator(Poly(F5, [2, 1]), 22, 44) == Poly(F5, [2, 0, 1])
    assert lift_generator(Poly.one(F5), 22, 88) == Poly.one(F5)
    assert lift_generator(Poly.x_pow_plus(F5, 22), 22, 88) == Poly.x_pow_plus(F5, 88)


def test_lift_errors():
    with pytest.raises(NotADivisor):
        lift_generator(Poly(F5, [1, 1]), 22, 44)
    with pytest.raises(IncompatibleLengths):
        lift_generator(Poly(F5, [2, 1]), 22, 66)
    with pytest.raises(IncompatibleLengths):
        lift_generator(Poly(F5, [2, 1]), 44, 22)
    with pytest.raises(IncompatibleLengths):
        lift_generator(Poly.one(F3), 2, 8)


@pytest.mark.parametrize("q_pm,n_from,n_to", [((3, 1), 4, 16), ((3, 1), 12, 24), ((5, 1), 22, 88), ((3, 2), 4, 16), ((7, 1), 8, 32)])
def test_lift_bijection(q_pm, n_from, n_to):
    assert lifted_family_is_bijective(make_field(*q_pm), n_from, n_to)


def test_code_json():
    code = next(enumerate_codes(F3, 4))
    assert code.to_json() == {"n": 4, "generator": {"coeffs": [1]}, "dimension": 4}
