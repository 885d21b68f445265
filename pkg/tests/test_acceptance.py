"""One test per acceptance criterion. Each prints a single PASS/FAIL line and reports it in the summary."""

import time
from contextlib import contextmanager
from math import gcd

from conftest import GRID_Q, field
from test_factorizer import EVEN_ORDER_COUNTS, ODD_ORDER_COUNTS, expected_rows

from negafactor.cli import main
from negafactor.cosets import (
    coset,
    coset_split_structure,
    mult_order_mod,
    predicted_transition,
    representative_sets,
)
from negafactor.factorizer import (
    beta_of,
    count_factors_fast,
    count_factors_sum,
    decompose,
    distinct_factors,
    factor_xn_plus_1,
    lambda_of,
    ord_two_power,
    profile,
    verify_factorization,
)
from negafactor.gf import make_field
from negafactor.negacyclic import count_codes, enumerate_codes, lifted_family_is_bijective, lift_threshold
from negafactor import poly as poly_module
from negafactor.poly import Poly, factor_generic

# runtime budgets in seconds
BUDGET = {1: 1.0, 2: 10.0, 3: 30.0, 4: 300.0, 8: 30.0}
GRID_NMAX = 120
ORDER_IMAX = 12
MIN_RANDOM_CASES = 1000

FACTORS_22 = [
    "x + 2",
    "x + 3",
    "x^5 + x^4 + x^3 + 2*x^2 + x + 2",
    "x^5 + 2*x^4 + x^3 + 2*x^2 + 3*x + 2",
    "x^5 + 4*x^4 + x^3 + 3*x^2 + x + 3",
    "x^5 + 3*x^4 + x^3 + 3*x^2 + 3*x + 3",
]
FACTORS_44 = [
    "x^2 + 2",
    "x^2 + 3",
    "x^10 + x^8 + x^6 + 2*x^4 + x^2 + 2",
    "x^10 + 2*x^8 + x^6 + 2*x^4 + 3*x^2 + 2",
    "x^10 + 4*x^8 + x^6 + 3*x^4 + x^2 + 3",
    "x^10 + 3*x^8 + x^6 + 3*x^4 + 3*x^2 + 3",
]


@contextmanager
def criterion(record_property, number, title):
    record_property("criterion", number)
    record_property("title", title)
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        print(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title} ({elapsed:.2f}s)")


def cold_caches():
    """Drop memoised factorisations and root tables so timings include the real work."""
    distinct_factors.cache_clear()
    poly_module._root_data.cache_clear()
    representative_sets.cache_clear()


def timed(fn):
    cold_caches()
    start = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - start


def cli_lines(capsys, *argv):
    assert main(list(argv)) == 0
    return capsys.readouterr().out.splitlines()


def test_c1_intro_example(record_property, capsys):
    with criterion(record_property, 1, "x^22+1 and x^44+1 over F_5, byte-exact"):
        def run():
            return cli_lines(capsys, "factor", "--q", "5", "--n", "22"), cli_lines(capsys, "factor", "--q", "5", "--n", "44")

        (out22, out44), elapsed = timed(run)
        assert out22[3:] == FACTORS_22
        assert out44[3:] == FACTORS_44
        assert elapsed < BUDGET[1], elapsed


def test_c2_odd_order_table(record_property, capsys):
    with criterion(record_property, 2, "odd-order count table regenerated"):
        lines, elapsed = timed(lambda: cli_lines(capsys, "count", "--table", "1"))
        expected = [",".join(map(str, row)) for row in expected_rows(ODD_ORDER_COUNTS)]
        assert lines[1:] == expected
        assert elapsed < BUDGET[2], elapsed


def test_c3_even_order_table(record_property, capsys):
    with criterion(record_property, 3, "even-order count table regenerated"):
        lines, elapsed = timed(lambda: cli_lines(capsys, "count", "--table", "2"))
        expected = [",".join(map(str, row)) for row in expected_rows(EVEN_ORDER_COUNTS)]
        assert lines[1:] == expected
        assert [line.rsplit(",", 1)[1] for line in lines if line.startswith("7,15,")] == ["6", "9", "18", "36", "60"]
        assert elapsed < BUDGET[3], elapsed


def test_c4_oracle_equivalence(record_property):
    with criterion(record_property, 4, f"recursive == generic for q in {GRID_Q}, n <= {GRID_NMAX}"):
        def run():
            bad = []
            for q in GRID_Q:
                spec = field(q)
                for n in range(1, GRID_NMAX + 1):
                    if factor_xn_plus_1(spec, n).factors != factor_generic(Poly.x_pow_plus(spec, n)):
                        bad.append((q, n))
            return bad

        mismatches, elapsed = timed(run)
        assert mismatches == []
        assert elapsed < BUDGET[4], elapsed


def test_c5_count_agreement(record_property):
    with criterion(record_property, 5, "divisor sum == closed form == factor count"):
        bad = []
        for q in GRID_Q:
            spec = field(q)
            for n in range(1, GRID_NMAX + 1):
                if gcd(n, q) != 1:
                    continue
                report = factor_xn_plus_1(spec, n)
                prof = report.profile
                counts = (count_factors_sum(q, n), count_factors_fast(profile(q, prof.nprime, prof.i)), report.count)
                if len(set(counts)) != 1:
                    bad.append((q, n, counts))
        assert bad == []


def test_c6_order_closed_forms(record_property):
    with criterion(record_property, 6, f"closed-form ord_(2^i)(q) for 1 <= i <= {ORDER_IMAX}"):
        for q in GRID_Q:
            for i in range(1, ORDER_IMAX + 1):
                assert ord_two_power(q, i) == mult_order_mod(2**i, q), (q, i)


def test_c7_coset_structure(record_property):
    with criterion(record_property, 7, "coset split/merge classification and paired cardinality"):
        checked = set()
        for q in GRID_Q:
            beta = beta_of(q)
            for n_prime in range(1, 40, 2):
                if gcd(n_prime, q) != 1:
                    continue
                lam = lambda_of(q, n_prime)
                if lam > 2:
                    continue
                checked.add(lam)
                for i in range(1, lam + beta + 3):
                    found = coset_split_structure(q, n_prime, i)
                    expected = predicted_transition(q, n_prime, i)
                    assert expected is None or found is expected, (q, n_prime, i)
                    modulus = 2 ** (i + 1) * n_prime
                    sizes = {c.rep: len(c.elements) for c in representative_sets(q, modulus).cosets}
                    for a in range(1, modulus, 2):
                        partner = (a + 2**i * n_prime) % modulus
                        assert sizes[coset(q, modulus, a).rep] == sizes[coset(q, modulus, partner).rep]
        assert checked == {0, 1, 2}


def test_c8_negacyclic_counts(record_property):
    cases = [((3, 1), 4), ((3, 1), 12), ((5, 1), 2), ((5, 1), 44), ((3, 2), 8)]
    with criterion(record_property, 8, "negacyclic code counts and lifting bijection"):
        def run():
            for pm, n in cases:
                spec = make_field(*pm)
                q, p = spec.q, spec.p
                s, i, n_prime = decompose(n, q)
                k = lift_threshold(q, n_prime)
                assert i >= k
                expected = (p**s + 1) ** count_factors_sum(q, 2**k * n_prime)
                assert count_codes(q, n) == expected
                assert sum(1 for _ in enumerate_codes(spec, n)) == expected
                base = p**s * 2**k * n_prime
                assert lifted_family_is_bijective(spec, base, n)

        _, elapsed = timed(run)
        assert elapsed < BUDGET[8], elapsed


def test_c9_verification_and_properties(record_property):
    import test_properties

    with criterion(record_property, 9, f"verified factorizations and >= {MIN_RANDOM_CASES} randomized cases"):
        for q in GRID_Q:
            spec = field(q)
            for n in range(1, GRID_NMAX + 1):
                report = factor_xn_plus_1(spec, n)
                verify_factorization(spec, n, report.factors)
        before = sum(test_properties.CASES.values())
        for prop in test_properties.PROPERTIES:
            prop()
        ran = sum(test_properties.CASES.values()) - before
        print(f"randomized cases: {ran}")
        assert ran >= MIN_RANDOM_CASES
