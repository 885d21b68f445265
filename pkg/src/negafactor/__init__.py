"""Factorisation of x^n + 1 over odd-characteristic finite fields and the negacyclic codes it yields."""

from .cosets import coset, mult_order_mod, representative_sets
from .factorizer import (
    CaseProfile,
    FactorizationReport,
    count_factors_fast,
    count_factors_sum,
    decompose,
    factor_xn_plus_1,
    ord_two_power,
    profile,
    stable_threshold,
)
from .gf import FieldElement, FieldSpec, make_field
from .negacyclic import CodeFamily, NegacyclicCode, count_codes, enumerate_codes, lift_generator, lift_threshold
from .poly import FactorMultiset, Poly, factor_generic, is_irreducible, minimal_polynomial

__version__ = "0.1.0"
