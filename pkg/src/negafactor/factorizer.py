"""Factorisation of x^n + 1 over F_q for odd q, by recursion on the 2-adic part of n.

Write n = p^s * 2^i * n' with n' odd and coprime to q. The distinct irreducible
factors of x^(2^i n') + 1 are induced by the odd q-cyclotomic cosets modulo
2^(i+1) n'. Depending on beta = v2(q^2 - 1), lambda = v2(ord_{n'}(q)) and q mod 4,
each step in i either splits every odd coset in two (factor count doubles,
factors computed from the new cosets) or keeps it whole, in which case every
factor f(x) of the previous level becomes f(x^2).
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .cosets import coset, mult_order_mod, representative_sets, two_adic
from .errors import EvenCharacteristic, InternalVerificationFailure, NotCoprime
from .gf import FieldSpec
from .intmath import divisors, prime_power, totient
from .poly import FactorMultiset, Poly, is_irreducible, minimal_polynomial, substitute_power

BRANCHES = ("I.i.a", "I.i.b", "I.i.c", "I.ii.a", "I.ii.b", "I.ii.c", "II.i", "II.ii")


def decompose(n, q):
    """Return (s, i, n') with n == p^s * 2^i * n', n' odd and prime to q."""
    if n < 1:
        raise ValueError("n must be positive")
    p, _ = prime_power(q)
    s = 0
    while n % p == 0:
        n //= p
        s += 1
    i = two_adic(n)
    return s, i, n >> i


def beta_of(q):
    return two_adic(q * q - 1)


def lambda_of(q, n_prime):
    return two_adic(mult_order_mod(n_prime, q))


def branch_of(q, i, beta, lam):
    if lam == 0:
        if q % 4 == 1:
            if i == 0:
                return "I.i.a"
            return "I.i.b" if i <= beta - 2 else "I.i.c"
        if i <= 1:
            return "I.ii.a"
        return "I.ii.b" if i <= beta - 1 else "I.ii.c"
    return "II.i" if i <= lam + beta - 2 else "II.ii"


@dataclass(frozen=True)
class CaseProfile:
    q: int
    nprime: int
    i: int
    s: int
    beta: int
    lam: int
    order: int
    residue: int
    branch: str


def profile(q, n_prime, i, s=0):
    if n_prime % 2 == 0 or gcd(q, n_prime) != 1:
        raise NotCoprime(f"n'={n_prime} must be odd and prime to q={q}")
    order = mult_order_mod(n_prime, q)
    beta = beta_of(q)
    lam = two_adic(order)
    return CaseProfile(q, n_prime, i, s, beta, lam, order, q % 4, branch_of(q, i, beta, lam))


def ord_two_power(q, i):
    """ord_{2^i}(q) from its closed form in beta and q mod 4."""
    if i < 1 or q % 2 == 0:
        raise ValueError("need i >= 1 and odd q")
    beta = beta_of(q)
    if q % 4 == 3:
        if i == 1:
            return 1
        if i <= beta:
            return 2
        return 2 ** (i - beta + 1)
    if i <= beta - 1:
        return 1
    return 2 ** (i - beta + 1)


def count_factors_sum(q, n):
    """Distinct irreducible factors of x^n + 1 (n prime to q) via the divisor sum."""
    if gcd(n, q) != 1:
        raise NotCoprime(f"gcd({n}, {q}) != 1")
    i = two_adic(n)
    n_prime = n >> i
    return sum(totient(2 ** (i + 1) * d) // mult_order_mod(2 ** (i + 1) * d, q) for d in divisors(n_prime))


def count_factors_fast(prof):
    """N_q(2^i n') from the consolidated case table; only base values use the divisor sum."""
    q, n_prime, i, beta, lam = prof.q, prof.nprime, prof.i, prof.beta, prof.lam
    if lam >= 1:
        top = lam + beta - 2
        return count_factors_sum(q, 2 ** min(i, top) * n_prime)
    base = count_factors_sum(q, n_prime)
    if i == 0:
        return base
    if q % 4 == 1:
        return 2**i * base if i <= beta - 2 else 2 ** (beta - 2) * base
    if i == 1:
        return base
    return 2 ** (i - 1) * base if i <= beta - 1 else 2 ** (beta - 2) * base


def stable_threshold(q, n_prime):
    """Least i from which N_q(2^i n') stays constant."""
    beta, lam = beta_of(q), lambda_of(q, n_prime)
    if lam == 0 and q % 4 == 3:
        return lam + beta - 1
    return lam + beta - 2


# ----- factorisation ---------------------------------------------------------


def _direct(q_spec, modulus):
    reps = representative_sets(q_spec.q, modulus)
    return tuple(minimal_polynomial(q_spec, modulus, c) for c in reps.odd_cosets())


def _split(q_spec, n_prime, i):
    half = 2**i * n_prime
    q = q_spec.q
    out = []
    for a in representative_sets(q, half).odd_reps:
        low = coset(q, 2 * half, a)
        high = coset(q, 2 * half, a + half)
        if low == high:
            raise InternalVerificationFailure(f"cosets of {a} and {a + half} mod {2 * half} coincide")
        out.append(minimal_polynomial(q_spec, 2 * half, low))
        out.append(minimal_polynomial(q_spec, 2 * half, high))
    return tuple(out)


def _lift(factors, e):
    return tuple(substitute_power(f, e) for f in factors)


@lru_cache(maxsize=1024)
def distinct_factors(q_spec, n_prime, i):
    """Distinct monic irreducible factors of x^(2^i n') + 1 and the method used."""
    q = q_spec.q
    prof = profile(q, n_prime, i)
    beta, lam, branch = prof.beta, prof.lam, prof.branch
    if branch in ("I.i.a", "II.i") or (branch == "I.ii.a" and i == 0):
        return _direct(q_spec, 2 ** (i + 1) * n_prime), "direct"
    if branch in ("I.i.b", "I.ii.b"):
        return _split(q_spec, n_prime, i), "split-enumeration"
    if branch == "I.ii.a":
        base, _ = distinct_factors(q_spec, n_prime, 0)
        return _lift(base, 2), "recursive-substitution"
    if branch == "I.i.c":
        base, _ = distinct_factors(q_spec, n_prime, beta - 2)
        return _lift(base, 2 ** (i - beta + 2)), "recursive-substitution"
    if branch == "I.ii.c":
        base, _ = distinct_factors(q_spec, n_prime, beta - 1)
        return _lift(base, 2 ** (i - beta + 1)), "recursive-substitution"
    # II.ii: base level lam + beta - 1 is read off the cosets directly
    top = lam + beta - 1
    base = _direct(q_spec, 2 ** (top + 1) * n_prime)
    if i == top:
        return base, "direct"
    return _lift(base, 2 ** (i - top)), "recursive-substitution"


@dataclass(frozen=True)
class FactorizationReport:
    n: int
    q: int
    profile: CaseProfile
    factors: FactorMultiset
    count: int
    method: str

    def to_json(self):
        prof = self.profile
        return {
            "q": self.q,
            "n": self.n,
            "s": prof.s,
            "i": prof.i,
            "nprime": prof.nprime,
            "beta": prof.beta,
            "lambda": prof.lam,
            "branch": prof.branch,
            "count": self.count,
            "factors": self.factors.to_json(),
        }


def verify_factorization(q_spec, n, factors):
    target = Poly.x_pow_plus(q_spec, n)
    if factors.product() != target:
        raise InternalVerificationFailure(f"factors do not multiply back to x^{n} + 1 over {q_spec}")
    for f in factors.polys():
        if not f.is_monic() or not is_irreducible(f):
            raise InternalVerificationFailure(f"{f} is not monic irreducible over {q_spec}")


def factor_xn_plus_1(q_spec, n, verify=True):
    """Factor x^n + 1 over ``q_spec`` with the recursive coset method."""
    if not isinstance(q_spec, FieldSpec):
        raise TypeError("expected a FieldSpec")
    if q_spec.p == 2:
        raise EvenCharacteristic("x^n + 1 = x^n - 1 in characteristic 2")
    q = q_spec.q
    s, i, n_prime = decompose(n, q)
    prof = profile(q, n_prime, i, s)
    polys, method = distinct_factors(q_spec, n_prime, i)
    mult = q_spec.p**s
    factors = FactorMultiset.build(q_spec, [(f, mult) for f in polys])
    if verify:
        verify_factorization(q_spec, n, factors)
    return FactorizationReport(n, q, prof, factors, len(factors), method)
