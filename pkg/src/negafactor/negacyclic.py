"""Negacyclic codes of length p^s 2^i n' over F_q, described by their generator polynomials."""

from dataclasses import dataclass
from functools import cached_property

from .errors import BelowThreshold, CapabilityExceeded, IncompatibleLengths, NotADivisor
from .factorizer import (
    beta_of,
    count_factors_sum,
    decompose,
    factor_xn_plus_1,
    lambda_of,
)
from .intmath import prime_power
from .poly import Poly, substitute_power

HARD_LIMIT = 10**6


def lift_threshold(q, n_prime):
    """Level from which the code families of lengths p^s 2^i n' are all isomorphic."""
    beta, lam = beta_of(q), lambda_of(q, n_prime)
    if lam == 0 and q % 4 == 3:
        return lam + beta - 1
    return lam + beta - 2


@dataclass(frozen=True)
class NegacyclicCode:
    q_spec: object
    n: int
    generator: Poly

    @property
    def dimension(self):
        return self.n - self.generator.degree

    def to_json(self):
        return {"n": self.n, "generator": self.generator.to_json(), "dimension": self.dimension}


def count_codes(q, n, strict=True):
    """(p^s + 1)^N_q(2^k n'), valid once the 2-adic exponent of n reaches k.

    Below k the count is still returned by ``strict=False``; with ``strict=True``
    a BelowThreshold error carries it in ``direct_count``.
    """
    p, _ = prime_power(q)
    s, i, n_prime = decompose(n, q)
    k = lift_threshold(q, n_prime)
    if i < k:
        direct = (p**s + 1) ** count_factors_sum(q, 2**i * n_prime)
        if strict:
            raise BelowThreshold(f"i={i} is below k={k} for q={q}, n'={n_prime}", direct_count=direct)
        return direct
    return (p**s + 1) ** count_factors_sum(q, 2**k * n_prime)


@dataclass(frozen=True)
class CodeFamily:
    q_spec: object
    n: int
    cap: int = None

    @cached_property
    def parts(self):
        return decompose(self.n, self.q_spec.q)

    @property
    def k(self):
        return lift_threshold(self.q_spec.q, self.parts[2])

    @property
    def base_length(self):
        s, _, n_prime = self.parts
        return self.q_spec.p**s * 2**self.k * n_prime

    @property
    def below_threshold(self):
        return self.parts[1] < self.k

    @cached_property
    def count(self):
        return count_codes(self.q_spec.q, self.n, strict=False)

    @property
    def truncated(self):
        return self.cap is not None and self.count > self.cap

    def header(self):
        return {"k": self.k, "count": str(self.count), "truncated": self.truncated}

    def codes(self):
        return enumerate_codes(self.q_spec, self.n, self.cap)


def enumerate_codes(q_spec, n, cap=None):
    """Stream every negacyclic code of length n, at most ``cap`` of them.

    Exponent vectors run through mixed-radix order with the first canonical
    factor as the least significant digit.
    """
    if cap is not None and cap < 1:
        raise ValueError("cap must be at least 1")
    report = factor_xn_plus_1(q_spec, n)
    factors = report.factors.polys()
    radix = report.factors.factors[0][1] + 1 if factors else 1
    total = radix ** len(factors)
    if cap is None and total > HARD_LIMIT:
        raise CapabilityExceeded(f"{total} codes exceed the enumeration limit {HARD_LIMIT}; pass a cap")
    limit = total if cap is None else min(cap, total)
    # powers[j][e] = f_j^e, reused across the whole stream
    powers = []
    for f in factors:
        row = [Poly.one(q_spec)]
        for _ in range(radix - 1):
            row.append(row[-1] * f)
        powers.append(row)
    for index in range(limit):
        g = Poly.one(q_spec)
        for row in powers:
            index, e = divmod(index, radix)
            if e:
                g = g * row[e]
        yield NegacyclicCode(q_spec, n, g)


def lift_generator(g, n_from, n_to):
    """Map a generator of length n_from = p^s 2^k n' to g(x^(2^(i-k))) of length n_to = p^s 2^i n'."""
    spec = g.spec
    q = spec.q
    s0, k0, m0 = decompose(n_from, q)
    s1, i1, m1 = decompose(n_to, q)
    if (s0, m0) != (s1, m1) or i1 < k0:
        raise IncompatibleLengths(f"cannot lift from length {n_from} to {n_to}")
    if k0 < lift_threshold(q, m0):
        raise IncompatibleLengths(f"length {n_from} lies below the lifting threshold")
    if g.is_zero() or not g.is_monic() or not (Poly.x_pow_plus(spec, n_from) % g).is_zero():
        raise NotADivisor(f"{g} is not a monic divisor of x^{n_from} + 1")
    return substitute_power(g, 2 ** (i1 - k0))


def lifted_family_is_bijective(q_spec, n_from, n_to):
    """Lift every code of length n_from and check the images are distinct divisors covering length n_to."""
    target = Poly.x_pow_plus(q_spec, n_to)
    seen = set()
    for code in enumerate_codes(q_spec, n_from):
        h = lift_generator(code.generator, n_from, n_to)
        if not (target % h).is_zero() or h in seen:
            return False
        seen.add(h)
    return len(seen) == count_codes(q_spec.q, n_to)


__all__ = [
    "CodeFamily",
    "NegacyclicCode",
    "count_codes",
    "enumerate_codes",
    "lift_generator",
    "lifted_family_is_bijective",
    "lift_threshold",
]
