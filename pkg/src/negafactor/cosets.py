"""Orders modulo n and q-cyclotomic cosets, including the split/merge structure
of odd cosets when the 2-part of the modulus doubles."""

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import MixedStructure, NotCoprime, PredictionMismatch
from .intmath import factorize, totient


def theta(n, a):
    """Additive order of ``a`` modulo ``n``."""
    if n < 1:
        raise ValueError("modulus must be positive")
    return n // gcd(n, a % n)


@lru_cache(maxsize=65536)
def mult_order_mod(n, q):
    """Multiplicative order of ``q`` modulo ``n``; 1 when n == 1."""
    if n < 1:
        raise ValueError("modulus must be positive")
    if n == 1:
        return 1
    if gcd(n, q) != 1:
        raise NotCoprime(f"gcd({n}, {q}) != 1")
    order = totient(n)
    for r in factorize(order, None):
        while order % r == 0 and pow(q, order // r, n) == 1:
            order //= r
    return order


def two_adic(x):
    """Largest s with 2^s dividing x."""
    if x < 1:
        raise ValueError("two_adic needs a positive integer")
    return (x & -x).bit_length() - 1


@dataclass(frozen=True)
class Coset:
    n: int
    q: int
    rep: int
    elements: tuple

    def __len__(self):
        return len(self.elements)

    def __contains__(self, a):
        return a in self.elements

    def to_json(self):
        return {"n": self.n, "q": self.q, "rep": self.rep, "elements": list(self.elements)}


def _orbit(q, n, a):
    a %= n
    seen = [a]
    b = a * q % n
    while b != a:
        seen.append(b)
        b = b * q % n
    return seen


def coset(q, n, a):
    """The q-cyclotomic coset modulo ``n`` containing ``a``."""
    if gcd(q, n) != 1:
        raise NotCoprime(f"gcd({q}, {n}) != 1")
    elements = tuple(sorted(_orbit(q, n, a)))
    return Coset(n, q, elements[0], elements)


@dataclass(frozen=True)
class RepresentativeSets:
    """Coset representatives modulo ``n``; the parity split is empty when ``n`` is odd."""

    n: int
    q: int
    all_reps: tuple
    odd_reps: tuple
    even_reps: tuple
    cosets: tuple

    def coset_of(self, rep):
        return self.cosets[self.all_reps.index(rep)]

    def odd_cosets(self):
        return tuple(c for c in self.cosets if c.rep in self.odd_reps)

    def to_json(self):
        return {"all": list(self.all_reps), "odd": list(self.odd_reps), "even": list(self.even_reps)}


@lru_cache(maxsize=1024)
def representative_sets(q, n):
    if gcd(q, n) != 1:
        raise NotCoprime(f"gcd({q}, {n}) != 1")
    seen = bytearray(n)
    cosets = []
    for a in range(n):
        if seen[a]:
            continue
        orbit = _orbit(q, n, a)
        for b in orbit:
            seen[b] = 1
        elements = tuple(sorted(orbit))
        cosets.append(Coset(n, q, a, elements))
    reps = tuple(c.rep for c in cosets)
    if n % 2 == 0:
        odd = tuple(r for r in reps if r % 2)
        even = tuple(r for r in reps if r % 2 == 0)
    else:
        odd = even = ()
    return RepresentativeSets(n, q, reps, odd, even, tuple(cosets))


def uniform_parity(q, n):
    """True iff every coset modulo the even ``n`` has members of a single parity."""
    if n % 2:
        raise ValueError("parity check needs an even modulus")
    return all(len({b % 2 for b in c.elements}) == 1 for c in representative_sets(q, n).cosets)


class Transition(enum.Enum):
    SPLITS = "splits"
    MERGES = "merges"
    MIXED = "mixed"


def _beta_lambda(q, n_prime):
    return two_adic(q * q - 1), two_adic(mult_order_mod(n_prime, q))


def predicted_transition(q, n_prime, i):
    """What the closed-form case table says about modulus 2^i n' -> 2^(i+1) n'.

    Returns a Transition, or None where the table makes no uniform claim
    (lambda >= 1 below the merge range).
    """
    beta, lam = _beta_lambda(q, n_prime)
    if lam == 0:
        if q % 4 == 3:
            return Transition.SPLITS if 2 <= i <= beta - 1 else Transition.MERGES
        return Transition.SPLITS if 1 <= i <= beta - 2 else Transition.MERGES
    if i >= lam + beta - 1:
        return Transition.MERGES
    return None


def coset_split_structure(q, n_prime, i):
    """Classify how odd cosets behave when the modulus grows from 2^i n' to 2^(i+1) n'.

    The structure is computed directly from the cosets and then checked
    against the closed-form prediction; a disagreement raises.
    """
    if n_prime % 2 == 0 or n_prime < 1:
        raise ValueError("n' must be a positive odd integer")
    if gcd(q, n_prime) != 1:
        raise NotCoprime(f"gcd({q}, {n_prime}) != 1")
    if i < 1:
        raise ValueError("i must be at least 1")
    half = 2**i * n_prime
    lower = representative_sets(q, half)
    upper = representative_sets(q, 2 * half)
    lower_of = {b: c for c in lower.cosets for b in c.elements}
    upper_of = {b: c for c in upper.cosets for b in c.elements}

    all_split = all_merge = True
    one_splits = None
    for a in range(1, half, 2):
        big = set(upper_of[a].elements)
        small = lower_of[a].elements
        split = upper_of[a] != upper_of[a + half]
        merge = big == set(small) | {b + half for b in small}
        all_split &= split
        all_merge &= merge
        if a == 1:
            one_splits = split

    if all_split:
        found = Transition.SPLITS
    elif all_merge:
        found = Transition.MERGES
    else:
        found = Transition.MIXED

    beta, lam = _beta_lambda(q, n_prime)
    if found is Transition.MIXED and lam == 0:
        raise MixedStructure(f"q={q}, n'={n_prime}, i={i}: odd cosets neither all split nor all merge")
    expected = predicted_transition(q, n_prime, i)
    if expected is not None and expected is not found:
        raise PredictionMismatch(f"q={q}, n'={n_prime}, i={i}: predicted {expected.value}, found {found.value}")
    if lam >= 1 and i == lam + beta - 2 and not one_splits:
        raise PredictionMismatch(f"q={q}, n'={n_prime}, i={i}: coset of 1 should split")
    return found
