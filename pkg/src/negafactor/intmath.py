"""Integer helpers: bounded factorisation, prime powers, totients, divisors."""

from functools import lru_cache

from sympy import factorint, isprime

from .errors import CapabilityExceeded, NotPrime

MAX_ORDER_BITS = 128


@lru_cache(maxsize=4096)
def _factor(n):
    return tuple(sorted(factorint(n).items()))


def factorize(n, max_bits=MAX_ORDER_BITS):
    """Prime factorisation of ``n`` as a dict, refusing numbers wider than ``max_bits``."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    if max_bits is not None and n.bit_length() > max_bits:
        raise CapabilityExceeded(f"{n.bit_length()}-bit integer exceeds the {max_bits}-bit bound")
    return dict(_factor(n))


def prime_divisors(n, max_bits=MAX_ORDER_BITS):
    return sorted(factorize(n, max_bits))


def totient(n):
    result = n
    for r in factorize(n, None):
        result = result // r * (r - 1)
    return result


def divisors(n):
    divs = [1]
    for r, e in factorize(n, None).items():
        divs = [d * r**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def is_prime(n):
    return n >= 2 and isprime(n)


def prime_power(q):
    """Split ``q`` into ``(p, m)`` with ``q == p**m``; raise NotPrime otherwise."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    fac = factorize(q, None)
    if len(fac) != 1:
        raise NotPrime(f"{q} is not a prime power")
    (p, m), = fac.items()
    return p, m
