"""Finite fields F_{p^m} for odd p: construction, arithmetic, roots of unity, embeddings."""

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _kernel as K
from .errors import (
    CapabilityExceeded,
    DivisionByZero,
    EvenCharacteristic,
    FieldMismatch,
    NoEmbedding,
    NotPrime,
    OrderNotDivisible,
    RootNotFound,
    SubfieldProjectionFailure,
    ZeroElement,
)
from .intmath import MAX_ORDER_BITS, factorize, is_prime, prime_divisors

# largest extension degree over F_p we agree to build
MAX_EXTENSION_DEGREE = 1024


@dataclass(frozen=True)
class FieldSpec:
    """F_{p^m} presented as F_p[w]/(modulus); ``modulus`` is ascending and monic."""

    p: int
    m: int
    modulus: tuple

    @property
    def q(self):
        return self.p**self.m

    def __str__(self):
        return f"GF({self.p}^{self.m}; modulus=[{','.join(map(str, self.modulus))}])"

    def element(self, value):
        """Coerce an int (prime-subfield constant), vector, or FieldElement into this field."""
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise FieldMismatch(f"{value} is not in {self}")
            return value
        if isinstance(value, (int, np.integer)):
            return FieldElement(self, (int(value) % self.p,) + (0,) * (self.m - 1))
        vec = tuple(int(c) % self.p for c in value)
        if len(vec) > self.m:
            raise ValueError(f"coefficient vector longer than {self.m}")
        return FieldElement(self, vec + (0,) * (self.m - len(vec)))

    def elements(self):
        """Every element, in code order (constants first)."""
        for code in range(self.q):
            yield self.from_code(code)

    def from_code(self, code):
        digits = []
        for _ in range(self.m):
            code, d = divmod(code, self.p)
            digits.append(d)
        return FieldElement(self, tuple(digits))

    def zero(self):
        return self.element(0)

    def one(self):
        return self.element(1)


@lru_cache(maxsize=None)
def context(spec):
    return K.FieldContext(spec.p, spec.modulus)


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    coeffs: tuple

    @classmethod
    def _wrap(cls, spec, arr):
        return cls(spec, tuple(int(c) for c in arr))

    def _arr(self):
        return np.array(self.coeffs, dtype=context(self.spec).dtype)

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise FieldMismatch(f"{self.spec} vs {other.spec}")
            return other
        if isinstance(other, (int, np.integer)):
            return self.spec.element(other)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        p = self.spec.p
        return FieldElement(self.spec, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.spec.p
        return FieldElement(self.spec, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        F = context(self.spec)
        return FieldElement._wrap(self.spec, F.mul(self._arr(), other._arr()))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        F = context(self.spec)
        return FieldElement._wrap(self.spec, F.inv(self._arr()))

    def __truediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise DivisionByZero("division by zero")
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.spec.element(other) / self

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        F = context(self.spec)
        return FieldElement._wrap(self.spec, F.pow(self._arr(), e))

    def is_zero(self):
        return not any(self.coeffs)

    def is_one(self):
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def __bool__(self):
        return not self.is_zero()

    @property
    def code(self):
        return sum(c * self.spec.p**j for j, c in enumerate(self.coeffs))

    def sort_key(self):
        return self.coeffs

    def __str__(self):
        if self.spec.m == 1:
            return str(self.coeffs[0])
        return "[" + ",".join(map(str, self.coeffs)) + "]"

    def __repr__(self):
        return f"FieldElement({self}, {self.spec})"


def arithmetic(a, b, op):
    """Apply ``op`` in {'add', 'sub', 'mul', 'div'} to two elements of one field."""
    if a.spec != b.spec:
        raise FieldMismatch(f"{a.spec} vs {b.spec}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def _smallest_irreducible(p, m):
    # ascending coefficient tuples compared from the constant term; c0 = 0 is never irreducible
    F = K.FieldContext(p, (0, 1))
    # rows k^j mod p: a single product spots candidates with a root in F_p
    vander = None
    if p < 256:
        vander = np.array([[pow(k, j, p) for j in range(m + 1)] for k in range(p)], dtype=F.dtype).T
    for c0 in range(1, p):
        for rest in itertools.product(range(p), repeat=m - 1):
            coeffs = (c0,) + rest + (1,)
            f = np.array(coeffs, dtype=F.dtype)
            if vander is not None and not K.matmul_mod(f[None, :], vander, p).all():
                continue
            if K.is_irreducible_benor(F, f[:, None]):
                return coeffs
    raise RuntimeError(f"no irreducible polynomial of degree {m} over F_{p}")


def _random_irreducible(p, m):
    # seeded dense candidates: irreducibles turn up about once every m tries
    F = K.FieldContext(p, (0, 1))
    rng = np.random.default_rng([p, m])
    while True:
        f = np.empty(m + 1, dtype=F.dtype)
        f[:m] = rng.integers(0, p, size=m)
        f[m] = 1
        if f[0] == 0:
            continue
        if K.is_irreducible_benor(F, f[:, None]):
            return tuple(int(c) for c in f)


def _check_field_args(p, m):
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p == 2:
        raise EvenCharacteristic("characteristic 2 is not supported")
    if m < 1:
        raise ValueError("extension degree must be positive")
    if m > MAX_EXTENSION_DEGREE:
        raise CapabilityExceeded(f"extension degree {m} exceeds {MAX_EXTENSION_DEGREE}")


@lru_cache(maxsize=None)
def splitting_field(p, m):
    """F_{p^m} for internal root-of-unity work; the modulus is found by a seeded search
    rather than the canonical one, since nothing computed in it is ever printed."""
    _check_field_args(p, m)
    if m == 1:
        return FieldSpec(p, 1, (0, 1))
    if m <= 8:
        return make_field(p, m)
    return FieldSpec(p, m, _random_irreducible(p, m))


@lru_cache(maxsize=None)
def make_field(p, m=1):
    """Build F_{p^m} with the lexicographically smallest monic irreducible modulus."""
    _check_field_args(p, m)
    if m == 1:
        return FieldSpec(p, 1, (0, 1))
    return FieldSpec(p, m, _smallest_irreducible(p, m))


def _element_order(F, c, group_order, primes):
    order = group_order
    one = F.one
    for r in primes:
        while order % r == 0 and np.array_equal(F.pow(c, order // r), one):
            order //= r
    return order


def multiplicative_order(a):
    """Least t >= 1 with a^t = 1, using the factorisation of q - 1."""
    if a.is_zero():
        raise ZeroElement("zero has no multiplicative order")
    q = a.spec.q
    primes = prime_divisors(q - 1, MAX_ORDER_BITS)
    return _element_order(context(a.spec), a._arr(), q - 1, primes)


@lru_cache(maxsize=None)
def find_generator(spec):
    """First element, in code order, whose multiplicative order is q - 1."""
    q = spec.q
    F = context(spec)
    primes = prime_divisors(q - 1, MAX_ORDER_BITS)
    for code in range(1, q):
        c = F.from_code(code)
        if all(not np.array_equal(F.pow(c, (q - 1) // r), F.one) for r in primes):
            return FieldElement._wrap(spec, c)
    raise RuntimeError(f"no generator found in {spec}")


def _root_of_unity_arr(spec, n):
    q = spec.q
    if (q - 1) % n:
        raise OrderNotDivisible(f"{n} does not divide {q} - 1")
    F = context(spec)
    primes = prime_divisors(n, None)
    cofactor = (q - 1) // n
    for code in range(1, q):
        alpha = F.pow(F.from_code(code), cofactor)
        if all(not np.array_equal(F.pow(alpha, n // r), F.one) for r in primes):
            return alpha
    raise RuntimeError(f"no primitive {n}th root of unity in {spec}")


@lru_cache(maxsize=None)
def nth_root_of_unity(spec, n):
    """A primitive n-th root of unity: the first z^((q-1)/n), z in code order, of exact order n."""
    return FieldElement._wrap(spec, _root_of_unity_arr(spec, n))


def _eval_arr(F, coeffs, x):
    acc = F.zero_elem.copy()
    for c in reversed(coeffs):
        acc = (F.mul(acc, x) + c * F.one) % F.p
    return acc


@lru_cache(maxsize=None)
def _embedding_basis(sub, sup):
    """Rows r^0, ..., r^(m-1) where r is the chosen root of ``sub.modulus`` in ``sup``."""
    if sub.p != sup.p or sup.m % sub.m:
        raise NoEmbedding(f"{sub} does not embed in {sup}")
    F = context(sup)
    if sub.m == 1:
        return F.one[None, :].copy()
    if sub == sup:
        return np.eye(sub.m, dtype=F.dtype)
    qs = sub.q
    cofactor = (sup.q - 1) // (qs - 1)
    for code in range(1, min(sup.q, 1 << 16)):
        h = F.pow(F.from_code(code), cofactor)
        cand = F.one
        for _ in range(qs - 1):
            if not _eval_arr(F, sub.modulus, cand).any():
                basis = [F.one]
                for _ in range(sub.m - 1):
                    basis.append(F.mul(basis[-1], cand))
                return np.array(basis, dtype=F.dtype)
            cand = F.mul(cand, h)
    raise RootNotFound(f"no root of {sub.modulus} found in {sup}")


def embed(sub, sup, a):
    """Image of ``a`` under the fixed embedding F_sub -> F_sup."""
    basis = _embedding_basis(sub, sup)
    if a.spec != sub:
        raise FieldMismatch(f"{a} is not in {sub}")
    F = context(sup)
    vec = np.array(a.coeffs, dtype=F.dtype)[None, :]
    return FieldElement._wrap(sup, K.matmul_mod(vec, basis, sup.p)[0])


def _inverse_mod_p(mat, p):
    n = mat.shape[0]
    aug = np.concatenate([mat % p, np.eye(n, dtype=mat.dtype)], axis=1)
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r, col] % p), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[[col, piv]] = aug[[piv, col]]
        aug[col] = (aug[col] * pow(int(aug[col, col]), p - 2, p)) % p
        for r in range(n):
            if r != col and aug[r, col]:
                aug[r] = (aug[r] - aug[r, col] * aug[col]) % p
    return aug[:, n:]


@lru_cache(maxsize=None)
def _projector(sub, sup):
    basis = _embedding_basis(sub, sup)
    p = sup.p
    # pick pivot columns of the basis so the square minor is invertible
    work = basis.copy() % p
    pivots = []
    row = 0
    for col in range(work.shape[1]):
        if row == work.shape[0]:
            break
        piv = next((r for r in range(row, work.shape[0]) if work[r, col]), None)
        if piv is None:
            continue
        work[[row, piv]] = work[[piv, row]]
        work[row] = (work[row] * pow(int(work[row, col]), p - 2, p)) % p
        for r in range(work.shape[0]):
            if r != row and work[r, col]:
                work[r] = (work[r] - work[r, col] * work[row]) % p
        pivots.append(col)
        row += 1
    cols = np.array(pivots)
    return basis, cols, _inverse_mod_p(basis[:, cols], p)


def project_rows(sub, sup, rows):
    """Coordinates over ``sub`` of elements of ``sup`` (rows of shape (k, M)) known to lie in it."""
    basis, cols, inv = _projector(sub, sup)
    p = sup.p
    coords = K.matmul_mod(rows[:, cols], inv, p)
    if not np.array_equal(K.matmul_mod(coords, basis, p), rows % p):
        raise SubfieldProjectionFailure(f"element outside the embedded copy of {sub}")
    return coords
