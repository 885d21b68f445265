"""Dense univariate polynomials over F_q, minimal polynomials of roots of unity,
Rabin irreducibility, and a generic factorisation routine used as an oracle."""

import os
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _kernel as K
from .cosets import Coset, mult_order_mod
from .errors import CapabilityExceeded, DivisionByZero, FieldMismatch
from .gf import (
    MAX_EXTENSION_DEGREE,
    FieldElement,
    FieldSpec,
    _root_of_unity_arr,
    context,
    splitting_field,
    project_rows,
)

DEFAULT_SEED = 0xC05E7


def default_seed():
    env = os.environ.get("NEGAFACTOR_SEED")
    return int(env, 0) if env else DEFAULT_SEED


class Poly:
    """Immutable polynomial over a FieldSpec, coefficients ascending."""

    __slots__ = ("spec", "_a")

    def __init__(self, spec, coeffs=()):
        F = context(spec)
        rows = [spec.element(c).coeffs for c in coeffs]
        arr = np.array(rows, dtype=F.dtype).reshape(-1, spec.m)
        self.spec = spec
        self._a = K.trim(arr)
        self._a.flags.writeable = False

    @classmethod
    def _wrap(cls, spec, arr):
        obj = cls.__new__(cls)
        obj.spec = spec
        obj._a = K.trim(arr)
        obj._a.flags.writeable = False
        return obj

    @classmethod
    def x(cls, spec):
        return cls(spec, [0, 1])

    @classmethod
    def one(cls, spec):
        return cls(spec, [1])

    @classmethod
    def x_pow_plus(cls, spec, n, c=1):
        """x^n + c."""
        F = context(spec)
        arr = F.zeros(n + 1)
        arr[n] = F.one
        arr[0] = (arr[0] + spec.element(c)._arr()) % spec.p
        return cls._wrap(spec, arr)

    @property
    def degree(self):
        return self._a.shape[0] - 1

    def is_zero(self):
        return self._a.shape[0] == 0

    @property
    def coeffs(self):
        return tuple(FieldElement._wrap(self.spec, row) for row in self._a)

    def vectors(self):
        return tuple(tuple(int(c) for c in row) for row in self._a)

    def lead(self):
        if self.is_zero():
            return self.spec.zero()
        return FieldElement._wrap(self.spec, self._a[-1])

    def is_monic(self):
        return not self.is_zero() and self.lead().is_one()

    def monic(self):
        return Poly._wrap(self.spec, K.monic(context(self.spec), self._a))

    def sort_key(self):
        return (self.degree, self.vectors())

    # ----- arithmetic -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.spec != self.spec:
                raise FieldMismatch(f"{self.spec} vs {other.spec}")
            return other
        if isinstance(other, (int, np.integer, FieldElement)):
            return Poly(self.spec, [other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly._wrap(self.spec, K.add(context(self.spec), self._a, other._a))

    __radd__ = __add__

    def __neg__(self):
        return Poly._wrap(self.spec, (-self._a) % self.spec.p)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly._wrap(self.spec, K.sub(context(self.spec), self._a, other._a))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly._wrap(self.spec, context(self.spec).poly_mul(self._a, other._a))

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        quo, rem = K.divmod_poly(context(self.spec), self._a, other._a)
        return Poly._wrap(self.spec, quo), Poly._wrap(self.spec, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative exponent")
        result = Poly.one(self.spec)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.spec == other.spec and np.array_equal(self._a, other._a)

    def __hash__(self):
        return hash((self.spec, self.vectors()))

    def __call__(self, value):
        value = self.spec.element(value)
        acc = self.spec.zero()
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    # ----- text and JSON --------------------------------------------------

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = FieldElement._wrap(self.spec, self._a[k])
            if c.is_zero():
                continue
            if k == 0:
                terms.append(str(c))
                continue
            mono = "x" if k == 1 else f"x^{k}"
            terms.append(mono if c.is_one() else f"{c}*{mono}")
        return " + ".join(terms)

    def __repr__(self):
        return f"Poly({self}, {self.spec})"

    def to_json(self):
        if self.spec.m == 1:
            return {"coeffs": [int(row[0]) for row in self._a]}
        return {"coeffs": [list(v) for v in self.vectors()]}

    @classmethod
    def from_json(cls, spec, data):
        return cls(spec, data["coeffs"])


def poly_arith(f, g, op, modulus=None):
    """Dispatch one of add, sub, mul, divmod, gcd, powmod (``g`` is the exponent for powmod)."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "divmod":
        return divmod(f, g)
    if op == "gcd":
        return gcd(f, g)
    if op == "powmod":
        return powmod(f, g, modulus)
    raise ValueError(f"unknown operation {op!r}")


def gcd(f, g):
    if f.spec != g.spec:
        raise FieldMismatch(f"{f.spec} vs {g.spec}")
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    return Poly._wrap(f.spec, K.gcd(context(f.spec), f._a, g._a))


def powmod(f, e, m):
    if m.is_zero():
        raise DivisionByZero("powmod by the zero polynomial")
    if f.spec != m.spec:
        raise FieldMismatch(f"{f.spec} vs {m.spec}")
    F = context(f.spec)
    if m.degree == 0:
        return Poly(f.spec, [])
    mod = K.Modulus(F, m._a)
    res = mod.pow(K.rem(F, f._a, mod.f), e)
    return Poly._wrap(f.spec, res)


def substitute_power(f, e):
    """f(x^e)."""
    if e < 1:
        raise ValueError("exponent must be positive")
    return Poly._wrap(f.spec, K.substitute_power(context(f.spec), f._a, e))


def is_irreducible(f):
    """Rabin's irreducibility test over the coefficient field."""
    if f.degree < 1:
        raise ValueError("irreducibility is defined for positive degree")
    F = context(f.spec)
    return K.is_irreducible_rabin(F, K.monic(F, f._a))


def derivative(f):
    return Poly._wrap(f.spec, K.derivative(context(f.spec), f._a))


# ----- minimal polynomials --------------------------------------------------


class _RootData:
    """A primitive n-th root of unity in F_{q^t} with the powers needed for cosets."""

    def __init__(self, q_spec, n):
        t = mult_order_mod(n, q_spec.q)
        degree = q_spec.m * t
        if degree > MAX_EXTENSION_DEGREE:
            raise CapabilityExceeded(f"splitting field of degree {degree} over F_{q_spec.p} is too large")
        self.big = splitting_field(q_spec.p, degree)
        self.F = context(self.big)
        alpha = _root_of_unity_arr(self.big, n)
        powers = np.empty((n, degree), dtype=self.F.dtype)
        cur = self.F.one
        for j in range(n):
            powers[j] = cur
            cur = self.F.mul(cur, alpha)
        self.powers = powers


@lru_cache(maxsize=512)
def _root_data(q_spec, n):
    return _RootData(q_spec, n)


def minimal_polynomial(q_spec, n, cs):
    """Product of (x - alpha^j) over the coset, computed in F_{q^t} and projected to F_q."""
    if not isinstance(cs, Coset):
        raise TypeError("expected a Coset")
    if cs.n != n or cs.q != q_spec.q:
        raise ValueError(f"coset modulo {cs.n} over q={cs.q} does not match n={n}, q={q_spec.q}")
    data = _root_data(q_spec, n)
    F = data.F
    prod = F.one[None, :].copy()
    for j in cs.elements:
        root = data.powers[j]
        nxt = F.zeros(prod.shape[0] + 1)
        nxt[1:] = prod
        nxt[:-1] -= F.scalar_mul(root, prod)
        prod = nxt % F.p
    coords = project_rows(q_spec, data.big, prod)
    return Poly._wrap(q_spec, coords)


# ----- generic factorisation ------------------------------------------------


@dataclass(frozen=True)
class FactorMultiset:
    """Monic irreducible factors with multiplicities, in canonical order, times ``unit``."""

    spec: FieldSpec
    factors: tuple
    unit: FieldElement

    @classmethod
    def build(cls, spec, pairs, unit=None):
        merged = Counter()
        for f, e in pairs:
            merged[f] += e
        ordered = tuple(sorted(merged.items(), key=lambda fe: fe[0].sort_key()))
        return cls(spec, ordered, unit if unit is not None else spec.one())

    def product(self):
        result = Poly(self.spec, [self.unit])
        for f, e in self.factors:
            result = result * f**e
        return result

    def polys(self):
        return tuple(f for f, _ in self.factors)

    def __len__(self):
        return len(self.factors)

    def to_json(self):
        return [{"poly": f.to_json(), "mult": e} for f, e in self.factors]


def _squarefree(F, f):
    """Yun-style squarefree decomposition in characteristic p; ``f`` monic."""
    out = []
    if K.degree(f) < 1:
        return out
    d = K.derivative(F, f)
    if d.shape[0] == 0:
        return [(h, e * F.p) for h, e in _squarefree(F, K.pth_root(F, f))]
    c = K.gcd(F, f, d)
    w = K.divmod_poly(F, f, c)[0]
    i = 1
    while K.degree(w) > 0:
        y = K.gcd(F, w, c)
        z = K.divmod_poly(F, w, y)[0]
        if K.degree(z) > 0:
            out.append((z, i))
        i += 1
        w = y
        c = K.divmod_poly(F, c, y)[0]
    if K.degree(c) > 0:
        out.extend((h, e * F.p) for h, e in _squarefree(F, K.pth_root(F, c)))
    return out


def _distinct_degree(F, f):
    out = []
    x = K.x_poly(F)
    rest = f
    mod = K.Modulus(F, rest)
    h = mod.reduce(x)
    d = 1
    while K.degree(rest) >= 2 * d:
        h = mod.pow(h, F.q)
        g = K.gcd(F, rest, K.sub(F, h, x))
        if K.degree(g) > 0:
            out.append((g, d))
            rest = K.divmod_poly(F, rest, g)[0]
            if K.degree(rest) < 1:
                return out
            mod = K.Modulus(F, rest)
            h = mod.reduce(h)
        d += 1
    if K.degree(rest) > 0:
        out.append((rest, K.degree(rest)))
    return out


def _equal_degree(F, f, d, rng):
    n = K.degree(f)
    if n == d:
        return [f]
    mod = K.Modulus(F, f)
    exponent = (F.q**d - 1) // 2
    one = K.one_poly(F)
    while True:
        u = K.trim(rng.integers(0, F.p, size=(n, F.m)).astype(F.dtype))
        if K.degree(u) < 1:
            continue
        g = K.gcd(F, u, f)
        if 0 < K.degree(g) < n:
            break
        v = K.sub(F, mod.pow(u, exponent), one)
        g = K.gcd(F, v, f)
        if 0 < K.degree(g) < n:
            break
    return _equal_degree(F, g, d, rng) + _equal_degree(F, K.divmod_poly(F, f, g)[0], d, rng)


def factor_generic(f, seed=None):
    """Factor ``f`` into monic irreducibles: squarefree, distinct-degree, equal-degree splitting."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    spec = f.spec
    F = context(spec)
    rng = np.random.default_rng(default_seed() if seed is None else seed)
    unit = f.lead()
    pairs = []
    for part, mult in _squarefree(F, K.monic(F, f._a)):
        for block, d in _distinct_degree(F, part):
            for irr in _equal_degree(F, block, d, rng):
                pairs.append((Poly._wrap(spec, irr), mult))
    return FactorMultiset.build(spec, pairs, unit)
