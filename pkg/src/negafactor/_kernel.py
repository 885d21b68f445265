"""Vectorised arithmetic over F_{p^m} and dense polynomials over it.

A field element is a length-``m`` row of residues mod ``p`` (ascending powers
of the field generator). A polynomial over the field is a 2-D array of shape
``(len, m)`` whose row ``k`` is the coefficient of ``x^k``; the zero
polynomial has zero rows. Every function here expects reduced, trimmed input
and returns reduced, trimmed output.
"""

import numpy as np

# below this characteristic int64 products never overflow and float64 matmuls stay exact
FAST_P = 1 << 20
_EXACT_FLOAT = 1 << 53


def matmul_mod(a, b, p):
    if a.dtype == object or b.dtype == object:
        return (a @ b) % p
    if a.shape[-1] * (p - 1) ** 2 < _EXACT_FLOAT:
        r = a.astype(np.float64) @ b.astype(np.float64)
        return np.rint(r).astype(np.int64) % p
    return (a @ b) % p


class FieldContext:
    """Arithmetic tables for F_p[y]/(modulus)."""

    def __init__(self, p, modulus):
        self.p = p
        self.m = m = len(modulus) - 1
        self.dtype = np.int64 if p < FAST_P else object
        self.q = p**m
        g = np.array(modulus, dtype=self.dtype) % p
        self.g = g
        # ry[r] = y^(m + r) reduced modulo g
        ry = np.zeros((max(m - 1, 0), m), dtype=self.dtype)
        if m > 1:
            cur = (-g[:m]) % p
            for r in range(m - 1):
                ry[r] = cur
                top = cur[m - 1]
                nxt = np.zeros(m, dtype=self.dtype)
                nxt[1:] = cur[:-1]
                cur = (nxt - top * g[:m]) % p
        self.ry = ry
        self.one = self.constant(1)
        self.zero_elem = np.zeros(m, dtype=self.dtype)

    # ----- elements -------------------------------------------------------

    def constant(self, c):
        e = np.zeros(self.m, dtype=self.dtype)
        e[0] = c % self.p
        return e

    def from_code(self, code):
        e = np.zeros(self.m, dtype=self.dtype)
        for j in range(self.m):
            code, e[j] = divmod(code, self.p)
        return e

    def reduce_y(self, c):
        """Reduce rows of ``c`` (shape (k, L), L <= 2m-1) modulo the field modulus."""
        p, m = self.p, self.m
        c = c % p
        width = c.shape[1]
        if width <= m:
            out = np.zeros((c.shape[0], m), dtype=self.dtype)
            out[:, :width] = c
            return out
        low = c[:, :m]
        return (low + matmul_mod(c[:, m:], self.ry[: width - m], p)) % p

    def mul(self, a, b):
        if self.m == 1:
            return (a * b) % self.p
        return self.reduce_y(np.convolve(a, b)[None, :])[0]

    def _toeplitz(self, c):
        m = self.m
        idx = np.arange(2 * m - 1)[None, :] - np.arange(m)[:, None]
        mask = (idx >= 0) & (idx < m)
        t = c[np.clip(idx, 0, m - 1)]
        t[~mask] = 0
        return t

    def scalar_mul(self, c, v):
        """Multiply every row of ``v`` (shape (k, m)) by the element ``c``."""
        if self.m == 1:
            return (v * c[0]) % self.p
        if v.shape[0] == 0:
            return v
        return self.reduce_y(matmul_mod(v, self._toeplitz(c), self.p))

    def pow(self, c, e):
        result = self.one
        base = c
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def inv(self, c):
        if not c.any():
            raise ZeroDivisionError("inverse of zero")
        if self.m == 1:
            return np.array([pow(int(c[0]), self.p - 2, self.p)], dtype=self.dtype)
        return self.pow(c, self.q - 2)

    def frob_inv(self, c):
        """The unique p-th root of ``c``."""
        if self.m == 1:
            return c
        return self.pow(c, self.p ** (self.m - 1))

    # ----- polynomials ----------------------------------------------------

    def zeros(self, k):
        return np.zeros((k, self.m), dtype=self.dtype)

    def poly_mul(self, a, b):
        if a.shape[0] == 0 or b.shape[0] == 0:
            return self.zeros(0)
        p, m = self.p, self.m
        if m == 1:
            return trim((np.convolve(a[:, 0], b[:, 0]) % p)[:, None])
        s = 2 * m - 1
        ka, kb = a.shape[0], b.shape[0]
        pa = np.zeros((ka, s), dtype=self.dtype)
        pa[:, :m] = a
        pb = np.zeros((kb, s), dtype=self.dtype)
        pb[:, :m] = b
        c = np.convolve(pa.ravel(), pb.ravel()) % p
        full = np.zeros((ka + kb) * s, dtype=self.dtype)
        full[: c.shape[0]] = c
        return trim(self.reduce_y(full.reshape(ka + kb, s)[: ka + kb - 1]))


def trim(a):
    nz = np.flatnonzero(a.any(axis=1))
    if nz.size == 0:
        return a[:0]
    return a[: nz[-1] + 1]


def degree(a):
    return a.shape[0] - 1


def add(F, a, b):
    if a.shape[0] < b.shape[0]:
        a, b = b, a
    out = a.copy()
    out[: b.shape[0]] += b
    return trim(out % F.p)


def sub(F, a, b):
    return add(F, a, (-b) % F.p)


def monic(F, a):
    if a.shape[0] == 0:
        return a
    lead = a[-1]
    if lead[0] == 1 and not lead[1:].any():
        return a
    return F.scalar_mul(F.inv(lead), a)


def divmod_poly(F, a, b):
    b = trim(b)
    if b.shape[0] == 0:
        raise ZeroDivisionError("polynomial division by zero")
    n = b.shape[0] - 1
    if a.shape[0] <= n:
        return F.zeros(0), a
    p = F.p
    lead_inv = F.inv(b[-1])
    unit_lead = lead_inv[0] == 1 and not lead_inv[1:].any()
    r = a.copy()
    quot = F.zeros(a.shape[0] - n)
    for k in range(a.shape[0] - 1 - n, -1, -1):
        c = r[k + n]
        if not c.any():
            continue
        if not unit_lead:
            c = F.mul(c, lead_inv)
        quot[k] = c
        r[k : k + n + 1] = (r[k : k + n + 1] - F.scalar_mul(c, b)) % p
    return trim(quot), trim(r[:n])


def rem(F, a, b):
    return divmod_poly(F, a, b)[1]


def _trim1(a):
    nz = np.flatnonzero(a)
    return a[: nz[-1] + 1] if nz.size else a[:0]


def _gcd1(a, b, p):
    # prime-field Euclid on 1-D arrays; avoids the per-row bookkeeping of the general path
    a, b = _trim1(a), _trim1(b)
    while b.shape[0]:
        n = b.shape[0] - 1
        inv = pow(int(b[-1]), p - 2, p)
        r = a.copy()
        for k in range(r.shape[0] - 1 - n, -1, -1):
            c = r[k + n]
            if c:
                seg = r[k : k + n + 1]
                seg -= (c * inv % p) * b
                seg %= p
        a, b = b, _trim1(r[:n])
    if a.shape[0]:
        a = a * pow(int(a[-1]), p - 2, p) % p
    return a


def gcd(F, a, b):
    if F.m == 1 and F.dtype != object:
        return _gcd1(trim(a)[:, 0], trim(b)[:, 0], F.p)[:, None]
    a, b = trim(a), trim(b)
    while b.shape[0]:
        a, b = b, rem(F, a, b)
    return monic(F, a)


def derivative(F, a):
    if a.shape[0] <= 1:
        return F.zeros(0)
    k = np.arange(1, a.shape[0], dtype=F.dtype) % F.p
    return trim((a[1:] * k[:, None]) % F.p)


def pth_root(F, a):
    """Return ``b`` with ``b(x)^p == a(x)``; ``a`` must have zero derivative."""
    p = F.p
    rows = a[::p]
    return trim(np.array([F.frob_inv(r) for r in rows], dtype=F.dtype).reshape(-1, F.m))


def substitute_power(F, a, e):
    if a.shape[0] == 0 or e == 1:
        return a
    out = F.zeros((a.shape[0] - 1) * e + 1)
    out[::e] = a
    return out


def x_poly(F):
    out = F.zeros(2)
    out[1] = F.one
    return out


def one_poly(F):
    return F.one[None, :].copy()


def _fit(a, k, F):
    if a.shape[0] >= k:
        return a[:k]
    out = F.zeros(k)
    out[: a.shape[0]] = a
    return out


class Modulus:
    """Reduction modulo a fixed monic polynomial via a precomputed reversed inverse."""

    def __init__(self, F, f):
        f = monic(F, trim(f))
        self.F = F
        self.f = f
        self.n = n = f.shape[0] - 1
        if n < 1:
            raise ValueError("modulus must have positive degree")
        # inv = 1 / rev(f) mod x^(n-1), by Newton iteration
        rev = f[::-1]
        inv = one_poly(F)
        prec = 1
        while prec < n - 1:
            prec = min(2 * prec, n - 1)
            h = _fit(F.poly_mul(_fit(rev, prec, F), inv), prec, F)
            e = (-h) % F.p
            e[0] = (e[0] + 2 * F.one) % F.p
            inv = _fit(F.poly_mul(inv, e), prec, F)
        self.inv = inv

    def reduce(self, a):
        n, F = self.n, self.F
        length = a.shape[0]
        if length <= n:
            return a
        if length > 2 * n - 1:
            return rem(F, a, self.f)
        k = length - n
        quo_rev = _fit(F.poly_mul(a[::-1][:k], self.inv[:k]), k, F)
        prod = _fit(F.poly_mul(quo_rev[::-1], self.f), n, F)
        return trim((a[:n] - prod) % F.p)

    def mul(self, a, b):
        return self.reduce(self.F.poly_mul(a, b))

    def pow(self, a, e):
        F = self.F
        base = self.reduce(a)
        if e == 0:
            return self.reduce(one_poly(F))
        result = None
        for bit in bin(e)[2:]:
            if result is not None:
                result = self.mul(result, result)
            if bit == "1":
                result = base if result is None else self.mul(result, base)
        return result


def is_irreducible_rabin(F, f):
    """Rabin's test for a monic ``f`` of positive degree over the context field."""
    from .intmath import prime_divisors

    n = degree(f)
    if n < 1:
        return False
    if n == 1:
        return True
    mod = Modulus(F, f)
    x = x_poly(F)
    checkpoints = {n // r for r in prime_divisors(n, None)}
    saved = {}
    h = x
    for d in range(1, n + 1):
        h = mod.pow(h, F.q)
        if d in checkpoints:
            saved[d] = h
    if not np.array_equal(h, x):
        return False
    for h_d in saved.values():
        if degree(gcd(F, sub(F, h_d, x), f)) > 0:
            return False
    return True


def is_irreducible_benor(F, f):
    """Ben-Or's test; gcds are batched over doubling blocks of degrees."""
    n = degree(f)
    if n < 1:
        return False
    mod = Modulus(F, f)
    x = x_poly(F)
    h = mod.reduce(x)
    acc = one_poly(F)
    check_at = 1
    for d in range(1, n // 2 + 1):
        h = mod.pow(h, F.q)
        acc = mod.mul(acc, sub(F, h, x))
        if d == check_at or d == n // 2:
            if degree(gcd(F, acc, f)) > 0:
                return False
            acc = one_poly(F)
            check_at *= 2
    return True
