"""Regeneration of the factor-count tables N_q(2^i n') for small q and n'."""

from dataclasses import dataclass

from .cosets import mult_order_mod
from .errors import InternalVerificationFailure
from .factorizer import count_factors_fast, count_factors_sum, profile, stable_threshold

# (q, n') pairs whose ord_{n'}(q) is odd
ODD_ORDER_CASES = (
    (3, 1), (3, 11), (3, 13),
    (5, 1), (5, 11),
    (7, 1), (7, 3), (7, 9),
    (9, 1), (9, 7), (9, 11), (9, 13),
)

# (q, n') pairs whose ord_{n'}(q) is even
EVEN_ORDER_CASES = (
    (3, 5), (3, 7),
    (5, 3), (5, 7), (5, 9), (5, 13),
    (7, 5), (7, 11), (7, 13), (7, 15),
    (9, 5),
)

TABLES = {1: ODD_ORDER_CASES, 2: EVEN_ORDER_CASES}
COLUMNS = ("q", "nprime", "ord", "lambda", "beta", "i", "N")
EXTRA_CHECKS = 3


@dataclass(frozen=True)
class TableRow:
    q: int
    nprime: int
    order: int
    lam: int
    beta: int
    i: int
    count: int
    at_least: bool = False

    @property
    def i_label(self):
        return f">={self.i}" if self.at_least else str(self.i)

    def as_tuple(self):
        return (self.q, self.nprime, self.order, self.lam, self.beta, self.i_label, self.count)


def checked_count(q, n_prime, i):
    fast = count_factors_fast(profile(q, n_prime, i))
    slow = count_factors_sum(q, 2**i * n_prime)
    if fast != slow:
        raise InternalVerificationFailure(f"N_{q}(2^{i}*{n_prime}): closed form {fast} != divisor sum {slow}")
    return fast


def case_rows(q, n_prime):
    """Rows i = 0..k-1 followed by a single '>= k' row, with constancy checked up to k + 3."""
    k = stable_threshold(q, n_prime)
    prof = profile(q, n_prime, 0)
    order = mult_order_mod(n_prime, q)
    rows = [TableRow(q, n_prime, order, prof.lam, prof.beta, i, checked_count(q, n_prime, i)) for i in range(k)]
    tail = [checked_count(q, n_prime, i) for i in range(k, k + EXTRA_CHECKS + 1)]
    if len(set(tail)) != 1:
        raise InternalVerificationFailure(f"N_{q}(2^i*{n_prime}) not constant from i={k}: {tail}")
    rows.append(TableRow(q, n_prime, order, prof.lam, prof.beta, k, tail[0], at_least=True))
    return rows


def table_rows(number):
    return [row for q, n_prime in TABLES[number] for row in case_rows(q, n_prime)]
