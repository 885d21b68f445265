"""Time the recursive factorisation against the generic oracle over a (q, n) grid.

    python3 scripts/oracle_grid.py --q 3 5 7 9 11 13 --nmax 120 [--jobs 4]
"""

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from negafactor.cli import parse_q
from negafactor.factorizer import factor_xn_plus_1
from negafactor.gf import make_field
from negafactor.poly import Poly, factor_generic


def run_cell(q_text, nmax):
    spec = make_field(*parse_q(q_text))
    t_rec = t_gen = 0.0
    bad = []
    for n in range(1, nmax + 1):
        t0 = time.perf_counter()
        rec = factor_xn_plus_1(spec, n).factors
        t1 = time.perf_counter()
        gen = factor_generic(Poly.x_pow_plus(spec, n))
        t2 = time.perf_counter()
        t_rec += t1 - t0
        t_gen += t2 - t1
        if rec != gen:
            bad.append(n)
    return spec.q, t_rec, t_gen, bad


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--q", nargs="+", default=["3", "5", "7", "9", "11", "13"])
    parser.add_argument("--nmax", type=int, default=120)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    start = time.perf_counter()
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(run_cell, args.q, [args.nmax] * len(args.q)))
    else:
        results = [run_cell(q, args.nmax) for q in args.q]
    print(f"{'q':>4} {'recursive s':>12} {'generic s':>10} mismatches")
    total_bad = 0
    for q, t_rec, t_gen, bad in results:
        total_bad += len(bad)
        print(f"{q:>4} {t_rec:12.2f} {t_gen:10.2f} {len(bad)} {bad if bad else ''}")
    print(f"wall {time.perf_counter() - start:.1f}s, mismatches {total_bad}")
    return 1 if total_bad else 0


if __name__ == "__main__":
    sys.exit(main())
