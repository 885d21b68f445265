"""Count negacyclic codes across lengths p^s 2^i n' and check the lifting map level by level.

    python3 scripts/lift_codes.py --q 5 --n-prime 11 --s 0 --imax 5
"""

import argparse
import sys

from negafactor.cli import parse_q
from negafactor.gf import make_field
from negafactor.negacyclic import count_codes, lifted_family_is_bijective, lift_threshold


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--q", default="5")
    parser.add_argument("--n-prime", type=int, default=11)
    parser.add_argument("--s", type=int, default=0)
    parser.add_argument("--imax", type=int, default=5)
    parser.add_argument("--max-codes", type=int, default=20000, help="skip the bijection check above this size")
    args = parser.parse_args()

    spec = make_field(*parse_q(args.q))
    q, p = spec.q, spec.p
    k = lift_threshold(q, args.n_prime)
    base = p**args.s * 2**k * args.n_prime
    print(f"q={q} n'={args.n_prime} s={args.s}: k={k}, base length {base}")
    ok = True
    for i in range(args.imax + 1):
        n = p**args.s * 2**i * args.n_prime
        count = count_codes(q, n, strict=False)
        note = "below k" if i < k else ""
        if i > k and count <= args.max_codes:
            lifted = lifted_family_is_bijective(spec, base, n)
            ok &= lifted
            note = f"lift from {base}: {'bijective' if lifted else 'FAILED'}"
        print(f"  i={i:<2} n={n:<6} codes={count:<10} {note}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
