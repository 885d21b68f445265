"""Command-line interface: ``negafactor {factor,count,cosets,codes,verify}``."""

import argparse
import csv
import io
import json
import re
import sys
import time

from .cosets import representative_sets
from .errors import NegafactorError
from .factorizer import (
    count_factors_fast,
    count_factors_sum,
    decompose,
    factor_xn_plus_1,
    profile,
)
from .gf import make_field
from .intmath import prime_power
from .negacyclic import CodeFamily
from .poly import Poly, default_seed, factor_generic
from .tables import COLUMNS, table_rows

EXIT_USAGE = 2
EXIT_DOMAIN = 3


class UsageError(Exception):
    pass


def parse_q(text):
    """'5', '9' or '3^2' -> (p, m)."""
    text = str(text).strip()
    match = re.fullmatch(r"(\d+)(?:\^(\d+))?", text)
    if not match:
        raise UsageError(f"cannot parse q={text!r}; expected p or p^m")
    base = int(match.group(1))
    if match.group(2) is None:
        return prime_power(base)
    p, m = prime_power(base)
    return p, m * int(match.group(2))


def _field(args):
    p, m = parse_q(args.q)
    return make_field(p, m)


def _csv(rows, header):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _factor_text(report):
    prof = report.profile
    target = Poly.x_pow_plus(report.factors.spec, report.n)
    noun = "factor" if report.count == 1 else "factors"
    lines = [
        f"{target} over GF({report.q}): s={prof.s} i={prof.i} n'={prof.nprime}",
        f"beta={prof.beta} lambda={prof.lam} branch={prof.branch} method={report.method}",
        f"{report.count} distinct irreducible {noun}",
    ]
    for f, mult in report.factors.factors:
        lines.append(str(f) if mult == 1 else f"({f})^{mult}")
    return "\n".join(lines)


def cmd_factor(args):
    if args.n is None:
        raise UsageError("factor needs --n")
    report = factor_xn_plus_1(_field(args), args.n, verify=not args.no_verify)
    if args.format == "json":
        return json.dumps(report.to_json())
    if args.format == "csv":
        rows = [(str(f), mult, f.degree) for f, mult in report.factors.factors]
        return _csv(rows, ("poly", "mult", "degree"))
    return _factor_text(report)


def cmd_count(args):
    if args.table is not None:
        rows = [r.as_tuple() for r in table_rows(args.table)]
        if args.format == "json":
            return json.dumps([dict(zip(COLUMNS, r)) for r in rows])
        return _csv(rows, COLUMNS)
    if args.q is None:
        raise UsageError("count needs --q (or --table)")
    p, m = parse_q(args.q)
    q = p**m
    if args.n is not None:
        s, i, n_prime = decompose(args.n, q)
        count = count_factors_sum(q, 2**i * n_prime)
    elif args.n_prime is not None and args.i is not None:
        s, i, n_prime = args.s, args.i, args.n_prime
        count = count_factors_fast(profile(q, n_prime, i, s))
    else:
        raise UsageError("count needs --n, or --n-prime with --i")
    if args.format == "json":
        return json.dumps({"q": q, "nprime": n_prime, "i": i, "s": s, "count": count})
    if args.format == "csv":
        return _csv([(q, n_prime, i, s, count)], ("q", "nprime", "i", "s", "N"))
    return str(count)


def cmd_cosets(args):
    if args.n is None:
        raise UsageError("cosets needs --n")
    p, m = parse_q(args.q)
    reps = representative_sets(p**m, args.n)
    if args.format == "json":
        return json.dumps(reps.to_json())
    odd = set(reps.odd_reps)
    rows = [(c.rep, "odd" if c.rep in odd else "even", len(c.elements), " ".join(map(str, c.elements))) for c in reps.cosets]
    if args.format == "csv":
        return _csv(rows, ("rep", "parity", "size", "elements"))
    lines = [f"{len(reps.all_reps)} cosets mod {args.n}, {len(reps.odd_reps)} with odd representatives"]
    lines += [f"{rep:>4} {parity:<4} {{{elements.replace(' ', ', ')}}}" for rep, parity, _, elements in rows]
    return "\n".join(lines)


def cmd_codes(args):
    if args.n is None:
        raise UsageError("codes needs --n")
    family = CodeFamily(_field(args), args.n, args.cap)
    codes = list(family.codes())
    if args.format == "json":
        return json.dumps({**family.header(), "codes": [c.to_json() for c in codes]})
    if args.format == "csv":
        return _csv([(c.n, c.dimension, str(c.generator)) for c in codes], ("n", "dimension", "generator"))
    head = f"{family.count} negacyclic codes of length {args.n}, k={family.k}"
    if family.below_threshold:
        head += " (length below k: counted from the factorisation directly)"
    if family.truncated:
        head += f", showing first {len(codes)}"
    return "\n".join([head] + [f"dim {c.dimension:>3}  g = {c.generator}" for c in codes])


def verify_grid(spec, nmax, seed=None):
    """Compare the recursive factorisation with the generic oracle for n = 1..nmax."""
    q = spec.q
    mismatches = []
    for n in range(1, nmax + 1):
        report = factor_xn_plus_1(spec, n)
        oracle = factor_generic(Poly.x_pow_plus(spec, n), seed=seed)
        _, i, n_prime = decompose(n, q)
        counts = {
            report.count,
            count_factors_sum(q, 2**i * n_prime),
            count_factors_fast(profile(q, n_prime, i)),
        }
        if report.factors != oracle or len(counts) != 1:
            mismatches.append(n)
    return mismatches


def cmd_verify(args):
    spec = _field(args)
    start = time.perf_counter()
    seed = args.seed if args.seed is not None else default_seed()
    bad = verify_grid(spec, args.nmax, seed)
    elapsed = time.perf_counter() - start
    status = "PASS" if not bad else "FAIL"
    if args.format == "json":
        out = json.dumps({"q": spec.q, "nmax": args.nmax, "status": status, "mismatches": bad})
    else:
        out = f"{status} q={spec.q} n<={args.nmax} mismatches={len(bad)} ({elapsed:.2f}s)"
        if bad:
            out += "\nmismatched n: " + " ".join(map(str, bad))
    return out, (1 if bad else 0)


COMMANDS = {
    "factor": cmd_factor,
    "count": cmd_count,
    "cosets": cmd_cosets,
    "codes": cmd_codes,
    "verify": cmd_verify,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--seed", type=int, default=None, help="seed for the generic oracle")
    common.add_argument("--no-verify", action="store_true", help="skip the product/irreducibility check")

    parser = argparse.ArgumentParser(prog="negafactor", description="Factor x^n + 1 over GF(q) and count negacyclic codes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor", parents=[common], help="factor x^n + 1")
    p.add_argument("--q", required=True)
    p.add_argument("--n", type=int)

    p = sub.add_parser("count", parents=[common], help="number of distinct irreducible factors")
    p.add_argument("--q")
    p.add_argument("--n", type=int)
    p.add_argument("--n-prime", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--table", type=int, choices=(1, 2))

    p = sub.add_parser("cosets", parents=[common], help="q-cyclotomic cosets modulo n")
    p.add_argument("--q", required=True)
    p.add_argument("--n", type=int)

    p = sub.add_parser("codes", parents=[common], help="enumerate negacyclic codes of length n")
    p.add_argument("--q", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--cap", type=int, default=None)

    p = sub.add_parser("verify", parents=[common], help="check against the generic factorisation oracle")
    p.add_argument("--q", required=True)
    p.add_argument("--nmax", type=int, default=60)
    return parser


def _fail(code, exc):
    print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
    return code


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    for name in ("n", "nmax", "n_prime", "cap"):
        value = getattr(args, name, None)
        if value is not None and value < 1:
            return _fail(EXIT_USAGE, UsageError(f"--{name.replace('_', '-')} must be positive"))
    try:
        result = COMMANDS[args.command](args)
    except UsageError as exc:
        return _fail(EXIT_USAGE, exc)
    except (NegafactorError, ValueError) as exc:
        return _fail(EXIT_DOMAIN, exc)
    code = 0
    if isinstance(result, tuple):
        result, code = result
    print(result)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
