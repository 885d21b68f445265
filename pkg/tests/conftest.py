import sympy as sp
from hypothesis import HealthCheck, settings

from negafactor.gf import make_field
from negafactor.poly import Poly

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")

GRID_Q = (3, 5, 7, 9, 11, 13)
GRID_FIELDS = {3: (3, 1), 5: (5, 1), 7: (7, 1), 9: (3, 2), 11: (11, 1), 13: (13, 1)}

_X = sp.symbols("x")


def field(q):
    return make_field(*GRID_FIELDS[q])


def sympy_factor_set(p, n):
    """{(ascending coeffs, mult)} of x^n + 1 over the prime field F_p, computed by sympy."""
    _, pairs = sp.Poly(_X**n + 1, _X, modulus=p).factor_list()
    return {(tuple(int(c) % p for c in reversed(f.all_coeffs())), e) for f, e in pairs}


def factor_set(multiset):
    return {(tuple(f.to_json()["coeffs"]), e) for f, e in multiset.factors}


def poly(spec, coeffs):
    return Poly(spec, coeffs)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call":
                continue
            props = dict(rep.user_properties)
            if "criterion" in props:
                lines.append((props["criterion"], "PASS" if outcome == "passed" else "FAIL", props.get("title", "")))
    if lines:
        terminalreporter.section("acceptance criteria")
        for number, status, title in sorted(lines):
            terminalreporter.write_line(f"criterion {number}: {status}  {title}")
