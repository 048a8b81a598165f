from fractions import Fraction
from itertools import combinations, product
from math import factorial

import pytest
from hypothesis import settings, strategies as st

from qumbral import Poly, classical, forward_difference, jackson

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

CAP = 16
ACCEPTANCE_LOG: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LOG:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LOG:
            terminalreporter.write_line(line)
JACKSON_QS = [Fraction(2), Fraction(3, 2), Fraction(1, 3), Fraction(-2)]


def make_preset(name, cap=CAP):
    if name == "classical":
        return classical(cap)
    if name == "falling":
        return forward_difference(cap)
    return jackson(Fraction(name.split(":")[1]), cap)


PRESET_NAMES = ["classical", "jackson:2", "jackson:3/2", "jackson:1/3", "jackson:-2", "falling"]


@pytest.fixture(scope="session")
def contexts():
    return {name: make_preset(name) for name in PRESET_NAMES}


@pytest.fixture(params=PRESET_NAMES)
def ctx(request, contexts):
    return contexts[request.param]


rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 9))


def polys(max_deg=6):
    return st.lists(rationals, min_size=0, max_size=max_deg + 1).map(Poly)


# --- independent oracles: plain coefficient manipulation, no operator machinery ---

def compose(f: Poly, g: Poly) -> Poly:
    """f(g(x)) by Horner over polynomials."""
    acc = Poly()
    for c in reversed(f.coeffs):
        acc = acc * g + Poly.constant(c)
    return acc


def jackson_quotient(f: Poly, q) -> Poly:
    """(f(x) - f(qx)) / ((1 - q) x)."""
    q = Fraction(q)
    num = [Fraction(c) - Fraction(c) * q ** i for i, c in enumerate(f.coeffs)]
    assert num == [] or num[0] == 0
    return Poly(c / (1 - q) for c in num[1:])


def forward_diff(f: Poly) -> Poly:
    return compose(f, Poly([1, 1])) - f


def gaussian_binomial(n, k, q):
    """sum over k-subsets S of {0..n-1} of q^(sum S - k(k-1)/2)."""
    return sum(Fraction(q) ** (sum(s) - k * (k - 1) // 2) for s in combinations(range(n), k))


def stirling2(n, k):
    """Surjections [n] -> [k] counted by enumeration, divided by k!."""
    if n == 0:
        return int(k == 0)
    surj = sum(1 for fn in product(range(k), repeat=n) if len(set(fn)) == k)
    return surj // factorial(k)
