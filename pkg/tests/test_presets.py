from fractions import Fraction
import random

import pytest

from qumbral import (
    CapMismatch,
    NotAdmissible,
    Poly,
    SingularParameter,
    apply_q,
    apply_xhat,
    basic_from_operator,
    classical,
    forward_difference,
    jackson,
    n_psi,
    psi_derivative,
    psi_from_table,
    q_power,
    to_basic,
)
from qumbral.presets import classical_psi, jackson_psi

from .conftest import JACKSON_QS, forward_diff, jackson_quotient

F = Fraction
x = Poly([0, 1])


def random_poly(rng, max_deg):
    return Poly(F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(rng.randint(0, max_deg) + 1))


def test_classical():
    c = classical(8)
    assert apply_q(c, x ** 4) == Poly([0, 0, 0, 4])
    for n in range(9):
        assert q_power(c, n) == x ** n
        assert n_psi(c.psi, n) == n


def test_jackson():
    assert apply_q(jackson(2, 6), x ** 3) == Poly([0, 0, 7])
    assert n_psi(jackson(F(1, 3), 6).psi, 2) == F(4, 3)
    with pytest.raises(NotAdmissible):
        jackson(-1, 6)
    with pytest.raises(SingularParameter):
        jackson(1, 6)
    with pytest.raises(CapMismatch):
        jackson(2, 0)


@pytest.mark.parametrize("q", JACKSON_QS + [F(5), F(-1, 2), F(7, 3)])
def test_jackson_matches_difference_quotient(q):
    c = jackson(q, 12)
    rng = random.Random(str(q))
    for _ in range(200):
        f = random_poly(rng, 12)
        assert apply_q(c, f) == jackson_quotient(f, q)


def test_psi_derivative_consistency():
    cap = 8
    assert psi_derivative(classical_psi(cap), cap).q_on_monomials == classical(cap).q_on_monomials
    j = jackson(2, cap)
    p = psi_derivative(jackson_psi(2, cap), cap)
    assert p.q_on_monomials == j.q_on_monomials
    assert p.xhat_on_monomials == j.xhat_on_monomials
    ones = psi_derivative(psi_from_table([1] * (cap + 1)), cap)
    assert apply_q(ones, x ** 3) == x ** 2
    # xhat x^n = (n+1)/(n+1)_psi x^{n+1}
    assert apply_xhat(ones, x ** 3) == x ** 4 * 4


def test_forward_difference():
    c = forward_difference(10)
    assert apply_q(c, x ** 2) == Poly([1, 2])
    assert apply_q(c, c.basis[2]) == c.basis[1] * 2
    assert to_basic(c, x ** 2) == [0, 1, 1]
    rng = random.Random(11)
    for _ in range(200):
        f = random_poly(rng, 10)
        assert apply_q(c, f) == forward_diff(f)


@pytest.mark.parametrize("make", [classical, forward_difference, lambda cap: jackson(F(3, 2), cap)])
def test_markowsky_round_trip(make):
    c = make(12)
    assert basic_from_operator(c.q_on_monomials, c.psi, 12) == c.basis
