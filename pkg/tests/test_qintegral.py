from fractions import Fraction

import pytest
from hypothesis import given

from qumbral import DegreeOverflow, Poly, apply_q, classical, forward_difference, jackson, star_product
from qumbral.qintegral import q_antiderivative, q_integral_definite

from .conftest import polys, rationals

F = Fraction
x = Poly([0, 1])
CL, J2, FD = classical(10), jackson(2, 10), forward_difference(10)


def test_antiderivative_examples():
    assert q_antiderivative(CL, x ** 2) == Poly([0, 0, 0, F(1, 3)])
    assert q_antiderivative(J2, x ** 2) == Poly([0, 0, 0, F(1, 7)])
    assert q_antiderivative(J2, Poly()) == Poly()
    # falling: sum of 0..x-1 of k is x(x-1)/2
    assert q_antiderivative(FD, x) == Poly([0, F(-1, 2), F(1, 2)])
    with pytest.raises(DegreeOverflow):
        q_antiderivative(CL, x ** 10)


def test_definite_examples():
    assert q_integral_definite(CL, x, 1, 2) == F(3, 2)
    assert q_integral_definite(J2, x, 0, 1) == F(1, 3)
    assert q_integral_definite(J2, x ** 5 - 3, F(7, 3), F(7, 3)) == 0


def test_falling_integral_is_a_finite_sum():
    f = Poly([2, -1, 3])
    assert q_integral_definite(FD, f, 0, 6) == sum(f(k) for k in range(6))


@given(polys(9))
def test_right_inverse_and_pinned_constant(f):
    for c in (CL, J2, FD):
        F_ = q_antiderivative(c, f)
        assert apply_q(c, F_) == f
        assert F_(0) == 0


@given(polys(9), rationals)
def test_fundamental_theorem(f, alpha):
    for c in (CL, J2, FD):
        Fx = q_antiderivative(c, apply_q(c, f))
        assert Fx - Fx(alpha) == f - f(alpha)


def test_per_partes(ctx):
    import random

    rng = random.Random(5)
    for _ in range(25):
        f = Poly(F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(rng.randint(1, 5)))
        g = Poly(F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(rng.randint(1, 5)))
        a, b = F(rng.randint(-9, 9), rng.randint(1, 9)), F(rng.randint(-9, 9), rng.randint(1, 9))
        lhs = q_integral_definite(ctx, star_product(ctx, f, apply_q(ctx, g)), a, b)
        fg = star_product(ctx, f, g)
        rhs = fg(b) - fg(a) - q_integral_definite(ctx, star_product(ctx, f.derivative(), g), a, b)
        assert lhs == rhs
