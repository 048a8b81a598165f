from fractions import Fraction

from hypothesis import given, strategies as st

from qumbral import Poly, poly_add, poly_derivative, poly_eval, poly_mul
from qumbral.algebra import poly_from_json, poly_to_json, rational_from_str, rational_to_str

from .conftest import polys, rationals

F = Fraction


def test_add_examples():
    assert poly_add(Poly([0, 1]), Poly([0, -1])) == Poly([])
    assert poly_add(Poly([1]), Poly([0, 0, 1])) == Poly([1, 0, 1])
    assert poly_add(Poly([F(1, 2), F(1, 3)]), Poly([F(1, 2), F(2, 3)])) == Poly([1, 1])


def test_mul_examples():
    assert poly_mul(Poly([0, 1]), Poly([0, 1])) == Poly([0, 0, 1])
    assert poly_mul(Poly([3, 4]), Poly([])) == Poly([])
    assert poly_mul(Poly([-1, 1]), Poly([1, 1])) == Poly([-1, 0, 1])


def test_eval_examples():
    assert poly_eval(Poly([-2, 0, 1]), 2) == 2
    assert poly_eval(Poly([]), F(3, 7)) == 0
    assert poly_eval(Poly([5]), F(7, 3)) == 5


def test_derivative_examples():
    assert poly_derivative(Poly([0, 0, 0, 1])) == Poly([0, 0, 3])
    assert poly_derivative(Poly([F(4, 5)])) == Poly([])
    assert poly_derivative(Poly([1, 2, 3])) == Poly([2, 6])


def test_canonical_trim_and_degree():
    p = Poly([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert Poly([0, 0]).degree == -1
    assert Poly([]).is_zero()


def test_rationals_are_canonical():
    c = Poly([F(6, -4)]).coeffs[0]
    assert c.denominator > 0
    assert (c.numerator, c.denominator) == (-3, 2)
    assert Poly([F(0, 5)]).coeffs == ()


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Poly()


@given(polys(), polys(), rationals)
def test_eval_is_a_homomorphism(a, b, t):
    assert poly_eval(a * b, t) == poly_eval(a, t) * poly_eval(b, t)
    assert poly_eval(a + b, t) == poly_eval(a, t) + poly_eval(b, t)


@given(polys(), polys())
def test_leibniz_rule(a, b):
    assert poly_derivative(a * b) == poly_derivative(a) * b + a * poly_derivative(b)


@given(polys())
def test_derivative_drops_degree(f):
    if f.degree >= 1:
        assert poly_derivative(f).degree == f.degree - 1


def test_json_contract():
    assert rational_to_str(F(3, 1)) == "3"
    assert rational_to_str(F(-2, 6)) == "-1/3"
    assert rational_from_str("-1/3") == F(-1, 3)
    assert poly_to_json(Poly([F(1, 2), 0, -3])) == ["1/2", "0", "-3"]
    assert poly_to_json(Poly()) == []


@given(polys(8))
def test_json_round_trip(p):
    assert poly_from_json(poly_to_json(p)) == p


@given(st.integers(0, 6), polys(3))
def test_pow_matches_repeated_mul(n, p):
    expected = Poly([1])
    for _ in range(n):
        expected = expected * p
    assert p ** n == expected


def test_poly_is_immutable():
    p = Poly([1, 2])
    try:
        p.coeffs = ()
    except AttributeError:
        pass
    else:
        raise AssertionError("Poly accepted attribute assignment")
