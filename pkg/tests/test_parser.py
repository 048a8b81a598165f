from fractions import Fraction

import pytest
from hypothesis import given

from qumbral import ParseError, Poly, parse_poly, render

from .conftest import polys

F = Fraction


@pytest.mark.parametrize(
    "src, coeffs",
    [
        ("x^3 - 2*x", [0, -2, 0, 1]),
        ("(1/2)*x^2 + x*(x-1)", [0, -1, F(3, 2)]),
        ("  x ^ 2  ", [0, 0, 1]),
        ("-x^2", [0, 0, -1]),
        ("(x+1)^3", [1, 3, 3, 1]),
        ("x^3/3", [0, 0, 0, F(1, 3)]),
        ("2*x^3/3 - 1/2", [F(-1, 2), 0, 0, F(2, 3)]),
        ("0.25*x", [0, F(1, 4)]),
        ("--x", [0, 1]),
        ("x - x", []),
        ("2^3", [8]),
    ],
)
def test_parse(src, coeffs):
    assert parse_poly(src) == Poly(coeffs)


@pytest.mark.parametrize(
    "src, offset",
    [
        ("x^-1", 2),
        ("x^", 2),
        ("", 0),
        ("2x", 1),
        ("(x+1", 4),
        ("x / (x+1)", 4),
        ("x/0", 2),
        ("y + 1", 0),
        ("x^1.5", 2),
        ("x + )", 4),
    ],
)
def test_parse_errors(src, offset):
    with pytest.raises(ParseError) as info:
        parse_poly(src)
    assert info.value.offset == offset


def test_error_offset_counts_bytes():
    with pytest.raises(ParseError) as info:
        parse_poly("x + é")
    assert info.value.offset == 4
    with pytest.raises(ParseError) as info:
        parse_poly("é x")
    assert info.value.offset == 0


@pytest.mark.parametrize(
    "coeffs, text",
    [
        ([2, -3, 0, 1], "x^3 - 3*x + 2"),
        ([0, 0, 7], "7*x^2"),
        ([0, 0, 0, F(1, 3)], "x^3/3"),
        ([1, 2, 1], "x^2 + 2*x + 1"),
        ([F(-1, 2), 0, F(-2, 3)], "-2*x^2/3 - 1/2"),
        ([], "0"),
        ([0, -1], "-x"),
    ],
)
def test_render(coeffs, text):
    assert render(Poly(coeffs)) == text


@given(polys(10))
def test_round_trip(p):
    assert parse_poly(render(p)) == p
