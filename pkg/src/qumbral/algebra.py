"""Exact univariate polynomials over the rationals.

Coefficients are exact rationals (``gmpy2.mpq`` with the compiled backend,
``fractions.Fraction`` otherwise) stored in ascending order of degree.  A
:class:`Poly` is immutable and always kept trimmed, so structural equality
is mathematical equality.
"""
from __future__ import annotations

import numbers
from fractions import Fraction
from typing import Iterable, Sequence, Union

from ._backend import ZERO_SCALAR, Rational, kernels

Scalar = Union[int, Fraction, "Rational"]


def as_rational(value) -> Rational:
    """Coerce an int, exact rational or ``"a/b"`` string to the backend rational type."""
    if type(value) is Rational:
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, (numbers.Rational, str)):
        if isinstance(value, str):
            value = Fraction(value)
        return Rational(value.numerator, value.denominator)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rational(num, den=1) -> Rational:
    return as_rational(num) / as_rational(den)


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, n: int, c: Scalar = 1) -> "Poly":
        return cls([0] * n + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Rational:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return ZERO_SCALAR

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, numbers.Rational):
            return self.coeffs == Poly.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly([{', '.join(str(c) for c in self.coeffs)}])"

    def __add__(self, other) -> "Poly":
        if isinstance(other, numbers.Rational):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> "Poly":
        if isinstance(other, numbers.Rational):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return poly_add(self, -other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, numbers.Rational):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative exponent")
        result = Poly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, t: Scalar) -> Rational:
        return poly_eval(self, t)

    def scale(self, c: Scalar) -> "Poly":
        c = as_rational(c)
        if not c:
            return Poly()
        return Poly(c * a for a in self.coeffs)

    def derivative(self) -> "Poly":
        return poly_derivative(self)


ZERO = Poly()
ONE = Poly.constant(1)
X = Poly.monomial(1)


def poly_add(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return Poly(a[i] + b[i] for i in range(n))


def poly_mul(a: Poly, b: Poly) -> Poly:
    return Poly(kernels.convolve(a.coeffs, b.coeffs, ZERO_SCALAR))


def poly_eval(f: Poly, t: Scalar) -> Rational:
    return kernels.horner(f.coeffs, as_rational(t), ZERO_SCALAR)


def poly_derivative(f: Poly) -> Poly:
    return Poly(i * c for i, c in enumerate(f.coeffs) if i)


def linear_combination(terms: Iterable[tuple[Scalar, Poly]]) -> Poly:
    """Sum of ``c * p`` over ``(c, p)`` pairs, accumulated without intermediate trims."""
    cs, rows = [], []
    for c, p in terms:
        cs.append(as_rational(c))
        rows.append(p.coeffs)
    return Poly(kernels.lincomb(cs, rows, ZERO_SCALAR))


def combine_rows(coords: Sequence[Scalar], rows: Sequence[Sequence]) -> list:
    """Untrimmed ``sum_i coords[i] * rows[i]`` (a row-vector times matrix product)."""
    return kernels.lincomb([as_rational(c) for c in coords], rows, ZERO_SCALAR)


# JSON contract: rationals as "num/den" (or "num"), polys as ascending arrays.

def rational_to_str(r: Scalar) -> str:
    r = as_rational(r)
    num, den = int(r.numerator), int(r.denominator)
    if den == 1:
        return str(num)
    return f"{num}/{den}"


def rational_from_str(s: str) -> Rational:
    return as_rational(s.strip())


def poly_to_json(p: Poly) -> list[str]:
    return [rational_to_str(c) for c in p.coeffs]


def poly_from_json(items: Sequence[str]) -> Poly:
    return Poly(rational_from_str(s) for s in items)
