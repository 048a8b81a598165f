"""Bernoulli identity residuals and the Q-difference Bernoulli-Taylor expansion.

The remainder integrand lives in two variables.  It is handled as a sum of
``x``-polynomials (the Q-powers ``x^{j*Q}``) times ``t``-polynomials that
get Q-integrated in ``t`` and then evaluated at ``t = x`` and ``t = y``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

from .algebra import ZERO, Poly, Rational, Scalar, rational, as_rational, linear_combination, poly_to_json, rational_to_str
from .errors import DegreeOverflow, OrderOverflow
from .qcore import QContext, apply_q, apply_q_power, apply_xhat, q_power, shifted_q_power
from .qintegral import q_antiderivative


@dataclass(frozen=True)
class TaylorExpansion:
    f: Poly
    y: Rational
    order: int
    terms: tuple[Poly, ...]
    remainder: Poly

    @property
    def reconstructed(self) -> Poly:
        return linear_combination((1, p) for p in self.terms + (self.remainder,))

    @property
    def ok(self) -> bool:
        return self.reconstructed == self.f

    def to_json(self) -> dict:
        return {
            "y": rational_to_str(self.y),
            "order": self.order,
            "terms": [poly_to_json(t) for t in self.terms],
            "remainder": poly_to_json(self.remainder),
            "ok": self.ok,
        }


def _y_minus_xhat(ctx: QContext, p: Poly, y: Rational) -> Poly:
    return p.scale(y) - apply_xhat(ctx, p)


def viskov_residual(ctx: QContext, n: int, y: Scalar, f: Poly) -> Poly:
    """LHS - RHS of the Bernoulli identity with p = Q and q = xhat - y, applied to ``f``.

    Zero for every input when ``[Q, xhat] = id`` holds.
    """
    if f.degree + 1 > ctx.cap:
        raise DegreeOverflow(f"viskov_residual: degree {f.degree} + 1 exceeds cap {ctx.cap}")
    y = as_rational(y)
    parts = []
    qk_f = f
    for k in range(n + 1):
        p = qk_f
        for _ in range(k):
            p = _y_minus_xhat(ctx, p, y)
        parts.append((rational(1, factorial(k)), p))
        qk_f = apply_q(ctx, qk_f)
    lhs = apply_q(ctx, linear_combination(parts))
    rhs = qk_f  # Q^{n+1} f
    for _ in range(n):
        rhs = _y_minus_xhat(ctx, rhs, y)
    return lhs - rhs.scale(rational(1, factorial(n)))


def _check_orders(ctx: QContext, f: Poly, n: int) -> None:
    if n < 0:
        raise OrderOverflow(f"order must be >= 0, got {n}")
    if f.degree > ctx.cap - 1:
        raise DegreeOverflow(f"degree {f.degree} exceeds {ctx.cap - 1}")
    if n + 1 > ctx.cap:
        raise OrderOverflow(f"order {n} + 1 exceeds cap {ctx.cap}")


def cauchy_remainder(ctx: QContext, f: Poly, y: Scalar, n: int) -> Poly:
    """R_{n+1}(x) = 1/n! int_y^x (x - t)^{n*Q} *_Q (Q^{n+1} f)(t) d_Q t."""
    _check_orders(ctx, f, n)
    y = as_rational(y)
    g = apply_q_power(ctx, f, n + 1)
    if g.is_zero():
        return ZERO
    parts = []
    for j in range(n + 1):
        # t-layer of C(n,j) (-t)^{n-j} g(t), integrated from y to x
        h = Poly.monomial(n - j, comb(n, j) * (-1) ** (n - j)) * g
        H = q_antiderivative(ctx, h)
        parts.append((1, H * q_power(ctx, j) - H(y) * q_power(ctx, j)))
    return linear_combination(parts).scale(rational(1, factorial(n)))


def taylor_terms(ctx: QContext, f: Poly, y: Scalar, n: int) -> tuple[Poly, ...]:
    _check_orders(ctx, f, n)
    y = as_rational(y)
    terms = []
    g = f
    for k in range(n + 1):
        terms.append(shifted_q_power(ctx, k, y).scale(g(y) / factorial(k)))
        g = apply_q(ctx, g)
    return tuple(terms)


def bernoulli_taylor(ctx: QContext, f: Poly, y: Scalar, n: int) -> TaylorExpansion:
    y = as_rational(y)
    return TaylorExpansion(f, y, n, taylor_terms(ctx, f, y, n), cauchy_remainder(ctx, f, y, n))
