"""Q-integration: the right inverse of Q pinned by F(0) = 0."""
from __future__ import annotations


from .algebra import Poly, Rational, Scalar, rational
from .errors import DegreeOverflow
from .qcore import QContext, from_basic, to_basic


def q_antiderivative(ctx: QContext, f: Poly) -> Poly:
    if f.degree > ctx.cap - 1:
        raise DegreeOverflow(f"q_antiderivative: degree {f.degree} exceeds {ctx.cap - 1}")
    nt = ctx.psi.n_table
    c = to_basic(ctx, f)
    return from_basic(ctx, [rational(0)] + [cn / nt[n + 1] for n, cn in enumerate(c)])


def q_integral_definite(ctx: QContext, f: Poly, alpha: Scalar, beta: Scalar) -> Rational:
    F = q_antiderivative(ctx, f)
    return F(beta) - F(alpha)
