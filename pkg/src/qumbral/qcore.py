"""Generalized differential operators realized on truncated polynomial spaces.

A :class:`QContext` fixes an admissible psi-sequence and a normal basic
sequence ``q_0 .. q_N``.  Everything else (the operator ``Q``, its dual
``xhat``, the star product, Q-powers, translation) is computed exactly by
moving between monomial and basic coordinates with precomputed triangular
matrices.  Operations that would raise a degree past ``N`` fail loudly with
:class:`DegreeOverflow` instead of truncating.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Sequence

from .algebra import ONE, ZERO, Poly, Rational, Scalar, as_rational, combine_rows, linear_combination, rational
from .errors import CapMismatch, DegreeOverflow, InvalidBasis, NotDegreeLowering, Unsolvable
from .psi import PsiSeq


@dataclass(frozen=True)
class BasicSeq:
    polys: tuple[Poly, ...]

    def __post_init__(self):
        check_normal(self.polys)

    @property
    def cap(self) -> int:
        return len(self.polys) - 1

    def __getitem__(self, n: int) -> Poly:
        return self.polys[n]

    def __len__(self) -> int:
        return len(self.polys)


def check_normal(polys: Sequence[Poly]) -> None:
    if not polys:
        raise InvalidBasis("empty basic sequence")
    if polys[0] != ONE:
        raise InvalidBasis("q_0 must be the constant 1")
    for n, p in enumerate(polys):
        if p.degree != n:
            raise InvalidBasis(f"deg q_{n} = {p.degree}, expected {n}")
        if n and p[0]:
            raise InvalidBasis(f"q_{n}(0) = {p[0]}, expected 0")


def basic_seq(polys: Sequence[Poly]) -> BasicSeq:
    return BasicSeq(tuple(polys))


@dataclass(frozen=True)
class QContext:
    psi: PsiSeq
    basis: BasicSeq
    cap: int
    # row n: monomial coefficients of q_n
    from_basic_rows: tuple[tuple[Rational, ...], ...]
    # row i: basic coordinates of x^i
    to_basic_rows: tuple[tuple[Rational, ...], ...]
    q_on_monomials: tuple[Poly, ...]
    # xhat x^i for i < cap, and x^{n*Q} for n <= cap
    xhat_on_monomials: tuple[Poly, ...]
    q_powers: tuple[Poly, ...]
    name: str = "custom"

    def __repr__(self) -> str:
        return f"QContext({self.name}, cap={self.cap})"


def _invert_basis(rows: Sequence[Sequence[Rational]]) -> tuple[tuple[Rational, ...], ...]:
    # x^i = (q_i - sum_{j<i} B[i][j] x^j) / B[i][i], expanding x^j recursively.
    inv: list[tuple[Rational, ...]] = []
    for i, row in enumerate(rows):
        lead = row[i]
        coords = [rational(0)] * (i + 1)
        coords[i] = 1 / lead
        for j in range(i):
            b = row[j]
            if b:
                for n, c in enumerate(inv[j]):
                    coords[n] -= b * c / lead
        inv.append(tuple(coords))
    return tuple(inv)


def context_new(psi: PsiSeq, basis: BasicSeq | Sequence[Poly], cap: int, name: str = "custom") -> QContext:
    if not isinstance(basis, BasicSeq):
        basis = basic_seq(basis)
    if cap < 1:
        raise CapMismatch(f"cap must be >= 1, got {cap}")
    if psi.cap < cap:
        raise CapMismatch(f"psi table reaches {psi.cap}, need {cap}")
    if basis.cap < cap:
        raise CapMismatch(f"basic sequence reaches {basis.cap}, need {cap}")
    polys = basis.polys[: cap + 1]
    rows = tuple(tuple(p[i] for i in range(n + 1)) for n, p in enumerate(polys))
    inv = _invert_basis(rows)
    # Q q_n = n_psi q_{n-1}, pulled back to monomials.
    q_mono = tuple(
        linear_combination((c * psi.n_table[n], polys[n - 1]) for n, c in enumerate(inv[i]) if n)
        for i in range(cap + 1)
    )
    return QContext(psi, BasicSeq(polys), cap, rows, inv, q_mono, *dual_tables(psi, rows, inv, cap), name)


def dual_tables(psi: PsiSeq, rows, inv, cap: int) -> tuple[tuple[Poly, ...], tuple[Poly, ...]]:
    """Action of xhat on monomials (via q_n -> (n+1)/(n+1)_psi q_{n+1}) and the Q-powers xhat^n 1."""
    nt = psi.n_table
    lifted = [Poly(rows[n + 1]).scale(rational(n + 1) / nt[n + 1]) for n in range(cap)]
    xhat_mono = tuple(
        linear_combination((c, lifted[n]) for n, c in enumerate(inv[i])) for i in range(cap)
    )
    powers = [ONE]
    for _ in range(cap):
        powers.append(linear_combination(zip(powers[-1].coeffs, xhat_mono)))
    return xhat_mono, tuple(powers)


def _need(ctx: QContext, f: Poly, limit: int, what: str) -> None:
    if f.degree > limit:
        raise DegreeOverflow(f"{what}: degree {f.degree} exceeds {limit} (cap {ctx.cap})")


def to_basic(ctx: QContext, f: Poly) -> list[Rational]:
    _need(ctx, f, ctx.cap, "to_basic")
    coords = combine_rows(f.coeffs, ctx.to_basic_rows)
    return coords + [rational(0)] * (len(f) - len(coords))


def from_basic(ctx: QContext, coords: Sequence[Scalar]) -> Poly:
    coords = list(coords)
    if len(coords) > ctx.cap + 1:
        if any(coords[ctx.cap + 1:]):
            raise DegreeOverflow(f"from_basic: {len(coords)} coordinates exceed cap {ctx.cap}")
        coords = coords[: ctx.cap + 1]
    return Poly(combine_rows(coords, ctx.from_basic_rows))


def apply_q(ctx: QContext, f: Poly) -> Poly:
    _need(ctx, f, ctx.cap, "apply_q")
    return linear_combination(zip(f.coeffs, ctx.q_on_monomials))


def apply_q_power(ctx: QContext, f: Poly, k: int) -> Poly:
    for _ in range(k):
        if f.is_zero():
            break
        f = apply_q(ctx, f)
    return f


def apply_xhat(ctx: QContext, f: Poly) -> Poly:
    _need(ctx, f, ctx.cap - 1, "apply_xhat")
    return linear_combination(zip(f.coeffs, ctx.xhat_on_monomials))


def basic_from_operator(q_action: Sequence[Poly], psi: PsiSeq, cap: int) -> BasicSeq:
    """Recover the psi-basic sequence of the operator whose action on ``x^i`` is ``q_action[i]``.

    Solves ``Q q_n = n_psi q_{n-1}`` degree by degree with ``q_n(0) = 0``.
    """
    if len(q_action) < cap + 1:
        raise CapMismatch(f"operator table has {len(q_action)} entries, need {cap + 1}")
    if psi.cap < cap:
        raise CapMismatch(f"psi table reaches {psi.cap}, need {cap}")
    for i in range(cap + 1):
        if q_action[i].degree != i - 1:
            raise NotDegreeLowering(f"Q x^{i} has degree {q_action[i].degree}, expected {i - 1}")
    polys = [ONE]
    for n in range(1, cap + 1):
        residual = list(polys[-1].scale(psi.n_table[n]).coeffs)
        residual += [rational(0)] * (n - len(residual))
        coeffs = [rational(0)] * (n + 1)
        for i in range(n, 0, -1):
            lead = q_action[i][i - 1]
            a = residual[i - 1] / lead
            coeffs[i] = a
            if a:
                for j, b in enumerate(q_action[i].coeffs):
                    residual[j] -= a * b
        if any(residual):
            raise Unsolvable(f"no q_{n} with Q q_{n} = n_psi q_{n - 1}")
        polys.append(Poly(coeffs))
    return BasicSeq(tuple(polys))


def q_power(ctx: QContext, n: int) -> Poly:
    """x^{n*Q}: the dual operator applied n times to 1."""
    if n > ctx.cap:
        raise DegreeOverflow(f"q_power({n}) exceeds cap {ctx.cap}")
    return ctx.q_powers[n]


def star_product(ctx: QContext, f: Poly, g: Poly) -> Poly:
    """f *_Q g = f(xhat) g, with f read in monomial coordinates."""
    if f.is_zero() or g.is_zero():
        return ZERO
    if f.degree + g.degree > ctx.cap:
        raise DegreeOverflow(f"star_product: degree {f.degree} + {g.degree} exceeds cap {ctx.cap}")
    acc = g.scale(f.coeffs[-1])
    for c in reversed(f.coeffs[:-1]):
        acc = apply_xhat(ctx, acc) + g.scale(c)
    return acc


def shifted_q_power(ctx: QContext, k: int, y: Scalar) -> Poly:
    """(xhat - y)^k applied to 1."""
    if k > ctx.cap:
        raise DegreeOverflow(f"shifted_q_power({k}) exceeds cap {ctx.cap}")
    y = as_rational(y)
    p = ONE
    for _ in range(k):
        p = apply_xhat(ctx, p) - p.scale(y)
    return p


def translate(ctx: QContext, y: Scalar, f: Poly) -> Poly:
    _need(ctx, f, ctx.cap, "translate")
    y = as_rational(y)
    terms = []
    g = f
    k = 0
    while not g.is_zero():
        terms.append((ctx.basis[k](y) / ctx.psi.fact_table[k], g))
        g = apply_q(ctx, g)
        k += 1
    return linear_combination(terms)


def q_exp_truncated(ctx: QContext, alpha: Scalar, m: int) -> Poly:
    if m > ctx.cap:
        raise DegreeOverflow(f"q_exp_truncated({m}) exceeds cap {ctx.cap}")
    alpha = as_rational(alpha)
    return linear_combination(
        (alpha ** k / ctx.psi.fact_table[k], ctx.basis[k]) for k in range(m + 1)
    )


def q_exp_via_xhat(ctx: QContext, alpha: Scalar, m: int) -> Poly:
    """sum_{k<=m} alpha^k xhat^k 1 / k!, the other side of the exponential identity."""
    alpha = as_rational(alpha)
    return linear_combination(
        (alpha ** k / factorial(k), q_power(ctx, k)) for k in range(m + 1)
    )


def shifted_q_power_binomial(ctx: QContext, k: int, y: Scalar) -> Poly:
    """Same value as :func:`shifted_q_power`, expanded as sum_j C(k,j) (-y)^{k-j} x^{j*Q}."""
    y = as_rational(y)
    return linear_combination((comb(k, j) * (-y) ** (k - j), q_power(ctx, j)) for j in range(k + 1))
