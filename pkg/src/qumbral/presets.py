"""Ready-made calculus instances: classical D, Jackson's q-derivative, generic
psi-derivatives, and the forward difference on falling factorials."""
from __future__ import annotations

from math import factorial

from .algebra import Poly, Scalar, as_rational, rational
from .errors import CapMismatch, NotAdmissible, SingularParameter
from .psi import PsiSeq, psi_from_integers, psi_from_table
from .qcore import QContext, context_new

JACKSON_SAMPLE_QS = (rational(2), rational(3, 2), rational(1, 3), rational(-2))


def classical_psi(cap: int) -> PsiSeq:
    return psi_from_table([rational(1, factorial(n)) for n in range(cap + 1)])


def jackson_psi(q: Scalar, cap: int) -> PsiSeq:
    """psi_n = 1/n_q! with n_q = 1 + q + ... + q^{n-1}."""
    q = as_rational(q)
    if q == 1:
        raise SingularParameter("q = 1 is the classical case; use classical()")
    ints = []
    for n in range(1, cap + 1):
        nq = sum(q ** i for i in range(n))
        if not nq:
            raise NotAdmissible(f"{n}_q vanishes at q = {q}")
        ints.append(nq)
    return psi_from_integers(ints)


def monomial_basis(cap: int) -> list[Poly]:
    return [Poly.monomial(n) for n in range(cap + 1)]


def falling_factorial_basis(cap: int) -> list[Poly]:
    out = [Poly.constant(1)]
    for n in range(1, cap + 1):
        out.append(out[-1] * Poly([-(n - 1), 1]))
    return out


def _check_cap(cap: int) -> None:
    if cap < 1:
        raise CapMismatch(f"cap must be >= 1, got {cap}")


def classical(cap: int) -> QContext:
    _check_cap(cap)
    return context_new(classical_psi(cap), monomial_basis(cap), cap, name="classical")


def jackson(q: Scalar, cap: int) -> QContext:
    _check_cap(cap)
    q = as_rational(q)
    return context_new(jackson_psi(q, cap), monomial_basis(cap), cap, name=f"jackson({q})")


def psi_derivative(psi: PsiSeq, cap: int) -> QContext:
    _check_cap(cap)
    return context_new(psi, monomial_basis(cap), cap, name="psi")


def forward_difference(cap: int) -> QContext:
    _check_cap(cap)
    return context_new(classical_psi(cap), falling_factorial_basis(cap), cap, name="falling")


def standard_presets(cap: int) -> list[QContext]:
    """The six instances exercised by the verification suites."""
    return [classical(cap), *(jackson(q, cap) for q in JACKSON_SAMPLE_QS), forward_difference(cap)]
