"""Admissible psi-sequences and the deformed integers, factorials and binomials they induce."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .algebra import Rational, Scalar, as_rational, rational
from .errors import NotAdmissible, OutOfRange


@dataclass(frozen=True)
class PsiSeq:
    """A finite table ``psi_0 .. psi_cap`` with ``psi_0 = 1`` and no zero entries.

    ``n_table[n]`` holds the deformed integer ``psi_{n-1}/psi_n`` (with
    ``n_table[0] = 0``) and ``fact_table[n]`` holds ``1/psi_n``.
    """

    values: tuple[Rational, ...]
    n_table: tuple[Rational, ...] = field(repr=False)
    fact_table: tuple[Rational, ...] = field(repr=False)

    @property
    def cap(self) -> int:
        return len(self.values) - 1


def psi_from_table(values: Sequence[Scalar]) -> PsiSeq:
    vals = tuple(as_rational(v) for v in values)
    if not vals:
        raise NotAdmissible("psi table is empty")
    if vals[0] != 1:
        raise NotAdmissible(f"psi_0 must be 1, got {vals[0]}")
    for n, v in enumerate(vals):
        if not v:
            raise NotAdmissible(f"psi_{n} is zero")
    n_table = (rational(0),) + tuple(vals[n - 1] / vals[n] for n in range(1, len(vals)))
    fact_table = tuple(1 / v for v in vals)
    return PsiSeq(vals, n_table, fact_table)


def psi_from_integers(n_values: Sequence[Scalar]) -> PsiSeq:
    """Build the table from deformed integers ``1_psi, 2_psi, ...`` (``psi_n = 1/n_psi!``)."""
    vals = [rational(1)]
    for n, m in enumerate(n_values, start=1):
        m = as_rational(m)
        if not m:
            raise NotAdmissible(f"{n}_psi is zero")
        vals.append(vals[-1] / m)
    return psi_from_table(vals)


def _check(s: PsiSeq, n: int, lo: int = 0) -> None:
    if n < lo or n > s.cap:
        raise OutOfRange(f"index {n} outside [{lo}, {s.cap}]")


def n_psi(s: PsiSeq, n: int) -> Rational:
    _check(s, n)
    return s.n_table[n]


def psi_factorial(s: PsiSeq, n: int) -> Rational:
    _check(s, n)
    return s.fact_table[n]


def psi_falling(s: PsiSeq, n: int, k: int) -> Rational:
    """n_psi (n-1)_psi ... (n-k+1)_psi."""
    _check(s, n)
    if not 0 <= k <= n:
        raise OutOfRange(f"need 0 <= k <= n, got n={n}, k={k}")
    out = rational(1)
    for m in range(n - k + 1, n + 1):
        out *= s.n_table[m]
    return out


def psi_binomial(s: PsiSeq, n: int, k: int) -> Rational:
    return psi_falling(s, n, k) / psi_factorial(s, k)


def psi_exp_truncated(s: PsiSeq, y: Scalar, m: int) -> Rational:
    _check(s, m)
    y = as_rational(y)
    total = rational(0)
    power = rational(1)
    for k in range(m + 1):
        total += power / s.fact_table[k]
        power *= y
    return total
