"""Seeded randomized identity suites used by ``qumbral verify``."""
from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from typing import Callable, Iterable

from .algebra import ONE, Poly, Rational, poly_derivative, poly_mul, rational
from .parser import render
from .psi import psi_from_table
from .qcore import (
    QContext,
    apply_q,
    apply_xhat,
    basic_from_operator,
    dual_tables,
    star_product,
)
from .qintegral import q_integral_definite
from .taylor import bernoulli_taylor, viskov_residual

SUITES = ("taylor", "viskov", "leibniz", "perpartes", "commutator", "markowsky")


@dataclass
class Failure:
    suite: str
    preset: str
    trial: int
    inputs: dict[str, str]
    expected: str
    actual: str

    @property
    def size(self) -> int:
        return sum(len(v) for v in self.inputs.values())

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "preset": self.preset,
            "trial": self.trial,
            "inputs": self.inputs,
            "expected": self.expected,
            "actual": self.actual,
        }


@dataclass
class VerifyReport:
    suite: str
    seed: int
    trials: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed: float = 0.0
    # (preset, trials run, failures) per preset, in run order
    per_preset: list[tuple[str, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def random_rational(rng: random.Random) -> Rational:
    return rational(rng.randint(-9, 9), rng.randint(1, 9))


def random_poly(rng: random.Random, max_deg: int) -> Poly:
    deg = rng.randint(0, max_deg)
    return Poly(random_rational(rng) for _ in range(deg + 1))


def corrupt_psi(ctx: QContext, index: int) -> QContext:
    """Test hook: double one psi entry while keeping the precomputed Q action.

    The result is internally inconsistent, so the identity suites must catch it.
    """
    values = list(ctx.psi.values)
    values[index] *= 2
    psi = psi_from_table(values)
    xhat_mono, powers = dual_tables(psi, ctx.from_basic_rows, ctx.to_basic_rows, ctx.cap)
    return replace(
        ctx,
        psi=psi,
        xhat_on_monomials=xhat_mono,
        q_powers=powers,
        name=f"{ctx.name}[psi_{index} corrupted]",
    )


Check = Callable[[QContext, random.Random, int, int], "tuple[dict[str, str], Poly, Poly] | None"]


def _inputs(**kw) -> dict[str, str]:
    return {k: render(v) if isinstance(v, Poly) else str(v) for k, v in kw.items()}


def _taylor(ctx, rng, max_deg, order):
    f = random_poly(rng, min(max_deg, ctx.cap - 1))
    y = random_rational(rng)
    n = rng.randint(0, min(order, ctx.cap - 1))
    exp = bernoulli_taylor(ctx, f, y, n)
    return _inputs(f=f, y=y, n=n), f, exp.reconstructed


def _viskov(ctx, rng, max_deg, order):
    f = random_poly(rng, min(max_deg, ctx.cap - 1))
    y = random_rational(rng)
    n = rng.randint(0, order)
    return _inputs(f=f, y=y, n=n), Poly(), viskov_residual(ctx, n, y, f)


def _pair(ctx, rng, max_deg):
    f = random_poly(rng, min(max_deg, ctx.cap))
    g = random_poly(rng, min(max_deg, ctx.cap - max(f.degree, 0)))
    return f, g


def _leibniz(ctx, rng, max_deg, order):
    f, g = _pair(ctx, rng, max_deg)
    lhs = apply_q(ctx, star_product(ctx, f, g))
    rhs = star_product(ctx, poly_derivative(f), g) + star_product(ctx, f, apply_q(ctx, g))
    if lhs != rhs:
        return _inputs(f=f, g=g, law="Q-Leibnitz"), rhs, lhs
    # f(xhat) g(xhat) 1 == (f g)(xhat) 1
    comp = star_product(ctx, f, star_product(ctx, g, ONE))
    direct = star_product(ctx, poly_mul(f, g), ONE)
    return _inputs(f=f, g=g, law="composition"), direct, comp


def _perpartes(ctx, rng, max_deg, order):
    f, g = _pair(ctx, rng, max_deg)
    a, b = random_rational(rng), random_rational(rng)
    lhs = q_integral_definite(ctx, star_product(ctx, f, apply_q(ctx, g)), a, b)
    fg = star_product(ctx, f, g)
    rhs = fg(b) - fg(a) - q_integral_definite(ctx, star_product(ctx, poly_derivative(f), g), a, b)
    return _inputs(f=f, g=g, alpha=a, beta=b), Poly.constant(rhs), Poly.constant(lhs)


def _commutator_on(ctx: QContext, p: Poly) -> Poly:
    return apply_q(ctx, apply_xhat(ctx, p)) - apply_xhat(ctx, apply_q(ctx, p))


def _commutator(ctx, rng, max_deg, order):
    f = random_poly(rng, min(max_deg, ctx.cap - 1))
    return _inputs(f=f), f, _commutator_on(ctx, f)


def _commutator_sweep(ctx: QContext) -> Iterable[tuple[dict[str, str], Poly, Poly]]:
    for n in range(ctx.cap):
        q_n = ctx.basis[n]
        yield _inputs(n=n, q_n=q_n), q_n, _commutator_on(ctx, q_n)


def _markowsky_checks(ctx: QContext) -> Iterable[tuple[dict[str, str], Poly, Poly]]:
    rebuilt = basic_from_operator(ctx.q_on_monomials, ctx.psi, ctx.cap)
    for n in range(ctx.cap + 1):
        yield _inputs(n=n, check="round trip"), ctx.basis[n], rebuilt[n]
    for n in range(1, ctx.cap + 1):
        yield (
            _inputs(n=n, check="Q q_n = n_psi q_{n-1}"),
            ctx.basis[n - 1].scale(ctx.psi.n_table[n]),
            apply_q(ctx, ctx.basis[n]),
        )


RANDOM_CHECKS: dict[str, Check] = {
    "taylor": _taylor,
    "viskov": _viskov,
    "leibniz": _leibniz,
    "perpartes": _perpartes,
    "commutator": _commutator,
}


def run_suite(
    suite: str,
    contexts: list[QContext],
    trials: int,
    seed: int,
    max_deg: int,
    order: int,
) -> VerifyReport:
    report = VerifyReport(suite, seed)
    for ctx in contexts:
        before_trials, before_fail = report.trials, len(report.failures)
        if suite in RANDOM_CHECKS:
            check = RANDOM_CHECKS[suite]
            for trial in range(trials):
                rng = random.Random(f"{seed}:{suite}:{ctx.name}:{trial}")
                inputs, expected, actual = check(ctx, rng, max_deg, order)
                report.trials += 1
                if expected != actual:
                    report.failures.append(
                        Failure(suite, ctx.name, trial, inputs, render(expected), render(actual))
                    )
        if suite in ("commutator", "markowsky"):
            fixed = _commutator_sweep(ctx) if suite == "commutator" else _markowsky_checks(ctx)
            for i, (inputs, expected, actual) in enumerate(fixed):
                report.trials += 1
                if expected != actual:
                    report.failures.append(
                        Failure(suite, ctx.name, -1 - i, inputs, render(expected), render(actual))
                    )
        report.per_preset.append(
            (ctx.name, report.trials - before_trials, len(report.failures) - before_fail)
        )
    return report


def minimal_failure(failures: list[Failure]) -> Failure:
    return min(failures, key=lambda fl: (fl.size, fl.trial))
