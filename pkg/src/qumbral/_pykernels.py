"""Pure-Python arithmetic kernels: the fallback when the compiled module is unavailable.

Each function mirrors one in ``_ckernels.pyx`` and returns an untrimmed list.
"""
from __future__ import annotations


def lincomb(coeffs, rows, zero):
    """sum_i coeffs[i] * rows[i], coefficientwise; ``zip`` semantics on the outer index."""
    acc = []
    for c, row in zip(coeffs, rows):
        if not c:
            continue
        if len(row) > len(acc):
            acc.extend([zero] * (len(row) - len(acc)))
        for j, r in enumerate(row):
            if r:
                acc[j] += c * r
    return acc


def convolve(a, b, zero):
    if not a or not b:
        return []
    out = [zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] += ai * bj
    return out


def horner(coeffs, t, zero):
    acc = zero
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc
