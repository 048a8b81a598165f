"""Selects the scalar type and arithmetic kernels at import time.

With gmpy2 installed and ``_ckernels`` compiled, rationals are ``gmpy2.mpq``
and the hot loops run in C.  Otherwise everything falls back to
``fractions.Fraction`` and ``_pykernels``.  Set ``QUMBRAL_BACKEND=python``
to force the fallback, or ``QUMBRAL_BACKEND=compiled`` to fail loudly when
the compiled core is missing.
"""
import os
from fractions import Fraction

_requested = os.environ.get("QUMBRAL_BACKEND", "").strip().lower()
if _requested not in ("", "python", "compiled"):
    raise ImportError(f"QUMBRAL_BACKEND must be 'python' or 'compiled', got {_requested!r}")

Rational = Fraction
BACKEND = "python"
from . import _pykernels as kernels  # noqa: E402

if _requested != "python":
    try:
        from gmpy2 import mpq

        from . import _ckernels
    except ImportError:
        if _requested == "compiled":
            raise
    else:
        Rational = mpq
        kernels = _ckernels
        BACKEND = "compiled"

ZERO_SCALAR = Rational(0)
