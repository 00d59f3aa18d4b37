"""Kernel dispatch: compiled elimination loops when available, pure otherwise.

Two independent accelerators, each optional:

* the Cython module `_kernels` (built by setup.py when Cython is present),
  falling back to the stdlib twin `_kernels_py`;
* gmpy2 integers, which make the O(n³) big-int multiplications inside
  Bareiss several times faster. Inputs/outputs stay Python ints either way.

Everything remains exact arithmetic over ℤ (or ℤ[X] for polynomial
entries, which skip the gmpy2 conversion).
"""

from __future__ import annotations

try:  # pragma: no cover - exercised only in builds with the extension
    from . import _kernels as _impl

    BACKEND = "cython"
except ImportError:  # pragma: no cover
    from . import _kernels_py as _impl

    BACKEND = "python"

try:  # pragma: no cover - optional dependency
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover
    _mpz = None

INTEGER_BACKEND = BACKEND + ("+gmpy2" if _mpz is not None else "")


def _int_rows(rows) -> tuple[list[list], bool]:
    """Copy rows; wrap plain-int matrices in mpz when gmpy2 is around."""
    if _mpz is not None and rows and rows[0] and type(rows[0][0]) is int:
        return [[_mpz(x) for x in row] for row in rows], True
    return [list(row) for row in rows], False


def det_exact(rows):
    """Exact determinant. Accepts any exact-ring entries; returns int for ints."""
    work, wrapped = _int_rows(rows)
    d = _impl.det_bareiss(work)
    return int(d) if wrapped else d


def rank_exact(rows) -> int:
    """Exact rank over the fraction field of the entry ring."""
    work, _ = _int_rows(rows)
    return int(_impl.rank_echelon(work))
