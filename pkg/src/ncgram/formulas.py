"""Closed-form determinant formulas for the pair-partition Gram matrix.

Two independent published formulas for det of the Gram matrix over
noncrossing pair partitions on 2n points:

* a direct Chebyshev product (hard cross-check: must equal the Bareiss
  determinant exactly), and
* a recursion whose transcription mixes argument conventions that do not
  obviously typecheck; it is evaluated verbatim and in one rescaled-argument
  variant, and the outcomes are only *reported* against the direct
  determinant, never asserted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .gram import build_gram, determinant
from .partitions import PartitionClass
from .polynomials import chebyshev_dilated


def _binom(m: int, j: int) -> int:
    """C(m, j) with out-of-range indices giving 0."""
    if j < 0 or j > m:
        return 0
    return comb(m, j)


@dataclass(frozen=True)
class ExponentTable:
    """Chebyshev exponents a_{n,i} of the product formula, recorded verbatim."""

    n: int
    entries: dict[int, int]


def difrancesco_exponents(n: int) -> ExponentTable:
    """a_{n,i} = C(2n, n−i) − 2·C(2n, n−i−1) + C(2n, n−i−2), i = 1..n."""
    if n < 1:
        raise ValueError("n must be positive")
    return ExponentTable(
        n=n,
        entries={
            i: _binom(2 * n, n - i) - 2 * _binom(2 * n, n - i - 1) + _binom(2 * n, n - i - 2)
            for i in range(1, n + 1)
        },
    )


def difrancesco_det(n: int, N: int) -> Fraction:
    """∏_{i=1}^n U_i(N)^{a_{n,i}} — the closed form of the 2n-point pair Gram determinant.

    All U_i(N) are nonzero for N ≥ 2 (the roots lie in (−2, 2)), so
    negative exponents, were the table to produce any, stay well-defined.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if N < 2:
        raise ValueError("N must be at least 2")
    result = Fraction(1)
    for i, a in difrancesco_exponents(n).entries.items():
        if a:
            result *= Fraction(chebyshev_dilated(i).evaluate(N)) ** a
    return result


def difrancesco_check(n: int, N: int) -> dict:
    """Compare the closed form against the direct exact determinant."""
    direct = determinant(build_gram(2 * n, PartitionClass.NONCROSSING_PAIRS, N))
    formula = difrancesco_det(n, N)
    return {
        "n": n,
        "N": N,
        "direct": str(direct),
        "formula": str(formula),
        "match": formula == direct,
    }


def kosmolinsky_b(n: int, k: int) -> Fraction:
    """b(n,k) = (k/n)·C(2n−k−1, n−1)."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    return Fraction(k, n) * _binom(2 * n - k - 1, n - 1)


def _direct_pair_det(points: int, N: int, cache: dict[int, Fraction]) -> Fraction:
    """det of the pair-partition Gram matrix on `points` points (1 when empty)."""
    if points not in cache:
        if points == 0:
            cache[points] = Fraction(1)
        else:
            cache[points] = Fraction(
                determinant(build_gram(points, PartitionClass.NONCROSSING_PAIRS, N))
            )
    return cache[points]


def _kosmolinsky_product(n: int, N: int, rescale: bool, cache: dict[int, Fraction]) -> Fraction | None:
    """Evaluate the transcribed recursion for det of the 2n-point matrix.

    `rescale=False` reads the inner determinants verbatim as matrices on
    n−i points; `rescale=True` reads them on 2(n−i) points. Returns None
    when an exponent fails to be an integer (the formula then does not
    evaluate at all under that reading).
    """
    value = Fraction(1)
    for i in range(1, (n + 1) // 2 + 1):
        exponent = (-1) ** i * _binom(n - i + 1, i)
        inner_points = 2 * (n - i) if rescale else n - i
        base = _direct_pair_det(inner_points, N, cache)
        if base == 0:
            return None
        value *= base**exponent
    for i in range(1, (n - 1) // 2 + 1):
        exponent = kosmolinsky_b(n - i, n - 2 * i)
        if exponent.denominator != 1:
            return None
        quotient = Fraction(chebyshev_dilated(n - i).evaluate(N)) / chebyshev_dilated(
            i
        ).evaluate(N)
        value *= quotient ** int(exponent)
    return value


def kosmolinsky_check(n_max: int, N: int) -> list[dict]:
    """Diagnostic comparison of the transcribed recursion to direct determinants.

    One entry per n with the direct value as ground truth; never raises on
    mismatch — the transcription's index conventions are unclear, so this
    records rather than asserts.
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    if N < 4:
        raise ValueError("N must be at least 4")
    cache: dict[int, Fraction] = {}
    report = []
    for n in range(1, n_max + 1):
        direct = _direct_pair_det(2 * n, N, cache)
        verbatim = _kosmolinsky_product(n, N, rescale=False, cache=cache)
        variant = _kosmolinsky_product(n, N, rescale=True, cache=cache)
        report.append(
            {
                "n": n,
                "N": N,
                "direct": str(direct),
                "verbatim": None if verbatim is None else str(verbatim),
                "variant": None if variant is None else str(variant),
                "match_verbatim": verbatim == direct,
                "match_variant": variant == direct,
            }
        )
    return report
