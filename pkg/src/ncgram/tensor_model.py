"""Dense ground-truth model of the linear maps attached to partitions.

A partition p on (k, l) points acts on tensor legs: the matrix entry at
(lower multi-index j, upper multi-index i) is 1 when (i, j) labels every
block of p constantly, else 0. This module realizes those maps as literal
dicts/lists of integers so the structural laws (tensor, involution,
composition with loop scaling) and the basis expansion can be verified by
brute force at small N. It is an oracle, not a production path: sizes are
capped hard at N^legs ≤ 10^6.

Multi-indices are 1-based tuples over [N] = {1, …, N}, leftmost leg most
significant in any flattened enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import BudgetError, ShapeError
from .partitions import (
    Corner,
    Partition,
    PartitionClass,
    PointLabel,
    compose,
    enumerate_partitions,
    involution,
    kernel,
    refines,
    rotate,
    tensor,
)

DENSE_BUDGET = 10**6


@dataclass(frozen=True)
class DenseTensor:
    """Sparse-by-dict vector in ([N]^legs); absent indices are 0."""

    dimension_per_leg: int
    legs: int
    entries: dict[tuple[int, ...], int]

    def __post_init__(self) -> None:
        if self.dimension_per_leg < 1:
            raise ValueError("dimension per leg must be positive")
        if self.dimension_per_leg**self.legs > DENSE_BUDGET:
            raise BudgetError(
                f"{self.dimension_per_leg}^{self.legs} exceeds dense budget {DENSE_BUDGET}"
            )


def _block_index_lists(p: Partition) -> list[list[int]]:
    """Blocks of p as positions into the concatenated tuple i + j."""
    k = p.upper
    out: list[list[int]] = []
    for block in p.blocks:
        positions = []
        for lab in block:
            positions.append(lab.index - 1 if lab.row == "upper" else k + lab.index - 1)
        out.append(positions)
    return out


def delta_p(p: Partition, i: tuple[int, ...], j: tuple[int, ...]) -> int:
    """1 iff (i, j) labels all connected points of p equally."""
    if len(i) != p.upper or len(j) != p.lower:
        raise ShapeError(
            f"labelling shape ({len(i)},{len(j)}) does not match partition ({p.upper},{p.lower})"
        )
    labels = i + j
    if any(v < 1 for v in labels):
        raise ValueError("labels must be positive integers")
    for positions in _block_index_lists(p):
        first = labels[positions[0]]
        for pos in positions[1:]:
            if labels[pos] != first:
                return 0
    return 1


def vector_of(p: Partition, N: int) -> DenseTensor:
    """The vector Σ_i [p ⪯ ker(i)] e_i for p on (0, n) points.

    Built by assigning one of N values to each block, giving exactly
    N^{b(p)} nonzero entries.
    """
    if p.upper != 0:
        raise ShapeError("vector form needs a partition with no upper points")
    if N < 1:
        raise ValueError("N must be positive")
    if N**p.lower > DENSE_BUDGET:
        raise BudgetError(f"{N}^{p.lower} exceeds dense budget {DENSE_BUDGET}")
    blocks = _block_index_lists(p)
    entries: dict[tuple[int, ...], int] = {}
    index = [0] * p.lower
    for values in product(range(1, N + 1), repeat=len(blocks)):
        for positions, v in zip(blocks, values):
            for pos in positions:
                index[pos] = v
        entries[tuple(index)] = 1
    return DenseTensor(dimension_per_leg=N, legs=p.lower, entries=entries)


def inner_product(u: DenseTensor, v: DenseTensor) -> int:
    """⟨u, v⟩ = Σ_i u_i · v_i over the shared index set."""
    if (u.dimension_per_leg, u.legs) != (v.dimension_per_leg, v.legs):
        raise ShapeError("tensors have different shapes")
    small, large = (u.entries, v.entries) if len(u.entries) <= len(v.entries) else (v.entries, u.entries)
    return sum(c * large[idx] for idx, c in small.items() if idx in large)


def matrix_of(p: Partition, N: int) -> list[list[int]]:
    """Dense matrix of the map of p: rows = lower indices, cols = upper.

    Row/column enumeration order is row-major over [N]^legs with the
    leftmost leg most significant.
    """
    if N**p.upper > DENSE_BUDGET or N**p.lower > DENSE_BUDGET:
        raise BudgetError("matrix exceeds dense budget")
    uppers = list(product(range(1, N + 1), repeat=p.upper))
    lowers = list(product(range(1, N + 1), repeat=p.lower))
    return [[delta_p(p, i, j) for i in uppers] for j in lowers]


def _kron(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    out = []
    for ra in a:
        for rb in b:
            out.append([x * y for x in ra for y in rb])
    return out


def _matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    inner = len(b)
    cols = len(b[0]) if inner else 0
    out = []
    for ra in a:
        row = [0] * cols
        for t, x in enumerate(ra):
            if x:
                rb = b[t]
                for c in range(cols):
                    row[c] += x * rb[c]
        out.append(row)
    return out


def _transpose(a: list[list[int]]) -> list[list[int]]:
    return [list(col) for col in zip(*a)] if a else []


def _partitions_up_to(max_points: int) -> list[Partition]:
    """All partitions with at most max_points points in each row."""
    out: list[Partition] = []
    for k in range(max_points + 1):
        for l in range(max_points + 1):
            for q in enumerate_partitions(k + l, PartitionClass.ALL):
                for _ in range(k):
                    q = rotate(q, Corner.LOWER_LEFT_UP)
                out.append(q)
    return out


def check_functor_laws(N: int, max_points: int) -> list[dict]:
    """Exhaustively verify the three structural laws on small partitions.

    Law 1: the map of q ⊗ p is the Kronecker product of the maps.
    Law 2: the map of p* is the transpose.
    Law 3: N^{rl(q,p)} · map(q∘p) = map(q) · map(p) for composable pairs
    (stated integrally to stay division-free).

    Returns one report dict per law with the first counterexample, if any.
    """
    if N < 1 or max_points < 1:
        raise ValueError("N and max_points must be positive")
    parts = _partitions_up_to(max_points)
    mats = {p: matrix_of(p, N) for p in parts}
    reports = []

    counterexample = None
    for q in parts:
        if counterexample:
            break
        for p in parts:
            if matrix_of(tensor(q, p), N) != _kron(mats[q], mats[p]):
                counterexample = {"q": q.to_text(), "p": p.to_text()}
                break
    reports.append(_law_report("tensor", N, max_points, len(parts) ** 2, counterexample))

    counterexample = None
    for p in parts:
        if matrix_of(involution(p), N) != _transpose(mats[p]):
            counterexample = {"p": p.to_text()}
            break
    reports.append(_law_report("involution", N, max_points, len(parts), counterexample))

    counterexample = None
    cases = sum(1 for q in parts for p in parts if p.lower == q.upper)
    for q in parts:
        if counterexample:
            break
        for p in parts:
            if p.lower != q.upper:
                continue
            qp, loops = compose(q, p)
            scaled = [[N**loops * e for e in row] for row in matrix_of(qp, N)]
            if scaled != _matmul(mats[q], mats[p]):
                counterexample = {"q": q.to_text(), "p": p.to_text(), "loops": loops}
                break
    reports.append(_law_report("composition", N, max_points, cases, counterexample))
    return reports


def _law_report(law: str, N: int, max_points: int, cases: int, counterexample) -> dict:
    report = {
        "law": law,
        "N": N,
        "max_points": max_points,
        "cases": cases,
        "status": "pass" if counterexample is None else "fail",
    }
    if counterexample is not None:
        report["counterexample"] = counterexample
    return report


def express_in_bounded_basis(q: Partition, N: int) -> dict[Partition, Fraction]:
    """Coefficients writing the vector of q over partitions with ≤ N blocks.

    Layer by layer from N blocks down to 1, each coarsening p ⪰ q gets
    α_p = 1 − Σ α_{p'} over the finer coarsenings p' already assigned.
    Partitions outside the returned mapping have coefficient 0. The
    combination satisfies Σ α_p · vector_of(p) = vector_of(q) exactly.
    """
    if q.upper != 0:
        raise ShapeError("expansion needs a partition with no upper points")
    if N < 1:
        raise ValueError("N must be positive")
    if q.block_count <= N:
        return {q: Fraction(1)}
    coarsenings = [
        p
        for p in enumerate_partitions(q.points, PartitionClass.ALL)
        if p.block_count <= N and refines(q, p)
    ]
    alpha: dict[Partition, Fraction] = {}
    for blocks in range(N, 0, -1):
        for p in coarsenings:
            if p.block_count != blocks:
                continue
            finer_sum = sum(
                (c for prev, c in alpha.items() if refines(prev, p)),
                Fraction(0),
            )
            alpha[p] = 1 - finer_sum
    return alpha


def reconstruct(coefficients: dict[Partition, Fraction], N: int) -> dict[tuple[int, ...], Fraction]:
    """Σ α_p · vector_of(p) as an exact sparse vector (zeros dropped)."""
    acc: dict[tuple[int, ...], Fraction] = {}
    for p, c in coefficients.items():
        if not c:
            continue
        for idx in vector_of(p, N).entries:
            acc[idx] = acc.get(idx, Fraction(0)) + c
    return {idx: v for idx, v in acc.items() if v}
