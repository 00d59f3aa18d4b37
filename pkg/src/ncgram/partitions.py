"""Two-row set partitions and their diagram operations.

A partition on (k, l) points divides the tagged point set

    u1 < u2 < ... < uk < l1 < l2 < ... < ll

(k points on an upper row, l points on a lower row) into non-empty disjoint
blocks. Drawn as a diagram, points of a block are joined by lines; the
operations below (horizontal concatenation, vertical composition with loop
removal, mirroring, corner rotations) are the usual diagram-category
operations.

Canonical form is a restricted-growth string (RGS) over the point order
above: position t carries the id of its block, ids numbered 0,1,2,... by
first occurrence. The RGS is unique per partition, hashes in O(1), and its
lexicographic order fixes the enumeration order everywhere in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import RotationUndefined, ShapeError

_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


class PartitionClass(Enum):
    ALL = "all"
    NONCROSSING = "noncrossing"
    NONCROSSING_PAIRS = "noncrossing_pairs"


class Corner(Enum):
    """The four corner rotations: which extremal point moves to the other row."""

    UPPER_RIGHT_DOWN = "upper_right_down"
    LOWER_RIGHT_UP = "lower_right_up"
    UPPER_LEFT_DOWN = "upper_left_down"
    LOWER_LEFT_UP = "lower_left_up"


class PointLabel(NamedTuple):
    row: str  # "upper" | "lower"
    index: int  # 1-based position within the row


def _canonical(labels: Iterable[int]) -> tuple[int, ...]:
    """Relabel arbitrary block ids by first occurrence: the RGS normal form."""
    seen: dict[int, int] = {}
    out = []
    for v in labels:
        if v not in seen:
            seen[v] = len(seen)
        out.append(seen[v])
    return tuple(out)


@dataclass(frozen=True, order=True)
class Partition:
    """An immutable two-row set partition in RGS canonical form."""

    upper: int
    lower: int
    rgs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.upper < 0 or self.lower < 0:
            raise ValueError("negative row size")
        if len(self.rgs) != self.upper + self.lower:
            raise ValueError("RGS length does not match point count")
        if tuple(self.rgs) != _canonical(self.rgs):
            raise ValueError(f"RGS {self.rgs!r} is not in canonical form")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_blocks(
        cls, upper: int, lower: int, blocks: Iterable[Iterable[PointLabel | tuple[str, int]]]
    ) -> Partition:
        """Build from explicit blocks of (row, index) labels; must cover all points."""
        ids = [-1] * (upper + lower)
        for b, block in enumerate(blocks):
            for row, index in block:
                if row == "upper":
                    if not 1 <= index <= upper:
                        raise ValueError(f"upper index {index} out of range")
                    pos = index - 1
                elif row == "lower":
                    if not 1 <= index <= lower:
                        raise ValueError(f"lower index {index} out of range")
                    pos = upper + index - 1
                else:
                    raise ValueError(f"unknown row {row!r}")
                if ids[pos] != -1:
                    raise ValueError("blocks are not disjoint")
                ids[pos] = b
        if -1 in ids:
            raise ValueError("blocks do not cover all points")
        return cls(upper, lower, _canonical(ids))

    @classmethod
    def from_lower_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> Partition:
        """Build a (0, n) partition from blocks of 1-based point numbers."""
        return cls.from_blocks(0, n, [[("lower", i) for i in block] for block in blocks])

    @classmethod
    def from_text(cls, text: str) -> Partition:
        k, l, rgs = text.split("|")
        return cls(int(k), int(l), tuple(_DIGITS.index(c) for c in rgs))

    @classmethod
    def empty(cls) -> Partition:
        return cls(0, 0, ())

    @classmethod
    def identity(cls, n: int) -> Partition:
        """id^{⊗n} ∈ P(n,n): ui joined to li."""
        return cls(n, n, tuple(range(n)) + tuple(range(n)))

    @classmethod
    def pair(cls) -> Partition:
        """⊓ ∈ P(0,2): the two lower points joined."""
        return cls(0, 2, (0, 0))

    @classmethod
    def singletons(cls, n: int) -> Partition:
        """The all-singletons partition on (0, n)."""
        return cls(0, n, tuple(range(n)))

    @classmethod
    def one_block(cls, n: int) -> Partition:
        return cls(0, n, (0,) * n)

    # -- structure ---------------------------------------------------------

    @property
    def points(self) -> int:
        return self.upper + self.lower

    @property
    def block_count(self) -> int:
        return len(set(self.rgs))

    def _label(self, pos: int) -> PointLabel:
        if pos < self.upper:
            return PointLabel("upper", pos + 1)
        return PointLabel("lower", pos - self.upper + 1)

    @property
    def blocks(self) -> tuple[tuple[PointLabel, ...], ...]:
        """Blocks in canonical order (by minimal point), points sorted."""
        groups: list[list[PointLabel]] = [[] for _ in range(self.block_count)]
        for pos, b in enumerate(self.rgs):
            groups[b].append(self._label(pos))
        return tuple(tuple(g) for g in groups)

    def lower_blocks(self) -> tuple[tuple[int, ...], ...]:
        """Blocks of a (0, n) partition as 1-based point tuples."""
        if self.upper:
            raise ShapeError("lower_blocks is only defined on (0, n) partitions")
        groups: list[list[int]] = [[] for _ in range(self.block_count)]
        for pos, b in enumerate(self.rgs):
            groups[b].append(pos + 1)
        return tuple(tuple(g) for g in groups)

    def is_pair_partition(self) -> bool:
        sizes = [0] * self.block_count
        for b in self.rgs:
            sizes[b] += 1
        return all(s == 2 for s in sizes)

    def to_text(self) -> str:
        if self.block_count > len(_DIGITS):
            raise ValueError("too many blocks for the text encoding")
        return f"{self.upper}|{self.lower}|{''.join(_DIGITS[b] for b in self.rgs)}"

    def __repr__(self) -> str:
        return f"Partition({self.to_text()!r})"


class Composition(NamedTuple):
    partition: Partition
    remaining_loops: int


def enumerate_partitions(
    points: int, cls: PartitionClass = PartitionClass.ALL
) -> list[Partition]:
    """All (0, points) partitions of the class, in RGS-lexicographic order."""
    if points < 0:
        raise ValueError("negative point count")
    out = []
    for rgs in _all_rgs(points):
        p = Partition(0, points, rgs)
        if cls is PartitionClass.NONCROSSING and not is_noncrossing(p):
            continue
        if cls is PartitionClass.NONCROSSING_PAIRS and not (
            is_noncrossing(p) and p.is_pair_partition()
        ):
            continue
        out.append(p)
    return out


def _all_rgs(n: int) -> Iterator[tuple[int, ...]]:
    """Restricted-growth strings of length n, lexicographically ascending."""
    a = [0] * n

    def rec(i: int, mx: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(a)
            return
        for v in range(mx + 2):
            a[i] = v
            yield from rec(i + 1, max(mx, v))

    yield from rec(0, -1)


def is_noncrossing(p: Partition) -> bool:
    """True iff no two blocks interleave as a < b < c < d with {a,c}, {b,d} split.

    Single left-to-right pass: a block revisited must be the innermost open one.
    (The O(n^4) quadruple definition is kept as a test oracle only.)
    """
    if p.upper:
        raise ShapeError("crossing test is defined on (0, n) partitions")
    last = {}
    for i, b in enumerate(p.rgs):
        last[b] = i
    stack: list[int] = []
    seen = set()
    for i, b in enumerate(p.rgs):
        if b in seen:
            if stack[-1] != b:
                return False
        else:
            seen.add(b)
            stack.append(b)
        while stack and last[stack[-1]] == i:
            stack.pop()
    return True


def tensor(p: Partition, q: Partition) -> Partition:
    """Horizontal concatenation: q placed to the right of p."""
    off = p.block_count
    merged = (
        list(p.rgs[: p.upper])
        + [b + off for b in q.rgs[: q.upper]]
        + list(p.rgs[p.upper :])
        + [b + off for b in q.rgs[q.upper :]]
    )
    return Partition(p.upper + q.upper, p.lower + q.lower, _canonical(merged))


def involution(p: Partition) -> Partition:
    """Mirror at the horizontal axis: rows swap, left-right order preserved."""
    merged = list(p.rgs[p.upper :]) + list(p.rgs[: p.upper])
    return Partition(p.lower, p.upper, _canonical(merged))


def compose(t: Partition, s: Partition) -> Composition:
    """Vertical composition t ∘ s (s on top), with loop count.

    s ∈ P(k, l), t ∈ P(l, m): the lower row of s is glued to the upper row of
    t. Components of the glued diagram containing no outer point are removed
    and counted as remaining loops.
    """
    if s.lower != t.upper:
        raise ShapeError(
            f"cannot compose ({t.upper},{t.lower}) after ({s.upper},{s.lower})"
        )
    k, l, m = s.upper, s.lower, t.lower
    # Node layout: 0..k+l-1 = points of s, k+l..k+2l+m-1 = points of t.
    parent = list(range(k + l + l + m))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    first_s: dict[int, int] = {}
    for pos, b in enumerate(s.rgs):
        if b in first_s:
            union(first_s[b], pos)
        else:
            first_s[b] = pos
    first_t: dict[int, int] = {}
    for pos, b in enumerate(t.rgs):
        if b in first_t:
            union(first_t[b] + k + l, pos + k + l)
        else:
            first_t[b] = pos
    for i in range(l):
        union(k + i, k + l + i)  # glue s-lower to t-upper

    outer = list(range(k)) + list(range(k + l + l, k + l + l + m))
    result = Partition(k, m, _canonical(find(x) for x in outer))
    outer_roots = {find(x) for x in outer}
    middle_roots = {find(x) for x in range(k, k + l + l)}
    return Composition(result, len(middle_roots - outer_roots))


def rotate(p: Partition, corner: Corner) -> Partition:
    """Move one extremal point to the same side of the other row."""
    k, l = p.upper, p.lower
    if corner is Corner.UPPER_RIGHT_DOWN:
        if k == 0:
            raise RotationUndefined("no upper point to rotate down")
        order = list(range(k - 1)) + list(range(k, k + l)) + [k - 1]
        shape = (k - 1, l + 1)
    elif corner is Corner.LOWER_RIGHT_UP:
        if l == 0:
            raise RotationUndefined("no lower point to rotate up")
        order = list(range(k)) + [k + l - 1] + list(range(k, k + l - 1))
        shape = (k + 1, l - 1)
    elif corner is Corner.UPPER_LEFT_DOWN:
        if k == 0:
            raise RotationUndefined("no upper point to rotate down")
        order = list(range(1, k)) + [0] + list(range(k, k + l))
        shape = (k - 1, l + 1)
    elif corner is Corner.LOWER_LEFT_UP:
        if l == 0:
            raise RotationUndefined("no lower point to rotate up")
        order = [k] + list(range(k)) + list(range(k + 1, k + l))
        shape = (k + 1, l - 1)
    else:  # pragma: no cover - enum is exhaustive
        raise ValueError(corner)
    return Partition(shape[0], shape[1], _canonical(p.rgs[pos] for pos in order))


def kernel(labels: Sequence[int]) -> Partition:
    """ker(i): points share a block iff they carry the same label."""
    return Partition(0, len(labels), _canonical(labels))


def refines(p: Partition, q: Partition) -> bool:
    """p ⪯ q: every block of p is contained in a block of q."""
    if (p.upper, p.lower) != (q.upper, q.lower):
        raise ShapeError("refinement needs equal shapes")
    image: dict[int, int] = {}
    for pb, qb in zip(p.rgs, q.rgs):
        if image.setdefault(pb, qb) != qb:
            return False
    return True
