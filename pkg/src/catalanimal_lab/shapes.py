"""Skew diagrams in the French convention, tuples of them, and tableaux.

A skew diagram is stored as two integer vectors ``alpha <= beta`` giving the
left and right x-coordinates of each row, rows indexed bottom to top.  Row
number i (1-based) sits at height y = y0 + i, and its boxes are the points
(x, y) with alpha_i < x <= beta_i.  A box at (x, y) has content x - y.

Inside a tuple of diagrams, the boxes of the i-th component (i counted from
1) carry adjusted content (x - y) + i*eps.  Adjusted contents are exact
EpsReal values, so ordering boxes by them never involves a numeric epsilon.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Iterator, NamedTuple, Sequence

from .exactnum import EpsReal, Partition


class Box(NamedTuple):
    component: int  # 0-based position of the component in its tuple
    x: int
    y: int

    @property
    def content(self) -> int:
        return self.x - self.y

    @property
    def adjusted_content(self) -> EpsReal:
        # component is 0-based; the eps coefficient is the 1-based index
        return EpsReal(self.x - self.y, self.component + 1)


class DiagonalInfo(NamedTuple):
    content: int
    length: int
    has_row_start: bool
    has_row_end: bool


@dataclass(frozen=True)
class SkewShape:
    """Rows (alpha_i, beta_i] at heights y0 + 1, ..., y0 + len(alpha)."""

    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    y0: int = 0

    def __post_init__(self) -> None:
        if len(self.alpha) != len(self.beta):
            raise ValueError("alpha and beta must have equal length")
        for a, b in zip(self.alpha, self.beta):
            if a > b:
                raise ValueError(f"row with alpha={a} > beta={b}")

    @classmethod
    def from_partition(cls, mu: Sequence[int]) -> "SkewShape":
        mu = tuple(mu)
        return cls((0,) * len(mu), mu)

    @classmethod
    def from_beta_alpha(cls, beta: Sequence[int], alpha: Sequence[int] = (),
                        y0: int = 0) -> "SkewShape":
        beta = tuple(beta)
        alpha = tuple(alpha) + (0,) * (len(beta) - len(alpha))
        return cls(alpha, beta, y0)

    @property
    def num_rows(self) -> int:
        return len(self.alpha)

    def row_y(self, i: int) -> int:
        """Height of the i-th row, i 0-based from the bottom."""
        return self.y0 + i + 1

    def rows(self) -> Iterator[tuple[int, int, int]]:
        """Yield (y, alpha_i, beta_i) from bottom to top."""
        for i in range(len(self.alpha)):
            yield self.y0 + i + 1, self.alpha[i], self.beta[i]

    def boxes(self) -> list[tuple[int, int]]:
        out = []
        for y, a, b in self.rows():
            out.extend((x, y) for x in range(a + 1, b + 1))
        return out

    def contains(self, x: int, y: int) -> bool:
        i = y - self.y0 - 1
        return 0 <= i < len(self.alpha) and self.alpha[i] < x <= self.beta[i]

    @property
    def size(self) -> int:
        return sum(b - a for a, b in zip(self.alpha, self.beta))

    @property
    def is_empty(self) -> bool:
        return self.size == 0

    def translate(self, dx: int = 0, dy: int = 0) -> "SkewShape":
        return SkewShape(tuple(a + dx for a in self.alpha),
                         tuple(b + dx for b in self.beta), self.y0 + dy)

    def content_counts(self) -> Counter:
        return Counter(x - y for x, y in self.boxes())


def gamma_of(nu: SkewShape) -> tuple[int, ...]:
    """Diagonal lengths of ``nu`` in increasing order of content.

    Only occupied contents are listed, so a shape whose content range has
    gaps yields the counts of the occupied diagonals in order.
    """
    counts = nu.content_counts()
    return tuple(counts[c] for c in sorted(counts))


def n_prime(gamma: Sequence[int]) -> int:
    return sum(comb(g, 2) for g in gamma)


def diagonal_data(nu: SkewShape) -> tuple[DiagonalInfo, ...]:
    """Per-diagonal length and whether it holds the first/last box of a row."""
    counts = nu.content_counts()
    starts = set()
    ends = set()
    for y, a, b in nu.rows():
        if a < b:
            starts.add(a + 1 - y)
            ends.add(b - y)
    return tuple(
        DiagonalInfo(c, counts[c], c in starts, c in ends)
        for c in sorted(counts)
    )


def magic_number(nu: SkewShape) -> int:
    """Total length of the diagonals not containing any first box of a row."""
    return sum(d.length for d in diagonal_data(nu) if not d.has_row_start)


def m_stretch(nu: SkewShape, m: int) -> SkewShape:
    """Dilate ``nu`` vertically: a box of content c becomes m boxes of
    contents mc-m+1, ..., mc in the same column."""
    if m < 1:
        raise ValueError("m must be positive")
    if m == 1:
        return nu
    rows: dict[int, list[int]] = {}
    for x, y in nu.boxes():
        c = x - y
        for cc in range(m * c - m + 1, m * c + 1):
            rows.setdefault(x - cc, []).append(x)
    if not rows:
        return SkewShape((), ())
    ys = sorted(rows)
    if ys != list(range(ys[0], ys[-1] + 1)):
        raise ValueError("stretched shape has a vertical gap")
    alpha, beta = [], []
    for y in ys:
        xs = sorted(rows[y])
        if xs != list(range(xs[0], xs[-1] + 1)):
            raise ValueError("stretched shape has a non-contiguous row")
        alpha.append(xs[0] - 1)
        beta.append(xs[-1])
    return SkewShape(tuple(alpha), tuple(beta), ys[0] - 1)


def rotate180(mu: Partition) -> SkewShape:
    """180-degree rotation of a partition diagram, kept inside the bounding
    rectangle so that the occupied content range is unchanged."""
    mu = tuple(mu)
    if not mu:
        return SkewShape((), ())
    ell = len(mu)
    width = mu[0]
    alpha = tuple(width - mu[ell - 1 - i] for i in range(ell))
    beta = (width,) * ell
    return SkewShape(alpha, beta)


@dataclass(frozen=True)
class SkewTuple:
    components: tuple[SkewShape, ...]

    @classmethod
    def of(cls, *shapes: SkewShape) -> "SkewTuple":
        return cls(tuple(shapes))

    @property
    def total_rows(self) -> int:
        return sum(c.num_rows for c in self.components)

    @property
    def size(self) -> int:
        return sum(c.size for c in self.components)

    def boxes(self) -> list[Box]:
        """All boxes in reading order: increasing adjusted content, and
        southwest to northeast along each diagonal."""
        out = [
            Box(i, x, y)
            for i, comp in enumerate(self.components)
            for x, y in comp.boxes()
        ]
        out.sort(key=lambda b: (b.content, b.component, b.x))
        return out

    def attacking_pairs(self) -> list[tuple[Box, Box]]:
        """Ordered pairs (a, b), a before b in reading order, whose adjusted
        contents differ by strictly between 0 and 1."""
        by_content: dict[int, list[Box]] = {}
        for b in self.boxes():
            by_content.setdefault(b.content, []).append(b)
        pairs = []
        for c, group in sorted(by_content.items()):
            for a in group:
                # same content, strictly higher component
                pairs.extend(
                    (a, b) for b in group if b.component > a.component
                )
                # content one higher, strictly lower component
                pairs.extend(
                    (a, b)
                    for b in by_content.get(c + 1, ())
                    if b.component < a.component
                )
        return pairs


def rotate_tuple(nu: SkewTuple, j: int) -> SkewTuple:
    """Cycle the first j components to the end, shifting the remaining ones
    east by one column so all contents there increase by 1."""
    comps = nu.components
    moved = tuple(c.translate(dx=1) for c in comps[j:])
    return SkewTuple(moved + comps[:j])


def _component_fillings(
    shape: SkewShape, component: int, max_letter: int, negative: bool
) -> Iterator[dict[Box, int]]:
    boxes = [Box(component, x, y) for x, y in shape.boxes()]
    boxes.sort(key=lambda b: (b.y, b.x))
    occupied = set(boxes)

    def fill(idx: int, values: dict[Box, int]) -> Iterator[dict[Box, int]]:
        if idx == len(boxes):
            yield dict(values)
            return
        b = boxes[idx]
        lo = 1
        west = Box(component, b.x - 1, b.y)
        south = Box(component, b.x, b.y - 1)
        if west in occupied:
            lo = max(lo, values[west] + 1 if negative else values[west])
        if south in occupied:
            lo = max(lo, values[south] if negative else values[south] + 1)
        for v in range(lo, max_letter + 1):
            values[b] = v
            yield from fill(idx + 1, values)
        values.pop(b, None)

    yield from fill(0, {})


def enumerate_ssyt(
    nu: SkewTuple, max_letter: int, negative: bool = False
) -> Iterator[dict[Box, int]]:
    """All fillings of the tuple by letters in [1, max_letter].

    Positive rule: rows weakly increase eastward, columns strictly increase
    northward.  Negative rule: rows strictly increase, columns weakly
    increase.  Each filling maps every Box of the tuple to its letter.
    """
    streams = [
        list(_component_fillings(comp, i, max_letter, negative))
        for i, comp in enumerate(nu.components)
    ]
    for combo in itertools.product(*streams):
        merged: dict[Box, int] = {}
        for part in combo:
            merged.update(part)
        yield merged
