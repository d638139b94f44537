"""Line arrangements and their combinatorial crossing descriptions.

An arrangement is a slope-ordered list of pairwise non-parallel,
non-vertical lines.  Its description records, per line, the left-to-right
order in which the other lines cross it, with coincident crossings
grouped into one block.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .geometry import Line, Point, line_intersection


class ArrangementError(Exception):
    """A set of lines violates the arrangement invariants."""


@dataclass(frozen=True)
class LineArrangement:
    """Non-vertical, pairwise non-parallel lines in ascending slope order.

    Indices are 1-based throughout, matching the description blocks.
    """

    lines: tuple[Line, ...]

    def __post_init__(self) -> None:
        slopes = []
        for ln in self.lines:
            if ln.is_vertical():
                raise ArrangementError(f"vertical line not allowed: {ln}")
            slopes.append(ln.slope())
        for s, t in zip(slopes, slopes[1:]):
            if s >= t:
                raise ArrangementError("lines must be in strictly ascending slope order")

    @property
    def n(self) -> int:
        return len(self.lines)

    def line(self, index: int) -> Line:
        """1-based access."""
        if not 1 <= index <= len(self.lines):
            raise IndexError(f"line index {index} out of range 1..{len(self.lines)}")
        return self.lines[index - 1]

    def intersections(self) -> dict[tuple[int, int], Point]:
        """All pairwise intersection points, keyed by 1-based index pairs."""
        out = {}
        for (i, li), (j, lj) in combinations(enumerate(self.lines, start=1), 2):
            out[(i, j)] = line_intersection(li, lj)
        return out


def slope_sorted(lines: Iterable[Line]) -> LineArrangement:
    """Reindex lines in strictly ascending slope order."""
    lines = list(lines)
    for ln in lines:
        if ln.is_vertical():
            raise ArrangementError(f"vertical line not allowed: {ln}")
    lines.sort(key=lambda ln: ln.slope())
    for a, b in zip(lines, lines[1:]):
        if a.slope() == b.slope():
            raise ArrangementError(f"duplicate slope {a.slope()}")
    return LineArrangement(tuple(lines))


def is_simple(arr: LineArrangement) -> bool:
    """True iff no three lines pass through one point."""
    pts = arr.intersections()
    for (i, j), pt in pts.items():
        for k in range(1, arr.n + 1):
            if k != i and k != j and arr.line(k).contains(pt):
                return False
    return True


@dataclass(frozen=True)
class Slab:
    """A vertical slab strictly containing every intersection point.

    Stands in for the containing disk of the constructions: each line
    crosses both boundaries exactly once, and the top-to-bottom order on
    the left boundary is the slope order.
    """

    x_left: Fraction
    x_right: Fraction

    def __post_init__(self) -> None:
        if self.x_left >= self.x_right:
            raise ValueError("slab needs x_left < x_right")

    @property
    def width(self) -> Fraction:
        return self.x_right - self.x_left


def containing_slab(arr: LineArrangement) -> Slab:
    """Slab with margin at least 1 around all intersection abscissae."""
    if arr.n < 2:
        raise ArrangementError("containing_slab needs at least 2 lines")
    xs = [pt.x for pt in arr.intersections().values()]
    return Slab(min(xs) - 2, max(xs) + 2)


Block = tuple[int, ...]


@dataclass(frozen=True)
class Description:
    """Per-line crossing orders O^i; each block is a sorted index tuple."""

    n: int
    orders: tuple[tuple[Block, ...], ...]

    def order(self, i: int) -> tuple[Block, ...]:
        """1-based access to O^i."""
        return self.orders[i - 1]

    def is_simple(self) -> bool:
        return all(len(block) == 1 for row in self.orders for block in row)

    def flat_order(self, i: int) -> tuple[int, ...]:
        """O^i flattened to a plain index sequence (simple descriptions)."""
        return tuple(k for block in self.order(i) for k in block)


def description(n: int, orders: Sequence[Sequence[Sequence[int]]]) -> Description:
    return Description(
        n,
        tuple(tuple(tuple(sorted(block)) for block in row) for row in orders),
    )


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)
    simple: bool = True

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_description(desc: Description) -> ValidationReport:
    """Check partition structure, self-exclusion, and membership symmetry."""
    report = ValidationReport()
    if desc.n < 1:
        report.violations.append("n must be positive")
        return report
    if len(desc.orders) != desc.n:
        report.violations.append(
            f"expected {desc.n} crossing lists, found {len(desc.orders)}"
        )
        return report
    members: list[set[int]] = []
    for i in range(1, desc.n + 1):
        seen: set[int] = set()
        for block in desc.order(i):
            if len(block) != 1:
                report.simple = False
            for k in block:
                if k == i:
                    report.violations.append(f"O^{i} lists line {i} itself")
                elif not 1 <= k <= desc.n:
                    report.violations.append(f"O^{i} lists out-of-range index {k}")
                elif k in seen:
                    report.violations.append(f"O^{i} lists line {k} twice")
                else:
                    seen.add(k)
        missing = set(range(1, desc.n + 1)) - {i} - seen
        for k in sorted(missing):
            report.violations.append(f"O^{i} does not cover line {k}")
        members.append(seen)
    for i in range(1, desc.n + 1):
        for k in sorted(members[i - 1]):
            if 1 <= k <= desc.n and k != i and i not in members[k - 1]:
                report.violations.append(
                    f"line {k} appears in O^{i} but line {i} not in O^{k}"
                )
    return report


def extract_description(arr: LineArrangement) -> Description:
    """Left-to-right crossing order of every line, ties grouped by point."""
    orders = []
    for i in range(1, arr.n + 1):
        li = arr.line(i)
        crossings = []
        for j in range(1, arr.n + 1):
            if j == i:
                continue
            crossings.append((line_intersection(li, arr.line(j)), j))
        crossings.sort(key=lambda cj: cj[0].x)
        row: list[Block] = []
        current: list[int] = []
        current_pt: Point | None = None
        for pt, j in crossings:
            if current_pt is not None and pt == current_pt:
                current.append(j)
            else:
                if current:
                    row.append(tuple(sorted(current)))
                current = [j]
                current_pt = pt
        if current:
            row.append(tuple(sorted(current)))
        orders.append(tuple(row))
    return Description(arr.n, tuple(orders))
