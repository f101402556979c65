"""Convex polyominoes as normalized stacks of row intervals.

A convex polyomino is stored as its rows, bottom to top, each row being an
inclusive interval [left, right] of occupied columns.  Together with the
construction-time checks this representation is exactly the class of convex
polyominoes: rows are intervals by construction, columns are forced to be
intervals, consecutive rows overlap (which gives connectivity), and the
whole shape is translated so the leftmost occupied column is 0.

The canonical text encoding writes the rows bottom to top as "L-R" joined
by ";", e.g. the single cell is "0-0" and a NW-shifted pair of dominoes is
"1-2;0-1".  Lexicographic order of encodings is the total order used for
deterministic output.
"""

from __future__ import annotations

from dataclasses import dataclass


class PolyominoError(ValueError):
    """Base class for invalid polyomino constructions."""


class EmptyRow(PolyominoError):
    """A row interval has left > right."""


class Disconnected(PolyominoError):
    """Two consecutive rows have disjoint column intervals."""


class NotConvex(PolyominoError):
    """Some column's occupied rows do not form a contiguous block."""


@dataclass(frozen=True, slots=True)
class Cell:
    """A unit cell at (col, row) on the grid, row 0 at the bottom."""

    col: int
    row: int


@dataclass(frozen=True, slots=True)
class Polyomino:
    """Immutable convex polyomino; build via :func:`from_rows` or :func:`decode`.

    ``rows[i] = (left, right)`` is the inclusive column interval of row i,
    counted from the bottom.  Instances are safe to share between workers.
    """

    rows: tuple[tuple[int, int], ...]

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def width(self) -> int:
        return max(r for _, r in self.rows) + 1

    def cells(self) -> list[Cell]:
        """All cells, bottom row first, left to right within a row."""
        return [
            Cell(x, y)
            for y, (l, r) in enumerate(self.rows)
            for x in range(l, r + 1)
        ]

    def cell_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (x, y) for y, (l, r) in enumerate(self.rows) for x in range(l, r + 1)
        )

    def column(self, x: int) -> tuple[int, int]:
        """Inclusive row interval (bottom, top) of column x."""
        ys = [y for y, (l, r) in enumerate(self.rows) if l <= x <= r]
        if not ys:
            raise IndexError(f"column {x} not occupied")
        return min(ys), max(ys)

    def encode(self) -> str:
        return ";".join(f"{l}-{r}" for l, r in self.rows)

    def __lt__(self, other: "Polyomino") -> bool:
        # total order: lexicographic on canonical encodings
        return self.encode() < other.encode()

    def render(self) -> str:
        """ASCII picture, top row first, '#' occupied and '.' empty."""
        w = self.width
        lines = []
        for l, r in reversed(self.rows):
            lines.append("." * l + "#" * (r - l + 1) + "." * (w - 1 - r))
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.encode()


def from_rows(intervals) -> Polyomino:
    """Validate and normalize a list of (left, right) row intervals.

    Raises EmptyRow, Disconnected or NotConvex when the intervals do not
    describe a convex polyomino.  Normalization translates columns so the
    minimum left endpoint is 0; row order is preserved (bottom to top).
    """
    rows = [(int(l), int(r)) for l, r in intervals]
    if not rows:
        raise EmptyRow("no rows")
    for l, r in rows:
        if l > r:
            raise EmptyRow(f"row interval {l}-{r} is empty")
    shift = min(l for l, _ in rows)
    rows = [(l - shift, r - shift) for l, r in rows]
    for (l0, r0), (l1, r1) in zip(rows, rows[1:]):
        if l1 > r0 or l0 > r1:
            raise Disconnected(
                f"rows {l0}-{r0} and {l1}-{r1} do not overlap"
            )
    _check_column_intervals(rows)
    return Polyomino(tuple(rows))


def _check_column_intervals(rows) -> None:
    # Columns are intervals iff the left endpoints are valley-unimodal
    # (non-increasing then non-decreasing) and the right endpoints are
    # mountain-unimodal; a violation pins down a non-contiguous column.
    lefts = [l for l, _ in rows]
    rights = [r for _, r in rows]
    rising = False
    for a, b in zip(lefts, lefts[1:]):
        if b > a:
            rising = True
        elif b < a and rising:
            raise NotConvex(f"column {b} occupied on both sides of a gap")
    falling = False
    for a, b in zip(rights, rights[1:]):
        if b < a:
            falling = True
        elif b > a and falling:
            raise NotConvex(f"column {b} occupied on both sides of a gap")


def size(p: Polyomino) -> int:
    """Semi-perimeter: number of rows plus number of columns."""
    return p.n_rows + p.width


def mirror(p: Polyomino) -> Polyomino:
    """Reflect horizontally (left-right); an involution preserving size."""
    w = p.width - 1
    return Polyomino(tuple((w - r, w - l) for l, r in p.rows))


def decode(text: str) -> Polyomino:
    """Inverse of Polyomino.encode; validates through from_rows."""
    intervals = []
    for part in text.split(";"):
        l, sep, r = part.partition("-")
        if not sep:
            raise PolyominoError(f"malformed row {part!r}")
        try:
            intervals.append((int(l), int(r)))
        except ValueError:
            raise PolyominoError(f"malformed row {part!r}") from None
    return from_rows(intervals)
