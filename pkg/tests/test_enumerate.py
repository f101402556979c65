"""Enumeration: counts, uniqueness, completeness against a subset oracle."""

from __future__ import annotations

from collections import deque
from itertools import product

from zcx.core import size
from zcx.enumerate import all_convex, block_polyominoes, blocks, count_convex
from zcx.series import gf


def _oracle_convex_encodings(n: int) -> set[str]:
    """Completely independent generator: all cell subsets of every r x c
    bounding box with r + c = n, kept when the subset is a connected
    HV-convex polyomino spanning the box."""
    found = set()
    for r in range(1, n):
        c = n - r
        grid = list(product(range(c), range(r)))
        for mask in range(1, 1 << (r * c)):
            cells = {grid[i] for i in range(r * c) if mask >> i & 1}
            if _spans(cells, r, c) and _hv_convex(cells) and _connected(cells):
                rows = []
                for y in range(r):
                    xs = [x for x, yy in cells if yy == y]
                    rows.append(f"{min(xs)}-{max(xs)}")
                found.add(";".join(rows))
    return found


def _spans(cells, r, c):
    xs = {x for x, _ in cells}
    ys = {y for _, y in cells}
    return (
        ys == set(range(r)) and min(xs) == 0 and max(xs) == c - 1
    )


def _hv_convex(cells):
    for y in {yy for _, yy in cells}:
        xs = sorted(x for x, yy in cells if yy == y)
        if xs != list(range(xs[0], xs[0] + len(xs))):
            return False
    for x in {xx for xx, _ in cells}:
        ys = sorted(y for xx, y in cells if xx == x)
        if ys != list(range(ys[0], ys[0] + len(ys))):
            return False
    return True


def _connected(cells):
    seen = {next(iter(cells))}
    frontier = deque(seen)
    while frontier:
        x, y = frontier.popleft()
        for nxt in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            if nxt in cells and nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return seen == cells


def test_smallest_sizes():
    assert [p.encode() for p in all_convex(2)] == ["0-0"]
    assert count_convex(4) == 7
    assert count_convex(5) == 28


def test_no_duplicates_up_to_10():
    for n in range(2, 11):
        encodings = [p.encode() for p in all_convex(n)]
        assert len(encodings) == len(set(encodings))


def test_every_emitted_polyomino_has_the_right_size():
    for n in range(2, 10):
        assert all(size(p) == n for p in all_convex(n))


def test_completeness_against_subset_oracle():
    for n in range(2, 9):
        got = {p.encode() for p in all_convex(n)}
        assert got == _oracle_convex_encodings(n)


def test_counts_match_convex_gf():
    g = gf("Cgf", 12)
    for n in range(2, 12):
        assert count_convex(n) == g.integer_coefficient(n)


def test_stream_ordering():
    for n in (5, 6, 7):
        stream = list(all_convex(n))
        # blocks ordered by row count
        row_counts = [p.n_rows for p in stream]
        assert row_counts == sorted(row_counts)
        # encoding order inside each block
        for r, c in blocks(n):
            segment = [p.encode() for p in stream if p.n_rows == r]
            assert segment == sorted(segment)


def test_block_partition_is_a_partition():
    n = 7
    union = []
    for r, c in blocks(n):
        union += [p.encode() for p in block_polyominoes(r, c)]
    assert sorted(union) == sorted(p.encode() for p in all_convex(n))
    assert len(union) == len(set(union))
