"""Polyomino representation: validation, normalization, encoding, mirror."""

from __future__ import annotations

from collections import deque

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zcx.core import (
    Disconnected,
    EmptyRow,
    NotConvex,
    Polyomino,
    PolyominoError,
    decode,
    from_rows,
    mirror,
    size,
)
from zcx.enumerate import all_convex


def cellset_oracle_is_convex(intervals) -> bool:
    """Independent acceptance test on the raw cell set: rows and columns
    must be contiguous and the cells 4-connected."""
    if not intervals or any(l > r for l, r in intervals):
        return False
    cells = {
        (x, y) for y, (l, r) in enumerate(intervals) for x in range(l, r + 1)
    }
    xs = sorted({x for x, _ in cells})
    ys = sorted({y for _, y in cells})
    for y in ys:
        row = sorted(x for x, yy in cells if yy == y)
        if row != list(range(row[0], row[0] + len(row))):
            return False
    for x in xs:
        col = sorted(y for xx, y in cells if xx == x)
        if col != list(range(col[0], col[0] + len(col))):
            return False
    if len(ys) != len(intervals):  # an implicit empty row
        return False
    seen = {next(iter(cells))}
    frontier = deque(seen)
    while frontier:
        x, y = frontier.popleft()
        for nx, ny in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            if (nx, ny) in cells and (nx, ny) not in seen:
                seen.add((nx, ny))
                frontier.append((nx, ny))
    return seen == cells


def test_from_rows_single_cell():
    p = from_rows([(0, 0)])
    assert p.rows == ((0, 0),)
    assert size(p) == 2


def test_from_rows_nw_shifted_pair_is_valid_and_normalized():
    p = from_rows([(1, 2), (0, 1)])
    assert p.rows == ((1, 2), (0, 1))
    assert size(p) == 5


def test_from_rows_normalizes_translation():
    p = from_rows([(3, 4), (2, 3)])
    assert p.rows == ((1, 2), (0, 1))


def test_from_rows_disconnected():
    with pytest.raises(Disconnected):
        from_rows([(0, 0), (2, 2)])


def test_from_rows_empty_row():
    with pytest.raises(EmptyRow):
        from_rows([(2, 1)])
    with pytest.raises(EmptyRow):
        from_rows([])


def test_from_rows_not_convex():
    # column 0 occupied in rows 0 and 2 but not 1
    with pytest.raises(NotConvex):
        from_rows([(0, 1), (1, 1), (0, 1)])
    with pytest.raises(NotConvex):
        from_rows([(0, 1), (0, 0), (0, 1)])


def test_size_examples():
    assert size(from_rows([(0, 0)])) == 2
    assert size(from_rows([(0, 2), (0, 2)])) == 5
    assert size(from_rows([(1, 2), (0, 1)])) == 5


def test_mirror_examples():
    assert mirror(from_rows([(0, 0)])).rows == ((0, 0),)
    assert mirror(from_rows([(1, 2), (0, 1)])).rows == ((0, 1), (1, 2))


def test_encode_decode_examples():
    assert from_rows([(0, 0)]).encode() == "0-0"
    assert from_rows([(1, 2), (0, 1)]).encode() == "1-2;0-1"
    assert decode("0-1").rows == ((0, 1),)


@pytest.mark.parametrize("bad", ["", "0", "0-", "-1", "a-b", "0-0;;0-0", "0-0;"])
def test_decode_rejects_malformed(bad):
    with pytest.raises(PolyominoError):
        decode(bad)


def test_decode_rejects_nonconvex():
    with pytest.raises(Disconnected):
        decode("0-0;2-2")


def test_render():
    assert from_rows([(1, 2), (0, 1)]).render() == "##.\n.##"
    assert from_rows([(0, 0)]).render() == "#"


def test_roundtrip_up_to_size_10():
    for n in range(2, 11):
        for p in all_convex(n):
            assert decode(p.encode()) == p


def test_mirror_involution_and_size_up_to_8():
    for n in range(2, 9):
        for p in all_convex(n):
            m = mirror(p)
            assert size(m) == size(p)
            assert mirror(m) == p


def _exhaustive_interval_lists(max_rows, max_col):
    pairs = [
        (l, r) for l in range(max_col + 1) for r in range(max_col + 1)
    ]
    lists = [[]]
    for _ in range(max_rows):
        lists = [base + [pair] for base in lists for pair in pairs] + lists
    return [lst for lst in lists if lst]


def test_from_rows_matches_cellset_oracle_exhaustively():
    for intervals in _exhaustive_interval_lists(3, 2):
        ok_oracle = cellset_oracle_is_convex(intervals)
        try:
            from_rows(intervals)
            ok_impl = True
        except PolyominoError:
            ok_impl = False
        assert ok_impl == ok_oracle, intervals


@settings(max_examples=300, deadline=None)
@given(
    st.lists(
        st.tuples(st.integers(0, 6), st.integers(0, 6)),
        min_size=1,
        max_size=6,
    )
)
def test_from_rows_matches_cellset_oracle_random(intervals):
    ok_oracle = cellset_oracle_is_convex(intervals)
    try:
        p = from_rows(intervals)
        ok_impl = True
    except PolyominoError:
        ok_impl = False
    assert ok_impl == ok_oracle
    if ok_impl:
        shift = min(l for l, _ in intervals)
        assert p.rows == tuple((l - shift, r - shift) for l, r in intervals)


def test_encoding_order_is_total():
    polys = list(all_convex(5))
    encodings = [p.encode() for p in polys]
    assert len(set(encodings)) == len(encodings)
    assert sorted(encodings) == sorted(set(encodings))


def test_column_accessor():
    p = from_rows([(1, 2), (0, 1)])
    assert p.column(0) == (1, 1)
    assert p.column(1) == (0, 1)
    assert p.column(2) == (0, 0)
    with pytest.raises(IndexError):
        p.column(3)


def test_cells():
    p = from_rows([(1, 2), (0, 1)])
    assert {(c.col, c.row) for c in p.cells()} == {(1, 0), (2, 0), (0, 1), (1, 1)}


def test_total_order_is_encoding_order():
    polys = list(all_convex(5))
    assert sorted(polys) == sorted(polys, key=Polyomino.encode)
    assert (decode("0-0") < decode("0-1")) == ("0-0" < "0-1")
