"""Convexity degrees, class predicates, and the per-size census.

The NE-degree of a convex polyomino is the largest, over ordered cell pairs
joined by some internal path of North/East steps, of the least number of
direction changes such a path needs; the NW-degree is defined with
North/West steps.  Degrees are computed by a 0/1 shortest-path sweep over
(cell, heading) states.  Two facts about convex polyominoes keep this
cheap:

* replacing the path's start by the bottom cell of its column never
  decreases the minimal turn count (extend the path downward along the
  column and splice), so only one source per column needs a sweep;
* a NW sweep on the mirror image is a NE sweep, so one kernel serves both
  directions.

Both shortcuts are validated in the tests against a plain breadth-first
oracle over all cell pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Polyomino, mirror

_INF = 1 << 30


def _ne_max_turns(rows: tuple[tuple[int, int], ...], width: int) -> int:
    """Largest minimal turn count over NE-reachable cell pairs.

    Sources are the bottom cells of each column; for each source a row
    sweep keeps, per column, the least turns of a path arriving heading
    North (dp_n) or East (dp_e).
    """
    nrows = len(rows)
    bottom = [_INF] * width
    for y in range(nrows - 1, -1, -1):
        l, r = rows[y]
        for x in range(l, r + 1):
            bottom[x] = y
    best = 0
    for x0 in range(width):
        y0 = bottom[x0]
        prev_n = None
        prev_e = None
        prev_l = prev_r = 0
        for y in range(y0, nrows):
            l, r = rows[y]
            dp_n = [_INF] * width
            if prev_n is None:
                dp_n[x0] = 0
            else:
                lo = l if l > prev_l else prev_l
                hi = r if r < prev_r else prev_r
                for x in range(lo, hi + 1):
                    a = prev_n[x]
                    b = prev_e[x] + 1
                    dp_n[x] = a if a < b else b
            dp_e = [_INF] * width
            e_run = _INF
            src_col = x0 if y == y0 else -1
            for x in range(l, r + 1):
                dp_e[x] = e_run
                n_val = dp_n[x]
                d = n_val if n_val < e_run else e_run
                if d < _INF and d > best:
                    best = d
                cand = n_val + 1
                if x == src_col:
                    cand = 0
                if cand < e_run:
                    e_run = cand
            prev_n, prev_e, prev_l, prev_r = dp_n, dp_e, l, r
    return best


@dataclass(frozen=True, slots=True)
class DegreePair:
    """Raw NE/NW convexity degrees; the global degree is their maximum."""

    ne: int
    nw: int

    @property
    def degree(self) -> int:
        return max(self.ne, self.nw)


def degree_pair(p: Polyomino) -> DegreePair:
    w = p.width
    ne = _ne_max_turns(p.rows, w)
    nw = _ne_max_turns(mirror(p).rows, w)
    return DegreePair(ne, nw)


def degree_pair_bruteforce(p: Polyomino) -> DegreePair:
    """Reference oracle: deque-based 0/1 search over (cell, heading) states
    from every cell, maximizing the minimal turn count over all reachable
    ordered pairs.  Quadratic in the cell count per source; used to validate
    the production implementation on small sizes."""
    from collections import deque

    cells = p.cell_set()

    def max_turns(dx_steps) -> int:
        best = 0
        for sx, sy in cells:
            dist: dict[tuple[int, int, int], int] = {}
            dq = deque()
            for h in range(len(dx_steps)):
                dist[(sx, sy, h)] = 0
                dq.append((sx, sy, h))
            while dq:
                x, y, h = dq.popleft()
                d = dist[(x, y, h)]
                for h2, (dx, dy) in enumerate(dx_steps):
                    nx, ny = x + dx, y + dy
                    if (nx, ny) not in cells:
                        continue
                    nd = d + (h2 != h)
                    key = (nx, ny, h2)
                    if key not in dist or nd < dist[key]:
                        dist[key] = nd
                        if h2 == h:
                            dq.appendleft(key)
                        else:
                            dq.append(key)
            reach: dict[tuple[int, int], int] = {}
            for (x, y, h), d in dist.items():
                cur = reach.get((x, y))
                if cur is None or d < cur:
                    reach[(x, y)] = d
            best = max(best, max(reach.values()))
        return best

    ne = max_turns(((1, 0), (0, 1)))          # East, North
    nw = max_turns(((-1, 0), (0, 1)))         # West, North
    return DegreePair(ne, nw)


def is_four_stack_bruteforce(p: Polyomino) -> bool:
    """Reference oracle: scan every candidate rectangle and test containment
    plus corner emptiness directly on the cell set."""
    cells = p.cell_set()
    nr = len(p.rows)
    w = p.width
    for i in range(nr):
        for j in range(i, nr):
            for a in range(w):
                for b in range(a, w):
                    if not all(
                        (x, y) in cells
                        for y in range(i, j + 1)
                        for x in range(a, b + 1)
                    ):
                        continue
                    if all(
                        i <= y <= j or a <= x <= b for x, y in cells
                    ):
                        return True
    return False


def is_centered(p: Polyomino) -> bool:
    """Some row spans the full width of the bounding rectangle."""
    w = p.width - 1
    return any(l == 0 and r == w for l, r in p.rows)


def is_four_stack(p: Polyomino) -> bool:
    """Decomposable into a supporting rectangle with empty corner regions.

    A rectangle over rows [i..j] and columns [a..b] works iff rows inside
    [i..j] contain [a, b] and rows outside are contained in it; for fixed
    (i, j) that leaves a in [max inside left, min outside left] and b in
    [max outside right, min inside right], nonempty with a <= b.  Scanning
    the O(rows^2) row ranges covers every candidate rectangle.
    """
    rows = p.rows
    nr = len(rows)
    lefts = [l for l, _ in rows]
    rights = [r for _, r in rows]
    # prefix/suffix extrema of the outside rows
    pref_min_l = [_INF] * (nr + 1)
    pref_max_r = [-_INF] * (nr + 1)
    for i in range(nr):
        pref_min_l[i + 1] = min(pref_min_l[i], lefts[i])
        pref_max_r[i + 1] = max(pref_max_r[i], rights[i])
    suf_min_l = [_INF] * (nr + 1)
    suf_max_r = [-_INF] * (nr + 1)
    for i in range(nr - 1, -1, -1):
        suf_min_l[i] = min(suf_min_l[i + 1], lefts[i])
        suf_max_r[i] = max(suf_max_r[i + 1], rights[i])
    for i in range(nr):
        in_max_l = -_INF
        in_min_r = _INF
        for j in range(i, nr):
            in_max_l = max(in_max_l, lefts[j])
            in_min_r = min(in_min_r, rights[j])
            a_hi = min(pref_min_l[i], suf_min_l[j + 1])
            b_lo = max(pref_max_r[i], suf_max_r[j + 1])
            if in_max_l <= a_hi and b_lo <= in_min_r and in_max_l <= in_min_r:
                return True
    return False


def is_ascending(p: Polyomino) -> bool:
    """No row pair is strictly NW-shifted (a higher row strictly left of a
    lower one on both endpoints); the surviving relations are inclusion
    and NE-shift."""
    rows = p.rows
    for j in range(1, len(rows)):
        lj, rj = rows[j]
        for i in range(j):
            li, ri = rows[i]
            if lj < li and rj < ri:
                return False
    return True


def is_descending(p: Polyomino) -> bool:
    return is_ascending(mirror(p))


def is_directed_convex(p: Polyomino) -> bool:
    """Cell (0,0) present and every cell reachable from it by N/E steps.

    Reachability is swept row by row: a cell enters row y from the
    reachable part of row y-1 below it or by an East run within the row,
    so the reachable cells of each row form a suffix interval.
    """
    if p.rows[0][0] != 0:
        return False
    reach_l, reach_r = p.rows[0]
    for l, r in p.rows[1:]:
        entry = max(l, reach_l)
        if entry > min(r, reach_r):
            return False  # row unreachable at all
        if entry != l:
            return False  # left part of the row unreachable
        reach_l, reach_r = entry, r
    return True


def is_l_convex(p: Polyomino) -> bool:
    return degree_pair(p).degree <= 1

def is_z_convex(p: Polyomino) -> bool:
    return degree_pair(p).degree <= 2


@dataclass
class CensusRow:
    """Aggregated classification counts for one size."""

    size: int
    total_convex: int = 0
    by_degree_pair: dict[tuple[int, int], int] = field(default_factory=dict)
    l_convex: int = 0
    z_convex: int = 0
    centered: int = 0
    four_stack: int = 0
    ascending: int = 0
    descending: int = 0
    ascending_and_descending: int = 0
    c22: int = 0
    c21: int = 0
    c12: int = 0
    directed_convex: int = 0
    # joint aggregates feeding the structural property suites
    c22_four_stack: int = 0
    prop4_mismatch: int = 0
    rect_ascending: int = 0

    def add(self, p: Polyomino) -> None:
        d = degree_pair(p)
        key = (d.ne, d.nw)
        self.total_convex += 1
        self.by_degree_pair[key] = self.by_degree_pair.get(key, 0) + 1
        deg = d.degree
        if deg <= 1:
            self.l_convex += 1
        if deg <= 2:
            self.z_convex += 1
        four = is_four_stack(p)
        if d.ne == 2 and d.nw == 2:
            self.c22 += 1
            self.c22_four_stack += four
        if d.ne == 2 and d.nw <= 1:
            self.c21 += 1
        if d.nw == 2 and d.ne <= 1:
            self.c12 += 1
        if is_centered(p):
            self.centered += 1
        if four:
            self.four_stack += 1
        asc = is_ascending(p)
        desc = is_descending(p)
        self.ascending += asc
        self.descending += desc
        self.ascending_and_descending += asc and desc
        self.prop4_mismatch += asc != (d.nw <= 1)
        self.rect_ascending += asc and p.rows[-1][1] == p.width - 1
        self.directed_convex += is_directed_convex(p)

    def merge(self, other: "CensusRow") -> "CensusRow":
        if other.size != self.size:
            raise ValueError("cannot merge censuses of different sizes")
        merged = CensusRow(self.size)
        for name in (
            "total_convex", "l_convex", "z_convex", "centered", "four_stack",
            "ascending", "descending", "ascending_and_descending",
            "c22", "c21", "c12", "directed_convex",
            "c22_four_stack", "prop4_mismatch", "rect_ascending",
        ):
            setattr(merged, name, getattr(self, name) + getattr(other, name))
        merged.by_degree_pair = dict(self.by_degree_pair)
        for key, v in other.by_degree_pair.items():
            merged.by_degree_pair[key] = merged.by_degree_pair.get(key, 0) + v
        return merged

    def validate(self) -> None:
        if sum(self.by_degree_pair.values()) != self.total_convex:
            raise AssertionError("degree histogram does not sum to the total")

    def to_dict(self) -> dict:
        return {
            "size": self.size,
            "total_convex": str(self.total_convex),
            "l_convex": str(self.l_convex),
            "z_convex": str(self.z_convex),
            "centered": str(self.centered),
            "four_stack": str(self.four_stack),
            "ascending": str(self.ascending),
            "descending": str(self.descending),
            "ascending_and_descending": str(self.ascending_and_descending),
            "c22": str(self.c22),
            "c21": str(self.c21),
            "c12": str(self.c12),
            "directed_convex": str(self.directed_convex),
            "c22_four_stack": str(self.c22_four_stack),
            "prop4_mismatch": str(self.prop4_mismatch),
            "rect_ascending": str(self.rect_ascending),
            "by_degree_pair": {
                f"{ne},{nw}": str(v)
                for (ne, nw), v in sorted(self.by_degree_pair.items())
            },
        }


def census_partition(n: int, r: int, c: int) -> CensusRow:
    """Census restricted to the (r rows, c cols) block of size n = r + c."""
    from .enumerate import block_polyominoes

    row = CensusRow(n)
    for p in block_polyominoes(r, c):
        row.add(p)
    return row


def census(n: int, workers: int = 1) -> CensusRow:
    """Classify every convex polyomino of size n.

    The block partition is processed in deterministic order; with
    ``workers`` > 1 blocks are farmed out to a process pool and merged in
    the same order, so the result does not depend on the worker count.
    """
    from .enumerate import blocks

    parts = [(n, r, c) for r, c in blocks(n)]
    if workers > 1:
        import multiprocessing as mp

        with mp.get_context("fork").Pool(workers) as pool:
            rows = pool.starmap(census_partition, parts)
    else:
        rows = [census_partition(*args) for args in parts]
    out = CensusRow(n)
    for part in rows:
        out = out.merge(part)
    out.validate()
    return out


CSV_COLUMNS = (
    "size", "total", "l_convex", "centered", "four_stack", "z_convex",
    "ascending", "descending", "c12", "c21", "c22", "directed_convex",
)


def census_csv(rows: list[CensusRow]) -> str:
    """CSV with the fixed columns followed by deg_<ne>_<nw> histogram
    columns for every degree pair observed in any row."""
    pairs = sorted({key for row in rows for key in row.by_degree_pair})
    header = list(CSV_COLUMNS) + [f"deg_{ne}_{nw}" for ne, nw in pairs]
    lines = [",".join(header)]
    for row in rows:
        base = [
            row.size, row.total_convex, row.l_convex, row.centered,
            row.four_stack, row.z_convex, row.ascending, row.descending,
            row.c12, row.c21, row.c22, row.directed_convex,
        ]
        hist = [row.by_degree_pair.get(pair, 0) for pair in pairs]
        lines.append(",".join(str(v) for v in base + hist))
    return "\n".join(lines) + "\n"
