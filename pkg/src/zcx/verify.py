"""Cross-check suites tying enumeration, classification, generating tree,
and generating functions together.

Each suite runs a fixed list of checks, never aborts on a failure, and
returns a :class:`SuiteReport` whose failing entries carry a witness (a
canonical encoding or an (n, expected, got) triple).  Identical inputs give
byte-identical reports.  The expensive full censuses are memoized per
process so that several suites can share one sweep over the same size.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import classify, gentree, series
from .core import size
from .enumerate import all_convex


@dataclass(frozen=True)
class CheckResult:
    description: str
    passed: bool
    witness: str | None = None

    def to_dict(self) -> dict:
        out: dict = {"description": self.description, "status": "pass" if self.passed else "fail"}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class SuiteReport:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def record(self, description: str, ok: bool, witness=None) -> None:
        if not ok and witness is None:
            witness = "(no witness)"
        self.checks.append(
            CheckResult(description, bool(ok), None if ok else str(witness))
        )

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "elapsed_seconds": round(self.elapsed, 3),
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_text(self) -> str:
        lines = [f"suite {self.suite}: {'PASS' if self.passed else 'FAIL'}"
                 f" ({self.elapsed:.2f}s)"]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            line = f"  [{mark}] {c.description}"
            if c.witness:
                line += f"  <- {c.witness}"
            lines.append(line)
        return "\n".join(lines)


_WORKERS = 1


def set_workers(k: int) -> None:
    """Worker count used by census sweeps inside the suites."""
    global _WORKERS
    _WORKERS = max(1, int(k))


@lru_cache(maxsize=32)
def _census(n: int) -> classify.CensusRow:
    return classify.census(n, workers=_WORKERS)


def _coeff(name: str, n: int, _cache={}) -> int:
    order = 32 if n < 32 else n + 1
    key = (name, order)
    if key not in _cache:
        _cache[key] = series.gf(name, order)
    return _cache[key].integer_coefficient(n)


def suite_identities(max_n: int = 12, series_order: int = 300) -> SuiteReport:
    """The counting identity, the partition claims, and their series forms."""
    rep = SuiteReport("identities")
    t0 = time.perf_counter()
    for n in range(2, min(max_n, 12) + 1):
        row = _census(n)
        a, k, l = row.ascending, row.c22, row.l_convex
        rep.record(
            f"n={n}: c(n) = 2a(n) + k(n) - l(n)",
            row.total_convex == 2 * a + k - l,
            (n, 2 * a + k - l, row.total_convex),
        )
        rep.record(
            f"n={n}: degree histogram sums to the total",
            sum(row.by_degree_pair.values()) == row.total_convex,
            (n, row.total_convex, sum(row.by_degree_pair.values())),
        )
        z_parts = l + row.c12 + row.c21 + row.c22
        rep.record(
            f"n={n}: z(n) = l(n) + c12 + c21 + c22",
            row.z_convex == z_parts,
            (n, z_parts, row.z_convex),
        )
        for label, got, gf_name in (
            ("total", row.total_convex, "Cgf"),
            ("l_convex", row.l_convex, "Lgf"),
            ("centered", row.centered, "Egf"),
            ("z_convex", row.z_convex, "Zgf"),
            ("four_stack", row.four_stack, "S4gf"),
            ("ascending", row.ascending, "Agf"),
            ("c22", row.c22, "C22gf"),
            ("c21", row.c21, "C21gf"),
            ("c12", row.c12, "C21gf"),
        ):
            exp = _coeff(gf_name, n)
            rep.record(
                f"n={n}: census {label} = [t^{n}] {gf_name}",
                got == exp,
                (n, exp, got),
            )
        rep.record(
            f"n={n}: ascending count = descending count",
            row.ascending == row.descending,
            (n, row.ascending, row.descending),
        )
        rep.record(
            f"n={n}: ascending-and-descending = L-convex",
            row.ascending_and_descending == row.l_convex,
            (n, row.l_convex, row.ascending_and_descending),
        )

    order = series_order
    c = series.gf("Cgf", order)
    a = series.gf("Agf", order)
    l = series.gf("Lgf", order)
    z = series.gf("Zgf", order)
    c22 = series.gf("C22gf", order)
    c21 = series.gf("C21gf", order)
    delta = c - a.scale(2) - c22 + l
    rep.record(
        f"series: C = 2A + C22 - L to order {order}",
        delta.is_zero(), f"first difference at order {delta.first_nonzero()}",
    )
    delta = c21.scale(2) + c22 + l - z
    rep.record(
        f"series: Z = L + 2*C21 + C22 to order {order}",
        delta.is_zero(), f"first difference at order {delta.first_nonzero()}",
    )
    for name in ("Lgf", "Egf", "Zgf", "S4gf", "Cgf", "Hgf", "RectGf",
                 "Agf", "C22gf", "C21gf"):
        g = series.gf(name, order)
        bad = None
        for i in range(order):
            coeff = g.coefficient(i)
            if coeff.denominator != 1 or coeff < 0:
                bad = (i, str(coeff))
                break
        rep.record(
            f"series: {name} has nonnegative integer coefficients to {order}",
            bad is None, bad,
        )
    rep.elapsed = time.perf_counter() - t0
    return rep


def suite_gentree(max_construct: int = 11, max_labels: int = 60) -> SuiteReport:
    """Bijection, unique parentage, label consistency, and DP totals."""
    rep = SuiteReport("gentree")
    t0 = time.perf_counter()

    levels = gentree.constructive_levels(max_construct)
    for level in levels:
        n = size(level[0])
        tree_encs = [p.encode() for p in level]
        enum_encs = sorted(
            p.encode() for p in all_convex(n) if classify.is_ascending(p)
        )
        ok = tree_encs == enum_encs
        witness = None
        if not ok:
            extra = set(tree_encs) - set(enum_encs)
            missing = set(enum_encs) - set(tree_encs)
            witness = f"extra={sorted(extra)[:3]} missing={sorted(missing)[:3]}"
        rep.record(f"n={n}: constructive level = ascending polyominoes", ok, witness)

    for level in levels[1:]:
        bad = None
        for p in level:
            op, par = gentree.parent(p)
            occurrences = [
                c.encode() for _, c in gentree.children(par)
            ].count(p.encode())
            if occurrences != 1:
                bad = f"{p.encode()} produced {occurrences} times by {par.encode()}"
                break
        n = size(level[0])
        rep.record(f"n={n}: unique parent reconstruction", bad is None, bad)

    consistency_cap = min(max_construct - 1, 10)
    bad = None
    checked = 0
    for level in levels:
        n = size(level[0])
        if n > consistency_cap:
            break
        for p in level:
            got: dict[gentree.TreeLabel, int] = {}
            for _, child in gentree.children(p):
                lab = gentree.label_of(child)
                got[lab] = got.get(lab, 0) + 1
            want: dict[gentree.TreeLabel, int] = {}
            for lab, m in gentree.succ(gentree.label_of(p)):
                want[lab] = want.get(lab, 0) + m
            checked += 1
            if got != want:
                bad = p.encode()
                break
        if bad:
            break
    rep.record(
        f"children labels match succ(label) for {checked} polyominoes"
        f" up to n={consistency_cap}",
        bad is None, bad,
    )

    dp = gentree.count_levels(max_labels)
    for lv in dp:
        n = lv.level
        if n <= max_construct:
            constructive_total = len(levels[n - 2])
            rep.record(
                f"n={n}: DP total = constructive total",
                lv.total == constructive_total,
                (n, constructive_total, lv.total),
            )
    order = max_labels + 1
    a_gf = series.gf("Agf", order)
    h_gf = series.gf("Hgf", order)
    r_gf = series.gf("RectGf", order)
    n1_gf = series.scalar_gf("N1", order)
    np1_gf = series.gf("Np", order, z=1)
    bad = None
    for lv in dp:
        n = lv.level
        nc_rect = sum(
            v for k, v in lv.counts.items() if k.family == "NC" and k.rect
        )
        nc_plain = lv.non_centered_total - nc_rect
        for tag, got, g in (
            ("A", lv.total, a_gf),
            ("H", lv.centered_total, h_gf),
            ("Rect", lv.rectangular_total, r_gf),
            ("N'(1)", nc_rect, np1_gf),
            ("N(1)", nc_plain, n1_gf),
        ):
            if got != g.integer_coefficient(n):
                bad = (tag, n, g.integer_coefficient(n), got)
                break
        if bad:
            break
    rep.record(
        f"DP totals match A(t), H(t), Rect(t) and the non-centered parts"
        f" for n <= {max_labels}",
        bad is None, bad,
    )
    rep.elapsed = time.perf_counter() - t0
    return rep


_REFINED_PARAMS = (Fraction(2, 3), Fraction(3, 5), Fraction(5, 7))


def suite_refined_gf(max_n: int = 10, params=_REFINED_PARAMS) -> SuiteReport:
    """Refined (b, w, r)-statistics against the closed class functions.

    Rectangular classes are compared coefficient-wise at the rational
    parameters; non-rectangular classes against the closed scalar
    evaluations at x = y = z = 1.
    """
    x, y, z = (Fraction(v) for v in params)
    rep = SuiteReport("refined")
    t0 = time.perf_counter()

    rect_stats: dict[str, list[Fraction]] = {
        k: [Fraction(0)] * (max_n + 1) for k in ("C0", "L0", "S0", "C", "L", "S")
    }
    np_stats: dict[Fraction, list[Fraction]] = {
        z: [Fraction(0)] * (max_n + 1),
        Fraction(2, 3): [Fraction(0)] * (max_n + 1),
    }
    scalar_counts: dict[str, list[int]] = {
        k: [0] * (max_n + 1) for k in ("C", "L", "S", "R", "C1", "NC")
    }
    for n in range(2, max_n + 1):
        for p in all_convex(n):
            if not classify.is_ascending(p):
                continue
            lab = gentree.label_of(p)
            if lab.family == "NC":
                if lab.rect:
                    for zz in np_stats:
                        np_stats[zz][n] += zz ** lab.r
                else:
                    scalar_counts["NC"][n] += 1
                continue
            if lab.rect:
                rect_stats[lab.family][n] += x ** lab.b * y ** lab.w * z ** lab.r
            else:
                scalar_counts[lab.family][n] += 1

    gf_args = {
        "C0": ("C0p", {"x": x, "y": y}),
        "L0": ("L0p", {"x": x, "y": y}),
        "S0": ("S0p", {"x": x, "y": y}),
        "C": ("Cp", {"x": x, "y": y, "z": z}),
        "L": ("Lp", {"x": x, "y": y, "z": z}),
        "S": ("Sp", {"x": x, "y": y, "z": z}),
    }
    for family, (name, kw) in gf_args.items():
        g = series.gf(name, max_n + 1, **kw)
        bad = None
        for n in range(2, max_n + 1):
            if g.coefficient(n) != rect_stats[family][n]:
                bad = (n, str(g.coefficient(n)), str(rect_stats[family][n]))
                break
        rep.record(
            f"rectangular class {family}: statistic = {name}"
            f"({', '.join(f'{k}={v}' for k, v in kw.items())}), n <= {max_n}",
            bad is None, bad,
        )
    for zz, stats in np_stats.items():
        g = series.gf("Np", max_n + 1, z=zz)
        bad = None
        for n in range(2, max_n + 1):
            if g.coefficient(n) != stats[n]:
                bad = (n, str(g.coefficient(n)), str(stats[n]))
                break
        rep.record(
            f"rectangular non-centered: statistic = Np(z={zz}), n <= {max_n}",
            bad is None, bad,
        )

    scalar_names = {
        "C": "C111", "L": "L111", "S": "S111",
        "R": "R1", "C1": "C1at1", "NC": "N1",
    }
    for family, name in scalar_names.items():
        g = series.scalar_gf(name, max_n + 1)
        bad = None
        for n in range(2, max_n + 1):
            if g.coefficient(n) != scalar_counts[family][n]:
                bad = (n, str(g.coefficient(n)), scalar_counts[family][n])
                break
        rep.record(
            f"non-rectangular class {family}: count = {name}, n <= {max_n}",
            bad is None, bad,
        )
    rep.elapsed = time.perf_counter() - t0
    return rep


def suite_structure(max_n: int = 12, oracle_max_n: int = 7) -> SuiteReport:
    """Structural laws of the degree classes over the census, plus
    small-size oracle comparisons."""
    rep = SuiteReport("structure")
    t0 = time.perf_counter()
    for n in range(2, max_n + 1):
        row = _census(n)
        rep.record(
            f"n={n}: every degree-(2,2) polyomino is a 4-stack",
            row.c22_four_stack == row.c22,
            (n, row.c22, row.c22_four_stack),
        )
        rep.record(
            f"n={n}: 4-stack count matches its generating function",
            row.four_stack == _coeff("S4gf", n),
            (n, _coeff("S4gf", n), row.four_stack),
        )
        bad = [
            pair for pair in row.by_degree_pair
            if pair[1] < pair[0] and pair[0] > 2 and pair[1] > 1
        ]
        rep.record(
            f"n={n}: degrees with ne > 2 and nw < ne have nw <= 1",
            not bad, bad,
        )
        rep.record(
            f"n={n}: degree histogram symmetric under mirror",
            all(
                row.by_degree_pair.get((b, a), 0) == v
                for (a, b), v in row.by_degree_pair.items()
            ),
            sorted(row.by_degree_pair.items()),
        )
        if n <= 11:
            rep.record(
                f"n={n}: ascending row characterization = (nw <= 1)",
                row.prop4_mismatch == 0, (n, row.prop4_mismatch),
            )
        rep.record(
            f"n={n}: rectangular-ascending = directed-convex = binom(2n-4, n-2)",
            row.rect_ascending == row.directed_convex == series.rect_formula(n),
            (n, series.rect_formula(n), row.rect_ascending, row.directed_convex),
        )

    bad = None
    for n in range(2, oracle_max_n + 1):
        for p in all_convex(n):
            fast = classify.degree_pair(p)
            slow = classify.degree_pair_bruteforce(p)
            if fast != slow:
                bad = f"{p.encode()}: fast {fast} oracle {slow}"
                break
            if classify.is_four_stack(p) != classify.is_four_stack_bruteforce(p):
                bad = f"{p.encode()}: four-stack tests disagree"
                break
        if bad:
            break
    rep.record(
        f"degree and 4-stack tests agree with brute-force oracles, n <= {oracle_max_n}",
        bad is None, bad,
    )
    rep.elapsed = time.perf_counter() - t0
    return rep


def suite_kernels(terms: int = 100, eq_terms: int = 60) -> SuiteReport:
    """Kernel-root identities and functional-equation substitution."""
    rep = SuiteReport("kernels")
    t0 = time.perf_counter()
    for desc, ok, fail in series.kernel_checks(terms):
        rep.record(desc, ok, f"first failure at order {fail}")
    x, y, z = _REFINED_PARAMS
    for desc, ok, fail in series.functional_equation_checks(x, y, z, eq_terms):
        rep.record(
            f"{desc} at (x,y,z)=({x},{y},{z}) to order {eq_terms}",
            ok, f"first failure at order {fail}",
        )
    for desc, ok, fail in series.functional_equation_checks(
        Fraction(1, 2), Fraction(1, 3), Fraction(2, 5), eq_terms
    ):
        rep.record(
            f"{desc} at (x,y,z)=(1/2,1/3,2/5) to order {eq_terms}",
            ok, f"first failure at order {fail}",
        )
    rep.elapsed = time.perf_counter() - t0
    return rep


def suite_asymptotics(n: int = 1024) -> SuiteReport:
    """Growth-constant ratios, Richardson-extrapolated from n and 2n."""
    rep = SuiteReport("asymptotics")
    t0 = time.perf_counter()
    for entry in series.asymptotic_report(n):
        rep.record(
            f"{entry['law']}: extrapolated ratio within {entry['tolerance']:.0%}",
            entry["ok"],
            f"ratio({n})={entry['ratio_n']:.5f}"
            f" ratio({2*n})={entry['ratio_2n']:.5f}"
            f" extrapolated={entry['extrapolated']:.5f}",
        )
    rep.elapsed = time.perf_counter() - t0
    return rep


_FIXTURE_MAP = {
    "A003480": "Lgf",
    "A049775": "Egf",
    "A393099": "S4gf",
    "A128611": "Zgf",
    "A005436": "Cgf",
    "A097613": "Hgf",
}


def suite_fixtures(path: str) -> SuiteReport:
    """Compare catalog series against user-supplied reference prefixes.

    The fixture file is JSON: {"<OEIS id>": {"start": <size of the first
    value>, "values": [..]}, ...}.  Unknown ids are reported as failures so
    typos do not silently pass.
    """
    rep = SuiteReport("fixtures")
    t0 = time.perf_counter()
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    for seq_id, spec in sorted(data.items()):
        name = _FIXTURE_MAP.get(seq_id)
        if name is None:
            rep.record(f"{seq_id}: known sequence id", False,
                       f"expected one of {sorted(_FIXTURE_MAP)}")
            continue
        start = int(spec["start"])
        values = [int(v) for v in spec["values"]]
        g = series.gf(name, start + len(values))
        bad = None
        for i, v in enumerate(values):
            if g.integer_coefficient(start + i) != v:
                bad = (start + i, v, g.integer_coefficient(start + i))
                break
        rep.record(
            f"{seq_id} prefix matches {name} ({len(values)} terms from n={start})",
            bad is None, bad,
        )
    rep.elapsed = time.perf_counter() - t0
    return rep


SUITES = {
    "identities": suite_identities,
    "gentree": suite_gentree,
    "refined": suite_refined_gf,
    "structure": suite_structure,
    "kernels": suite_kernels,
    "asymptotics": suite_asymptotics,
}


def run_suites(
    names, max_size: int | None = None, fixtures: str | None = None
) -> list[SuiteReport]:
    """Run the named suites (or all) in deterministic order."""
    if names == "all" or "all" in names:
        names = list(SUITES)
    reports = []
    for name in names:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}")
        fn = SUITES[name]
        if max_size is None:
            reports.append(fn())
        elif name == "identities":
            reports.append(suite_identities(max_n=max_size))
        elif name == "gentree":
            reports.append(suite_gentree(max_construct=min(max_size, 11)))
        elif name == "refined":
            reports.append(suite_refined_gf(max_n=min(max_size, 11)))
        elif name == "structure":
            reports.append(suite_structure(max_n=max_size))
        else:
            reports.append(fn())
    if fixtures is not None:
        reports.append(suite_fixtures(fixtures))
    return reports
