"""Corpus sweeps: bound soundness, equality agreement and tree-level properties."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Iterable

from .bounds import DEFAULT_TOL, BoundId, check_all_bounds, equality_condition, split_factor, split_factor_floor
from .graph import Graph
from .indices import bso, bso_via_edge_types
from .oracle import prufer_tree_count
from .trees import (
    TreeFamily,
    check_chemical_bound,
    count_trees,
    extremal_search,
    path_excess_term,
    star_excess_term,
    star_family_bound,
)

# Equality mismatches on these are reported as findings rather than failures:
# their stated equality conditions are open to reading.
FINDING_ONLY = frozenset(
    {
        BoundId.T3_8,
        BoundId.T3_10,
        BoundId.C3_3_LOWER,
        BoundId.C3_3_UPPER,
        BoundId.C3_4_LOWER,
        BoundId.C3_4_UPPER,
    }
)


@dataclass
class BoundTally:
    id: BoundId
    evaluated: int = 0
    skipped: int = 0
    violations: int = 0
    equality_detected: int = 0
    equality_mismatches: int = 0
    first_violation: str | None = None
    first_mismatch: str | None = None

    @property
    def status(self) -> str:
        if self.violations:
            return "fail"
        if self.equality_mismatches:
            return "finding" if self.id in FINDING_ONLY else "fail"
        return "pass"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["id"] = self.id.value
        d["condition"] = equality_condition(self.id).value
        d["status"] = self.status
        return d


@dataclass
class PropertyCheck:
    name: str
    passed: bool
    detail: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class VerifyReport:
    bounds: list[BoundTally] = field(default_factory=list)
    properties: list[PropertyCheck] = field(default_factory=list)
    graphs: int = 0

    @property
    def passed(self) -> bool:
        return all(t.status != "fail" for t in self.bounds) and all(p.passed for p in self.properties)

    def to_dict(self) -> dict:
        return {
            "graphs": self.graphs,
            "passed": self.passed,
            "bounds": [t.to_dict() for t in self.bounds],
            "properties": [p.to_dict() for p in self.properties],
        }


def sweep_bounds(corpus: Iterable[tuple[str, Graph]], tol: float = DEFAULT_TOL) -> tuple[list[BoundTally], int]:
    tallies = {b: BoundTally(b) for b in BoundId}
    count = 0
    for label, g in corpus:
        count += 1
        for r in check_all_bounds(g, tol):
            t = tallies[r.id]
            if r.skipped:
                t.skipped += 1
                continue
            t.evaluated += 1
            t.equality_detected += r.equality_detected
            if not r.holds:
                t.violations += 1
                t.first_violation = t.first_violation or label
            if not r.consistent:
                t.equality_mismatches += 1
                t.first_mismatch = t.first_mismatch or label
    return list(tallies.values()), count


def edge_type_agreement(corpus: Iterable[tuple[str, Graph]], rel_tol: float = 1e-12) -> PropertyCheck:
    worst, count, bad = 0.0, 0, None
    for label, g in corpus:
        a, b = bso(g), bso_via_edge_types(g)
        err = abs(a - b) / abs(a)
        count += 1
        if err > worst:
            worst = err
        if err > rel_tol and bad is None:
            bad = label
    return PropertyCheck(
        "bso-edge-sum-equals-edge-type-sum",
        bad is None,
        f"{count} graphs, max rel err {worst:.3g}" + (f", first failure {bad}" if bad else ""),
    )


def tree_count_check(max_n: int) -> PropertyCheck:
    mismatches = []
    for n in range(1, max_n + 1):
        a, b = count_trees(n), prufer_tree_count(n)
        if a != b:
            mismatches.append(f"n={n}: {a} vs {b}")
    return PropertyCheck(
        f"tree-counts-match-prufer-oracle(n<={max_n})",
        not mismatches,
        "; ".join(mismatches) or f"n=1..{max_n}",
    )


def path_star_extremes_check(n_values: Iterable[int]) -> PropertyCheck:
    ns = list(n_values)
    bad = []
    for n in ns:
        r = extremal_search(TreeFamily(n), "BSO")
        lo_ok = r.closed_form_min_matches and len(r.min_trees) == 1 and max(r.min_trees[0].degrees) <= 2
        hi_ok = r.closed_form_max_matches and len(r.max_trees) == 1 and max(r.max_trees[0].degrees) == n - 1
        if not (lo_ok and hi_ok):
            bad.append(n)
    span = f"n={ns[0]}..{ns[-1]}" if ns else "no orders"
    return PropertyCheck("tree-bso-min-path-max-star", not bad, f"failed at {bad}" if bad else span)


def chemical_bound_check(n_values: Iterable[int]) -> PropertyCheck:
    details, ok = [], True
    for n in n_values:
        c = check_chemical_bound(n)
        ok &= c.passed
        details.append(f"n={n}: {c.tree_count} trees, {c.violations} violations, {c.attaining} attaining, iff={c.iff_holds}")
    return PropertyCheck("chemical-tree-bso-upper-bound", ok, "; ".join(details))


def proof_term_checks(max_degree: int = 12, h_orders: Iterable[int] = range(4, 21), step: float = 0.01, zero_tol: float = 1e-12) -> list[PropertyCheck]:
    f_bad, g_bad, h_bad = [], [], []
    for i in range(1, max_degree + 1):
        for j in range(i, max_degree + 1):
            if (i, j) == (1, 1):
                continue
            v = path_excess_term(i, j)
            zero = (i, j) in ((1, 2), (2, 2))
            if (zero and abs(v) > zero_tol) or (not zero and v <= zero_tol):
                f_bad.append((i, j))
    for d in range(2, max_degree + 1):
        for i in range(1, d + 1):
            for j in range(i, d + 1):
                if (i, j) == (1, 1):
                    continue
                v = star_excess_term(i, j, d)
                zero = (i, j) in ((1, d), (d, d))
                if (zero and abs(v) > zero_tol) or (not zero and v >= -zero_tol):
                    g_bad.append((i, j, d))
    for n in h_orders:
        steps = round((n - 3) / step)
        prev = None
        for k in range(steps + 1):
            v = star_family_bound(2 + k * step, n)
            if prev is not None and not v > prev:
                h_bad.append((n, 2 + k * step))
                break
            prev = v
    return [
        PropertyCheck("path-excess-sign-lattice", not f_bad, str(f_bad) if f_bad else f"1<=i<=j<={max_degree}"),
        PropertyCheck("star-excess-sign-lattice", not g_bad, str(g_bad) if g_bad else f"1<=i<=j<=D<={max_degree}"),
        PropertyCheck("star-family-bound-increasing", not h_bad, str(h_bad) if h_bad else f"step {step}"),
    ]


def split_factor_check(max_m: int = 10_000) -> PropertyCheck:
    bad = [m for m in range(1, max_m + 1) if split_factor(m) != split_factor_floor(m)]
    return PropertyCheck("split-factor-closed-equals-floor", not bad, str(bad[:5]) if bad else f"m=1..{max_m}")


def tree_suite(max_n: int) -> list[PropertyCheck]:
    checks = [tree_count_check(max_n), path_star_extremes_check(range(4, max_n + 1))]
    chem = [n for n in range(5, max_n + 1) if (n - 2) % 3 == 0]
    if chem:
        checks.append(chemical_bound_check(chem))
    checks.extend(proof_term_checks())
    checks.append(split_factor_check())
    return checks
