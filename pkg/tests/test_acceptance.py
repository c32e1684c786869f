"""Exit criteria, one test each. Run ``pytest tests/test_acceptance.py`` to see
a PASS/FAIL line per criterion in the terminal summary."""

import math

import pytest

from bsotools.bounds import BoundId, EqualityCondition, equality_condition, split_factor, split_factor_floor
from bsotools.corpus import verification_corpus
from bsotools.graph import complete_graph, cycle_graph, path_graph, star_graph
from bsotools.indices import IndexKind, bso, bso_via_edge_types, edge_sum
from bsotools.oracle import canonical_form, prufer_tree_count
from bsotools.trees import (
    TreeFamily,
    chemical_bso_upper_bound,
    count_trees,
    enumerate_chemical_trees,
    extremal_search,
    path_excess_term,
    star_excess_term,
    star_family_bound,
)
from bsotools.verify import FINDING_ONLY, sweep_bounds

TOL = 1e-9
# Bounds whose equality clauses are read literally; any mismatch fails the build.
STRICT_EQUALITY = {
    BoundId.T3_1_LOWER, BoundId.T3_1_UPPER, BoundId.T3_3_LOWER, BoundId.T3_3_UPPER, BoundId.T3_4,
    BoundId.T3_5_LOWER, BoundId.T3_5_UPPER, BoundId.T3_7, BoundId.T3_11_LOWER, BoundId.T3_11_UPPER,
}


@pytest.fixture(scope="module")
def corpus():
    return list(verification_corpus(seed=42, random_count=1000, max_tree_n=10))


@pytest.fixture(scope="module")
def sweep(corpus):
    return sweep_bounds(corpus, TOL)


def test_regular_closed_form(criterion):
    worst = 0.0
    for n in range(3, 21):
        for g in (cycle_graph(n), complete_graph(n)):
            worst = max(worst, abs(bso(g) - n / math.sqrt(2)) / (n / math.sqrt(2)))
    criterion("1 regular closed form BSO(C_n) = BSO(K_n) = n/sqrt2, n=3..20", f"max rel err {worst:.2e}")
    assert worst <= 1e-12


def test_tree_extremes_path_and_star(criterion):
    for n in range(4, 13):
        r = extremal_search(TreeFamily(n), "BSO", TOL)
        assert r.closed_form_min_matches and r.closed_form_max_matches, n
        assert [canonical_form(t) for t in r.min_trees] == [canonical_form(path_graph(n))], n
        assert [canonical_form(t) for t in r.max_trees] == [canonical_form(star_graph(n))], n
    criterion("2 tree BSO min only at P_n, max only at K_{1,n-1}, n=4..12", "tol 1e-9")


def test_tree_counts_match_oracle(criterion):
    ours = [count_trees(n) for n in range(1, 11)]
    oracle = [prufer_tree_count(n) for n in range(1, 11)]
    criterion("3 tree counts n=1..10 equal Prufer-dedup oracle", f"{ours}")
    assert ours == oracle


def test_chemical_tree_upper_bound(criterion):
    details = []
    for n in (5, 8, 11):
        bound = chemical_bso_upper_bound(n)
        count = 0
        for t in enumerate_chemical_trees(n):
            value = edge_sum(t, IndexKind.BSO)
            assert value <= bound + TOL, (n, value, bound)
            attains = abs(value - bound) <= TOL * max(1.0, bound)
            assert attains == (2 not in t.degrees and 3 not in t.degrees), (n, t.edges)
            count += 1
        details.append(f"n={n}: {count} trees")
    criterion("4 chemical trees BSO <= bound, equality iff no degree 2 or 3", "; ".join(details))


def test_bound_soundness_sweep(criterion, sweep):
    tallies, graphs = sweep
    violations = {t.id.value: t.first_violation for t in tallies if t.violations}
    criterion("5 bound soundness sweep", f"{graphs} graphs, {sum(t.evaluated for t in tallies)} evaluations, violations {violations or 0}")
    assert graphs >= 1000 + 46
    assert not violations


def test_equality_iff_sweep(criterion, sweep):
    tallies, _ = sweep
    failures, findings = [], []
    for t in tallies:
        if equality_condition(t.id) is EqualityCondition.NOT_APPLICABLE or not t.equality_mismatches:
            continue
        (findings if t.id in FINDING_ONLY else failures).append(f"{t.id.value}@{t.first_mismatch}")
    assert STRICT_EQUALITY.isdisjoint(FINDING_ONLY)
    criterion(
        "6 equality detected <=> predicted on corpus",
        f"failures {failures or 0}, logged findings {findings or 0}",
    )
    assert not failures


def test_edge_type_equivalence(criterion, corpus):
    graphs = corpus[-1000:]
    worst = max(abs(bso(g) - bso_via_edge_types(g)) / bso(g) for _, g in graphs)
    criterion("7 BSO edge sum == edge-type sum on 1000 graphs", f"max rel err {worst:.2e}")
    assert worst <= 1e-12


def test_proof_function_properties(criterion):
    zero = 1e-12
    for i in range(1, 13):
        for j in range(i, 13):
            if (i, j) == (1, 1):
                continue
            v = path_excess_term(i, j)
            assert (abs(v) <= zero) if (i, j) in ((1, 2), (2, 2)) else v > zero, (i, j, v)
    for d in range(2, 13):
        for i in range(1, d + 1):
            for j in range(i, d + 1):
                if (i, j) == (1, 1):
                    continue
                v = star_excess_term(i, j, d)
                assert (abs(v) <= zero) if (i, j) in ((1, d), (d, d)) else v < -zero, (i, j, d, v)
    for n in range(4, 21):
        steps = round((n - 3) / 0.01)
        values = [star_family_bound(2 + k * 0.01, n) for k in range(steps + 1)]
        assert all(b > a for a, b in zip(values, values[1:])), n
    criterion("8 excess-term sign lattices and strict growth on [2, n-1]", "lattice up to 12, n=4..20 step 0.01")


def test_split_factor_forms(criterion):
    bad = [m for m in range(1, 10_001) if split_factor(m) != split_factor_floor(m)]
    criterion("9 split factor closed form == floor form, m=1..10^4", "exact rational comparison")
    assert not bad
