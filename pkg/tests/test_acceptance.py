"""Exit criteria: one test per criterion, each reported as a PASS/FAIL line."""

import hashlib
import math
import time


from treebounds.bounds import LEMMA3_THRESHOLD, Theorem, lemma_scan
from treebounds.enumeration import (
    canonical_code,
    enumerate_codes,
    enumerate_trees,
    oracle_enumerate,
)
from treebounds.graph import path_tree, star_tree
from treebounds.harness import reports_to_csv, sweep
from treebounds.indices import abc_index, closed_form, first_zagreb, second_zagreb
from treebounds.metric_dimension import metric_dimension_bruteforce, metric_dimension_tree

RESULTS: dict[int, tuple[bool, str]] = {}

# class counts frozen from the Prüfer oracle run
ORACLE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]


class Criterion:
    def __init__(self, number: int, budget: float | None):
        self.number, self.budget = number, budget

    def __enter__(self):
        self.start = time.perf_counter()
        RESULTS[self.number] = (False, "did not finish")
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        ok = exc_type is None and (self.budget is None or elapsed < self.budget)
        detail = f"{elapsed:.2f}s" + (f" (budget {self.budget:g}s)" if self.budget else "")
        if exc is not None:
            detail += f" {exc_type.__name__}: {str(exc).splitlines()[0] if str(exc) else ''}"
        RESULTS[self.number] = (ok, detail)
        if exc_type is None and not ok:
            raise AssertionError(f"criterion {self.number} over budget: {detail}")
        return False


def test_1_closed_forms():
    with Criterion(1, 1.0):
        for n in range(3, 51):
            p, s = path_tree(n), star_tree(n)
            assert first_zagreb(p) == closed_form("path", "M1", n) == 4 * n - 6
            assert second_zagreb(p) == closed_form("path", "M2", n) == 4 * n - 8
            assert second_zagreb(p) != 2 * n - 8, "stated 2n - 8 would agree here"
            assert first_zagreb(s) == closed_form("star", "M1", n) == n * (n - 1)
            assert second_zagreb(s) == closed_form("star", "M2", n) == (n - 1) ** 2
            assert math.isclose(abc_index(p), closed_form("path", "ABC", n), rel_tol=1e-12)
            assert math.isclose(abc_index(s), closed_form("star", "ABC", n), rel_tol=1e-12)


def test_2_enumeration_soundness():
    with Criterion(2, 30.0):
        for n in range(1, 11):
            generated = enumerate_codes(n)
            oracle = [canonical_code(t) for t in oracle_enumerate(n)]
            assert set(generated) == set(oracle), f"n={n}"
            assert len(generated) == len(oracle) == ORACLE_COUNTS[n - 1], f"n={n}"
        assert set(enumerate_codes(4)) == {canonical_code(path_tree(4)), canonical_code(star_tree(4))}


def test_3_metric_dimension_cross_validation():
    with Criterion(3, 120.0):
        for n in range(2, 13):
            for t in enumerate_trees(n):
                brute = metric_dimension_bruteforce(t).eps
                fast = metric_dimension_tree(t).eps
                assert brute == fast, f"n={n} code={canonical_code(t)}: {brute} != {fast}"
            assert metric_dimension_bruteforce(path_tree(n)).eps == 1
            if n >= 4:
                assert metric_dimension_bruteforce(star_tree(n)).eps == n - 2


def test_4_theorem_sweep():
    with Criterion(4, 60.0):
        reports = sweep(4, 12, "tree")
        for rep in reports:
            n = rep.n
            star, path = canonical_code(star_tree(n)), canonical_code(path_tree(n))
            for th, stats in rep.theorems.items():
                assert stats.violations == 0, (
                    f"{th.value} violated at n={n}, witnesses {stats.violation_witnesses}"
                )
            eq = {th: set(s.equality_witnesses) for th, s in rep.theorems.items()}
            assert eq[Theorem.ABC_MAX] == {star}, f"n={n}"
            assert eq[Theorem.M1_UPPER] == {star}, f"n={n}"
            # at n = 4 the path also meets the M2 upper bound: 8 = 16 - 12 + 1 + 3
            expected_m2 = {star, path} if n == 4 else {star}
            assert eq[Theorem.M2_UPPER] == expected_m2, f"n={n}"
            assert path in eq[Theorem.M1_LOWER], f"n={n}"
            assert path in eq[Theorem.M2_LOWER], f"n={n}"


def test_5_lemma_scans():
    with Criterion(5, 10.0):
        l1 = lemma_scan("1", 10_000)
        assert l1.violations == 0 and l1.min_value > 0
        l2 = lemma_scan("2", 300, 300)
        assert l2.violations == 0
        assert l2.max_value == 0.0 and l2.argmax[1] == 2.0
        l3 = lemma_scan("3", 300, 300)
        assert l3.violations == 0
        assert l3.min_value >= 0.7906 and l3.min_value > LEMMA3_THRESHOLD
        assert l3.argmin == (3.0, 300.0)
        assert abs(l3.min_value - 0.7962) <= 1e-3


def test_6_determinism():
    with Criterion(6, None):
        serial = reports_to_csv(sweep(4, 12, "both", jobs=1))
        parallel = reports_to_csv(sweep(4, 12, "both", jobs=8))
        assert hashlib.sha256(serial.encode()).hexdigest() == hashlib.sha256(parallel.encode()).hexdigest()
