"""Exhaustive per-order verification of the five bounds over all free trees."""

from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .bounds import THEOREM_ORDER, BoundEvaluation, Theorem, evaluate_bounds
from .enumeration import MAX_ORDER, CanonicalCode, enumerate_codes, format_code, tree_from_code
from .indices import (
    Index,
    InvariantRecord,
    abc_index,
    first_zagreb,
    invariant_record,
    second_zagreb,
)
from .metric_dimension import (
    BRUTE_FORCE_MAX_ORDER,
    Method,
    metric_dimension_bruteforce,
    metric_dimension_tree,
)

CSV_HEADER = (
    "n,code,eps,eps_method,m1,m2,abc,abc_max_bound,"
    "m1_lower,m1_upper,m2_lower,m2_upper,viol_flags,eq_flags"
).split(",")
WITNESS_CAP = 100
ABC_TIE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class TreeResult:
    code: CanonicalCode
    record: InvariantRecord
    evaluations: tuple[BoundEvaluation, ...]
    disagreement: tuple[int, int] | None = None  # (brute eps, formula eps)

    @property
    def viol_flags(self) -> str:
        return "".join("V" if e.violated else "." for e in self.evaluations)

    @property
    def eq_flags(self) -> str:
        return "".join("E" if e.equality else "." for e in self.evaluations)


@dataclass
class TheoremStats:
    violations: int = 0
    violation_witnesses: list[CanonicalCode] = field(default_factory=list)
    equality_count: int = 0
    equality_witnesses: list[CanonicalCode] = field(default_factory=list)


@dataclass
class Extremum:
    value: float
    witnesses: list[CanonicalCode]


@dataclass
class VerificationReport:
    n: int
    eps_method: Method
    class_count: int
    theorems: dict[Theorem, TheoremStats]
    extremal: dict[Index, tuple[Extremum, Extremum]]
    disagreements: list[CanonicalCode]
    results: list[TreeResult]
    seconds: float

    @property
    def total_violations(self) -> int:
        return sum(s.violations for s in self.theorems.values())

    @property
    def ok(self) -> bool:
        return self.total_violations == 0 and not self.disagreements

    def summary_lines(self) -> list[str]:
        n = self.n
        lines = [
            f"n={n}",
            f"n{n}.eps_method={self.eps_method.value}",
            f"n{n}.class_count={self.class_count}",
            f"n{n}.violations={self.total_violations}",
            f"n{n}.disagreements={len(self.disagreements)}",
        ]
        codes = lambda cs: ";".join(format_code(c) for c in cs[:WITNESS_CAP])  # noqa: E731
        for th in THEOREM_ORDER:
            s = self.theorems[th]
            lines += [
                f"n{n}.{th.value}.violations={s.violations}",
                f"n{n}.{th.value}.violation_witnesses={codes(s.violation_witnesses)}",
                f"n{n}.{th.value}.equalities={s.equality_count}",
                f"n{n}.{th.value}.equality_witnesses={codes(s.equality_witnesses)}",
            ]
        for index, (lo, hi) in self.extremal.items():
            lines += [
                f"n{n}.{index.value}.min={_fmt(lo.value)}",
                f"n{n}.{index.value}.min_witnesses={codes(lo.witnesses)}",
                f"n{n}.{index.value}.max={_fmt(hi.value)}",
                f"n{n}.{index.value}.max_witnesses={codes(hi.witnesses)}",
            ]
        if self.disagreements:
            lines.append(f"n{n}.disagreement_witnesses={codes(self.disagreements)}")
        lines.append(f"n{n}.seconds={self.seconds:.3f}")
        return lines


def _fmt(x: float | int) -> str:
    return str(x) if isinstance(x, int) else f"{x:.15g}"


def _check_limits(n: int, method: Method) -> None:
    if not 4 <= n <= MAX_ORDER:
        raise ValueError(f"order must be in [4, {MAX_ORDER}], got {n}")
    if method is not Method.TREE and n > BRUTE_FORCE_MAX_ORDER:
        raise ValueError(f"brute-force eps supports n <= {BRUTE_FORCE_MAX_ORDER}, got {n}")


def evaluate_code(code: CanonicalCode, method: Method | str = Method.TREE) -> TreeResult:
    """Full invariant record and bound evaluations for one tree."""
    method = Method(method)
    t = tree_from_code(code)
    disagreement = None
    if method is Method.TREE:
        eps = metric_dimension_tree(t).eps
    else:
        eps = metric_dimension_bruteforce(t).eps
        if method is Method.BOTH:
            fast = metric_dimension_tree(t).eps
            if fast != eps:
                disagreement = (eps, fast)
    rec = invariant_record(t, eps)
    return TreeResult(code, rec, tuple(evaluate_bounds(rec)), disagreement)


def _evaluate_chunk(args) -> list[TreeResult]:
    codes, method = args
    return [evaluate_code(c, method) for c in codes]


def evaluate_all(codes: Sequence[CanonicalCode], method: Method, jobs: int = 1) -> list[TreeResult]:
    """Evaluate trees, optionally across processes; results keep the input order."""
    if jobs <= 1 or len(codes) < 2:
        return [evaluate_code(c, method) for c in codes]
    size = max(1, -(-len(codes) // (jobs * 8)))
    chunks = [(codes[i : i + size], method) for i in range(0, len(codes), size)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return [r for part in pool.map(_evaluate_chunk, chunks) for r in part]


def _extremes(results: list[TreeResult], key, tol: float) -> tuple[Extremum, Extremum]:
    values = [key(r) for r in results]
    lo, hi = min(values), max(values)
    return (
        Extremum(lo, [r.code for r, v in zip(results, values) if v - lo <= tol]),
        Extremum(hi, [r.code for r, v in zip(results, values) if hi - v <= tol]),
    )


def aggregate(n: int, method: Method, results: list[TreeResult], seconds: float) -> VerificationReport:
    theorems = {th: TheoremStats() for th in THEOREM_ORDER}
    for r in results:
        for ev in r.evaluations:
            s = theorems[ev.theorem]
            if ev.violated:
                s.violations += 1
                s.violation_witnesses.append(r.code)
            if ev.equality:
                s.equality_count += 1
                s.equality_witnesses.append(r.code)
    extremal = {
        Index.M1: _extremes(results, lambda r: r.record.m1, 0),
        Index.M2: _extremes(results, lambda r: r.record.m2, 0),
        Index.ABC: _extremes(results, lambda r: r.record.abc, ABC_TIE_TOLERANCE),
    }
    disagreements = [r.code for r in results if r.disagreement is not None]
    return VerificationReport(
        n, method, len(results), theorems, extremal, disagreements, results, seconds
    )


def verify_order(n: int, eps_method: Method | str = Method.BOTH, jobs: int = 1) -> VerificationReport:
    """Evaluate every isomorphism class of order ``n`` against all five bounds."""
    method = Method(eps_method)
    _check_limits(n, method)
    start = time.perf_counter()
    codes = enumerate_codes(n)
    results = evaluate_all(codes, method, jobs)
    return aggregate(n, method, results, time.perf_counter() - start)


def extremal_search(n: int, index: Index | str) -> tuple[Extremum, Extremum]:
    """Minimum and maximum of an index over all trees of order ``n``, with every attainer."""
    index = Index(index)
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"order must be in [1, {MAX_ORDER}], got {n}")
    fn = {Index.M1: first_zagreb, Index.M2: second_zagreb, Index.ABC: abc_index}[index]
    codes = enumerate_codes(n)
    values = [fn(tree_from_code(c)) for c in codes]
    tol = ABC_TIE_TOLERANCE if index is Index.ABC else 0
    lo, hi = min(values), max(values)
    return (
        Extremum(lo, [c for c, v in zip(codes, values) if v - lo <= tol]),
        Extremum(hi, [c for c, v in zip(codes, values) if hi - v <= tol]),
    )


def csv_row(r: TreeResult, method: Method) -> list[str]:
    rec = r.record
    bound = {e.theorem: e.bound_value for e in r.evaluations}
    return [
        str(rec.n),
        format_code(r.code),
        str(rec.eps),
        method.value,
        str(rec.m1),
        str(rec.m2),
        _fmt(rec.abc),
        _fmt(bound[Theorem.ABC_MAX]),
        str(bound[Theorem.M1_LOWER]),
        str(bound[Theorem.M1_UPPER]),
        str(bound[Theorem.M2_LOWER]),
        str(bound[Theorem.M2_UPPER]),
        r.viol_flags,
        r.eq_flags,
    ]


def write_csv(reports: Iterable[VerificationReport], out) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rep in reports:
        for r in rep.results:
            writer.writerow(csv_row(r, rep.eps_method))


def reports_to_csv(reports: Iterable[VerificationReport]) -> str:
    buf = io.StringIO()
    write_csv(reports, buf)
    return buf.getvalue()


def sweep(
    min_n: int,
    max_n: int,
    eps_method: Method | str = Method.BOTH,
    out_path: str | None = None,
    jobs: int = 1,
) -> list[VerificationReport]:
    """Verify every order in ``[min_n, max_n]``; write the per-tree CSV if ``out_path`` is set."""
    method = Method(eps_method)
    if min_n > max_n:
        raise ValueError(f"min_n={min_n} exceeds max_n={max_n}")
    for n in (min_n, max_n):
        _check_limits(n, method)
    reports = [verify_order(n, method, jobs) for n in range(min_n, max_n + 1)]
    if out_path is not None:
        with open(out_path, "w", newline="") as fh:
            write_csv(reports, fh)
    return reports
