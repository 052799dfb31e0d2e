"""Index bounds in terms of order and metric dimension, and the lemma functions.

Per-tree evaluation classifies each bound as violated, tight (equality) or
strict.  The lemma scans are numerical audits in double precision, not proofs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator

from .indices import InvariantRecord

ABC_SLOPE = 4 / 5 - 2 / math.sqrt(5)  # about -0.0944, negative
ABC_TOLERANCE = 1e-9
LEMMA3_THRESHOLD = math.sqrt(5) / (2 * math.sqrt(2))


class Theorem(str, Enum):
    ABC_MAX = "AbcMax"
    M1_LOWER = "M1Lower"
    M1_UPPER = "M1Upper"
    M2_LOWER = "M2Lower"
    M2_UPPER = "M2Upper"

    @property
    def is_upper(self) -> bool:
        return self in (Theorem.ABC_MAX, Theorem.M1_UPPER, Theorem.M2_UPPER)

    @property
    def tolerance(self) -> float:
        return ABC_TOLERANCE if self is Theorem.ABC_MAX else 0


THEOREM_ORDER = tuple(Theorem)


def _check_domain(n: int, eps: int) -> None:
    if n < 4:
        raise ValueError(f"bounds are stated for n >= 4, got n={n}")
    if not 1 <= eps <= n - 2:
        raise ValueError(f"eps must be in [1, n-2] = [1, {n - 2}], got {eps}")


def abc_max_bound(n: int, eps: int) -> float:
    _check_domain(n, eps)
    return math.sqrt(n * n - 3 * n + 2) + (n - 2 - eps) * ABC_SLOPE


def m1_lower(n: int, eps: int) -> int:
    _check_domain(n, eps)
    return 4 * n - 7 + eps


def m1_upper(n: int, eps: int) -> int:
    _check_domain(n, eps)
    return n + (n - 1) * (n - 2) + eps


def m2_lower(n: int, eps: int) -> int:
    _check_domain(n, eps)
    return 4 * n + eps - 9


def m2_upper(n: int, eps: int) -> int:
    _check_domain(n, eps)
    return n * n - 3 * n + eps + 3


BOUND_FUNCTIONS = {
    Theorem.ABC_MAX: abc_max_bound,
    Theorem.M1_LOWER: m1_lower,
    Theorem.M1_UPPER: m1_upper,
    Theorem.M2_LOWER: m2_lower,
    Theorem.M2_UPPER: m2_upper,
}


@dataclass(frozen=True)
class BoundEvaluation:
    theorem: Theorem
    bound_value: float
    observed: float
    slack: float
    equality: bool
    violated: bool


def evaluate_bound(theorem: Theorem, rec: InvariantRecord) -> BoundEvaluation:
    bound = BOUND_FUNCTIONS[theorem](rec.n, rec.eps)
    observed = {
        Theorem.ABC_MAX: rec.abc,
        Theorem.M1_LOWER: rec.m1,
        Theorem.M1_UPPER: rec.m1,
        Theorem.M2_LOWER: rec.m2,
        Theorem.M2_UPPER: rec.m2,
    }[theorem]
    slack = bound - observed if theorem.is_upper else observed - bound
    tol = theorem.tolerance
    return BoundEvaluation(theorem, bound, observed, slack, abs(slack) <= tol, slack < -tol)


def evaluate_bounds(rec: InvariantRecord) -> list[BoundEvaluation]:
    """All five bounds for one tree, in :data:`THEOREM_ORDER`."""
    if rec.n < 4:
        raise ValueError(f"bounds are stated for n >= 4, got n={rec.n}")
    return [evaluate_bound(th, rec) for th in THEOREM_ORDER]


# Lemma functions.  They take reals; the tree arguments are integer degrees.


def _check_x(x: float) -> None:
    if not x >= 3:
        raise ValueError(f"x must be >= 3, got {x}")


def _check_y(y: float) -> None:
    if not y >= 2:
        raise ValueError(f"y must be >= 2, got {y}")


def lemma_upsilon(x: float) -> float:
    _check_x(x)
    return (x - 1) * math.sqrt((x - 1) / x) - (x - 2) * math.sqrt((x - 2) / (x - 1))


def lemma_g(x: float, y: float) -> float:
    _check_x(x)
    _check_y(y)
    return math.sqrt((x + y - 2) / (x * y)) - math.sqrt((x + y - 3) / ((x - 1) * y))


def lemma_F(x: float, y: float) -> float:
    return lemma_upsilon(x) + lemma_g(x, y)


class Lemma(str, Enum):
    L1 = "1"
    L2 = "2"
    L3 = "3"


@dataclass
class ScanReport:
    lemma: Lemma
    points: int = 0
    min_value: float = math.inf
    argmin: tuple[float, ...] = ()
    max_value: float = -math.inf
    argmax: tuple[float, ...] = ()
    violations: int = 0
    violation_points: list[tuple[float, ...]] = field(default_factory=list)

    def lines(self) -> list[str]:
        fmt = lambda p: ",".join(f"{c:.15g}" for c in p)  # noqa: E731
        return [
            f"lemma={self.lemma.value}",
            f"points={self.points}",
            f"min={self.min_value:.15g}",
            f"argmin={fmt(self.argmin)}",
            f"max={self.max_value:.15g}",
            f"argmax={fmt(self.argmax)}",
            f"violations={self.violations}",
            f"violation_points={';'.join(fmt(p) for p in self.violation_points)}",
        ]


MAX_VIOLATION_POINTS = 100


def _axis(lo: float, hi: float, real_step: float | None) -> list[float]:
    values = {float(v) for v in range(math.ceil(lo), math.floor(hi) + 1)}
    if real_step:
        if real_step <= 0:
            raise ValueError("real step must be positive")
        k = 0
        while lo + k * real_step <= hi:
            values.add(lo + k * real_step)
            k += 1
    return sorted(values)


def lemma_grid(
    lemma: Lemma | str, x_max: float, y_max: float = 2, real_step: float | None = None
) -> Iterator[tuple[float, ...]]:
    lemma = Lemma(lemma)
    xs = _axis(3, x_max, real_step)
    if lemma is Lemma.L1:
        for x in xs:
            yield (x,)
        return
    ys = _axis(2, y_max, real_step)
    for x in xs:
        for y in ys:
            yield (x, y)


def _value_and_ok(lemma: Lemma, point: tuple[float, ...]) -> tuple[float, bool]:
    if lemma is Lemma.L1:
        v = lemma_upsilon(*point)
        return v, v > 0
    if lemma is Lemma.L2:
        v = lemma_g(*point)
        return v, v <= 0
    v = lemma_F(*point)
    return v, v > LEMMA3_THRESHOLD


def scan_points(lemma: Lemma | str, points) -> ScanReport:
    """Evaluate a lemma over ``points``; ties in min/max go to the smallest point."""
    lemma = Lemma(lemma)
    report = ScanReport(lemma)
    for p in points:
        v, ok = _value_and_ok(lemma, p)
        report.points += 1
        if v < report.min_value or (v == report.min_value and p < report.argmin):
            report.min_value, report.argmin = v, p
        if v > report.max_value or (v == report.max_value and p < report.argmax):
            report.max_value, report.argmax = v, p
        if not ok:
            report.violations += 1
            if len(report.violation_points) < MAX_VIOLATION_POINTS:
                report.violation_points.append(p)
    return report


def merge_scans(parts: list[ScanReport]) -> ScanReport:
    """Deterministic reduction of partial scans over disjoint, ordered grid chunks."""
    merged = ScanReport(parts[0].lemma)
    for part in parts:
        if part.points == 0:
            continue
        merged.points += part.points
        if part.min_value < merged.min_value or (
            part.min_value == merged.min_value and part.argmin < merged.argmin
        ):
            merged.min_value, merged.argmin = part.min_value, part.argmin
        if part.max_value > merged.max_value or (
            part.max_value == merged.max_value and part.argmax < merged.argmax
        ):
            merged.max_value, merged.argmax = part.max_value, part.argmax
        merged.violations += part.violations
        room = MAX_VIOLATION_POINTS - len(merged.violation_points)
        merged.violation_points.extend(part.violation_points[:room])
    return merged


def _scan_chunk(args):
    lemma, chunk = args
    return scan_points(lemma, chunk)


def lemma_scan(
    lemma: Lemma | str,
    x_max: float,
    y_max: float = 2,
    real_step: float | None = None,
    jobs: int = 1,
) -> ScanReport:
    """Scan a lemma over the integer grid ``x in [3, x_max]`` (and ``y in [2, y_max]``).

    ``real_step`` adds the points ``3 + k*step`` (and ``2 + k*step``) to each axis.
    """
    lemma = Lemma(lemma)
    points = list(lemma_grid(lemma, x_max, y_max, real_step))
    if not points:
        raise ValueError("empty grid")
    if jobs <= 1:
        return scan_points(lemma, points)
    from concurrent.futures import ProcessPoolExecutor

    size = -(-len(points) // (jobs * 4))
    chunks = [(lemma, points[i : i + size]) for i in range(0, len(points), size)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_scan_chunk, chunks))
    return merge_scans(parts)
