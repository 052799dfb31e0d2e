"""Metric dimension of trees: exhaustive subset search and the leg formula."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Sequence

from .graph import Tree, degrees, distance_matrix, is_path, leaves

BRUTE_FORCE_MAX_ORDER = 18


class Method(str, Enum):
    BRUTE = "brute"
    TREE = "tree"
    BOTH = "both"


class MethodDisagreement(AssertionError):
    pass


@dataclass(frozen=True)
class ResolvingResult:
    eps: int
    witness: tuple[int, ...]
    method: Method


def _resolves(dist: Sequence[Sequence[int]], s: Sequence[int]) -> bool:
    seen = set()
    for row in dist:
        vec = tuple(row[x] for x in s)
        if vec in seen:
            return False
        seen.add(vec)
    return True


def is_resolving(t: Tree, s: Iterable[int], dist: Sequence[Sequence[int]] | None = None) -> bool:
    """True when every vertex has a distinct distance vector to ``s``."""
    s = sorted(set(s))
    for v in s:
        if not 0 <= v < t.order:
            raise ValueError(f"vertex {v} out of range for order {t.order}")
    return _resolves(dist or distance_matrix(t), s)


def metric_dimension_bruteforce(t: Tree, leaves_only: bool = True) -> ResolvingResult:
    """Smallest resolving set by ascending subset size, lexicographic within a size.

    Some minimum resolving set of a tree consists of leaves only, so by default
    only leaf subsets are searched; ``leaves_only=False`` searches all vertices.
    """
    n = t.order
    if n > BRUTE_FORCE_MAX_ORDER:
        raise ValueError(f"brute force supports n <= {BRUTE_FORCE_MAX_ORDER}, got {n}")
    if n == 1:
        return ResolvingResult(0, (), Method.BRUTE)
    dist = distance_matrix(t)
    pool = leaves(t) if leaves_only else list(range(n))
    for k in range(1, len(pool) + 1):
        for s in combinations(pool, k):
            if _resolves(dist, s):
                return ResolvingResult(k, s, Method.BRUTE)
    raise AssertionError("the full candidate pool always resolves a tree")


def exterior_major_legs(t: Tree) -> dict[int, list[int]]:
    """Map each exterior major vertex to the leaf ends of its legs.

    A leg is a path from a degree >= 3 vertex to a leaf whose inner vertices
    all have degree 2.
    """
    deg = degrees(t)
    legs: dict[int, list[int]] = {}
    for leaf in leaves(t):
        prev, cur = leaf, leaf
        while deg[cur] <= 2:
            nxt = [u for u in t.adjacency[cur] if u != prev]
            if not nxt:
                break  # walked off the other end: t is a path
            prev, cur = cur, nxt[0]
        if deg[cur] >= 3:
            legs.setdefault(cur, []).append(leaf)
    return {v: sorted(ends) for v, ends in sorted(legs.items())}


def metric_dimension_tree(t: Tree) -> ResolvingResult:
    """Leaves minus exterior major vertices (1 for paths, 0 for a lone vertex)."""
    if t.order == 1:
        return ResolvingResult(0, (), Method.TREE)
    if is_path(t):
        return ResolvingResult(1, (leaves(t)[0],), Method.TREE)
    witness = []
    for ends in exterior_major_legs(t).values():
        witness.extend(ends[1:])
    witness.sort()
    return ResolvingResult(len(witness), tuple(witness), Method.TREE)


def metric_dimension(t: Tree, method: Method | str = Method.BOTH) -> ResolvingResult:
    method = Method(method)
    if method is Method.TREE:
        return metric_dimension_tree(t)
    brute = metric_dimension_bruteforce(t)
    if method is Method.BRUTE:
        return brute
    fast = metric_dimension_tree(t)
    if fast.eps != brute.eps:
        raise MethodDisagreement(f"brute force eps={brute.eps}, tree formula eps={fast.eps}")
    return ResolvingResult(brute.eps, brute.witness, Method.BOTH)
