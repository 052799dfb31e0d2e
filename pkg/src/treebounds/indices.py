"""Degree-based indices (first/second Zagreb, ABC) and path/star closed forms."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .graph import Tree, degrees


class Family(str, Enum):
    PATH = "path"
    STAR = "star"


class Index(str, Enum):
    M1 = "M1"
    M2 = "M2"
    ABC = "ABC"


# The literature value M2(P_n) = 2n - 8 is negative at n = 3; the edge sum
# gives 2*1*2 + (n-3)*4 = 4n - 8.
M2_PATH_ERRATUM = "M2(P_n) = 4n - 8 by direct computation; the stated 2n - 8 is a typo"


@dataclass(frozen=True)
class InvariantRecord:
    n: int
    eps: int
    m1: int
    m2: int
    abc: float


def first_zagreb(t: Tree) -> int:
    return sum(d * d for d in degrees(t))


def second_zagreb(t: Tree) -> int:
    deg = degrees(t)
    return sum(deg[u] * deg[v] for u, v in t.edges)


def abc_index(t: Tree) -> float:
    """Atom-bond connectivity index, summed over edges in sorted order."""
    deg = degrees(t)
    total = 0.0
    for u, v in t.edges:
        du, dv = deg[u], deg[v]
        total += math.sqrt((du + dv - 2) / (du * dv))
    return total


def closed_form(family: Family | str, index: Index | str, n: int) -> float:
    """Closed-form index value for P_n or S_n, ``n >= 3``.

    Integer-valued indices come back as ``int``.
    """
    family, index = Family(family), Index(index)
    if n < 3:
        raise ValueError(f"closed forms need n >= 3, got {n}")
    if family is Family.PATH:
        if index is Index.M1:
            return 4 * n - 6
        if index is Index.M2:
            return 4 * n - 8
        return (n - 1) / math.sqrt(2)
    if index is Index.M1:
        return n * (n - 1)
    if index is Index.M2:
        return (n - 1) ** 2
    return math.sqrt(n - 2) * math.sqrt(n - 1)


def invariant_record(t: Tree, eps: int) -> InvariantRecord:
    return InvariantRecord(t.order, eps, first_zagreb(t), second_zagreb(t), abc_index(t))
