"""Tree representation, edge-list parsing and distance/degree primitives."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence


class TreeError(ValueError):
    """Raised when an edge set does not describe a tree."""


class EdgeListError(TreeError):
    """Edge-list input problem, tagged with the offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class MalformedLineError(EdgeListError):
    pass


class DuplicateEdgeError(EdgeListError):
    pass


class SelfLoopError(EdgeListError):
    pass


class EdgeCountError(EdgeListError):
    pass


class DisconnectedError(EdgeListError):
    pass


@dataclass(frozen=True)
class Tree:
    """Immutable tree on vertices ``0..order-1`` with sorted adjacency lists."""

    order: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.order < 1:
            raise TreeError("a tree needs at least one vertex")
        if len(self.adjacency) != self.order:
            raise TreeError("adjacency length does not match order")
        half_edges = 0
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise TreeError(f"adjacency of {v} is not sorted and duplicate-free")
            for u in nbrs:
                if u == v:
                    raise TreeError(f"self-loop at {v}")
                if not 0 <= u < self.order or v not in self.adjacency[u]:
                    raise TreeError(f"edge {v}-{u} is not symmetric")
            half_edges += len(nbrs)
        if half_edges != 2 * (self.order - 1):
            raise TreeError(f"expected {self.order - 1} edges, got {half_edges // 2}")
        if len(_bfs_distances(self.adjacency, 0)) != self.order:
            raise TreeError("graph is disconnected")

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], order: int | None = None) -> "Tree":
        edges = list(edges)
        if order is None:
            order = 1 + max((max(e) for e in edges), default=0)
        nbrs: list[set[int]] = [set() for _ in range(order)]
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise TreeError(f"edge {u}-{v} out of range for order {order}")
            if v in nbrs[u]:
                raise TreeError(f"duplicate edge {u}-{v}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(order, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in sorted order."""
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    def to_edge_list(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.edges)


def _bfs_distances(adjacency: Sequence[Sequence[int]], source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in adjacency[v]:
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def parse_edge_list(text: str) -> Tree:
    """Parse whitespace-separated ``u v`` lines into a validated :class:`Tree`.

    Blank lines and lines starting with ``#`` are skipped.  Vertex ids are
    0-based; the order is inferred as the largest id plus one.
    """
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        last_line = lineno
        parts = line.split()
        if len(parts) != 2:
            raise MalformedLineError(f"expected two integers, got {raw!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLineError(f"expected two integers, got {raw!r}", lineno) from None
        if u < 0 or v < 0:
            raise MalformedLineError("vertex ids must be non-negative", lineno)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {u} {v}", lineno)
        seen.add(key)
        edges.append(key)
    if not edges:
        raise MalformedLineError("no edges found", last_line)

    order = 1 + max(max(e) for e in edges)
    if len(edges) != order - 1:
        raise EdgeCountError(
            f"{order} vertices need {order - 1} edges, found {len(edges)}", last_line
        )
    nbrs: list[list[int]] = [[] for _ in range(order)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    if len(_bfs_distances(nbrs, 0)) != order:
        raise DisconnectedError("edges do not form a connected graph", last_line)
    return Tree(order, tuple(tuple(sorted(a)) for a in nbrs))


def path_tree(n: int) -> Tree:
    """The path P_n labelled ``0-1-...-(n-1)``."""
    return Tree.from_edges([(i, i + 1) for i in range(n - 1)], order=n)


def star_tree(n: int, center: int = 0) -> Tree:
    """The star S_n with the given centre vertex."""
    return Tree.from_edges([(center, v) for v in range(n) if v != center], order=n)


def spider_tree(legs: Sequence[int]) -> Tree:
    """A centre vertex 0 with one pendant path per entry of ``legs``."""
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Tree.from_edges(edges, order=nxt)


def degrees(t: Tree) -> list[int]:
    return [len(nbrs) for nbrs in t.adjacency]


def distance_matrix(t: Tree) -> tuple[tuple[int, ...], ...]:
    """All-pairs hop distances, one BFS per vertex."""
    rows = []
    for s in range(t.order):
        dist = _bfs_distances(t.adjacency, s)
        rows.append(tuple(dist[v] for v in range(t.order)))
    return tuple(rows)


def diameter(t: Tree) -> int:
    # double sweep: the farthest vertex from anywhere is a diameter endpoint
    first = _bfs_distances(t.adjacency, 0)
    far = max(first, key=lambda v: (first[v], -v))
    return max(_bfs_distances(t.adjacency, far).values())


def leaves(t: Tree) -> list[int]:
    return [v for v, nbrs in enumerate(t.adjacency) if len(nbrs) == 1]


def is_path(t: Tree) -> bool:
    return all(len(nbrs) <= 2 for nbrs in t.adjacency)


def centers(t: Tree) -> list[int]:
    """The one or two central vertices, found by repeatedly stripping leaves."""
    if t.order <= 2:
        return list(range(t.order))
    deg = degrees(t)
    layer = [v for v in range(t.order) if deg[v] == 1]
    remaining = t.order
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for u in t.adjacency[v]:
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        layer = nxt
    return sorted(layer)
