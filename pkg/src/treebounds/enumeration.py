"""Free-tree enumeration on canonical level sequences, plus a Prüfer oracle.

A level sequence lists vertex depths in preorder.  The canonical code of a
free tree roots it at its centre, orders every vertex's child subtrees so the
sequence is lexicographically largest, and for bicentral trees keeps the
smaller of the two rooted codes.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator, Sequence

from .graph import Tree, centers

MAX_ORDER = 20
ORACLE_MAX_ORDER = 10

CanonicalCode = tuple[int, ...]


def _rooted_code(t: Tree, root: int) -> CanonicalCode:
    # iterative post-order so deep paths don't hit the recursion limit
    parent = {root: -1}
    order = [root]
    for v in order:
        for u in t.adjacency[v]:
            if u != parent[v]:
                parent[u] = v
                order.append(u)
    codes: dict[int, tuple[int, ...]] = {}
    for v in reversed(order):
        children = sorted(
            (codes.pop(u) for u in t.adjacency[v] if u != parent[v]), reverse=True
        )
        code = [0]
        for child in children:
            code.extend(d + 1 for d in child)
        codes[v] = tuple(code)
    return codes[root]


def canonical_code(t: Tree) -> CanonicalCode:
    return min(_rooted_code(t, c) for c in centers(t))


def tree_from_code(code: Sequence[int]) -> Tree:
    """Build the tree whose preorder depths are ``code``; vertex i is the i-th entry."""
    if not code or code[0] != 0:
        raise ValueError("a level sequence starts with the root at depth 0")
    edges = []
    stack = [0]  # stack[d] = latest vertex seen at depth d
    for v in range(1, len(code)):
        depth = code[v]
        if not 1 <= depth <= len(stack):
            raise ValueError(f"invalid depth {depth} at position {v}")
        del stack[depth:]
        edges.append((stack[depth - 1], v))
        stack.append(v)
    return Tree.from_edges(edges, order=len(code))


def format_code(code: Sequence[int], sep: str = "-") -> str:
    return sep.join(map(str, code))


def parse_code(text: str, sep: str = "-") -> CanonicalCode:
    return tuple(int(x) for x in text.strip().split(sep))


# Successor generation (Wright, Richmond, Odlyzko and McKay).  Sequences here
# are rooted at a centre; the first principal subtree is compared against the
# rest of the tree to reject non-canonical rootings.


def _next_rooted(seq: list[int], p: int | None = None) -> list[int] | None:
    if p is None:
        p = len(seq) - 1
        while seq[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    out = list(seq)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(seq: list[int]) -> tuple[list[int], list[int]]:
    """Split into the first principal subtree (re-rooted) and the remainder."""
    m = len(seq)
    for i in range(2, len(seq)):
        if seq[i] == 1:
            m = i
            break
    first = [d - 1 for d in seq[1:m]]
    rest = [0] + seq[m:]
    return first, rest


def _is_canonical_free(seq: list[int]) -> bool:
    first, rest = _split(seq)
    h1, h2 = max(first), max(rest)
    if h1 != h2:
        return h1 < h2
    if len(first) != len(rest):
        return len(first) < len(rest)
    return first <= rest


def _next_free(seq: list[int]) -> list[int] | None:
    while not _is_canonical_free(seq):
        first, rest = _split(seq)
        p = len(first)
        nxt = _next_rooted(seq, p)
        if nxt is None:
            return None
        if seq[p] > 2:
            # end the sequence with a path as deep as the new first subtree
            first, _ = _split(nxt)
            tail = list(range(1, max(first) + 2))
            nxt[-len(tail) :] = tail
        seq = nxt
    return seq


def _wrom_sequences(n: int) -> Iterator[list[int]]:
    if n <= 2:
        yield list(range(n))
        return
    seq: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while seq is not None:
        seq = _next_free(seq)
        if seq is None:
            return
        yield seq
        seq = _next_rooted(seq)


def _check_order(n: int, limit: int) -> None:
    if not 1 <= n <= limit:
        raise ValueError(f"order must be in [1, {limit}], got {n}")


def enumerate_trees(n: int) -> Iterator[Tree]:
    """Yield one tree per isomorphism class of order ``n``, sorted by canonical code.

    Generation is constant amortized time per class; sorting the class list
    costs one buffered pass over the ~823k classes at the largest order.
    """
    for code in enumerate_codes(n):
        yield tree_from_code(code)


def _centre_rooted_code(seq: list[int]) -> CanonicalCode:
    """Canonical code of a generated sequence, which is already rooted at a centre.

    With two root branches reaching full height the root is the unique centre
    and the sequence is canonical as is.  Otherwise the head of the single
    deepest branch is the second centre and both rootings are compared.
    """
    if len(seq) == 1:
        return (0,)
    height = max(seq)
    deep_heads = []
    head = 0
    for i in range(1, len(seq)):
        if seq[i] == 1:
            head = i
        if seq[i] == height and (not deep_heads or deep_heads[-1] != head):
            deep_heads.append(head)
    if len(deep_heads) >= 2:
        return tuple(seq)
    other = _rooted_code(tree_from_code(seq), deep_heads[0])
    return min(tuple(seq), other)


def enumerate_codes(n: int) -> list[CanonicalCode]:
    _check_order(n, MAX_ORDER)
    codes = [_centre_rooted_code(seq) for seq in _wrom_sequences(n)]
    codes.sort()
    return codes


def prufer_to_tree(seq: Sequence[int], n: int) -> Tree:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (w for w in range(n) if degree[w] == 1)
    edges.append((u, v))
    return Tree.from_edges(edges, order=n)


def _count_vectors(total: int, slots: int, cap: int) -> Iterator[list[int]]:
    """Non-increasing vectors of ``slots`` non-negative ints summing to ``total``."""
    if slots == 0:
        if total == 0:
            yield []
        return
    for head in range(min(total, cap), -1, -1):
        if head * slots < total:
            break
        for rest in _count_vectors(total - head, slots - 1, head):
            yield [head] + rest


def _arrangements(counts: list[int], length: int) -> Iterator[list[int]]:
    """Distinct sequences in which symbol ``i`` occurs ``counts[i]`` times."""
    seq: list[int] = []

    def rec():
        if len(seq) == length:
            yield list(seq)
            return
        for sym, c in enumerate(counts):
            if c:
                counts[sym] -= 1
                seq.append(sym)
                yield from rec()
                seq.pop()
                counts[sym] += 1

    yield from rec()


def prufer_sequences(n: int, degree_sorted: bool = True) -> Iterator[Sequence[int]]:
    """Prüfer sequences of length ``n - 2`` over ``range(n)``.

    With ``degree_sorted`` only sequences in which symbol ``i`` occurs at least
    as often as symbol ``i + 1`` are produced, i.e. labellings whose vertex
    degrees do not increase with the label.  Every tree has such a labelling,
    so this still reaches every isomorphism class.
    """
    if not degree_sorted:
        yield from product(range(n), repeat=n - 2)
        return
    for counts in _count_vectors(n - 2, n, n - 2):
        yield from _arrangements(counts, n - 2)


def oracle_enumerate(n: int, degree_sorted: bool = True) -> list[Tree]:
    """Labelled trees decoded from Prüfer sequences, deduplicated by canonical code.

    ``degree_sorted=False`` decodes all ``n**(n-2)`` sequences (slow past n = 8).
    """
    _check_order(n, ORACLE_MAX_ORDER)
    if n == 1:
        return [Tree(1, ((),))]
    if n == 2:
        return [Tree.from_edges([(0, 1)])]
    classes: dict[CanonicalCode, Tree] = {}
    for seq in prufer_sequences(n, degree_sorted):
        t = prufer_to_tree(seq, n)
        classes.setdefault(canonical_code(t), t)
    return [classes[c] for c in sorted(classes)]
