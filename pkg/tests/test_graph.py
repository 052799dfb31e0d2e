import pytest
from hypothesis import given, settings

from treebounds.enumeration import enumerate_trees
from treebounds.graph import (
    DisconnectedError,
    DuplicateEdgeError,
    EdgeCountError,
    MalformedLineError,
    SelfLoopError,
    Tree,
    TreeError,
    centers,
    degrees,
    diameter,
    distance_matrix,
    leaves,
    parse_edge_list,
    path_tree,
    spider_tree,
    star_tree,
)

from conftest import labelled_trees


def test_parse_star():
    t = parse_edge_list("0 1\n1 2\n1 3")
    assert t == star_tree(4, center=1)
    assert degrees(t) == [1, 3, 1, 1]


def test_parse_path():
    t = parse_edge_list("0 1\n1 2\n2 3")
    assert t == path_tree(4)
    assert degrees(t) == [1, 2, 2, 1]


def test_parse_skips_comments_and_blanks():
    t = parse_edge_list("# a path\n\n0 1\n   \n# mid\n1\t2\n")
    assert t == path_tree(3)


@pytest.mark.parametrize(
    "text, error, line",
    [
        ("0 1\n0 1", DuplicateEdgeError, 2),
        ("0 1\n1 0", DuplicateEdgeError, 2),
        ("0 1\n2 2", SelfLoopError, 2),
        ("0 1\nfoo bar", MalformedLineError, 2),
        ("0 1 2", MalformedLineError, 1),
        ("0 -1", MalformedLineError, 1),
        ("0 1\n2 3", EdgeCountError, 2),
        ("0 1\n1 2\n0 2\n4 5\n", EdgeCountError, 4),
        ("0 1\n2 3\n3 4\n2 4", DisconnectedError, 4),
        ("", MalformedLineError, 0),
    ],
)
def test_parse_errors(text, error, line):
    with pytest.raises(error) as info:
        parse_edge_list(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_tree_rejects_bad_adjacency():
    with pytest.raises(TreeError):
        Tree(3, ((1,), (0, 2), ()))  # asymmetric
    with pytest.raises(TreeError):
        Tree(3, ((1, 2), (0, 2), (0, 1)))  # cycle
    with pytest.raises(TreeError):
        Tree(2, ((0,), ()))


def test_single_vertex_and_edge():
    one = Tree(1, ((),))
    assert diameter(one) == 0
    assert degrees(one) == [0]
    two = Tree.from_edges([(0, 1)])
    assert leaves(two) == [0, 1]


def test_distance_matrix_examples():
    d = distance_matrix(path_tree(4))
    assert d[0][3] == 3
    s = distance_matrix(star_tree(4, center=1))
    assert all(s[a][b] == 2 for a in (0, 2, 3) for b in (0, 2, 3) if a != b)


@pytest.mark.parametrize("n", range(2, 15))
def test_diameter_of_path_and_star(n):
    assert diameter(path_tree(n)) == n - 1
    if n >= 3:
        assert diameter(star_tree(n)) == 2


def test_leaves_examples():
    assert leaves(path_tree(4)) == [0, 3]
    assert leaves(star_tree(4, center=1)) == [0, 2, 3]
    spider = spider_tree([2, 2, 2])
    assert spider.order == 7
    # degree count done independently of leaves()
    assert sum(1 for nbrs in spider.adjacency if len(nbrs) == 1) == 3
    assert len(leaves(spider)) == 3


def test_centers():
    assert centers(path_tree(5)) == [2]
    assert centers(path_tree(6)) == [2, 3]
    assert centers(star_tree(6, center=4)) == [4]


@pytest.mark.parametrize("n", range(1, 11))
def test_enumerated_trees_are_metric(n):
    for t in enumerate_trees(n):
        assert len(t.edges) == n - 1
        assert sum(degrees(t)) == 2 * (n - 1)
        d = distance_matrix(t)
        for u in range(n):
            assert d[u][u] == 0
            for v in range(n):
                assert d[u][v] == d[v][u] <= n - 1
                assert u == v or d[u][v] > 0
                for w in range(n):
                    assert d[u][w] <= d[u][v] + d[v][w]
        assert diameter(t) == max(max(row) for row in d)
        if n >= 2:
            assert len(leaves(t)) >= 2


@given(labelled_trees())
@settings(max_examples=200)
def test_edge_list_round_trip(t):
    assert parse_edge_list(t.to_edge_list()) == t
