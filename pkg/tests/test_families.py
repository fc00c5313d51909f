import networkx as nx
import pytest

from resolvkit import families
from resolvkit.constants import Family
from resolvkit.exceptions import InvalidGraphError
from resolvkit.graph import max_degree


def test_grid_sizes():
    grid, coords = families.make_grid(2, 4)
    assert (grid.n, len(grid.edges)) == (8, 10)
    assert coords.rows == 2 and coords.cols == 4
    grid, _ = families.make_grid(3, 3)
    assert (grid.n, len(grid.edges)) == (9, 12)
    assert families.make_grid(1, 5)[0] == families.make_path(5)


def test_digit_counts_from_the_left():
    assert [families.digit(0b10, j, 2) for j in (1, 2)] == [1, 0]
    assert [families.digit(0b011, j, 3) for j in (1, 2, 3)] == [0, 1, 1]


def test_f2_cross_edges():
    g = families.make_f_k(2)
    assert g.n == 6
    # v_1 = 0, v_2 = 1, u_00 = 2, u_11 = 5
    assert set(g.neighbors(5)) >= {0, 1}
    assert not set(g.neighbors(2)) & {0, 1}


def test_f1():
    g = families.make_f_k(1)
    assert g.n == 3
    assert g.edges == ((0, 2), (1, 2))


def test_f3_edge_count():
    g = families.make_f_k(3)
    assert g.n == 11
    assert len(g.edges) == 3 + 28 + 12


@pytest.mark.parametrize('k', [1, 2, 3])
def test_f_k_cross_degree_is_popcount(k):
    g = families.make_f_k(k)
    for b in range(2 ** k):
        v_side = [v for v in g.neighbors(k + b) if v < k]
        assert len(v_side) == bin(b).count('1')


def test_oriented_f_k_points_to_v_side():
    g = families.make_f_k(3, oriented=True)
    assert g.directed
    for u, v in g.edges:
        if (u < 3) != (v < 3):
            assert v < 3
        else:
            assert u < v
    assert g.underlying() == families.make_f_k(3)


@pytest.mark.parametrize('k', [1, 2, 3])
def test_r_k_is_complete(k):
    g = families.make_r_k(k)
    assert g == families.make_complete(k + 2 ** k)
    assert families.make_r_k(k, oriented=True).underlying() == g


def test_oriented_r2_digit_rule():
    g = families.make_r_k(2, oriented=True)
    # u_10 = 4 points to v_1 = 0, v_2 = 1 points to u_10
    assert g.has_edge(4, 0)
    assert g.has_edge(1, 4)
    assert not g.has_edge(0, 4)


@pytest.mark.parametrize('k, n, order', [
    (2, 3, 7),
    (3, 2, 4),
    (1, 5, 5),
    (3, 3, 13),
])
def test_kary_out_tree(k, n, order):
    tree = families.make_kary_out_tree(k, n)
    assert tree.n == order == families.kary_tree_order(k, n)
    assert len(tree.edges) == order - 1
    assert tree.is_out_tree()
    assert [len(tree.in_neighbors(v)) for v in tree.vertices()] == (
        [0] + [1] * (order - 1))


def test_unary_tree_is_directed_path():
    assert (families.make_kary_out_tree(1, 5)
            == families.make_path(5, directed=True))


def test_kary_layers():
    depths = families.make_kary_out_tree(3, 3).depths()
    assert [depths.count(d) for d in range(3)] == [1, 3, 9]


@pytest.mark.parametrize('m, degree', [(4, 2), (6, 3), (7, 4), (5, 0)])
def test_circulant_is_regular(m, degree):
    g = families.circulant_regular(m, degree)
    assert all(len(g.neighbors(v)) == degree for v in g.vertices())


@pytest.mark.parametrize('m, delta, order', [(4, 3, 13), (6, 4, 22),
                                             (3, 3, 10)])
def test_maxdeg_tight_order(m, delta, order):
    g = families.make_maxdeg_tight(m, delta)
    assert g.n == order == m * (delta + 3) // 2 + 1
    degrees = sorted(len(g.neighbors(v)) for v in g.vertices())
    assert max_degree(g) == delta
    assert degrees.count(delta) == m
    assert degrees.count(1) == m
    assert degrees.count(0) == 1
    assert degrees.count(2) == m * (delta - 1) // 2


def test_maxdeg_tight_subdivides_base():
    g = families.make_maxdeg_tight(4, 3)
    assert not any(u < 4 and v < 4 for u, v in g.edges)
    ends = {g.neighbors(s) for s in range(4, 8)}
    assert ends == set(families.circulant_regular(4, 2).edges)
    assert nx.is_isomorphic(families.circulant_regular(4, 2).to_networkx(),
                            nx.cycle_graph(4))


@pytest.mark.parametrize('m, delta', [(4, 1), (3, 4), (3, 2)])
def test_maxdeg_tight_rejects_parameters(m, delta):
    with pytest.raises(InvalidGraphError):
        families.make_maxdeg_tight(m, delta)


def test_generators_are_deterministic():
    assert families.make_f_k(3, oriented=True) == families.make_f_k(
        3, oriented=True)
    assert (families.random_out_trees(5, 8, seed=3)
            == families.random_out_trees(5, 8, seed=3))
    assert (families.random_corpus(5, 8, seed=3)
            == families.random_corpus(5, 8, seed=3))


def test_random_out_trees():
    trees = families.random_out_trees(30, 12, seed=1)
    assert len(trees) == 30
    assert all(1 <= t.n <= 12 for t in trees)
    assert all(t.is_out_tree() and t.root() == 0 for t in trees)


def test_random_corpus(corpus):
    assert len(corpus) == 200
    assert all(not g.directed and 1 <= g.n <= 10 for g in corpus)


@pytest.mark.parametrize('family, params, order', [
    (Family.PATH, {'n': 4}, 4),
    (Family.STAR, {'n': 3}, 4),
    (Family.GRID, {'rows': 2, 'cols': 3}, 6),
    (Family.F_K_ORIENTED, {'k': 2}, 6),
    (Family.KARY_TREE_OUT, {'k': 2, 'n': 3}, 7),
    (Family.MAXDEG_TIGHT, {'m': 4, 'delta': 3}, 13),
])
def test_family_spec(family, params, order):
    spec = families.FamilySpec(family, **params)
    assert spec.build().n == order
    assert spec.as_dict() == dict(family=family.value, **params)


def test_family_spec_requires_parameters():
    with pytest.raises(InvalidGraphError):
        families.FamilySpec('grid', rows=2)
