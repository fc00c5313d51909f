import itertools

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from resolvkit.exceptions import InvalidGraphError
from resolvkit.families import (make_complete, make_cycle,
                                make_kary_out_tree, make_path, make_star)
from resolvkit.graph import (UNREACHABLE, Graph, GridCoords,
                             all_pairs_distances, cartesian_product,
                             max_degree, truncated_distance)

from .strategies import graphs


@pytest.mark.parametrize('n, edges', [
    (3, [(0, 0)]),
    (3, [(0, 1), (1, 0)]),
    (3, [(0, 3)]),
    (3, [(0, 1, 2)]),
    (-1, []),
])
def test_graph_rejects_invalid_input(n, edges):
    with pytest.raises(InvalidGraphError):
        Graph(n, edges)


def test_graph_keeps_antiparallel_arcs():
    g = Graph(2, [(0, 1), (1, 0)], directed=True)
    assert g.edges == ((0, 1), (1, 0))


def test_graph_edges_are_canonical():
    g = Graph(3, [(2, 1), (1, 0)])
    assert g.edges == ((0, 1), (1, 2))
    assert g == Graph(3, [(0, 1), (2, 1)])
    assert hash(g) == hash(Graph(3, [(1, 2), (0, 1)]))
    assert g.edge_list() == [[0, 1], [1, 2]]


def test_graph_neighbors():
    g = Graph(3, [(0, 1), (2, 1)], directed=True)
    assert g.out_neighbors(0) == (1,)
    assert g.in_neighbors(1) == (0, 2)
    assert g.neighbors(1) == (0, 2)
    assert g.has_edge(2, 1)
    assert not g.has_edge(1, 2)


def test_networkx_round_trip():
    g = make_cycle(5)
    assert Graph.from_networkx(g.to_networkx()) == g


def test_distances_on_path():
    dm = all_pairs_distances(make_path(3))
    assert dm[0, 2] == 2
    assert dm.is_symmetric()


def test_distances_follow_direction():
    dm = all_pairs_distances(make_path(3, directed=True))
    assert dm[0, 2] == 2
    assert dm[2, 0] == UNREACHABLE
    assert not dm.is_symmetric()


def test_distances_on_complete_graph():
    dm = all_pairs_distances(make_complete(4))
    assert all(dm[u, v] == (0 if u == v else 1)
               for u in range(4) for v in range(4))


def test_eccentricity():
    dm = all_pairs_distances(make_path(4, directed=True))
    assert [dm.eccentricity(v) for v in range(4)] == [3, 2, 1, 0]


def test_truncated_distance():
    dm = all_pairs_distances(make_path(4))
    assert truncated_distance(dm, 0, 3, 1) == 2
    assert truncated_distance(dm, 2, 2, 5) == 0
    assert dm.truncated(0, 3, 3) == 3
    disconnected = all_pairs_distances(Graph(2))
    assert truncated_distance(disconnected, 0, 1, 4) == 5


def test_truncated_distance_rejects_negative_radius():
    with pytest.raises(ValueError):
        truncated_distance(all_pairs_distances(make_path(2)), 0, 1, -1)


@given(graphs(max_vertices=6), st.integers(min_value=0, max_value=6))
def test_truncated_distance_is_monotone(g, k):
    dm = all_pairs_distances(g)
    for u, v in itertools.product(g.vertices(), repeat=2):
        low = truncated_distance(dm, u, v, k)
        high = truncated_distance(dm, u, v, k + 1)
        assert low <= k + 1
        assert low <= high
        if dm[u, v] <= k + 1:
            assert low == dm[u, v]


@given(graphs(max_vertices=7, directed=False))
def test_undirected_distances_form_a_metric(g):
    dm = all_pairs_distances(g)
    assert dm.is_symmetric()
    for u, v, w in itertools.product(g.vertices(), repeat=3):
        if dm[u, v] != UNREACHABLE and dm[v, w] != UNREACHABLE:
            assert dm[u, w] <= dm[u, v] + dm[v, w]


def test_product_of_two_edges_is_a_square():
    square, coords = cartesian_product(make_path(2), make_path(2))
    assert nx.is_isomorphic(square.to_networkx(), make_cycle(4).to_networkx())
    assert coords == GridCoords(2, 2)


def test_product_edge_count():
    grid, coords = cartesian_product(make_path(2), make_path(3))
    assert (grid.n, len(grid.edges)) == (6, 7)
    assert coords.index(1, 2) == 5


def test_product_with_single_vertex():
    g = make_star(3)
    product, coords = cartesian_product(make_path(1), g)
    assert product == g
    assert coords is None


def test_product_rejects_directed_factor():
    with pytest.raises(InvalidGraphError):
        cartesian_product(make_path(2, directed=True), make_path(2))


@given(graphs(max_vertices=4, directed=False),
       graphs(max_vertices=4, directed=False))
def test_product_degrees_add_up(g1, g2):
    product, _ = cartesian_product(g1, g2)
    assert product.n == g1.n * g2.n
    for u, u2 in itertools.product(g1.vertices(), g2.vertices()):
        assert len(product.neighbors(u2 * g1.n + u)) == (
            len(g1.neighbors(u)) + len(g2.neighbors(u2)))


def test_grid_coords():
    coords = GridCoords(3, 4)
    assert len(coords) == 12
    assert coords.index(0, 0) == 0
    assert coords.index(2, 1) == 5
    assert coords.coords(5) == (2, 1)
    with pytest.raises(IndexError):
        coords.index(3, 0)


@pytest.mark.parametrize('g, expected', [
    (make_complete(5), 4),
    (make_path(4), 2),
    (make_star(3), 3),
    (Graph(0), 0),
])
def test_max_degree(g, expected):
    assert max_degree(g) == expected


def test_out_tree_helpers():
    tree = make_kary_out_tree(2, 3)
    assert tree.is_out_tree()
    assert tree.root() == 0
    assert tree.parent(0) is None
    assert tree.parent(6) == 2
    assert tree.depths() == [0, 1, 1, 2, 2, 2, 2]
    assert tree.bfs_order() == list(range(7))


def test_out_tree_recognition():
    assert not make_path(3).is_out_tree()
    assert not Graph(3, [(0, 1), (2, 1)], directed=True).is_out_tree()
    with pytest.raises(InvalidGraphError):
        Graph(2, directed=True).root()


def test_underlying_forgets_orientation():
    g = Graph(3, [(0, 1), (1, 0), (2, 1)], directed=True)
    assert g.underlying() == Graph(3, [(0, 1), (1, 2)])
