"""Deterministic generators of the graph families under study.

Vertex numbering conventions:

* ``F_k`` and ``R_k``: ``v_1..v_k`` are ``0..k-1`` and ``u_b`` is ``k + b``
  where the binary string ``b`` is read as a number, so ``u_b`` precede
  ``u_b'`` lexicographically iff their indices do. Digit ``j`` of ``b`` is
  counted from the left starting at 1.
* Out-directed k-ary trees are numbered breadth-first from the root 0.
"""
import random

import networkx as nx

from resolvkit import exceptions
from resolvkit.constants import Family
from resolvkit.graph import Graph, cartesian_product


def _require(condition, msg):
    if not condition:
        raise exceptions.InvalidGraphError(msg)


def make_path(n, directed=False):
    """Returns path ``0 - 1 - ... - n-1`` (arcs ``i -> i+1`` if directed)."""
    _require(n >= 1, 'path needs at least one vertex')
    return Graph(n, ((i, i + 1) for i in range(n - 1)), directed=directed)


def make_cycle(n):
    _require(n >= 3, 'cycle needs at least three vertices')
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def make_complete(n):
    _require(n >= 1, 'complete graph needs at least one vertex')
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def make_star(leaves, directed=False):
    """Returns star with center 0; arcs point away from the center if
    `directed`."""
    _require(leaves >= 0, 'star needs a nonnegative number of leaves')
    return Graph(leaves + 1, ((0, v) for v in range(1, leaves + 1)),
                 directed=directed)


def make_grid(n, m):
    """Returns grid ``P_n x P_m`` with `n` rows, `m` columns and its
    column-major :class:`GridCoords`."""
    _require(n >= 1 and m >= 1, 'grid needs at least one row and column')
    return cartesian_product(make_path(n), make_path(m))


def digit(b, j, k):
    """Returns the `j`-th digit (from the left, 1-based) of the `k`-bit
    string `b`."""
    return (b >> (k - j)) & 1


def _clique_arcs(first, count):
    # lower index -> higher index
    for a in range(first, first + count):
        for b in range(a + 1, first + count):
            yield a, b


def make_f_k(k, oriented=False):
    """Returns ``F_k``: cliques on ``v_1..v_k`` and on ``u_b``, with
    ``u_b ~ v_j`` iff digit ``j`` of ``b`` is 1.

    When `oriented`, cross edges point toward the v-side and clique edges
    run from the lower to the higher index.
    """
    _require(k >= 1, 'F_k needs k >= 1')
    edges = list(_clique_arcs(0, k))
    edges.extend(_clique_arcs(k, 2 ** k))
    for b in range(2 ** k):
        for j in range(1, k + 1):
            if digit(b, j, k):
                edges.append((k + b, j - 1))
    return Graph(k + 2 ** k, edges, directed=oriented)


def make_r_k(k, oriented=False):
    """Returns ``R_k``, the complete graph on the vertices of ``F_k``.

    When `oriented`, the edge between ``v_i`` and ``u_b`` points toward
    ``v_i`` iff digit ``i`` of ``b`` is 1; clique edges inside each side run
    from the lower to the higher index.
    """
    _require(k >= 1, 'R_k needs k >= 1')
    edges = list(_clique_arcs(0, k))
    edges.extend(_clique_arcs(k, 2 ** k))
    for b in range(2 ** k):
        for i in range(1, k + 1):
            if digit(b, i, k):
                edges.append((k + b, i - 1))
            else:
                edges.append((i - 1, k + b))
    return Graph(k + 2 ** k, edges, directed=oriented)


def kary_tree_order(k, n):
    """Returns number of vertices of a complete `k`-ary tree with `n`
    layers."""
    if k == 1:
        return n
    return (k ** n - 1) // (k - 1)


def make_kary_out_tree(k, n):
    """Returns complete `k`-ary tree with `n` layers, edges directed away
    from the root, numbered breadth-first (children of ``i`` are
    ``k*i+1 .. k*i+k``)."""
    _require(k >= 1 and n >= 1, 'k-ary tree needs k >= 1 and n >= 1')
    order = kary_tree_order(k, n)
    arcs = [((child - 1) // k, child) for child in range(1, order)]
    return Graph(order, arcs, directed=True)


def circulant_regular(m, degree):
    """Returns a `degree`-regular circulant graph on `m` vertices."""
    _require(0 <= degree < m and degree * m % 2 == 0,
             'no {0}-regular circulant on {1} vertices'.format(degree, m))
    offsets = list(range(1, degree // 2 + 1))
    if degree % 2:
        offsets.append(m // 2)
    edges = set()
    for v in range(m):
        for offset in offsets:
            u = (v + offset) % m
            edges.add((min(u, v), max(u, v)))
    return Graph(m, edges)


def make_maxdeg_tight(m, delta):
    """Returns graph attaining the maximum degree lower bound for adim.

    Starts from a ``(delta-1)``-regular circulant ``H`` on vertices
    ``0..m-1``, subdivides every edge of ``H`` (subdivision vertices follow
    in edge order), hangs one pendant on each vertex of ``H`` and adds one
    isolated vertex last. The order is ``m * (delta + 3) / 2 + 1``.
    """
    _require(delta >= 2, 'maximum degree must be at least 2')
    _require(delta <= m, 'maximum degree must not exceed m')
    _require((delta - 1) * m % 2 == 0, '(delta - 1) * m must be even')
    h = circulant_regular(m, delta - 1)
    edges = []
    vertex = m
    for u, v in h.edges:
        edges.extend([(u, vertex), (vertex, v)])
        vertex += 1
    for u in range(m):
        edges.append((u, vertex))
        vertex += 1
    return Graph(vertex + 1, edges)


def random_out_tree(n, rng):
    """Returns random recursive out-tree on `n` vertices rooted at 0."""
    _require(n >= 1, 'tree needs at least one vertex')
    return Graph(n, ((rng.randrange(v), v) for v in range(1, n)),
                 directed=True)


def random_out_trees(count, max_vertices, seed=0):
    """Returns `count` seeded random out-trees with up to `max_vertices`
    vertices."""
    rng = random.Random(seed)
    return [random_out_tree(rng.randint(1, max_vertices), rng)
            for _ in range(count)]


def random_graph(n, p, seed=None):
    """Returns a ``G(n, p)`` random undirected graph."""
    return Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))


def random_corpus(count, max_vertices, seed=0):
    """Returns `count` seeded random undirected graphs of order 1 to
    `max_vertices` with varying edge density."""
    rng = random.Random(seed)
    corpus = []
    for _ in range(count):
        n = rng.randint(1, max_vertices)
        p = rng.choice((0.2, 0.35, 0.5, 0.7))
        corpus.append(random_graph(n, p, seed=rng.randrange(2 ** 32)))
    return corpus


class FamilySpec:
    """Family name plus its integer parameters.

    Args:
        family (Family): Family to build.
        **params: ``n``, ``m``, ``k``, ``delta``, ``rows``, ``cols`` as the
            family needs.
    """

    _REQUIRED = {
        Family.PATH: ('n',),
        Family.CYCLE: ('n',),
        Family.COMPLETE: ('n',),
        Family.STAR: ('n',),
        Family.GRID: ('rows', 'cols'),
        Family.F_K: ('k',),
        Family.F_K_ORIENTED: ('k',),
        Family.R_K: ('k',),
        Family.R_K_ORIENTED: ('k',),
        Family.KARY_TREE_OUT: ('k', 'n'),
        Family.MAXDEG_TIGHT: ('m', 'delta'),
    }

    def __init__(self, family, **params):
        self.family = Family(family)
        missing = [key for key in self._REQUIRED[self.family]
                   if params.get(key) is None]
        if missing:
            raise exceptions.InvalidGraphError(
                'family {0} requires {1}'.format(
                    self.family.value, ', '.join(missing)))
        self.params = {key: int(params[key])
                       for key in self._REQUIRED[self.family]}

    def __repr__(self):
        return 'FamilySpec({0}, {1})'.format(self.family.value, self.params)

    def as_dict(self):
        return dict(family=self.family.value, **self.params)

    def build(self):
        """Returns generated :class:`Graph`."""
        p = self.params
        family = self.family
        if family == Family.PATH:
            return make_path(p['n'])
        if family == Family.CYCLE:
            return make_cycle(p['n'])
        if family == Family.COMPLETE:
            return make_complete(p['n'])
        if family == Family.STAR:
            return make_star(p['n'])
        if family == Family.GRID:
            return make_grid(p['rows'], p['cols'])[0]
        if family in (Family.F_K, Family.F_K_ORIENTED):
            return make_f_k(p['k'], oriented=family == Family.F_K_ORIENTED)
        if family in (Family.R_K, Family.R_K_ORIENTED):
            return make_r_k(p['k'], oriented=family == Family.R_K_ORIENTED)
        if family == Family.KARY_TREE_OUT:
            return make_kary_out_tree(p['k'], p['n'])
        return make_maxdeg_tight(p['m'], p['delta'])
