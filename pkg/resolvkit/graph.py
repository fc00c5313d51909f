"""Graph representation, all-pairs distances and the truncated distance."""
import math

import networkx as nx

from resolvkit import exceptions


#: Distance between vertices with no (directed) path between them.
UNREACHABLE = math.inf


class Graph:
    """Simple graph on vertices ``0..n-1``.

    Undirected edges are stored once as ``(min, max)`` pairs, directed edges
    as given. Edges are kept sorted so that two graphs built from the same
    edge set compare equal and serialize identically.

    Args:
        n (int): Number of vertices.
        edges (iterable): Pairs of vertex indices.
        directed (bool): Whether a pair ``(u, v)`` is the arc ``u -> v``.

    Raises:
        InvalidGraphError: On self-loops, duplicate edges or endpoints out of
            range.
    """

    def __init__(self, n, edges=(), directed=False):
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise exceptions.InvalidGraphError(
                'vertex count must be a nonnegative integer, got {0!r}'.format(n))
        self._n = n
        self._directed = bool(directed)
        seen = set()
        for edge in edges:
            try:
                u, v = (int(x) for x in edge)
            except (TypeError, ValueError):
                raise exceptions.InvalidGraphError(
                    'edge must be a pair of integers, got {0!r}'.format(edge))
            if not (0 <= u < n and 0 <= v < n):
                raise exceptions.InvalidGraphError(
                    'edge ({0}, {1}) has an endpoint out of range'.format(u, v))
            if u == v:
                raise exceptions.InvalidGraphError(
                    'self-loop at vertex {0}'.format(u))
            key = (u, v) if directed else (min(u, v), max(u, v))
            if key in seen:
                raise exceptions.InvalidGraphError(
                    'duplicate edge ({0}, {1})'.format(u, v))
            seen.add(key)
        self._edges = tuple(sorted(seen))
        out = [[] for _ in range(n)]
        into = [[] for _ in range(n)]
        for u, v in self._edges:
            out[u].append(v)
            into[v].append(u)
            if not directed:
                out[v].append(u)
                into[u].append(v)
        self._out = tuple(tuple(sorted(adj)) for adj in out)
        self._in = tuple(tuple(sorted(adj)) for adj in into)

    @classmethod
    def from_networkx(cls, nxgraph):
        """Builds a graph from a networkx graph with nodes ``0..n-1``."""
        return cls(nxgraph.number_of_nodes(), nxgraph.edges(),
                   directed=nxgraph.is_directed())

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self._n, self._directed, self._edges) == (
            other._n, other._directed, other._edges)

    def __hash__(self):
        return hash((self._n, self._directed, self._edges))

    def __len__(self):
        return self._n

    def __repr__(self):
        return '{0}(n={1}, edges={2}, directed={3})'.format(
            type(self).__name__, self._n, len(self._edges), self._directed)

    @property
    def n(self):
        """int: Number of vertices."""
        return self._n

    @property
    def directed(self):
        return self._directed

    @property
    def edges(self):
        """tuple: Sorted canonical edge pairs."""
        return self._edges

    def edge_list(self):
        """Returns edges as a list of ``[u, v]`` lists for serialization."""
        return [list(edge) for edge in self._edges]

    def vertices(self):
        return range(self._n)

    def out_neighbors(self, v):
        """Returns vertices reachable from `v` by one edge."""
        return self._out[v]

    def in_neighbors(self, v):
        """Returns vertices that reach `v` by one edge."""
        return self._in[v]

    def neighbors(self, v):
        """Returns all vertices adjacent to `v` ignoring orientation."""
        if not self._directed:
            return self._out[v]
        return tuple(sorted(set(self._out[v]) | set(self._in[v])))

    def has_edge(self, u, v):
        return v in self._out[u]

    def to_networkx(self):
        """Returns the graph as a :class:`networkx.Graph` or ``DiGraph``."""
        nxgraph = nx.DiGraph() if self._directed else nx.Graph()
        nxgraph.add_nodes_from(range(self._n))
        nxgraph.add_edges_from(self._edges)
        return nxgraph

    def underlying(self):
        """Returns the undirected graph obtained by forgetting orientation."""
        if not self._directed:
            return self
        pairs = {(min(u, v), max(u, v)) for u, v in self._edges}
        return Graph(self._n, pairs, directed=False)

    def is_out_tree(self):
        """Checks if the graph is a rooted tree with every edge pointing away
        from the root."""
        if not self._directed or self._n == 0:
            return False
        return nx.is_arborescence(self.to_networkx())

    def root(self):
        """Returns the root of an out-directed tree.

        Raises:
            InvalidGraphError: If the graph is not an out-directed tree.
        """
        if not self.is_out_tree():
            raise exceptions.InvalidGraphError(
                'graph is not a tree directed away from its root')
        return next(v for v in range(self._n) if not self._in[v])

    def parent(self, v):
        """Returns parent of `v` in an out-directed tree or None for the root."""
        return self._in[v][0] if self._in[v] else None

    def depths(self):
        """Returns list of vertex depths in an out-directed tree."""
        root = self.root()
        depth = [0] * self._n
        for parent, child in nx.bfs_edges(self.to_networkx(), root):
            depth[child] = depth[parent] + 1
        return depth

    def bfs_order(self):
        """Returns out-tree vertices sorted by depth, ties by index."""
        depth = self.depths()
        return sorted(range(self._n), key=lambda v: (depth[v], v))


class DistanceMatrix:
    """All-pairs shortest path lengths of a graph.

    Entry ``(u, v)`` is the length of a shortest path from `u` to `v`, or
    :data:`UNREACHABLE`.
    """

    def __init__(self, rows, directed=False):
        self._rows = tuple(tuple(row) for row in rows)
        self._directed = directed

    def __getitem__(self, key):
        u, v = key
        return self._rows[u][v]

    def __len__(self):
        return len(self._rows)

    @property
    def n(self):
        return len(self._rows)

    @property
    def directed(self):
        return self._directed

    @property
    def rows(self):
        return self._rows

    def distance(self, u, v):
        return self._rows[u][v]

    def truncated(self, u, v, k):
        return truncated_distance(self, u, v, k)

    def eccentricity(self, v):
        """Returns largest finite distance from `v` (0 if `v` reaches
        nothing)."""
        return max(d for d in self._rows[v] if d != UNREACHABLE)

    def is_symmetric(self):
        n = len(self._rows)
        return all(self._rows[u][v] == self._rows[v][u]
                   for u in range(n) for v in range(u + 1, n))


class GridCoords:
    """Column-major labelling of the grid ``P_rows x P_cols``.

    Vertex 0 is the top-left corner; indices run down a column and then
    continue at the top of the next column.
    """

    def __init__(self, rows, cols):
        if rows < 1 or cols < 1:
            raise exceptions.InvalidGraphError(
                'grid needs at least one row and one column')
        self.rows = rows
        self.cols = cols

    def __eq__(self, other):
        if not isinstance(other, GridCoords):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols)

    def __len__(self):
        return self.rows * self.cols

    def __repr__(self):
        return 'GridCoords(rows={0}, cols={1})'.format(self.rows, self.cols)

    def index(self, row, col):
        """Returns vertex index of the cell at (`row`, `col`)."""
        if not (0 <= row < self.rows and 0 <= col < self.cols):
            raise IndexError('cell ({0}, {1}) outside {2}x{3} grid'.format(
                row, col, self.rows, self.cols))
        return col * self.rows + row

    def coords(self, v):
        """Returns (row, col) of vertex `v`."""
        col, row = divmod(v, self.rows)
        return row, col


def all_pairs_distances(g):
    """Computes a :class:`DistanceMatrix` by breadth-first search."""
    rows = [[UNREACHABLE] * g.n for _ in range(g.n)]
    for source, lengths in nx.all_pairs_shortest_path_length(g.to_networkx()):
        row = rows[source]
        for target, length in lengths.items():
            row[target] = length
    return DistanceMatrix(rows, directed=g.directed)


def truncated_distance(dm, u, v, k):
    """Returns ``min(d(u, v), k + 1)``; unreachable pairs give ``k + 1``."""
    if k < 0:
        raise ValueError('truncation radius must be nonnegative: {0}'.format(k))
    return int(min(dm[u, v], k + 1))


def _is_labelled_path(g):
    return g.edges == tuple((i, i + 1) for i in range(g.n - 1))


def cartesian_product(g1, g2):
    """Builds the Cartesian product of two undirected graphs.

    Pair ``(u, u')`` with ``u`` in `g1` and ``u'`` in `g2` gets the index
    ``u' * len(g1) + u``, so for two paths the result is labelled
    column-major with ``len(g1)`` rows.

    Returns:
        tuple: Product graph and :class:`GridCoords` when both factors are
            paths labelled in order, None otherwise.

    Raises:
        InvalidGraphError: If either factor is directed.
    """
    if g1.directed or g2.directed:
        raise exceptions.InvalidGraphError(
            'cartesian product is defined for undirected graphs only')
    n1 = g1.n
    edges = []
    for col in range(g2.n):
        for u, v in g1.edges:
            edges.append((col * n1 + u, col * n1 + v))
    for a, b in g2.edges:
        for row in range(n1):
            edges.append((a * n1 + row, b * n1 + row))
    product = Graph(n1 * g2.n, edges)
    coords = None
    if n1 and g2.n and _is_labelled_path(g1) and _is_labelled_path(g2):
        coords = GridCoords(n1, g2.n)
    return product, coords


def max_degree(g):
    """Returns maximum degree (out-degree for directed graphs)."""
    return max((len(g.out_neighbors(v)) for v in g.vertices()), default=0)
