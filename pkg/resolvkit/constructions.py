"""Certificate constructions.

* Adjacency resolving sets of ``P_2 x P_n`` and ``P_3 x P_n`` assembled from
  named block patterns.
* Weight placements on complete out-directed k-ary trees, both the closed
  form layer placement and an exact dynamic program for any out-tree.
* Rewriting of a resolving broadcast of an out-tree into a 0/1 one.
"""
import collections
import functools
import itertools
import logging
import math

import tqdm

from resolvkit import exceptions
from resolvkit.certificates import (Broadcast, verify_adjacency_set,
                                    verify_broadcast)
from resolvkit.families import make_grid
from resolvkit.graph import all_pairs_distances, truncated_distance
from resolvkit.settings import settings


logger = logging.getLogger(__name__)


class BlockPattern:
    """Marked cells of a strip of consecutive grid columns.

    Args:
        rows (int): Number of grid rows.
        width (int): Number of columns.
        marks (iterable): ``(row, col)`` cells carrying weight 1.
        name (str): Label used in recipes.
    """

    def __init__(self, rows, width, marks, name=''):
        self.rows = rows
        self.width = width
        self.marks = frozenset((int(r), int(c)) for r, c in marks)
        self.name = name
        for row, col in self.marks:
            if not (0 <= row < rows and 0 <= col < width):
                raise exceptions.CertificateError(
                    'mark ({0}, {1}) outside {2}x{3} block {4}'.format(
                        row, col, rows, width, name))

    def __add__(self, other):
        return concatenate(self, other)

    def __eq__(self, other):
        if not isinstance(other, BlockPattern):
            return NotImplemented
        return (self.rows, self.width, self.marks) == (
            other.rows, other.width, other.marks)

    def __hash__(self):
        return hash((self.rows, self.width, self.marks))

    def __len__(self):
        return len(self.marks)

    def __repr__(self):
        return 'BlockPattern({0!r}, {1}x{2}, {3})'.format(
            self.name, self.rows, self.width, sorted(self.marks))

    def vertices(self):
        """Returns sorted column-major vertex indices of the marks."""
        return sorted(col * self.rows + row for row, col in self.marks)

    def render(self):
        """Returns rows of ``#`` (marked) and ``.`` characters."""
        return [''.join('#' if (row, col) in self.marks else '.'
                        for col in range(self.width))
                for row in range(self.rows)]


def empty_block(rows):
    return BlockPattern(rows, 0, (), '')


def concatenate(b1, b2):
    """Places `b2` to the right of `b1`."""
    if b1.rows != b2.rows:
        raise exceptions.CertificateError(
            'cannot concatenate blocks with {0} and {1} rows'.format(
                b1.rows, b2.rows))
    shifted = ((row, col + b1.width) for row, col in b2.marks)
    return BlockPattern(b1.rows, b1.width + b2.width,
                        itertools.chain(b1.marks, shifted),
                        b1.name + b2.name)


def _pattern(name, rows, width, *marks):
    return BlockPattern(rows, width, marks, name)


GRID2_PATTERNS = {
    'A': _pattern('A', 2, 4, (0, 0), (0, 2), (1, 2)),
    'B': _pattern('B', 2, 4, (1, 0), (0, 2), (1, 2)),
    'C': _pattern('C', 2, 4, (0, 1), (1, 2), (0, 3)),
    'D': _pattern('D', 2, 4, (1, 1), (0, 2), (1, 3)),
    'T1': _pattern('T1', 2, 1, (0, 0)),
    'T2': _pattern('T2', 2, 2, (0, 0), (0, 1)),
    'T3': _pattern('T3', 2, 3, (0, 0), (0, 2)),
    'T1~': _pattern('T1~', 2, 1, (1, 0)),
    'T3~': _pattern('T3~', 2, 3, (1, 0), (1, 2)),
}

GRID3_PATTERNS = {
    'G': _pattern('G', 3, 3, (0, 1), (2, 1), (1, 2)),
    'G1': _pattern('G1', 3, 1, (0, 0), (2, 0)),
    'G2': _pattern('G2', 3, 2, (0, 1), (2, 1)),
}

# (width, marks) of every named block
GRID2_SHAPES = {'A': (4, 3), 'B': (4, 3), 'C': (4, 3), 'D': (4, 3),
                'T1': (1, 1), 'T2': (2, 2), 'T3': (3, 2),
                'T1~': (1, 1), 'T3~': (3, 2)}
GRID3_SHAPES = {'G': (3, 3), 'G1': (1, 2), 'G2': (2, 2)}


def grid2_recipe(n):
    """Returns block names assembling a certificate for ``P_2 x P_n``."""
    if n < 2:
        raise ValueError('two-row recipes need n >= 2, got {0}'.format(n))
    k, r = divmod(n, 8)
    ab, cd = ['A', 'B'] * k, ['C', 'D'] * k
    return {
        0: cd,
        1: ab + ['T1'],
        2: cd + ['T2'],
        3: ab + ['T3'],
        4: cd + ['C'],
        5: ab + ['A', 'T1~'],
        6: cd + ['C', 'T2'],
        7: ab + ['A', 'T3~'],
    }[r]


def grid3_recipe(n):
    """Returns block names assembling a certificate for ``P_3 x P_n``."""
    if n < 2:
        raise ValueError('three-row recipes need n >= 2, got {0}'.format(n))
    k, r = divmod(n, 3)
    if r == 1:
        return ['G'] * k + ['G1']
    return ['G'] * k + (['G2'] if r == 2 else [])


def assemble(names, table, rows):
    """Concatenates the blocks of `table` named in `names`."""
    return functools.reduce(concatenate, (table[name] for name in names),
                            empty_block(rows))


def grid2_size(n):
    """Returns ``ceil((3n - 1) / 4)``."""
    return -(-(3 * n - 1) // 4)


def grid3_size(n):
    return n + (1 if n % 3 == 1 else 0)


def grid2_certificate(n, table=None):
    """Returns adjacency resolving set of ``P_2 x P_n`` with
    ``ceil((3n - 1) / 4)`` vertices."""
    return assemble(grid2_recipe(n), table or GRID2_PATTERNS, 2).vertices()


def grid3_certificate(n, table=None):
    """Returns adjacency resolving set of ``P_3 x P_n`` with ``n`` vertices,
    ``n + 1`` when ``n = 1 mod 3``."""
    return assemble(grid3_recipe(n), table or GRID3_PATTERNS, 3).vertices()


def _assembly_ok(table, rows, n, recipe, size):
    pattern = assemble(recipe(n), table, rows)
    if pattern.width != n or len(pattern) != size(n):
        return False
    grid, _ = make_grid(rows, n)
    return verify_adjacency_set(grid, pattern.vertices()).valid


def check_grid2_patterns(table, max_n=40):
    """Checks every two-row recipe for ``2 <= n <= max_n``."""
    return all(_assembly_ok(table, 2, n, grid2_recipe, grid2_size)
               for n in range(2, max_n + 1))


def check_grid3_patterns(table, max_n=30):
    """Checks every three-row recipe for ``2 <= n <= max_n``."""
    return all(_assembly_ok(table, 3, n, grid3_recipe, grid3_size)
               for n in range(2, max_n + 1))


def _candidates(rows, width, count, name):
    cells = [(row, col) for col in range(width) for row in range(rows)]
    for marks in itertools.combinations(cells, count):
        yield BlockPattern(rows, width, marks, name)


def _derive(rows, stages, shapes, recipe, size, max_n):
    """Depth-first search over stages of block names.

    A stage is accepted once every recipe made only of already chosen
    blocks verifies; candidates are tried in lexicographic order of their
    cells, so the first complete table is the least one in stage order.
    """
    checks, known = [], set()
    for names in stages:
        before = set(known)
        known.update(names)
        checks.append([n for n in range(2, max_n + 1)
                       if set(recipe(n)) <= known
                       and not set(recipe(n)) <= before])

    def search(depth, table):
        if depth == len(stages):
            return table
        names = stages[depth]
        pools = [list(_candidates(rows, *shapes[name], name))
                 for name in names]
        combos = itertools.product(*pools)
        if depth == 0:
            total = math.prod(len(pool) for pool in pools)
            combos = tqdm.tqdm(combos, total=total, leave=False,
                               desc='Derive {0}'.format('/'.join(names)))
        for combo in combos:
            trial = {**table, **dict(zip(names, combo))}
            if all(_assembly_ok(trial, rows, n, recipe, size)
                   for n in checks[depth]):
                found = search(depth + 1, trial)
                if found is not None:
                    return found
        return None

    table = search(0, {})
    if table is None:
        raise exceptions.InfeasibleError(
            None, 'no block table satisfies the {0}-row recipes'.format(rows))
    return table


def derive_grid2_patterns(max_n=40):
    """Searches two-row block patterns making every recipe valid."""
    stages = [('C',), ('D',), ('T2',), ('A', 'B', 'T1'), ('T3',), ('T1~',),
              ('T3~',)]
    return _derive(2, stages, GRID2_SHAPES, grid2_recipe, grid2_size, max_n)


def derive_grid3_patterns(max_n=30):
    """Searches three-row block patterns making every recipe valid."""
    stages = [('G',), ('G1',), ('G2',)]
    return _derive(3, stages, GRID3_SHAPES, grid3_recipe, grid3_size, max_n)


def kary_adim_formula(k, n):
    """Returns ``1 + k^2 + ... + k^(n-1)`` for odd `n` and
    ``k + k^3 + ... + k^(n-1)`` for even `n`.

    For ``n = 1`` the odd sum reads as the single term ``k^0 = 1``, while a
    one-vertex graph has adjacency dimension 0.
    """
    if k < 2 or n < 1:
        raise ValueError('formula needs k >= 2 and n >= 1')
    return sum(k ** e for e in range(n - 1, -1, -2))


def kary_tree_certificate(k, n):
    """Returns vertices of the complete out-directed `k`-ary tree with `n`
    layers lying at depths of the parity of ``n - 1``.

    Vertices are numbered breadth-first as in
    :func:`resolvkit.families.make_kary_out_tree`.
    """
    if k < 2 or n < 1:
        raise ValueError('certificate needs k >= 2 and n >= 1')
    marked, first = [], 0
    for depth in range(n):
        width = k ** depth
        if (n - 1 - depth) % 2 == 0:
            marked.extend(range(first, first + width))
        first += width
    return marked


def _children(g):
    return [g.out_neighbors(v) for v in g.vertices()]


def _merge(children, options):
    """Knapsack over children.

    Args:
        options (callable): Maps a child to ``(cost, exceptions, hosted,
            label)`` tuples.

    Returns:
        dict: ``(exceptions, hosted) -> (cost, labels)`` for at most one
            exception and one hosted child.
    """
    states = {(0, 0): (0, ())}
    for child in children:
        merged = {}
        for (exc, host), (cost, labels) in states.items():
            for c_cost, c_exc, c_host, label in options(child):
                key = (exc + c_exc, host + c_host)
                if key[0] > 1 or key[1] > 1 or c_cost == math.inf:
                    continue
                total = cost + c_cost
                if key not in merged or total < merged[key][0]:
                    merged[key] = (total, labels + (label,))
        states = merged
    return states


def _best(states, exc, hosts):
    found = [(states[key][0], key) for key in states
             if key[0] == exc and key[1] in hosts]
    if not found:
        return math.inf, ()
    cost, key = min(found)
    return cost, states[key][1]


def _out_tree_table(g):
    """Dynamic program over an out-tree.

    Under weight 1 an unmarked vertex is identified only by its parent
    being marked, so a marked vertex may host one unmarked child and at
    most one unmarked vertex (the root or a child of an unmarked vertex)
    may have an empty trace. States per vertex:

    * ``('A', e)``: marked, `e` empty traces below.
    * ``('H', e)``: unmarked child of a marked parent, `e` empty traces
      below.
    * ``('X',)``: unmarked with empty trace; everything below is marked
      or hosted.
    """
    children = _children(g)
    table = {}

    def options_under_marked(c):
        return [(table[c, ('A', e)][0], e, 0, ('A', e)) for e in (0, 1)] + [
            (table[c, ('H', e)][0], e, 1, ('H', e)) for e in (0, 1)]

    def options_under_unmarked(c):
        return [(table[c, ('A', e)][0], e, 0, ('A', e)) for e in (0, 1)] + [
            (table[c, ('X',)][0], 1, 0, ('X',))]

    for v in reversed(g.bfs_order()):
        marked = _merge(children[v], options_under_marked)
        unmarked = _merge(children[v], options_under_unmarked)
        for e in (0, 1):
            cost, labels = _best(marked, e, (0, 1))
            table[v, ('A', e)] = (cost + 1, labels)
            table[v, ('H', e)] = _best(unmarked, e, (0,))
        table[v, ('X',)] = _best(unmarked, 0, (0,))
    return table


def out_tree_adim(g):
    """Returns the adjacency dimension of an out-directed tree."""
    return out_tree_solution(g)[0]


def out_tree_certificate(g):
    """Returns a minimum adjacency resolving set of an out-directed tree."""
    return out_tree_solution(g)[1]


def out_tree_solution(g):
    """Returns ``(adim, sorted minimum adjacency resolving set)`` of an
    out-directed tree.

    Raises:
        InvalidGraphError: If `g` is not an out-directed tree.
    """
    root = g.root()
    table = _out_tree_table(g)
    cost, label = min((table[root, label][0], label)
                      for label in (('A', 0), ('A', 1), ('X',)))
    children = _children(g)
    marked = []
    stack = [(root, label)]
    while stack:
        v, label = stack.pop()
        if label[0] == 'A':
            marked.append(v)
        stack.extend(zip(children[v], table[v, label][1]))
    return cost, sorted(marked)


def crucial_vertices(g, f, v, dm=None):
    """Returns vertices `u` such that `v` is the only support vertex
    resolving some pair ``(u, w)``.

    Raises:
        CertificateError: If `v` is outside the support of `f`.
    """
    if not isinstance(f, Broadcast):
        f = Broadcast(f)
    if f[v] <= 0:
        raise exceptions.CertificateError(
            'vertex {0} is not in the support of the broadcast'.format(v))
    if dm is None:
        dm = all_pairs_distances(g)
    others = [z for z in f.support if z != v]
    crucial = set()
    for x, y in itertools.combinations(g.vertices(), 2):
        if truncated_distance(dm, v, x, f[v]) == truncated_distance(
                dm, v, y, f[v]):
            continue
        if not any(truncated_distance(dm, z, x, f[z])
                   != truncated_distance(dm, z, y, f[z]) for z in others):
            crucial.update((x, y))
    return crucial


def _prune(g, weights, dm):
    """Drops weight-1 vertices, highest index first, while the broadcast
    still resolves `g`."""
    for u in reversed(g.vertices()):
        if weights[u] != 1:
            continue
        weights[u] = 0
        if not verify_broadcast(g, Broadcast(weights), dm=dm).valid:
            weights[u] = 1
    return weights


def tree_broadcast_to_adjacency(g, f):
    """Rewrites a resolving broadcast of an out-directed tree into a 0/1
    resolving broadcast of no larger cost.

    Vertices are visited by depth, ties by index. The first vertex `v` with
    weight ``w > 1`` loses its weight and every vertex of its crucial set
    ``C`` gets weight at least 1, except a child of `v` in ``C`` when
    ``|C| > w``. Weight-1 vertices that are no longer needed are then
    dropped, highest index first. This repeats until all weights are at
    most 1.

    Raises:
        InvalidGraphError: If `g` is not an out-directed tree.
        CertificateError: If `f` does not resolve `g`.
        InconsistencyError: If a rewrite step breaks resolvability or the
            result costs more than `f`.
    """
    if not g.is_out_tree():
        raise exceptions.InvalidGraphError(
            'graph is not a tree directed away from its root')
    if not isinstance(f, Broadcast):
        f = Broadcast(f)
    dm = all_pairs_distances(g)
    if not verify_broadcast(g, f, dm=dm).valid:
        raise exceptions.CertificateError('input broadcast does not resolve '
                                          'the tree')
    budget = f.cost
    order = g.bfs_order()
    position = {v: i for i, v in enumerate(order)}
    depth = g.depths()
    check_steps = settings.get('constructions.check_steps', True)
    while True:
        v = next((u for u in order if f[u] > 1), None)
        if v is None:
            break
        w = f[v]
        crucial = sorted(crucial_vertices(g, f, v, dm=dm), key=position.get)
        layers = collections.Counter(depth[u] for u in crucial)
        if any(count > 1 for count in layers.values()):
            logger.warning('crucial set of vertex {0} has several vertices '
                           'in one layer: {1}'.format(v, crucial))
        if len(crucial) > w + 1:
            logger.warning('crucial set of vertex {0} exceeds its weight '
                           '{1} + 1: {2}'.format(v, w, crucial))
        weights = list(f)
        weights[v] = 0
        raised = list(crucial)
        child = next((u for u in crucial if g.parent(u) == v), None)
        if len(crucial) > w and child is not None:
            raised.remove(child)
        for u in raised:
            weights[u] = max(weights[u], 1)
        f = Broadcast(_prune(g, weights, dm))
        logger.debug('rewrite vertex {0} of weight {1}: crucial {2}, '
                     'weighted {3}, result {4}'.format(
                         v, w, crucial, raised, list(f)))
        if check_steps and not verify_broadcast(g, f, dm=dm).valid:
            raise exceptions.InconsistencyError(
                'rewriting vertex {0} produced a non-resolving '
                'broadcast'.format(v))
    if not verify_broadcast(g, f, dm=dm).valid:
        raise exceptions.InconsistencyError(
            'rewritten broadcast does not resolve the tree')
    if f.cost > budget:
        raise exceptions.InconsistencyError(
            'rewritten broadcast costs {0}, input {1}'.format(f.cost, budget))
    return f
