"""Exact solvers for metric dimension, adjacency dimension, locating-dominating
number and broadcast dimension.

Every parameter is reduced to a weighted covering problem. The elements to
cover are vertex pairs (plus one domination element per vertex for LD),
encoded as bits of a Python int. Buying vertex ``v`` at level ``w`` costs
``w`` and covers the pairs ``v`` resolves with that weight; coverage grows
with the level. The optimum is found by iterative deepening on cost with a
branch-and-bound search, and the lexicographically smallest optimal weight
vector is then fixed one vertex at a time.
"""
import itertools
import logging

import humanize

from resolvkit import exceptions
from resolvkit.certificates import (Broadcast, verify_adjacency_set,
                                    verify_broadcast,
                                    verify_locating_dominating,
                                    verify_resolving_set)
from resolvkit.constants import Parameter
from resolvkit.graph import all_pairs_distances, truncated_distance
from resolvkit.settings import settings


logger = logging.getLogger(__name__)


class SolveResult:
    """Optimal value of a parameter with a witness certificate.

    Attributes:
        parameter (Parameter): Computed parameter.
        value (int): Optimal cardinality or cost.
        witness (Broadcast): Lexicographically smallest optimal weight
            vector; an indicator vector for set-valued parameters.
        nodes_explored (int): Search nodes visited.
    """

    def __init__(self, parameter, value, witness, nodes_explored=0):
        self.parameter = Parameter(parameter)
        self.value = value
        self.witness = witness
        self.nodes_explored = nodes_explored

    def __repr__(self):
        return 'SolveResult({0}={1}, witness={2})'.format(
            self.parameter.value, self.value, list(self.witness))

    @property
    def vertices(self):
        """list: Support of the witness."""
        return self.witness.as_set()


class CoverProblem:
    """Covering instance over bitmask elements.

    Args:
        levels (list): ``levels[v][w]`` is the element mask covered by vertex
            `v` at weight `w`; ``levels[v][0]`` is 0 and masks grow with `w`.
        size (int): Number of elements.
    """

    def __init__(self, levels, size):
        self.n = len(levels)
        self.levels = [list(masks) for masks in levels]
        self.caps = [len(masks) - 1 for masks in self.levels]
        self.full = (1 << size) - 1
        reach = 0
        for masks in self.levels:
            reach |= masks[-1]
        self.reach = reach
        # first[e] lists (v, w): the smallest weight at which v covers e
        self.first = [[] for _ in range(size)]
        self.resolvers = [0] * size
        for v, masks in enumerate(self.levels):
            for w in range(1, len(masks)):
                fresh = masks[w] & ~masks[w - 1]
                while fresh:
                    low = fresh & -fresh
                    e = low.bit_length() - 1
                    fresh ^= low
                    self.first[e].append((v, w))
                    self.resolvers[e] |= 1 << v

    def is_feasible(self):
        return self.reach == self.full


class _Search:
    """Branch-and-bound over partial weight assignments."""

    def __init__(self, problem):
        self.problem = problem
        self.nodes = 0
        self._weights = None
        self._caps = None

    def exists(self, budget, prefix=()):
        """Checks if a cover of cost at most `budget` exists whose first
        vertices carry exactly the weights in `prefix`."""
        problem = self.problem
        self._weights = [0] * problem.n
        self._caps = list(problem.caps)
        unc = problem.full
        for v, w in enumerate(prefix):
            self._weights[v] = self._caps[v] = w
            unc &= ~problem.levels[v][w]
            budget -= w
        if budget < 0:
            return False
        return self._branch(unc, budget)

    def _branch(self, unc, budget):
        self.nodes += 1
        if not unc:
            return True
        if budget <= 0:
            return False
        levels = self.problem.levels
        weights, caps = self._weights, self._caps
        gains = []
        open_mask = 0
        for v in range(self.problem.n):
            if caps[v] > weights[v]:
                gain = (levels[v][caps[v]] & unc).bit_count()
                if gain:
                    gains.append(gain)
                    open_mask |= 1 << v
        gains.sort(reverse=True)
        if sum(gains[:budget]) < unc.bit_count():
            return False
        best, best_count = None, self.problem.n + 1
        rest = unc
        while rest:
            low = rest & -rest
            e = low.bit_length() - 1
            rest ^= low
            count = (self.problem.resolvers[e] & open_mask).bit_count()
            if count < best_count:
                best, best_count = e, count
                if count <= 1:
                    break
        if not best_count:
            return False
        found = False
        capped = []
        for v, w in self.problem.first[best]:
            if not (open_mask >> v) & 1 or w > caps[v]:
                continue
            step = w - weights[v]
            if step > budget:
                continue
            weights[v] = w
            found = self._branch(unc & ~levels[v][w], budget - step)
            weights[v] -= step
            if found:
                break
            # v stays below w in the remaining siblings
            capped.append((v, caps[v]))
            caps[v] = w - 1
        for v, cap in reversed(capped):
            caps[v] = cap
        return found


def minimum_cover(problem, cost_cap=None):
    """Solves a :class:`CoverProblem` exactly.

    Returns:
        tuple: Optimal cost, lexicographically smallest optimal weight list
            and number of search nodes.

    Raises:
        InfeasibleError: If no cover exists within `cost_cap`.
    """
    if not problem.is_feasible():
        raise exceptions.InfeasibleError(
            None, 'no certificate exists at any cost')
    limit = sum(problem.caps) if cost_cap is None else cost_cap
    search = _Search(problem)
    cost = 0
    while not search.exists(cost):
        logger.debug('no cover of cost {0} ({1} nodes)'.format(
            cost, humanize.intcomma(search.nodes)))
        cost += 1
        if cost > limit:
            raise exceptions.InfeasibleError(
                None, 'no certificate of cost at most {0}'.format(limit))
    prefix = []
    for v in range(problem.n):
        for w in range(problem.caps[v] + 1):
            if search.exists(cost, prefix + [w]):
                prefix.append(w)
                break
    return cost, prefix, search.nodes


def _pairs(n):
    return list(itertools.combinations(range(n), 2))


def _pair_mask(pairs, separates):
    mask = 0
    for i, (x, y) in enumerate(pairs):
        if separates(x, y):
            mask |= 1 << i
    return mask


def weight_cap(dm, v):
    """Returns the largest useful broadcast weight of `v`.

    Beyond its eccentricity a vertex sees no new truncated distances; a
    vertex reaching nothing still needs weight 1 to identify itself.
    """
    return max(1, dm.eccentricity(v))


def _truncated_mask(dm, pairs, v, k):
    profile = [truncated_distance(dm, v, u, k) for u in range(dm.n)]
    return _pair_mask(pairs, lambda x, y: profile[x] != profile[y])


def build_problem(g, parameter, dm=None):
    """Formulates `parameter` of `g` as a :class:`CoverProblem`."""
    parameter = Parameter(parameter)
    if dm is None:
        dm = all_pairs_distances(g)
    pairs = _pairs(g.n)
    levels = []
    if parameter == Parameter.LD:
        for z in g.vertices():
            near = [dm[z, u] <= 1 for u in g.vertices()]
            mask = _pair_mask(pairs, lambda x, y: z in (x, y)
                              or near[x] != near[y])
            for u in g.vertices():
                if near[u]:
                    mask |= 1 << (len(pairs) + u)
            levels.append([0, mask])
        return CoverProblem(levels, len(pairs) + g.n)
    for v in g.vertices():
        cap = weight_cap(dm, v)
        if parameter == Parameter.ADIM:
            radii = [1]
        elif parameter == Parameter.DIM:
            radii = [cap]
        else:
            radii = range(1, cap + 1)
        levels.append([0] + [_truncated_mask(dm, pairs, v, k) for k in radii])
    return CoverProblem(levels, len(pairs))


def _check_size(g, limit):
    if g.n > limit:
        raise exceptions.SizeLimitError(g.n, limit)


def _solve(g, parameter, cost_cap=None, max_vertices=None):
    parameter = Parameter(parameter)
    if max_vertices is None:
        max_vertices = settings['solver.max_vertices']
    _check_size(g, max_vertices)
    logger.debug('solve {0} on graph of order {1}'.format(
        parameter.value, g.n))
    problem = build_problem(g, parameter)
    try:
        value, weights, nodes = minimum_cover(problem, cost_cap=cost_cap)
    except exceptions.InfeasibleError as error:
        raise exceptions.InfeasibleError(parameter, str(error)) from None
    logger.debug('{0} = {1} after {2} nodes'.format(
        parameter.value, value, humanize.intcomma(nodes)))
    return SolveResult(parameter, value, Broadcast(weights), nodes)


def solve_metric_dimension(g, max_vertices=None):
    """Returns a minimum resolving set.

    Raises:
        InfeasibleError: If two vertices have identical distance profiles.
    """
    return _solve(g, Parameter.DIM, max_vertices=max_vertices)


def solve_adjacency_dimension(g, max_vertices=None):
    """Returns a minimum adjacency resolving set."""
    return _solve(g, Parameter.ADIM, max_vertices=max_vertices)


def solve_locating_dominating(g, max_vertices=None):
    """Returns a minimum locating-dominating set."""
    return _solve(g, Parameter.LD, max_vertices=max_vertices)


def solve_broadcast_dimension(g, cost_cap=None, max_vertices=None):
    """Returns a minimum cost resolving broadcast.

    Args:
        cost_cap (int): Give up with :class:`InfeasibleError` above this cost.
    """
    return _solve(g, Parameter.BDIM, cost_cap=cost_cap,
                  max_vertices=max_vertices)


_SOLVERS = {
    Parameter.DIM: solve_metric_dimension,
    Parameter.ADIM: solve_adjacency_dimension,
    Parameter.LD: solve_locating_dominating,
    Parameter.BDIM: solve_broadcast_dimension,
}


def solve(g, parameter, naive=False, max_vertices=None):
    """Computes `parameter` of `g` with the branch-and-bound solver, or with
    :func:`naive_solve` when `naive` is set."""
    parameter = Parameter(parameter)
    if naive:
        return naive_solve(g, parameter, max_vertices=max_vertices)
    return _SOLVERS[parameter](g, max_vertices=max_vertices)


def broadcast_exists(g, cost, max_vertices=None):
    """Checks if `g` has a resolving broadcast of cost at most `cost`."""
    if max_vertices is None:
        max_vertices = settings['solver.max_vertices']
    _check_size(g, max_vertices)
    problem = build_problem(g, Parameter.BDIM)
    if not problem.is_feasible():
        return False
    search = _Search(problem)
    found = search.exists(cost)
    logger.debug('broadcast of cost <= {0}: {1} ({2} nodes)'.format(
        cost, found, humanize.intcomma(search.nodes)))
    return found


def _vectors(caps, total):
    """Yields weight vectors bounded by `caps` summing to `total`, in
    ascending lexicographic order."""
    if not caps:
        if total == 0:
            yield ()
        return
    head, tail = caps[0], caps[1:]
    room = sum(tail)
    for w in range(max(0, total - room), min(head, total) + 1):
        for rest in _vectors(tail, total - w):
            yield (w,) + rest


def optimal_broadcasts(g, max_vertices=None):
    """Yields every minimum cost resolving broadcast of `g` in ascending
    lexicographic order.

    Raises:
        SizeLimitError: If `g` has more than ``solver.naive_max_vertices``
            vertices.
    """
    if max_vertices is None:
        max_vertices = settings['solver.naive_max_vertices']
    _check_size(g, max_vertices)
    dm = all_pairs_distances(g)
    value = solve_broadcast_dimension(g).value
    caps = [weight_cap(dm, v) for v in g.vertices()]
    for vector in _vectors(caps, value):
        f = Broadcast(vector)
        if verify_broadcast(g, f, dm=dm).valid:
            yield f


def naive_solve(g, parameter, max_vertices=None):
    """Finds the optimum by trying every certificate in order of cost.

    Certificates are checked with the verifiers in :mod:`certificates`, so
    this is an oracle independent of the covering formulation.
    """
    parameter = Parameter(parameter)
    if max_vertices is None:
        max_vertices = settings['solver.naive_max_vertices']
    _check_size(g, max_vertices)
    dm = all_pairs_distances(g)
    if parameter == Parameter.BDIM:
        caps = [weight_cap(dm, v) for v in g.vertices()]

        def accept(vector):
            return verify_broadcast(g, Broadcast(vector), dm=dm).valid
    else:
        caps = [1] * g.n
        verifier = {
            Parameter.DIM: verify_resolving_set,
            Parameter.ADIM: verify_adjacency_set,
            Parameter.LD: verify_locating_dominating,
        }[parameter]

        def accept(vector):
            members = [v for v, w in enumerate(vector) if w]
            return verifier(g, members, dm=dm).valid
    tried = 0
    for total in range(sum(caps) + 1):
        for vector in _vectors(caps, total):
            tried += 1
            if accept(vector):
                return SolveResult(parameter, total, Broadcast(vector), tried)
    raise exceptions.InfeasibleError(parameter)
