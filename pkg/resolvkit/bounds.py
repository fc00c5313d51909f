"""Closed-form bounds on the adjacency dimension and a sandwich check
against the exact solver. All arithmetic is on integers."""
import logging

from resolvkit import exceptions
from resolvkit.constants import Parameter
from resolvkit.graph import max_degree
from resolvkit.solver import (solve_adjacency_dimension,
                              solve_broadcast_dimension,
                              solve_locating_dominating)


logger = logging.getLogger(__name__)


def ceil_div(a, b):
    return -(-a // b)


class BoundReport:
    """Bracket ``[lower, upper]`` on a parameter, optionally with its exact
    value.

    Attributes:
        parameter (Parameter): Bounded parameter.
        lower (int): Lower bound.
        upper (int): Upper bound.
        exact (int): Exact value if computed.
        sources (list): Names of the results the bounds come from.
        details (dict): Further computed values, e.g. ``ld`` and ``bdim``.
    """

    def __init__(self, parameter, lower, upper, exact=None, sources=(),
                 details=None):
        self.parameter = Parameter(parameter)
        self.lower = lower
        self.upper = upper
        self.exact = exact
        self.sources = list(sources)
        self.details = dict(details or {})

    def __repr__(self):
        return 'BoundReport({0}: {1} <= {2} <= {3})'.format(
            self.parameter.value, self.lower,
            '?' if self.exact is None else self.exact, self.upper)

    def contains(self, value):
        return self.lower <= value <= self.upper

    @property
    def consistent(self):
        """bool: Exact value, when known, lies inside the bracket."""
        return self.exact is None or self.contains(self.exact)

    def row(self):
        """Returns dictionary of printable fields."""
        row = {
            'parameter': self.parameter.value,
            'lower': self.lower,
            'upper': self.upper,
            'exact': '' if self.exact is None else self.exact,
            'status': ('' if self.exact is None
                       else 'PASS' if self.consistent else 'FAIL'),
            'sources': ','.join(self.sources),
        }
        row.update(self.details)
        return row


def maxdeg_lower(n, delta):
    """Returns ``ceil(2(n - 1) / (delta + 3))``."""
    if n < 1 or delta < 0:
        raise ValueError('order must be positive and degree nonnegative')
    return ceil_div(2 * (n - 1), delta + 3)


def grid2_ld_lower(n):
    """Returns ``ceil((3n - 1) / 4)``, a lower bound on LD of
    ``P_2 x P_n``."""
    return ceil_div(3 * n - 1, 4)


def grid3_ld_lower(n):
    """Returns ``n + 1`` if ``n = 1 mod 3``, else ``n``; a lower bound on LD
    of ``P_3 x P_n``."""
    return n + 1 if n % 3 == 1 else n


def grid2_bounds(n):
    if n < 2:
        raise ValueError('grid bounds need n >= 2, got {0}'.format(n))
    upper = grid2_ld_lower(n)
    return BoundReport(Parameter.ADIM, upper - 1, upper, sources=['2block'])


def grid3_bounds(n):
    if n < 2:
        raise ValueError('grid bounds need n >= 2, got {0}'.format(n))
    upper = grid3_ld_lower(n)
    return BoundReport(Parameter.ADIM, upper - 1, upper, sources=['3block'])


def chain_bounds(g):
    """Returns ``maxdeg_lower <= adim <= n`` (the degree bound only for
    undirected graphs)."""
    sources = ['chain']
    lower = 0
    if not g.directed and g.n:
        lower = maxdeg_lower(g.n, max_degree(g))
        sources.append('maxdegree')
    return BoundReport(Parameter.ADIM, lower, g.n, sources=sources)


def check_sandwich(g, max_vertices=None):
    """Computes LD, adim and bdim of `g` exactly and checks
    ``LD - 1 <= adim <= LD`` (undirected graphs) and ``bdim <= adim``.

    Raises:
        InconsistencyError: If a relation fails.
        SizeLimitError: If `g` is too large for the solvers.
    """
    adim = solve_adjacency_dimension(g, max_vertices=max_vertices).value
    bdim = solve_broadcast_dimension(g, max_vertices=max_vertices).value
    ld = solve_locating_dominating(g, max_vertices=max_vertices).value
    report = BoundReport(Parameter.ADIM, ld - 1, ld, exact=adim,
                         sources=['boundprop'],
                         details={'ld': ld, 'bdim': bdim})
    logger.debug('sandwich: ld={0} adim={1} bdim={2}'.format(ld, adim, bdim))
    if not g.directed and not report.consistent:
        raise exceptions.InconsistencyError(
            'adim {0} outside [LD - 1, LD] = [{1}, {2}]'.format(
                adim, ld - 1, ld))
    if bdim > adim or adim > g.n:
        raise exceptions.InconsistencyError(
            'chain bdim {0} <= adim {1} <= n {2} fails'.format(
                bdim, adim, g.n))
    return report
