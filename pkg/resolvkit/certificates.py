"""Resolving broadcasts, resolving sets and their verifiers."""
import collections
import itertools

from resolvkit import exceptions
from resolvkit.constants import VerifyMode
from resolvkit.graph import (UNREACHABLE, all_pairs_distances,
                             truncated_distance)


class Broadcast:
    """Vertex weighting ``f: V -> {0, 1, 2, ...}``.

    Args:
        weights (iterable): Weight of each vertex in index order.

    Raises:
        CertificateError: If a weight is not a nonnegative integer.
    """

    def __init__(self, weights):
        values = []
        for w in weights:
            if isinstance(w, bool) or not isinstance(w, int) or w < 0:
                raise exceptions.CertificateError(
                    'broadcast weights must be nonnegative integers, '
                    'got {0!r}'.format(w))
            values.append(w)
        self._weights = tuple(values)

    @classmethod
    def from_set(cls, n, vertices):
        """Returns the indicator broadcast of a vertex set."""
        members = set(vertices)
        for v in members:
            if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < n:
                raise exceptions.CertificateError(
                    'vertex {0!r} out of range for order {1}'.format(v, n))
        return cls(1 if v in members else 0 for v in range(n))

    def __getitem__(self, v):
        return self._weights[v]

    def __iter__(self):
        return iter(self._weights)

    def __len__(self):
        return len(self._weights)

    def __eq__(self, other):
        if isinstance(other, Broadcast):
            return self._weights == other._weights
        return NotImplemented

    def __hash__(self):
        return hash(self._weights)

    def __lt__(self, other):
        return self._weights < other._weights

    def __repr__(self):
        return 'Broadcast({0})'.format(list(self._weights))

    @property
    def weights(self):
        return self._weights

    @property
    def support(self):
        """tuple: Vertices with positive weight, ascending."""
        return tuple(v for v, w in enumerate(self._weights) if w > 0)

    @property
    def cost(self):
        return sum(self._weights)

    def is_adjacency(self):
        """Checks if every weight is 0 or 1."""
        return all(w <= 1 for w in self._weights)

    def as_set(self):
        """Returns support as a sorted list."""
        return list(self.support)


class VerificationReport:
    """Outcome of checking a certificate against a graph.

    Attributes:
        valid (bool): Whether the certificate resolves the graph.
        undifferentiated_pairs (list): Pairs ``(x, y)``, ``x < y``, that no
            certificate vertex tells apart, in lexicographic order.
        unseen (frozenset): Vertices reached by no certificate vertex.
        mode (VerifyMode): Kind of certificate checked.
    """

    def __init__(self, mode, undifferentiated_pairs, unseen):
        self.mode = VerifyMode(mode)
        self.undifferentiated_pairs = list(undifferentiated_pairs)
        self.unseen = frozenset(unseen)
        self.valid = not self.undifferentiated_pairs and (
            self.mode != VerifyMode.LOCATING_DOMINATING or not self.unseen)

    def __bool__(self):
        return self.valid

    def __repr__(self):
        return ('VerificationReport(mode={0}, valid={1}, pairs={2}, '
                'unseen={3})').format(self.mode.value, self.valid,
                                      self.undifferentiated_pairs,
                                      sorted(self.unseen))

    def summary(self):
        """Returns one line description of the outcome."""
        status = 'valid' if self.valid else 'invalid'
        parts = ['{0} {1} certificate'.format(status, self.mode.value)]
        if self.undifferentiated_pairs:
            parts.append('{0} undifferentiated pair(s)'.format(
                len(self.undifferentiated_pairs)))
        if self.unseen:
            parts.append('unseen: {0}'.format(
                ', '.join(str(v) for v in sorted(self.unseen))))
        return '; '.join(parts)


def cost(f):
    """Returns total weight of a broadcast."""
    return sum(f)


def resolves(dm, f, z, x, y):
    """Checks if support vertex `z` tells `x` and `y` apart under `f`.

    Raises:
        CertificateError: If ``f(z) == 0`` or ``x == y``.
    """
    if f[z] <= 0:
        raise exceptions.CertificateError(
            'vertex {0} is not in the support of the broadcast'.format(z))
    if x == y:
        raise exceptions.CertificateError('pair must consist of distinct '
                                          'vertices, got ({0}, {0})'.format(x))
    k = f[z]
    return truncated_distance(dm, z, x, k) != truncated_distance(dm, z, y, k)


def _pairs_with_equal_keys(keys, vertices):
    groups = collections.defaultdict(list)
    for v in vertices:
        groups[keys[v]].append(v)
    pairs = []
    for members in groups.values():
        pairs.extend(itertools.combinations(members, 2))
    pairs.sort()
    return pairs


def _check_order(g, length):
    if length != g.n:
        raise exceptions.CertificateError(
            'certificate covers {0} vertices, graph has {1}'.format(
                length, g.n))


def verify_broadcast(g, f, dm=None, mode=VerifyMode.BROADCAST):
    """Checks that `f` is a resolving broadcast of `g`.

    Distances are measured from the broadcasting vertex, so on directed
    graphs the signal follows edge direction.

    Args:
        g (Graph): Graph to resolve.
        f (Broadcast): Candidate broadcast.
        dm (DistanceMatrix): Precomputed distances of `g`.

    Returns:
        VerificationReport: Report listing every undifferentiated pair.
    """
    if not isinstance(f, Broadcast):
        f = Broadcast(f)
    _check_order(g, len(f))
    if dm is None:
        dm = all_pairs_distances(g)
    support = f.support
    profiles = [tuple(truncated_distance(dm, z, v, f[z]) for z in support)
                for v in g.vertices()]
    unseen = [v for v in g.vertices()
              if all(dm[z, v] > f[z] for z in support)]
    pairs = _pairs_with_equal_keys(profiles, g.vertices())
    return VerificationReport(mode, pairs, unseen)


def verify_resolving_set(g, s, dm=None):
    """Checks that every pair of vertices of `g` has distinct exact distances
    from some member of `s`."""
    members = Broadcast.from_set(g.n, s).support
    if dm is None:
        dm = all_pairs_distances(g)
    profiles = [tuple(dm[z, v] for z in members) for v in g.vertices()]
    unseen = [v for v in g.vertices()
              if all(dm[z, v] == UNREACHABLE for z in members)]
    pairs = _pairs_with_equal_keys(profiles, g.vertices())
    return VerificationReport(VerifyMode.RESOLVING_SET, pairs, unseen)


def verify_adjacency_set(g, s, dm=None):
    """Checks that vertex set `s` is an adjacency resolving set of `g`.

    Without `dm` the check reads neighbourhoods directly: a vertex outside
    `s` is identified by the members with an edge into it.
    """
    f = Broadcast.from_set(g.n, s)
    if dm is not None:
        return verify_broadcast(g, f, dm=dm, mode=VerifyMode.ADJACENCY_SET)
    members = set(f.support)
    traces = [('self', v) if v in members
              else frozenset(members.intersection(g.in_neighbors(v)))
              for v in g.vertices()]
    unseen = [v for v in g.vertices() if not traces[v]]
    pairs = _pairs_with_equal_keys(traces, g.vertices())
    return VerificationReport(VerifyMode.ADJACENCY_SET, pairs, unseen)


def verify_locating_dominating(g, c, dm=None):
    """Checks that vertex set `c` is locating-dominating in `g`.

    Every vertex outside `c` must have a nonempty trace ``I(v)`` of members
    within distance 1 of it, and traces must be pairwise distinct. On
    directed graphs ``I(v)`` collects members with an edge into `v`.
    """
    members = set(Broadcast.from_set(g.n, c).support)
    if dm is None:
        dm = all_pairs_distances(g)
    outside = [v for v in g.vertices() if v not in members]
    traces = {v: frozenset(z for z in members if dm[z, v] <= 1)
              for v in outside}
    unseen = [v for v in outside if not traces[v]]
    pairs = _pairs_with_equal_keys(traces, outside)
    return VerificationReport(VerifyMode.LOCATING_DOMINATING, pairs, unseen)


def verify(g, certificate, mode, dm=None):
    """Dispatches to the verifier matching `mode`.

    Args:
        certificate: :class:`Broadcast` for broadcast mode, vertex set
            otherwise (a 0/1 broadcast is accepted and turned into its
            support).
    """
    mode = VerifyMode(mode)
    if mode == VerifyMode.BROADCAST:
        return verify_broadcast(g, certificate, dm=dm)
    if isinstance(certificate, Broadcast):
        _check_order(g, len(certificate))
        if not certificate.is_adjacency():
            raise exceptions.CertificateError(
                '{0} mode expects a vertex set or 0/1 weights'.format(
                    mode.value))
        certificate = certificate.support
    if mode == VerifyMode.RESOLVING_SET:
        return verify_resolving_set(g, certificate, dm=dm)
    if mode == VerifyMode.ADJACENCY_SET:
        return verify_adjacency_set(g, certificate, dm=dm)
    return verify_locating_dominating(g, certificate, dm=dm)
