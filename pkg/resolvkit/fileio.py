"""Reading and writing graph and certificate files.

A graph file is a YAML (or JSON) mapping with keys ``n``, ``directed`` and
``edges``; a certificate file holds ``weights`` (one integer per vertex) or
``set`` (list of vertex indices). Other keys are kept as provenance and
ignored on read.
"""
import json
import os
import sys

from ruamel.yaml import YAML
from ruamel.yaml.error import YAMLError

from resolvkit import exceptions
from resolvkit.certificates import Broadcast
from resolvkit.graph import Graph


def _yaml():
    yaml = YAML(typ='safe')
    yaml.default_flow_style = None
    return yaml


def _is_json(path):
    return os.path.splitext(os.fspath(path))[1].lower() == '.json'


def load_document(stream):
    """Parses an open YAML or JSON file.

    Raises:
        GraphFormatError: If the content cann't be parsed.
    """
    name = getattr(stream, 'name', None)
    try:
        if name and _is_json(name):
            return json.load(stream)
        return _yaml().load(stream)
    except YAMLError as error:
        raise exceptions.GraphFormatError(
            name, 'invalid YAML document') from error
    except json.JSONDecodeError as error:
        raise exceptions.GraphFormatError(
            name, 'invalid JSON document') from error


def _load(path):
    with open(path, encoding='utf-8') as stream:
        return load_document(stream)


def dump_document(document, path=None):
    """Writes a mapping as YAML (JSON for ``.json`` paths); standard output
    when `path` is None or ``-``."""
    if path is None or os.fspath(path) == '-':
        _yaml().dump(document, sys.stdout)
        return
    with open(path, 'w', encoding='utf-8') as stream:
        if _is_json(path):
            json.dump(document, stream)
            stream.write('\n')
        else:
            _yaml().dump(document, stream)


def _mapping(document, filename, keys):
    if not isinstance(document, dict):
        raise exceptions.GraphFormatError(
            filename, 'expected a mapping at the top level')
    if not any(key in document for key in keys):
        raise exceptions.GraphFormatError(
            filename, 'missing key: {0}'.format(' or '.join(keys)))
    return document


def graph_from_document(document, filename=None):
    document = _mapping(document, filename, ('n',))
    n = document['n']
    directed = document.get('directed', False)
    edges = document.get('edges') or []
    if isinstance(n, bool) or not isinstance(n, int):
        raise exceptions.GraphFormatError(filename, 'n must be an integer')
    if not isinstance(directed, bool):
        raise exceptions.GraphFormatError(filename,
                                          'directed must be a boolean')
    if not isinstance(edges, list) or not all(
            isinstance(e, list) and len(e) == 2 for e in edges):
        raise exceptions.GraphFormatError(
            filename, 'edges must be a list of [u, v] pairs')
    try:
        return Graph(n, edges, directed=directed)
    except exceptions.InvalidGraphError as error:
        raise exceptions.GraphFormatError(filename, str(error)) from error


def graph_to_document(g, **provenance):
    document = dict(n=g.n, directed=g.directed, edges=g.edge_list())
    document.update((k, v) for k, v in provenance.items() if v is not None)
    return document


def read_graph(path):
    """Returns :class:`Graph` stored in file `path`."""
    return graph_from_document(_load(path), os.fspath(path))


def write_graph(g, path=None, **provenance):
    dump_document(graph_to_document(g, **provenance), path)


def certificate_from_document(document, n=None, filename=None):
    """Returns :class:`Broadcast` described by `document`.

    Args:
        n (int): Graph order the certificate must match.
    """
    document = _mapping(document, filename, ('weights', 'set'))
    try:
        if 'weights' in document:
            weights = document['weights']
            if not isinstance(weights, list):
                raise exceptions.CertificateError('weights must be a list')
            f = Broadcast(weights)
        else:
            members = document['set']
            if not isinstance(members, list):
                raise exceptions.CertificateError('set must be a list')
            if n is None:
                n = max(members, default=-1) + 1
            f = Broadcast.from_set(n, members)
    except exceptions.CertificateError as error:
        raise exceptions.GraphFormatError(filename, str(error)) from error
    if n is not None and len(f) != n:
        raise exceptions.GraphFormatError(
            filename, 'certificate has {0} weights, graph has {1} '
            'vertices'.format(len(f), n))
    return f


def certificate_to_document(f, as_set=False, **provenance):
    if as_set:
        document = {'set': f.as_set()}
    else:
        document = {'weights': list(f)}
    document.update((k, v) for k, v in provenance.items() if v is not None)
    return document


def read_certificate(path, n=None):
    """Returns :class:`Broadcast` stored in file `path`."""
    return certificate_from_document(_load(path), n, os.fspath(path))


def write_certificate(f, path=None, as_set=False, **provenance):
    dump_document(certificate_to_document(f, as_set, **provenance), path)
