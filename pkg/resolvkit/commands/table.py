import csv
import io

import tqdm

from resolvkit import bounds
from resolvkit import constructions
from resolvkit import families
from resolvkit import logutils
from resolvkit import solver
from resolvkit.certificates import verify_adjacency_set
from resolvkit.constants import ExitCode, Theorem
from resolvkit.exceptions import (CliArgumentError, InconsistencyError,
                                  SizeLimitError)
from resolvkit.graph import max_degree
from resolvkit.settings import settings


logger = logutils.setup_tqdm_logger(__name__, settings.get('debug'))

BAR_FMT = '{l_bar}{bar}| {n_fmt}/{total_fmt}  '


def _progress(iterable, desc):
    return tqdm.tqdm(iterable, desc=desc, bar_format=BAR_FMT, leave=False)


def _check_limit(order):
    limit = settings['solver.max_vertices']
    if order > limit:
        raise SizeLimitError(order, limit)


def grid_rows(rows, columns):
    """Exact adim and LD of ``P_rows x P_n`` against the closed-form bounds
    and the block construction."""
    if columns.start < 2:
        raise CliArgumentError('n', 'grid tables need n >= 2')
    _check_limit(rows * columns[-1])
    if rows == 2:
        bracket, ld_lower = bounds.grid2_bounds, bounds.grid2_ld_lower
        certificate = constructions.grid2_certificate
    else:
        bracket, ld_lower = bounds.grid3_bounds, bounds.grid3_ld_lower
        certificate = constructions.grid3_certificate
    table = []
    for n in _progress(columns, 'P{0} x Pn'.format(rows)):
        grid, _ = families.make_grid(rows, n)
        report = bracket(n)
        report.exact = solver.solve_adjacency_dimension(grid).value
        ld = solver.solve_locating_dominating(grid).value
        members = certificate(n)
        built = (len(members) == report.upper
                 and verify_adjacency_set(grid, members).valid)
        passed = report.consistent and ld >= ld_lower(n) and built
        logger.debug('n={0}: adim={1} ld={2}'.format(n, report.exact, ld))
        table.append({
            'n': n, 'lower': report.lower, 'upper': report.upper,
            'adim': report.exact, 'ld_lower': ld_lower(n), 'ld': ld,
            'construction': 'ok' if built else 'invalid',
            'status': 'PASS' if passed else 'FAIL',
        })
    return table


def layers_rows(k, layers):
    """Closed formula against the exact adim of complete out-directed
    `k`-ary trees."""
    if k < 2 or layers.start < 1:
        raise CliArgumentError('k', 'layer tables need k >= 2 and n >= 1')
    limit = settings['solver.max_vertices']
    table = []
    for n in _progress(layers, 'Layers'):
        tree = families.make_kary_out_tree(k, n)
        formula = constructions.kary_adim_formula(k, n)
        exact = constructions.out_tree_adim(tree)
        solved = ''
        if tree.n <= limit:
            solved = solver.solve_adjacency_dimension(tree).value
            if solved != exact:
                raise InconsistencyError(
                    'tree program gives {0}, solver {1} for k={2} n={3}'
                    .format(exact, solved, k, n))
        parity = constructions.kary_tree_certificate(k, n)
        table.append({
            'k': k, 'n': n, 'order': tree.n, 'formula': formula,
            'exact': exact, 'solver': solved,
            'parity_set': ('valid' if verify_adjacency_set(tree, parity).valid
                           else 'invalid'),
            'status': 'PASS' if formula == exact else 'MISMATCH',
        })
    return table


def allthesame_rows(trials, max_vertices, seed):
    """Exact adim against exact bdim on seeded random out-trees, with the
    0/1 rewrite of an optimal broadcast.

    The rewritten broadcast has a weight above 1 whenever the tree is small
    enough to list its optimal broadcasts and one of them has such a weight.
    """
    _check_limit(max_vertices)
    trees = families.random_out_trees(trials, max_vertices, seed)
    table = []
    for index, tree in enumerate(_progress(trees, 'Out-trees')):
        adim = solver.solve_adjacency_dimension(tree).value
        best = solver.solve_broadcast_dimension(tree)
        source = best.witness
        if tree.n <= settings['solver.naive_max_vertices']:
            source = next((f for f in solver.optimal_broadcasts(tree)
                           if not f.is_adjacency()), source)
        rewritten = constructions.tree_broadcast_to_adjacency(tree, source)
        passed = (adim == best.value and rewritten.is_adjacency()
                  and rewritten.cost <= source.cost)
        table.append({
            'trial': index, 'n': tree.n, 'adim': adim, 'bdim': best.value,
            'max_weight': max(source), 'rewritten': rewritten.cost,
            'status': 'PASS' if passed else 'FAIL',
        })
    return table


def maxdegree_rows(trials, max_vertices, seed):
    """Degree lower bound against exact adim on the tight family member and
    seeded random graphs."""
    _check_limit(max_vertices)
    graphs = [('tight(4,3)', families.make_maxdeg_tight(4, 3))]
    graphs.extend(('random{0}'.format(i), g) for i, g in enumerate(
        families.random_corpus(trials, max_vertices, seed)))
    table = []
    for name, graph in _progress(graphs, 'Graphs'):
        delta = max_degree(graph)
        lower = bounds.maxdeg_lower(graph.n, delta) if graph.n else 0
        adim = solver.solve_adjacency_dimension(graph).value
        table.append({
            'graph': name, 'n': graph.n, 'delta': delta, 'lower': lower,
            'adim': adim,
            'status': ('FAIL' if adim < lower
                       else 'TIGHT' if adim == lower else 'PASS'),
        })
    return table


def render(table, fmt):
    """Returns table as markdown or CSV text."""
    if not table:
        return ''
    columns = list(table[0])
    if fmt == 'csv':
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=columns,
                                lineterminator='\n')
        writer.writeheader()
        writer.writerows(table)
        return buffer.getvalue().rstrip('\n')
    lines = ['| {0} |'.format(' | '.join(columns)),
             '|{0}|'.format('|'.join(' --- ' for _ in columns))]
    for row in table:
        lines.append('| {0} |'.format(
            ' | '.join(str(row[column]) for column in columns)))
    return '\n'.join(lines)


def main(arguments):
    output = logutils.setup_report_logger('table')
    theorem = Theorem(arguments.theorem)
    trials = settings['table.trials']
    max_vertices = settings['table.max_vertices']
    seed = settings['table.seed']
    if theorem == Theorem.GRID2:
        table = grid_rows(2, arguments.n)
    elif theorem == Theorem.GRID3:
        table = grid_rows(3, arguments.n)
    elif theorem == Theorem.LAYERS:
        table = layers_rows(arguments.k, arguments.n)
    elif theorem == Theorem.ALLTHESAME:
        table = allthesame_rows(trials, max_vertices, seed)
    else:
        table = maxdegree_rows(trials, max_vertices, seed)
    output.info(render(table, settings['table.format']))
    return ExitCode.OK
