import logging

from resolvkit import constructions
from resolvkit import fileio
from resolvkit.certificates import Broadcast
from resolvkit.constants import ExitCode
from resolvkit.exceptions import CliArgumentError
from resolvkit.families import kary_tree_order, make_kary_out_tree


logger = logging.getLogger(__name__)


def _grid(arguments, rows):
    if arguments.n < 2:
        raise CliArgumentError('n', 'grid constructions need n >= 2')
    if rows == 2:
        recipe = constructions.grid2_recipe(arguments.n)
        members = constructions.grid2_certificate(arguments.n)
    else:
        recipe = constructions.grid3_recipe(arguments.n)
        members = constructions.grid3_certificate(arguments.n)
    return rows * arguments.n, members, ' '.join(recipe)


def _tree(arguments, dynamic):
    if arguments.k < 2 or arguments.n < 1:
        raise CliArgumentError('k', 'tree constructions need k >= 2, n >= 1')
    order = kary_tree_order(arguments.k, arguments.n)
    if dynamic:
        tree = make_kary_out_tree(arguments.k, arguments.n)
        return order, constructions.out_tree_certificate(tree), 'tree-dp'
    members = constructions.kary_tree_certificate(arguments.k, arguments.n)
    return order, members, 'layer-parity'


def main(arguments):
    kind = arguments.kind
    if kind in ('grid2', 'grid3'):
        order, members, recipe = _grid(arguments, 2 if kind == 'grid2' else 3)
    else:
        order, members, recipe = _tree(arguments, kind == 'tree-dp')
    logger.info('{0} n={1}: {2} vertices by {3}'.format(
        kind, arguments.n, len(members), recipe))
    fileio.write_certificate(
        Broadcast.from_set(order, members), arguments.out, as_set=True,
        construction=kind, recipe=recipe, value=len(members))
    return ExitCode.OK
