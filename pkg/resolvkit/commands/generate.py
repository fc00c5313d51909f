import logging

from resolvkit import fileio
from resolvkit.constants import ExitCode, Family
from resolvkit.families import FamilySpec


logger = logging.getLogger(__name__)

_ORIENTED = {
    Family.F_K: Family.F_K_ORIENTED,
    Family.R_K: Family.R_K_ORIENTED,
}


def main(arguments):
    family = Family(arguments.family)
    if arguments.oriented:
        family = _ORIENTED.get(family, family)
    spec = FamilySpec(family, n=arguments.n, m=arguments.m, k=arguments.k,
                      delta=arguments.delta, rows=arguments.rows,
                      cols=arguments.cols)
    graph = spec.build()
    logger.info('generated {0}: {1!r}'.format(spec, graph))
    fileio.write_graph(graph, arguments.out, family=spec.as_dict())
    return ExitCode.OK
