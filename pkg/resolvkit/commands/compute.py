import humanize

from resolvkit import fileio
from resolvkit import logutils
from resolvkit import solver
from resolvkit.constants import ExitCode, Parameter


def main(arguments):
    output = logutils.setup_report_logger('compute')
    graph = fileio.read_graph(arguments.graph)
    parameter = Parameter(arguments.param)
    result = solver.solve(graph, parameter, naive=arguments.naive,
                          max_vertices=arguments.max_vertices)
    output.info('{0} = {1}'.format(parameter.value, result.value))
    if parameter == Parameter.BDIM:
        output.info('weights: {0}'.format(list(result.witness)))
    else:
        output.info('set: {0}'.format(result.vertices))
    output.info('nodes explored: {0}'.format(
        humanize.intcomma(result.nodes_explored)))
    if arguments.out:
        fileio.write_certificate(
            result.witness, arguments.out,
            as_set=parameter != Parameter.BDIM,
            parameter=parameter.value, value=result.value)
    return ExitCode.OK
