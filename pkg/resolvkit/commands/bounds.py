from resolvkit import bounds
from resolvkit import fileio
from resolvkit import logutils
from resolvkit.constants import ExitCode
from resolvkit.exceptions import CliArgumentError


def _format(report):
    row = report.row()
    text = '{0}: {1} <= {0} <= {2}'.format(
        row['parameter'], row['lower'], row['upper'])
    if report.exact is not None:
        text += '; exact {0} {1}'.format(row['exact'], row['status'])
    for key, value in report.details.items():
        text += '; {0} = {1}'.format(key, value)
    return '{0} [{1}]'.format(text, row['sources'])


def main(arguments):
    output = logutils.setup_report_logger('bounds')
    given = [name for name in ('graph', 'grid2', 'grid3')
             if getattr(arguments, name) is not None]
    if len(given) != 1:
        raise CliArgumentError(
            'grid2', 'give exactly one of a graph file, --grid2, --grid3')
    if given[0] != 'graph' and getattr(arguments, given[0]) < 2:
        raise CliArgumentError(given[0], 'grid bounds need N >= 2')
    if arguments.grid2 is not None:
        reports = [bounds.grid2_bounds(arguments.grid2)]
    elif arguments.grid3 is not None:
        reports = [bounds.grid3_bounds(arguments.grid3)]
    else:
        graph = fileio.read_graph(arguments.graph)
        sandwich = bounds.check_sandwich(graph)
        chain = bounds.chain_bounds(graph)
        chain.exact = sandwich.exact
        reports = [chain, sandwich]
    for report in reports:
        output.info(_format(report))
    return ExitCode.OK
