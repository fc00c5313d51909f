from resolvkit import certificates
from resolvkit import fileio
from resolvkit import logutils
from resolvkit.constants import ExitCode


def main(arguments):
    output = logutils.setup_report_logger('verify')
    graph = fileio.read_graph(arguments.graph)
    certificate = fileio.read_certificate(arguments.certificate, n=graph.n)
    report = certificates.verify(graph, certificate, arguments.mode)
    output.info(report.summary())
    for x, y in report.undifferentiated_pairs:
        output.info('  undifferentiated: {0} {1}'.format(x, y))
    return ExitCode.OK if report.valid else ExitCode.INVALID
