import argparse
import importlib
import json
import os
import sys

from ruamel.yaml import YAML
from ruamel.yaml.error import YAMLError

from resolvkit import exceptions
from resolvkit import logutils
from resolvkit import settings
from resolvkit.constants import (ExitCode, Family, Parameter, Theorem,
                                 VerifyMode)


__licence__ = 'MIT'
__version__ = '0.1.0'

DESCRIPTION = '''
Exact resolvability parameters of graphs.

Computes metric dimension, adjacency dimension, locating-dominating number
and broadcast dimension, verifies certificates, generates the studied graph
families and reproduces the tables of bounds.
'''
EPILOG = '''
exit codes:
  0  success, certificate valid
  1  certificate invalid
  2  unreadable file or bad arguments
  3  graph too large for the exact solver
  4  no certificate exists
  5  a proven relation failed to hold
'''

CONSTRUCTIONS = ('grid2', 'grid3', 'kary', 'tree-dp')


class ArgAction(argparse.Action):
    """Stores `(key, value)` pair in a patch for application settings."""

    def __init__(self, *args, **kwargs):
        self.setting_key = kwargs.pop('path', None)
        if not self.setting_key:
            raise ValueError('missing key in setting object')
        self.store_const = kwargs.get('nargs') == 0
        super().__init__(*args, **kwargs)

    def __call__(self, parser, namespace, values, option_string=None):
        patch = getattr(namespace, 'setting_patch', None)
        if patch is None:
            patch = {}
            setattr(namespace, 'setting_patch', patch)
        if self.store_const:
            patch[self.setting_key] = self.const
        else:
            patch[self.setting_key] = values


def positive_int(value):
    try:
        intval = int(value)
        if intval < 0:
            raise ValueError
        return intval
    except (TypeError, ValueError):
        raise argparse.ArgumentTypeError(
            "invalid int value: '{0}'".format(value))


def int_range(value):
    """Parses ``A..B`` (inclusive) or a single integer into a range."""
    try:
        first, sep, last = str(value).partition('..')
        first = positive_int(first)
        last = positive_int(last) if sep else first
    except argparse.ArgumentTypeError:
        raise argparse.ArgumentTypeError(
            "invalid range value: '{0}'".format(value))
    if last < first:
        raise argparse.ArgumentTypeError(
            "empty range: '{0}'".format(value))
    return range(first, last + 1)


def existing_file(value):
    path = os.path.expanduser(os.path.expandvars(value))
    if not os.path.isfile(path):
        raise argparse.ArgumentTypeError(
            "no such file: '{0}'".format(value))
    return path


def read_config_file(fd):
    """
    Args:
        fd (io.TextIOWrapper): Configuration file descriptor.

    Returns:
        dict: Formated content of configuration file.
    """
    try:
        if os.path.splitext(fd.name)[1].lower() == '.json':
            content = json.load(fd)
        else:
            content = YAML(typ='safe').load(fd)
    except YAMLError as error:
        raise exceptions.InvalidConfigurationError(
            fd.name, 'Invalid YAML configuration file') from error
    except json.JSONDecodeError as error:
        raise exceptions.InvalidConfigurationError(
            fd.name, 'Invalid JSON configuraton file') from error
    if not isinstance(content, dict):
        raise exceptions.InvalidConfigurationError(
            fd.name, 'Configuration must be a mapping')
    return content


def get_argparser():
    """
    Returns:
        argparse.ArgumentParser: Command-line argument parser.
    """
    parser = argparse.ArgumentParser(
        prog='rdim', formatter_class=argparse.RawTextHelpFormatter,
        description=DESCRIPTION, epilog=EPILOG)
    parser.add_argument(
        '-V', '--version', action='version',
        version='%(prog)s ({0}) {1}'.format(__licence__, __version__))
    parser.add_argument(
        '--debug', action='store_true', help='Log debug messages')
    parser.add_argument(
        '-c', dest='config', metavar='<PATH>', type=argparse.FileType('r'),
        help='Load settings from JSON or YAML file')
    subparsers = parser.add_subparsers(
        title='Command list', dest='command', metavar='<command>')
    # Add arguments for *compute* command
    compute_cmd = subparsers.add_parser(
        'compute', help='Compute a parameter exactly',
        description='Compute dim, adim, LD or bdim of a graph with the '
        'exact solver and print an optimal certificate.')
    compute_cmd.add_argument(
        'graph', metavar='<graph>', type=existing_file, help='Graph file')
    compute_cmd.add_argument(
        '--param', required=True, choices=[p.value for p in Parameter],
        help='Parameter to compute')
    compute_cmd.add_argument(
        '--out', metavar='<PATH>', help='Write certificate to file')
    compute_cmd.add_argument(
        '--naive', action='store_true',
        help='Use full enumeration instead of branch-and-bound')
    compute_cmd.add_argument(
        '--max-vertices', metavar='N', type=positive_int,
        help='Largest graph order to solve (default: solver.max_vertices, '
        'or solver.naive_max_vertices with --naive)')
    # Add arguments for *verify* command
    verify_cmd = subparsers.add_parser(
        'verify', help='Check a certificate',
        description='Check a broadcast or vertex set against a graph and '
        'list every undifferentiated pair.')
    verify_cmd.add_argument(
        'graph', metavar='<graph>', type=existing_file, help='Graph file')
    verify_cmd.add_argument(
        'certificate', metavar='<certificate>', type=existing_file,
        help='Certificate file')
    verify_cmd.add_argument(
        '--mode', default=VerifyMode.BROADCAST.value,
        choices=[m.value for m in VerifyMode], help='Certificate kind')
    # Add arguments for *generate* command
    generate_cmd = subparsers.add_parser(
        'generate', help='Generate a graph family member',
        description='Write a member of a graph family in the graph file '
        'format.')
    generate_cmd.add_argument(
        '--family', required=True, choices=[f.value for f in Family],
        help='Graph family')
    for flag, text in (('--rows', 'grid rows'), ('--cols', 'grid columns'),
                       ('--k', 'family index or branching factor'),
                       ('--n', 'order, leaves or layers'),
                       ('--m', 'order of the regular base graph'),
                       ('--delta', 'maximum degree')):
        generate_cmd.add_argument(flag, type=positive_int, help=text)
    generate_cmd.add_argument(
        '--oriented', action='store_true',
        help='Use the oriented version of f_k or r_k')
    generate_cmd.add_argument(
        '--out', metavar='<PATH>', help='Write graph to file')
    # Add arguments for *construct* command
    construct_cmd = subparsers.add_parser(
        'construct', help='Build a certificate by construction',
        description='Emit a certificate built by a closed-form construction, '
        'tagged with the recipe used.')
    construct_cmd.add_argument(
        '--kind', required=True, choices=CONSTRUCTIONS,
        help='Construction')
    construct_cmd.add_argument(
        '--n', required=True, type=positive_int,
        help='Grid columns or tree layers')
    construct_cmd.add_argument(
        '--k', type=positive_int, default=2, help='Tree branching factor')
    construct_cmd.add_argument(
        '--out', metavar='<PATH>', help='Write certificate to file')
    # Add arguments for *bounds* command
    bounds_cmd = subparsers.add_parser(
        'bounds', help='Print bounds on adim',
        description='Print closed-form bounds on the adjacency dimension of '
        'a graph file or a grid, checked against the exact solver for '
        'files.')
    bounds_cmd.add_argument(
        'graph', metavar='<graph>', nargs='?', type=existing_file,
        help='Graph file')
    bounds_cmd.add_argument(
        '--grid2', metavar='N', type=positive_int, help='Bounds for P2 x PN')
    bounds_cmd.add_argument(
        '--grid3', metavar='N', type=positive_int, help='Bounds for P3 x PN')
    # Add arguments for *table* command
    table_cmd = subparsers.add_parser(
        'table', help='Reproduce a table of results',
        description='Print one row per parameter value with the closed-form '
        'values, the exact solver values and PASS/FAIL.')
    table_cmd.add_argument(
        '--theorem', required=True, choices=[t.value for t in Theorem],
        help='Result to tabulate')
    table_cmd.add_argument(
        '--n', metavar='A..B', type=int_range, default=range(2, 9),
        help='Range of grid columns or tree layers')
    table_cmd.add_argument(
        '--k', type=positive_int, default=2, help='Tree branching factor')
    table_cmd.add_argument(
        '--trials', metavar='N', type=positive_int, action=ArgAction,
        path='table.trials', help='Number of random graphs')
    table_cmd.add_argument(
        '--max-vertices', metavar='N', type=positive_int, action=ArgAction,
        path='table.max_vertices', help='Largest random graph order')
    table_cmd.add_argument(
        '--seed', type=positive_int, action=ArgAction, path='table.seed',
        help='Seed of random graphs')
    table_cmd.add_argument(
        '--format', choices=('markdown', 'csv'), action=ArgAction,
        path='table.format', help='Output format')
    return parser


def _fail(parser, code, msg):
    sys.stderr.write('{0}: error: {1}\n'.format(parser.prog, msg))
    return code


def main(argv=None):
    # Retrieve command line arguments
    argument_parser = get_argparser()
    arguments = argument_parser.parse_args(argv)
    # Set debug mode
    settings.settings['debug'] = getattr(arguments, 'debug', False)
    # Setup logger
    logger = logutils.setup_root_logger(debug=settings.settings['debug'])
    # Execute command
    command = arguments.command
    if not command:
        argument_parser.error('No command specified')
    config_file = getattr(arguments, 'config', None)
    try:
        # Load configuration file
        if config_file:
            settings.settings.update(read_config_file(config_file))
        # Apply modifications to application settings object
        for key, value in getattr(arguments, 'setting_patch', {}).items():
            settings.settings[key] = value
        cmd = importlib.import_module(
            'resolvkit.commands.{0}'.format(command))
        return int(cmd.main(arguments))
    except ModuleNotFoundError:
        argument_parser.error('Unknown command: {0}'.format(command))
    except exceptions.CliArgumentError as error:
        argument_parser.error("argument {0}{1}: '{2}'".format(
            '-' if len(error.command) == 1 else '--', error.command, error))
    except exceptions.InvalidConfigurationError:
        logger.exception('Invalid configuration')
        argument_parser.error(
            "invalid configuration file: '{0}'".format(config_file.name))
    except OSError as error:
        logger.exception(error.strerror)
        return _fail(argument_parser, ExitCode.PARSE_ERROR,
                     "{0}: '{1}'".format(error.strerror, error.filename))
    except exceptions.GraphFormatError as error:
        logger.exception('Invalid input file')
        return _fail(argument_parser, ExitCode.PARSE_ERROR,
                     "{0}: '{1}'".format(error, error.filename))
    except (exceptions.InvalidGraphError, exceptions.CertificateError) as error:
        logger.exception('Invalid input')
        return _fail(argument_parser, ExitCode.PARSE_ERROR, str(error))
    except exceptions.SizeLimitError as error:
        logger.error(str(error))
        return _fail(argument_parser, ExitCode.SIZE_LIMIT, str(error))
    except exceptions.InfeasibleError as error:
        logger.error(str(error))
        return _fail(argument_parser, ExitCode.INFEASIBLE, str(error))
    except exceptions.InconsistencyError as error:
        logger.exception('Inconsistent result')
        return _fail(argument_parser, ExitCode.INCONSISTENT, str(error))
    except exceptions.AppBaseError:
        logger.exception('Application error')
        argument_parser.error('application error')
    except Exception:
        logger.exception('Unexpected error')
        argument_parser.error('unexpected error')


if __name__ == '__main__':
    sys.exit(main())
