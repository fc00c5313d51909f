import os


class AppBaseError(Exception):
    """Base application error."""


class CliArgumentError(AppBaseError):
    """Raised when user provides invalid value for command-line argument."""

    def __init__(self, cmd, msg):
        super().__init__(msg)
        self.command = cmd


class InvalidConfigurationError(AppBaseError):
    """Raised when reading invalid or corrupted configuration file."""

    def __init__(self, filename, msg):
        super().__init__(msg)
        self.filename = filename


class GraphFormatError(AppBaseError, ValueError):
    """Raised when a graph or certificate file cann't be parsed."""

    def __init__(self, filename, msg):
        super().__init__(msg)
        self.filename = os.fsdecode(filename) if filename else None


class InvalidGraphError(AppBaseError, ValueError):
    """Raised when a graph or family parameters break structural rules."""


class CertificateError(AppBaseError, ValueError):
    """Raised on malformed or misused broadcasts and vertex sets."""


class SizeLimitError(AppBaseError):
    """Raised when an exact search is requested on a too large graph."""

    def __init__(self, order, limit):
        super().__init__(
            'graph order {0} exceeds solver limit {1}'.format(order, limit))
        self.order = order
        self.limit = limit


class InfeasibleError(AppBaseError):
    """Raised when no certificate of any cost exists."""

    def __init__(self, parameter, msg=None):
        super().__init__(msg or 'no certificate exists for {0}'.format(
            parameter))
        self.parameter = parameter


class InconsistencyError(AppBaseError):
    """Raised when a relation that must hold is found violated."""
