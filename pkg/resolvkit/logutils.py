import logging
import platform
import os
import sys
from threading import Lock

import tqdm


if platform.system() == 'Windows':
    LOGFILE = os.path.join(os.path.expandvars('%LOCALAPPDATA%'),
                           'resolvkit.log')
else:
    LOGFILE = os.path.join(os.path.expanduser('~'), '.resolvkit.log')

_TQDM_LOCK = Lock()
_FILE_HANDLER = None


# https://stackoverflow.com/questions/38543506/
class TqdmLoggingHandler(logging.Handler):
    """Handler redirects logger output to :meth:`tqdm.tqdm.write`."""

    def emit(self, record):
        try:
            msg = self.format(record)
            tqdm.tqdm.set_lock(_TQDM_LOCK)
            tqdm.tqdm.write(msg)
            self.flush()
        except Exception:
            self.handleError(record)


def setup_root_logger(debug=False, logfile=None):
    """Returns root logger writing to `logfile` (default :data:`LOGFILE`).

    A handler installed by an earlier call is replaced.
    """
    global _FILE_HANDLER
    logger = logging.getLogger()
    logger.setLevel(logging.DEBUG if debug else logging.ERROR)
    if _FILE_HANDLER is not None:
        logger.removeHandler(_FILE_HANDLER)
        _FILE_HANDLER.close()
    # Setup handler for writing to log file
    try:
        handler = logging.FileHandler(logfile or LOGFILE, mode='w')
    except OSError:
        handler = logging.NullHandler()
    _FILE_HANDLER = handler
    handler.setLevel(logger.level)
    formater = logging.Formatter(
        fmt="%(levelname)4.4s:%(asctime)s:%(message)s", datefmt="%H:%M:%S")
    handler.setFormatter(formater)
    logger.addHandler(handler)
    return logger


def setup_tqdm_logger(name=None, debug=False):
    """Returns logger that redirects output to :meth:`tqdm.tqdm.write`."""
    logger = logging.getLogger(name)
    logger.setLevel(logging.DEBUG if debug else logging.WARNING)
    if not any(isinstance(h, TqdmLoggingHandler) for h in logger.handlers):
        formatter = logging.Formatter(fmt='%(levelname)s: %(message)s')
        handler = TqdmLoggingHandler()
        handler.setFormatter(formatter)
        logger.addHandler(handler)
    return logger


def setup_report_logger(name):
    """Returns logger printing bare messages to the current standard
    output."""
    logger = logging.getLogger(name)
    logger.setLevel(logging.INFO)
    logger.propagate = False
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    handler = logging.StreamHandler(stream=sys.stdout)
    handler.setFormatter(logging.Formatter('%(message)s'))
    logger.addHandler(handler)
    return logger
