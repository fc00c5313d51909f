import enum


class Parameter(str, enum.Enum):
    """Enumeration of resolvability parameters computed by the application."""
    DIM = 'dim'
    ADIM = 'adim'
    LD = 'ld'
    BDIM = 'bdim'


class VerifyMode(str, enum.Enum):
    """Enumeration of certificate kinds checked by the verifiers."""
    BROADCAST = 'broadcast'
    RESOLVING_SET = 'resolving'
    ADJACENCY_SET = 'adjacency'
    LOCATING_DOMINATING = 'ld'


class Family(str, enum.Enum):
    """Enumeration of graph families known to the generators."""

    PATH = 'path'
    CYCLE = 'cycle'
    COMPLETE = 'complete'
    STAR = 'star'
    GRID = 'grid'
    F_K = 'f_k'
    F_K_ORIENTED = 'f_k_oriented'
    R_K = 'r_k'
    R_K_ORIENTED = 'r_k_oriented'
    KARY_TREE_OUT = 'kary_tree_out'
    MAXDEG_TIGHT = 'maxdeg_tight'


class Theorem(str, enum.Enum):
    """Enumeration of result tables reproduced by the ``table`` command."""
    GRID2 = '2block'
    GRID3 = '3block'
    LAYERS = 'layers'
    ALLTHESAME = 'allthesame'
    MAXDEGREE = 'maxdegree'


class ExitCode(enum.IntEnum):
    """Process exit statuses of the command-line tool."""

    OK = 0                # Success, certificate valid
    INVALID = 1           # Certificate checked and found invalid
    PARSE_ERROR = 2       # Unreadable file or bad arguments
    SIZE_LIMIT = 3        # Instance beyond the solver guardrail
    INFEASIBLE = 4        # No certificate exists
    INCONSISTENT = 5      # A proven relation failed to hold
