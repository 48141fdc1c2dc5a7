class ArtinToolkitError(Exception):
    """Base class for every error raised by the toolkit."""


class GraphError(ArtinToolkitError, ValueError):
    """Malformed Coxeter/curve graph, or a graph outside an operation's scope."""


class WordError(ArtinToolkitError, ValueError):
    """Bad positive word: letters out of range, mixed graphs, bad literal."""


class PreconditionError(ArtinToolkitError, ValueError):
    """An operation was called with arguments violating its precondition."""


class MatrixOverflowError(ArtinToolkitError, ArithmeticError):
    """Integer matrix product would leave the machine-integer range."""


class ConfigError(ArtinToolkitError, ValueError):
    pass
