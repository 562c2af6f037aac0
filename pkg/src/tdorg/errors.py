"""Exception hierarchy shared by all tdorg modules."""


class TdorgError(Exception):
    """Base class for all tdorg-specific errors."""


class ParseError(TdorgError):
    """Malformed graph or representation file.  Carries a line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class GuardExceededError(TdorgError):
    """An input is larger than the documented size guard of an operation."""


class TwinsPresentError(TdorgError):
    """A twin-free precondition failed.  Carries one offending twin pair."""

    def __init__(self, twin_pair):
        a, b = twin_pair
        super().__init__(f"graph contains twins {a} and {b}")
        self.twin_pair = twin_pair


class NotComparabilityError(TdorgError):
    """The independence graph admits no transitive orientation."""


class InvertiblePairError(TdorgError):
    """The graph is not a two-directional orthogonal ray graph.

    Carries the witnessing invertible pair.
    """

    def __init__(self, witness):
        a, b = witness
        super().__init__(f"invertible pair: ({a}, {b})")
        self.witness = witness


class PreconditionError(TdorgError):
    """A documented operation precondition does not hold."""


class InternalConsistencyError(TdorgError):
    """A theorem-backed internal check failed.

    Raised when a verification step that must succeed on valid input fails,
    which signals either a non-conforming input slipping past a precondition
    or a bug.
    """
