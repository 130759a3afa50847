"""Exception types shared across the package."""


class InputValidationError(ValueError):
    """Raised when user-supplied data or configuration violates a contract.

    The message always names the offending cell, flag, or dimension so the
    CLI can surface it verbatim (exit code 2).
    """


class NumericError(RuntimeError):
    """Raised when a dense decomposition cannot be carried out.

    Covers non-finite input reaching a factorization and genuinely singular
    systems where a unique answer is required (exit code 1 in the CLI).
    """


class GraphDisconnectedError(RuntimeError):
    """Raised when a neighborhood graph has more than one connected component.

    ``components`` holds the node index sets of every component so callers
    can report them or retry with a larger neighborhood (exit code 3).
    """

    def __init__(self, message, components):
        super().__init__(message)
        self.components = components
