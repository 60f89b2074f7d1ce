"""Exception hierarchy shared by the library and the CLI.

The CLI maps :class:`UsageError` to exit code 2 and :class:`PreconditionError`
to exit code 3; everything else is a bug.
"""


class SubdubError(Exception):
    pass


class UsageError(SubdubError, ValueError):
    """Bad argument: out-of-range id, malformed family spec, mismatched lengths."""


class PreconditionError(SubdubError, ValueError):
    """Input graph violates a structural precondition (regularity, parity, ...)."""


class UnsupportedInputError(PreconditionError):
    """Input lies outside the supported class (e.g. loops where none are allowed)."""


class NoTourError(PreconditionError):
    pass


class ReconstructionError(SubdubError):
    """A cycle could not be traced back to the object it supposedly came from."""
