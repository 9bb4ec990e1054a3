"""Exception hierarchy shared by the library and the CLI."""


class RelGraphError(Exception):
    """Base class for all errors raised by relgraph."""


class InputError(RelGraphError, ValueError):
    """Malformed input: bad file, unresolved name, violated precondition."""


class ConsistencyError(RelGraphError, AssertionError):
    """A property guaranteed by the theory failed to hold.

    Raising this always indicates a bug in the library, never bad input.
    """
