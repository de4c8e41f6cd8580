"""Shared exception types."""


class GuardError(Exception):
    """An argument is outside the documented size guard for an operation.

    The guards exist so that exhaustive enumerations stay at desk scale;
    callers that want bigger runs must go through the underlying algorithms
    deliberately, not by accident.
    """


class InvalidWordError(ValueError):
    """A letter string is not a valid word, or an operation left the language."""
