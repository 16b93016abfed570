"""Exception hierarchy shared by the library and the command line front end."""


class IncalgError(Exception):
    """Base class for all errors raised by incalg."""


class InputError(IncalgError, ValueError):
    """Malformed or inconsistent input (unknown labels, ring mismatch, bad files)."""


class HypothesisError(InputError):
    """An operation was called outside the hypotheses it requires."""


class InvariantViolation(IncalgError, AssertionError):
    """An internal consistency check failed; indicates a bug."""
