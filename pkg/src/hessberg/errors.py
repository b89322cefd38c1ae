"""Exception hierarchy shared by every module.

The command-line front end maps each class to a fixed exit status.
"""


class HessbergError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class InputError(HessbergError, ValueError):
    """Malformed or inadmissible user input."""

    exit_code = 2


class ResourceError(HessbergError):
    """A configured enumeration or linear-algebra bound was exceeded."""

    exit_code = 3


class InternalError(HessbergError):
    """An internal cross-check failed (two formulas disagree, a guaranteed
    object could not be constructed, ...). Always indicates a bug."""

    exit_code = 4


class UnsupportedError(InputError):
    """The requested computation is only implemented for some Lie types."""
