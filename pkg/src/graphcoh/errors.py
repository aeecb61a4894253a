"""Shared exception types."""


class InputError(ValueError):
    """Bad user-supplied input (files, names, flags). Maps to CLI exit code 2."""


class ResourceCapError(InputError):
    """A computation was refused because it would exceed a configured cap."""
