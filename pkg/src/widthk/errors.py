"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """A word, width, width set, or pattern argument is malformed."""


class EnumerationCapError(RuntimeError):
    """An enumeration was requested beyond the configured size cap."""
