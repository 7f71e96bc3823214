"""Exception types shared across the toolkit."""


class BergeError(Exception):
    """Base class for toolkit errors."""


class InvalidArguments(BergeError, ValueError):
    """Arguments outside an operation's domain."""


class FormatError(BergeError, ValueError):
    """Malformed .hg / .col / .cert text."""


class PreconditionViolated(BergeError):
    """The shadow threshold required by a lift fails for some core pair.

    ``pair`` names the first offending vertex pair.
    """

    def __init__(self, message: str, pair: tuple[int, int] | None = None):
        super().__init__(message)
        self.pair = pair


class ScaleExceeded(BergeError):
    """The instance is too large for the exhaustive kernel."""


class NotFoundWithinBound(BergeError):
    """No arrowing vertex count was found up to the requested bound."""
