import typing


class QuasitoricError(Exception):
    """Base class for every error raised by the library.

    ``exit_code`` is the process exit status the command-line interface uses
    when the error escapes a command.
    """

    exit_code: typing.ClassVar[int] = 2
    message: str
    body: typing.Any

    def __init__(self, message: str = "", *, body: typing.Any = None):
        super().__init__(message)
        self.message = message
        self.body = body

    def __str__(self) -> str:
        if self.body is None:
            return self.message
        return f"{self.message}: {self.body}"


class InputParseError(QuasitoricError):
    exit_code = 1


class DimensionMismatchError(QuasitoricError):
    pass


class SingularMatrixError(QuasitoricError):
    pass


class NotAFaceError(QuasitoricError):
    pass


class GenericPositionError(QuasitoricError):
    """A point or vector is not in general position; ``body`` names the wall or simplex."""


class RayDegeneracyError(QuasitoricError):
    """Every ray direction of the retry schedule hit a lower-dimensional face."""


class ValidationFailedError(QuasitoricError):
    """Raised when an input does not pass validation; ``body`` is the report."""


class CrossCheckError(QuasitoricError):
    exit_code = 3


class NonHomogeneousError(QuasitoricError):
    pass
