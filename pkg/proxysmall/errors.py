"""Exceptions raised by the algebra engine and the witness pipeline."""


class ProxySmallError(Exception):
    """Base class for every error this package raises on purpose."""


# --- Fields ---

class InvalidField(ProxySmallError):
    pass


class DivisionByZero(ProxySmallError, ZeroDivisionError):
    pass


class FieldMismatch(ProxySmallError):
    pass


# --- Polynomials ---

class PolynomialSyntaxError(ProxySmallError):
    """Malformed polynomial text; ``position`` is the 0-based offset of the problem."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at column {position + 1}: {text!r}")


class UnknownVariable(ProxySmallError):
    def __init__(self, name: str, position: int | None = None):
        self.name = name
        self.position = position
        where = f" at column {position + 1}" if position is not None else ""
        super().__init__(f"unknown variable {name!r}{where}")


class ArityMismatch(ProxySmallError):
    pass


class ZeroPolynomial(ProxySmallError):
    pass


# --- Ideals and linear algebra ---

class NotMPrimary(ProxySmallError):
    pass


class NotArtinian(ProxySmallError):
    pass


class EmptyAfterTrim(ProxySmallError):
    pass


class AmbientMismatch(ProxySmallError):
    pass


# --- Presentations and kernels ---

class PresentationError(ProxySmallError):
    pass


class NotContained(ProxySmallError):
    pass


# --- Witness construction ---

class OrderTooSmall(ProxySmallError):
    pass


class MissingSpanBound(ProxySmallError):
    pass


class SearchExhausted(ProxySmallError):
    """No admissible quotient was found; ``partial`` holds the transcript so far."""

    def __init__(self, message: str, partial=None):
        self.partial = partial
        super().__init__(message)


class NotMonomial(ProxySmallError):
    pass


class SupportsComparable(ProxySmallError):
    def __init__(self, first: str, second: str):
        self.pair = (first, second)
        super().__init__(f"supports of {first} and {second} are comparable")


class DegenerateParameters(ProxySmallError):
    pass


class UnknownExample(ProxySmallError):
    pass


# --- Files ---

class InputFileError(ProxySmallError):
    """Unreadable or malformed ring, complex or certificate file."""

    def __init__(self, message: str, path: str, line: int | None = None, column: int | None = None):
        self.path = path
        self.line = line
        self.column = column
        where = f":{line}:{column}" if line is not None else ""
        super().__init__(f"{path}{where}: {message}")
