"""Exception hierarchy shared across seqcert."""


class SeqCertError(Exception):
    """Base class for all seqcert errors."""


class DivisionByZeroFunction(SeqCertError, ZeroDivisionError):
    """Division by the identically zero rational function."""


class PoleError(SeqCertError, ZeroDivisionError):
    """A rational function was evaluated where its denominator vanishes."""

    def __init__(self, point):
        super().__init__(f"denominator vanishes at n = {point}")
        self.point = point


class PoleOnRay(SeqCertError):
    """A denominator vanishes at an integer on the ray under consideration."""

    def __init__(self, index: int, what: str = "denominator"):
        super().__init__(f"{what} vanishes at integer n = {index} on the ray")
        self.index = index


class DegreeLimitExceeded(SeqCertError):
    """A symbolic result exceeded the SEQCERT_MAX_DEGREE safety valve."""


class ExpressionSyntaxError(SeqCertError, ValueError):
    """Malformed expression in the rational-function grammar."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at column {pos + 1}: {text!r}")
        self.text = text
        self.pos = pos


class LeadingCoefficientZero(SeqCertError):
    """The leading recurrence coefficient p2 vanishes at an index in range."""

    def __init__(self, index: int):
        super().__init__(f"leading coefficient p2 vanishes at n = {index}")
        self.index = index


class TooFewTerms(SeqCertError, ValueError):
    pass


class NonPositiveTerm(SeqCertError, ValueError):
    def __init__(self, index: int, value):
        super().__init__(f"term at index {index} is not positive: {value}")
        self.index = index
        self.value = value


class CertificationError(SeqCertError):
    """Raised when a certification step cannot be completed."""


class BaseCaseFails(CertificationError):
    def __init__(self, index: int, ratio, bound_value, direction: str):
        rel = ">" if direction == "lower" else "<="
        super().__init__(
            f"base case fails at n = {index}: ratio {ratio} is not {rel} bound {bound_value}"
        )
        self.index = index
        self.ratio = ratio
        self.bound_value = bound_value


class StepSignUnknown(CertificationError):
    pass


class WrongCoefficientSign(CertificationError):
    pass


class PrefixTooShort(CertificationError, ValueError):
    def __init__(self, needed: int, given: int):
        super().__init__(f"prefix check must reach n = {needed}; got prefix up to {given}")
        self.needed = needed
        self.given = given


class SpecSyntaxError(SeqCertError, ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class UnknownKey(SpecSyntaxError):
    pass


class BoundNotPositive(CertificationError):
    pass
