"""Exception hierarchy shared across the toolkit."""


class RealweaveError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidBaseError(RealweaveError):
    """A positional base smaller than 2 was requested."""


class DomainError(RealweaveError):
    """An input value lies outside the operation's documented domain."""


class WitnessViolationError(RealweaveError):
    """An approximation contradicted a caller-supplied separation witness."""


class OracleContractError(RealweaveError):
    """An interval oracle broke nestedness or the width contract."""


class DegreeError(RealweaveError):
    """A polynomial of unsupported degree (even, or empty) was supplied."""


class NotInCantorSetError(RealweaveError):
    """A ternary digit outside {0, 2} was found while decoding."""


class MonotonicityError(RealweaveError):
    """Sample data is inconsistent with the requested monotone direction."""


class NotAFunctionError(RealweaveError):
    """A point set contains duplicate x keys."""


class SizeBoundError(RealweaveError):
    """An exhaustive search was requested beyond its configured size bound."""


class WindowError(RealweaveError):
    """A cylinder window request is malformed (odd length or too deep)."""


class UndeterminedDigitError(RealweaveError):
    """A lazily requested digit failed to commit within its fuel budget."""


class FormatError(RealweaveError):
    """A DREAL, CSV, or code record could not be parsed."""
