"""Custom exceptions for prime heuristics computations."""


class HeuristicsError(Exception):
    """Base exception for all prime-heuristics errors."""

    pass


class ConfigurationError(HeuristicsError):
    """Raised when a limit or run configuration is out of range."""

    pass


class ParseError(HeuristicsError):
    """Raised when a tuple, polynomial or integer spec cannot be parsed."""

    pass


class ValidationError(HeuristicsError, ValueError):
    """Raised when a domain type is constructed with invalid fields."""

    pass


class DomainError(HeuristicsError, ValueError):
    """Raised when an argument lies outside the mathematical domain."""

    pass


class SieveRangeError(HeuristicsError, IndexError):
    """Raised when a query or computation needs primes beyond the sieve."""

    pass


class PolynomialOverflowError(HeuristicsError, ArithmeticError):
    """Raised when a polynomial value exceeds the evaluation ceiling."""

    pass
