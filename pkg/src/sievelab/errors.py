"""Exception and warning types shared across the package."""


class SieveLabError(Exception):
    """Base class for all package-specific errors."""


class NotInvertibleError(SieveLabError):
    """Raised when a modular inverse does not exist (gcd > 1)."""


class NotCoprimeError(SieveLabError):
    """Raised when an argument required to be coprime to the modulus is not."""


class OutOfRangeError(SieveLabError):
    """Raised when a numeric argument falls outside its documented domain."""


class InvalidDeltaError(SieveLabError):
    """Raised when a window radius is nonpositive or exceeds 1/2."""


class InvalidRegimeError(SieveLabError):
    """Raised when (r, z, delta) violate the admissible approximation regime."""


class CapacityError(SieveLabError):
    """Raised when an enumeration would exceed its configured size limit."""


class QuadratureError(SieveLabError):
    """Raised when adaptive quadrature fails to meet tolerance within budget."""


class SequenceFileError(SieveLabError):
    """Raised on a malformed coefficient-sequence or moduli file."""


class ConfigError(SieveLabError):
    """Raised on an invalid experiment configuration."""


class ShapeDomainError(SieveLabError):
    """Raised when a bound shape is requested outside its validity domain."""


class EmptyModuliWarning(UserWarning):
    """Issued when a constructed moduli set contains no elements."""
