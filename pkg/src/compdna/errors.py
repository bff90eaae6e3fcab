"""Exception hierarchy shared by every module of the package."""


class CompDNAError(Exception):
    """Base class for all package errors."""


class ShapeError(CompDNAError, ValueError):
    """Dimensions of the inputs do not fit together."""


class DomainError(CompDNAError, ValueError):
    """A value lies outside the domain the operation is defined on."""


class PatternError(CompDNAError, ValueError):
    """An error pattern does not fit the matrix it is applied to."""


class ConfigError(CompDNAError, ValueError):
    """A channel or code configuration is infeasible."""


class EncodeError(CompDNAError, ValueError):
    """A message cannot be mapped to a codeword."""


class DecodeError(CompDNAError):
    """The received matrix lies outside the correctable model."""


class SchemeError(CompDNAError, ValueError):
    """A partition scheme is not disjoint or does not cover the space."""


class CapExceeded(CompDNAError, OverflowError):
    """An exhaustive computation would exceed the caller's size cap."""

    def __init__(self, needed, cap, what="items"):
        super().__init__(f"{what}: {needed} exceeds cap {cap}")
        self.needed = needed
        self.cap = cap
