"""Exception types shared across the package."""


class TancertError(Exception):
    """Base class for all package-specific errors."""


class DomainError(TancertError):
    """An argument lies outside the domain an operation is rigorous on."""


class CosNotPositive(TancertError):
    """A cosine enclosure touches 0; the caller must shrink its box."""


class RadiusTooLarge(TancertError):
    """A Taylor-model remainder bound is not provably valid at this radius."""


class OrderMismatch(TancertError):
    """A coefficient that should vanish exactly at an endpoint does not."""


class NotPositive(TancertError):
    """A normalized endpoint quotient could not be bounded away from 0."""


class IdentityMismatch(TancertError):
    """An exact polynomial identity failed coefficient-by-coefficient."""


class NoSignChange(TancertError):
    """A root bracket could not be sign-certified at its endpoints."""


class IdentityViolation(TancertError):
    """A replayed identity exceeded its numeric tolerance."""
