"""Exceptions raised by the engine, the combinators and the law runner."""


class BackcalcError(Exception):
    pass


class UnboundedStateDomain(BackcalcError):
    """A Get continuation had to be scanned but no finite state domain was given."""


class FuelExhausted(BackcalcError):
    """Unfolding recursed deeper than its fuel allows; the seed measure is not decreasing."""


class DomainViolation(BackcalcError, KeyError):
    """A tabulated function was applied outside its domain."""


class UnknownLaw(BackcalcError, KeyError):
    pass


class EmptyState(BackcalcError, ValueError):
    """The queens ``ok`` check was applied before any queen was placed."""


class SpecViolation(BackcalcError, ValueError):
    """A SolveSpec does not satisfy its declared invariants."""
