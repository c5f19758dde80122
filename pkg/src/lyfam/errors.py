"""Exception hierarchy shared by all modules."""


class LyfamError(Exception):
    """Base class for all domain errors raised by this package."""


class PreconditionError(LyfamError):
    """A documented operation precondition does not hold."""


class MalformedInputError(LyfamError):
    """Structurally invalid data (bad shapes, out-of-range indices, parse errors)."""


class UnitRequiredError(PreconditionError):
    """The semigroup must declare a unit for this operation."""


class ContainmentError(LyfamError):
    """A coboundary vector fell outside the cocycle space: the complex is broken."""


class ConsistencyError(LyfamError):
    """Two independent computation routes disagreed (internal self-check failure)."""


class BudgetExceededError(LyfamError):
    """The requested computation exceeds the configured coordinate budget."""
