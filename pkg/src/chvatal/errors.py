"""Exception hierarchy.

Every error raised on purpose by the package derives from :class:`ChvatalError`,
so callers (and the CLI) can map them onto exit codes.
"""


class ChvatalError(Exception):
    pass


class MalformedInput(ChvatalError, ValueError):
    """Input that does not describe a valid family (bad JSON, duplicate faces...)."""


class CapacityError(ChvatalError, ValueError):
    """Ground set wider than the face bit-width."""


class UnknownVertex(ChvatalError, ValueError):
    pass


class PreconditionViolated(ChvatalError):
    """An operation was called on input outside its domain."""


class HypothesisViolated(PreconditionViolated):
    """Some face containing the flip vertex misses both anchor vertices."""


class NotIntersecting(PreconditionViolated):
    pass


class RankTooHigh(PreconditionViolated):
    pass


class BudgetExceeded(ChvatalError):
    """A search ran past its configured node or size budget."""


class InternalInvariantBroken(ChvatalError, AssertionError):
    """A step of a proof-driven procedure failed its own check.

    Seeing this means either a bug or a hole in the argument being executed;
    it is never expected on valid input.
    """
