"""Exception types shared across the engine."""


class EngineError(Exception):
    """Base class for all domain errors raised by iterforge."""


class MalformedWord(EngineError):
    """A string is not a well-formed prefix word over {V, x}."""


class OrderZero(EngineError):
    """Operation requires a term of order >= 1 but got the bare leaf."""


class PositionOutOfRange(EngineError):
    """Leaf position outside 1..order+1."""


class IndexOutOfRange(EngineError):
    """Triangle index outside its valid range."""


class UnknownLabel(EngineError):
    """Label not present in the catalog of the requested order."""


class OrderMismatch(EngineError):
    """Two terms were expected to have the same order."""


class InvalidSpec(EngineError):
    """An identity spec references bad labels or reflexive pairs."""


class OrderOverflow(EngineError):
    """A composition would exceed the closure's maximum order."""


class BadArity(EngineError):
    """Operation arities must be integers >= 2."""


class IllFoundedRecursion(EngineError):
    """A counting recursion depends on values at its own order or higher."""


class NonIntegralTerm(EngineError):
    """A weighted recurrence produced a non-integer value."""

    def __init__(self, n: int, numerator, divisor):
        super().__init__(f"term {n}: {numerator} is not divisible by {divisor}")
        self.n = n
        self.numerator = numerator
        self.divisor = divisor


class CompositionNotWellDefined(EngineError):
    """Representative choice changed the result of a class composition."""
