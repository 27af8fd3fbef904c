"""Exception types shared across the package."""


class UniformityError(ValueError):
    """Two hypergraphs with different uniformity were combined."""


class PatternTooLarge(ValueError):
    """A pattern exceeds the exhaustive-search vertex cap."""


class GuardError(ValueError):
    """An exhaustive enumeration would exceed its size guard."""


class ParseError(ValueError):
    """Malformed graph6 or hypergraph JSON input."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class PreconditionError(ValueError):
    """An operation was called outside its domain.

    ``witness`` carries a counterexample when one is available, e.g. the
    disjoint sets that violate a matching-number bound.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness
