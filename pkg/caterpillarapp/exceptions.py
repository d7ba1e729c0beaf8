class CaterpillarError(Exception):
    """Base class for every error raised by the realizer."""


class InvalidMatrix(CaterpillarError, ValueError):
    pass


class NotATreeRow(InvalidMatrix):
    pass


class WrongRowCount(InvalidMatrix):
    pass


class InvalidGraph(CaterpillarError, ValueError):
    pass


class ParallelEdge(InvalidGraph):
    """A vertex pair already carries an edge (of any color)."""


class DimensionMismatch(CaterpillarError, ValueError):
    pass


class ColorOutOfRange(CaterpillarError, ValueError):
    pass


class NotATree(CaterpillarError):
    pass


class NotACaterpillar(CaterpillarError):
    pass


class PreconditionViolated(CaterpillarError):
    pass


class AllRowsArePaths(CaterpillarError):
    """No reducible column because every row is a path row (base case)."""


class InvalidStep(CaterpillarError):
    pass


class NotFound(CaterpillarError):
    pass


class NotAFixture(CaterpillarError):
    pass


class LemmaViolation(CaterpillarError):
    """A step that a proved statement guarantees did not go through."""


class BoundViolated(LemmaViolation):
    pass


class CensusViolation(LemmaViolation):
    pass


class BudgetExceeded(CaterpillarError):
    pass


class InfeasibleParameters(CaterpillarError, ValueError):
    pass
