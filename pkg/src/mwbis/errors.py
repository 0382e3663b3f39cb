"""Exception hierarchy shared by every solver in the package."""


class MWBISError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(MWBISError):
    """An input violates a structural invariant."""


class AsymmetricAdjacency(ValidationError):
    pass


class SelfLoop(ValidationError):
    pass


class NonPositiveBudget(ValidationError):
    pass


class NegativeWeight(ValidationError):
    pass


class VertexOutOfRange(ValidationError):
    pass


class NotATree(ValidationError):
    pass


class NotACycle(ValidationError):
    pass


class UnsortedInput(ValidationError):
    pass


class CrossingCrossEdges(ValidationError):
    pass


class MultiFaceLevel(ValidationError):
    pass


class NonConsecutiveLevelEdge(ValidationError):
    pass


class DegenerateLevel(ValidationError):
    pass


class BoundaryMismatch(ValidationError):
    pass


class ProfileTooShort(ValidationError):
    pass


class SolverError(MWBISError):
    """A solver refused or failed to run on a valid input."""


class InstanceTooLarge(SolverError):
    pass


class BudgetGuardExceeded(SolverError):
    pass


class CapacityGuardExceeded(SolverError):
    pass


class TooLargeForExactCheck(SolverError):
    pass


class IncompatibleSolver(SolverError):
    pass


class ParseError(MWBISError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BadParams(MWBISError):
    pass
