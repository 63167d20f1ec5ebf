"""Module for all exceptions related to Cyclosum package."""


class CyclosumException(Exception):
    """Base class for all Cyclosum exceptions."""
    pass


class InvalidInputException(CyclosumException):
    pass


class TooFewExponentsException(InvalidInputException):
    pass


class ZeroDivisorException(CyclosumException):
    pass


class NonMonicDivisorException(CyclosumException):
    pass


class SubsetBoundException(CyclosumException):
    pass


class InstanceTooLargeException(CyclosumException):
    pass


class StructuralException(CyclosumException):
    """Raised when a construction breaks an invariant that the mathematics
    guarantees, for example colliding residues in a product of root sums."""
    pass


class NotFlatException(CyclosumException):
    pass


class PreconditionException(CyclosumException):
    pass
