"""Exceptions raised by the cambrian library.

Checkers never raise for a failed property: they return reports carrying
witnesses. The classes below signal unusable input or exhausted bounds.
"""


class CambrianError(ValueError):
    """Base class for every library error."""


class MatrixParseError(CambrianError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")


class NotSkewSymmetrizable(CambrianError):
    pass


class NotSymmetrizable(CambrianError):
    pass


class NotAcyclic(CambrianError):
    pass


class NonLaurentResult(CambrianError):
    """An exchange relation did not divide exactly. Indicates an arithmetic bug."""


class NotEquivalent(CambrianError):
    pass


class ResourceLimit(CambrianError):
    pass


class NotAffine(CambrianError):
    pass


class DependentRoots(CambrianError):
    pass


class NonTerminating(CambrianError):
    pass


class InfiniteParabolic(CambrianError):
    pass


class NoBoundedJoin(CambrianError):
    pass


class NotSortable(CambrianError):
    pass


class SearchExhausted(CambrianError):
    pass


class SingularLabels(CambrianError):
    pass


class InfiniteParabolicBlock(CambrianError):
    pass


class ChartPole(CambrianError):
    pass


class GreenSequenceNotFound(CambrianError):
    pass


class OverlappingCones(CambrianError):
    """More than one sortable cone contains a chamber; the enumerated fan is not a fan."""

    def __init__(self, message: str, words: list[tuple[int, ...]]):
        self.words = words
        super().__init__(f"{message}: {words}")
