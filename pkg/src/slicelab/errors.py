"""Exception types shared across the package.

Every failure mode that callers are expected to branch on gets its own
class; anything that indicates a bug inside the library raises
InternalError so the CLI can map it to a distinct exit code.
"""


class SlicelabError(Exception):
    """Base class for all library-specific errors."""


class DivisionByZero(SlicelabError, ZeroDivisionError):
    """Division by the zero polynomial or zero rational function."""


class SingularMatrix(SlicelabError):
    """Matrix inverse requested for a matrix with zero determinant."""


class DecompositionFails(SlicelabError):
    """A principal (lower-right) minor vanishes, so the Gauss
    decomposition does not exist for this matrix."""


class NotInSlice(SlicelabError):
    """The matrix decomposes, but some factor violates the congruence
    normalization required of slice representatives."""


class NotInChart(SlicelabError):
    """The slice point is not in the image of the Zastava chart."""


class InvalidCoordinate(SlicelabError):
    """Chart coordinates violate a constraint (e.g. e = 0)."""


class NotInOpenLocus(SlicelabError):
    """The splitting map needs the last moment component to be nonzero
    and it is zero here."""


class SamplingExhausted(SlicelabError):
    """Resampling budget exceeded while drawing a random slice point."""


class InternalError(SlicelabError):
    """An invariant the library guarantees was violated; indicates a bug,
    never a property of valid input."""
