"""Exception hierarchy.

Every domain failure raises a subclass of :class:`PascalAdicError`; the CLI
prints the class name on stderr and exits with status 1.
"""


class PascalAdicError(Exception):
    """Base class for all domain errors."""


class MaximalPath(PascalAdicError):
    """The path has no successor (no ``10`` after its leading runs)."""


class MinimalPath(PascalAdicError):
    """The path has no predecessor (no ``01`` after its leading runs)."""


class HorizonExceeded(PascalAdicError):
    """A scan hit the horizon cap before the base rule settled the answer."""


class NoKink(PascalAdicError):
    """Coordinates n+1, n+2 of the path are not ``10``."""


class Undecidable(PascalAdicError):
    """The inspected depth is too small to classify the path."""


class TooLarge(PascalAdicError):
    """Materializing the requested word would exceed the cap."""


class IndexOutOfRange(PascalAdicError):
    pass


class LengthTooLarge(PascalAdicError):
    pass


class OrbitEndsWithin(PascalAdicError):
    """The orbit reaches an extremal path before the requested radius."""

    def __init__(self, radius, direction):
        super().__init__(f"orbit ends within radius {radius} ({direction})")
        self.radius = radius
        self.direction = direction


class NotInLanguage(PascalAdicError):
    """The block does not occur in any basic word."""


class Exceeded(PascalAdicError):
    """A simulation ran past its step budget."""


class SampleAtJump(PascalAdicError):
    """A sample abscissa lies inside the exclusion radius of a jump."""


class DyadicRational(PascalAdicError):
    """The binomial map is undefined at dyadic rationals."""


class SearchExhausted(PascalAdicError):
    pass


class RationalBeta(PascalAdicError):
    """The rotation number looks rational."""


class PrecisionExhausted(PascalAdicError):
    """A fixed-precision input cannot support the requested computation."""
