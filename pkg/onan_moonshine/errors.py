"""
Error types for the moonshine toolkit.

Every computational failure raises a subclass of MoonshineError, which is
itself a ValueError so callers that already catch bad input keep working.
The CLI maps MoonshineError to exit code 1.
"""


class MoonshineError(ValueError):
    """Base class for all errors raised by onan_moonshine."""


# series
class ZeroLeadingCoefficient(MoonshineError):
    """A series with no known nonzero term was inverted."""


class PrecisionExhausted(MoonshineError):
    """A coefficient was requested beyond the known window of a series."""


class NonIntegralCoefficient(MoonshineError):
    """A coefficient that must be an integer came out fractional."""


# quadratic forms
class NotADiscriminant(MoonshineError):
    """The integer is not congruent to 0 or 1 mod 4 (or is not negative)."""


class NotUnimodular(MoonshineError):
    """A matrix passed as an SL2(Z) element has determinant != 1."""


class NotPositiveDefinite(MoonshineError):
    """A form expected to be positive definite is not."""


class NoSquareRoot(MoonshineError):
    """r^2 = D mod 4N has no solution."""


class NoCoprimeRepresentation(MoonshineError):
    """Bounded search found no represented value coprime to D0."""


class RepresentativeSearchFailed(MoonshineError):
    """No level-N representative was found for some class."""


# CM values and traces
class NonConvergent(MoonshineError):
    """A q-series evaluation would not converge within the iteration cap."""


class RoundingFailed(MoonshineError):
    """A numerical value met its error budget but no nearby exact value exists."""


class CrossCheckFailed(MoonshineError):
    """Two independent computations of the same quantity disagree."""


# elliptic curves and L-functions
class SingularCurve(MoonshineError):
    """The Weierstrass model has zero discriminant."""


class NotPrime(MoonshineError):
    """Point counting was requested modulo a composite number."""


class PrimeBoundExceeded(MoonshineError):
    """The prime exceeds the configured point counting bound."""


class PointNotOnCurve(MoonshineError):
    """A point does not satisfy the curve equation."""


class InsufficientCoefficients(MoonshineError):
    """The coefficient list is too short to reach the requested tolerance."""


# selmer criterion
class NotAdmissible(MoonshineError):
    """The discriminant does not satisfy the hypotheses of the criterion."""


class UnknownCoefficient(MoonshineError):
    """The coefficient is outside the attested table."""
