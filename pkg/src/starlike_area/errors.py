"""Exception hierarchy."""


class StarlikeAreaError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameters(StarlikeAreaError, ValueError):
    """Family parameters or a Schwarz specification outside their ranges."""


class NearZeroConstantTerm(StarlikeAreaError, ZeroDivisionError):
    """Series reciprocal requested for a series with |a_0| <= EPS0."""


class NotNormalized(StarlikeAreaError, ValueError):
    """Input series lacks the required normalization (a_0 = 1, or f(0)=0, f'(0)=1)."""


class DivergentSeries(StarlikeAreaError, ArithmeticError):
    """Hypergeometric series outside its convergence region or term cap hit."""


class BadParameter(StarlikeAreaError, ValueError):
    """Hypergeometric lower parameter hit a non-positive integer before termination."""


class RadiusOutOfRange(StarlikeAreaError, ValueError):
    """Radius outside the interval allowed by the operation."""


class EvaluationFailure(StarlikeAreaError, ArithmeticError):
    """f vanished (numerically) on the evaluation grid, so zf'/f is undefined."""
