"""Exception types raised across the package.

All of them derive from ``ValueError`` so callers that only care about bad
input can catch one thing.
"""


class CardCodesError(ValueError):
    """Base class for every error raised by cardcodes."""


class InvalidDimensionError(CardCodesError):
    """Hand size, deck size or graph parameters are inconsistent."""


class InvalidVertexError(CardCodesError):
    """A hand does not have the vertex size of the graph it is used in."""


class InvalidArcError(CardCodesError):
    """A shift was requested with an entering card already in the hand or a leaving card absent."""


class InvalidFieldError(CardCodesError):
    """Field modulus is not a prime at least the deck size, or weights are not injective."""


class OutOfScopeError(CardCodesError):
    """The operation is only defined for a narrower family of signatures."""


class UndefinedPredicateError(CardCodesError):
    """Minimal informativeness (and the reduction built on it) needs c + r >= 1."""


class UnknownFixtureError(CardCodesError, KeyError):
    pass


class ColoringFormatError(CardCodesError):
    """A coloring file could not be parsed."""


class InconsistentAnnouncementError(CardCodesError):
    """No hand compatible with B's hand carries the announced message."""


class AmbiguousAnnouncementError(CardCodesError):
    """Several hands compatible with B's hand carry the announced message."""


class NotMinimallyInformativeError(CardCodesError):
    """No small set meets every hand B still considers possible."""


class InstanceTooLargeError(CardCodesError):
    pass
