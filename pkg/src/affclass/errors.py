"""Exception hierarchy.

Every error raised on bad input derives from :class:`AffclassError`, which is a
``ValueError`` so callers that only care about "bad input" can catch that.
"""


class AffclassError(ValueError):
    pass


class DimensionMismatch(AffclassError):
    pass


class ZeroRay(AffclassError):
    pass


class NotPointed(AffclassError):
    pass


class NotFullDimensional(AffclassError):
    pass


class NotInMonoid(AffclassError):
    pass


class NotEffective(AffclassError):
    pass


class NonLocalBase(AffclassError):
    pass


class MissingComaximalData(AffclassError):
    pass


class InvalidRange(AffclassError):
    pass


class TorsionInput(AffclassError):
    pass
