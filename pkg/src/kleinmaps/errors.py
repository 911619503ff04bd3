"""Exception hierarchy.

Every domain error carries a stable ``code`` (the class name) so the CLI can
report it as structured JSON.
"""


class KleinMapsError(Exception):
    """Base class for all domain errors raised by :mod:`kleinmaps`."""

    @property
    def code(self):
        return type(self).__name__

    def to_dict(self):
        return {"error": self.code, "message": str(self)}


class DegreeMismatch(KleinMapsError, ValueError):
    pass


class InvalidPermutation(KleinMapsError, ValueError):
    pass


class InvalidParameter(KleinMapsError, ValueError):
    pass


class NotInvolution(KleinMapsError, ValueError):
    pass


class NotTransitive(KleinMapsError, ValueError):
    pass


class SignatureViolation(KleinMapsError, ValueError):
    """A generator product has an order not dividing its signature entry."""

    def __init__(self, product, order, bound):
        self.product = product
        self.order = order
        self.bound = bound
        super().__init__(
            "product {} has order {} which does not divide {}".format(product, order, bound))


class NotOrientableClosed(KleinMapsError, ValueError):
    pass


class CapExceeded(KleinMapsError, ValueError):
    pass


class InternalParity(KleinMapsError, AssertionError):
    pass


class InternalClassification(KleinMapsError, AssertionError):
    pass


class NotDistinct(KleinMapsError, ValueError):
    pass


class NotReal(KleinMapsError, ValueError):
    pass


class RealInput(KleinMapsError, ValueError):
    pass


class TooManyNonRealPairs(KleinMapsError, ValueError):
    pass


class DegreeUnsupported(KleinMapsError, ValueError):
    pass


class SingularCurve(KleinMapsError, ValueError):
    pass


class FormatError(KleinMapsError, ValueError):
    """Malformed input file or literal."""
