"""Exception types raised across the toolkit."""


class WpsError(Exception):
    """Base class for toolkit errors."""


class WeightMismatchError(WpsError, ValueError):
    pass


class ResourceLimitError(WpsError, RuntimeError):
    pass


class UnsupportedSingularityError(WpsError):
    pass


class InapplicableModelError(WpsError, ValueError):
    pass


class DegreeMismatchError(WpsError, ValueError):
    pass


class KindMismatchError(WpsError, ValueError):
    pass


class CYViolationError(WpsError, ValueError):
    pass


class DegenerateC2Error(WpsError, ValueError):
    pass


class VanishingSquareError(WpsError, ValueError):
    """The square of the distinguished variable has coefficient zero."""


class AmbiguousInvolutionError(WpsError, ValueError):
    pass
