"""Exception hierarchy shared by all modules.

Every domain error derives from :class:`EllBundleError` so the command line
front end can map it onto exit code 1.
"""


class EllBundleError(ValueError):
    """Base class for domain errors."""


class FieldMismatchError(EllBundleError):
    pass


class NotOnCurveError(EllBundleError):
    pass


class SingularPointError(EllBundleError):
    """An operation that needs a smooth point received the singular point."""


class UnsupportedError(EllBundleError):
    """The requested field / parameter combination is not supported."""


class TorsionSheafError(EllBundleError):
    """The torsion free sheaf at the singular point is not handled here."""


class RingMismatchError(EllBundleError):
    pass


class RangeError(EllBundleError):
    """A discrete parameter is outside its admissible range."""
