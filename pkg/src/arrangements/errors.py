"""Exception types shared by all modules."""


class ArrangementError(Exception):
    """Base class for every error this package raises deliberately."""


class FormatError(ArrangementError):
    """Input document does not follow the arrangement JSON schema."""


class MalformedRationalError(FormatError):
    """A coefficient string is not an exact integer or p/q rational."""


class DimensionMismatchError(ArrangementError):
    """A linear form has the wrong number of coefficients."""


class ZeroFormError(ArrangementError):
    """A linear form is identically zero and defines no hyperplane."""


class DuplicateHyperplaneError(ArrangementError):
    """Two forms are proportional, hence define the same hyperplane."""


class LengthMismatchError(ArrangementError):
    """A sign vector or chamber tuple has the wrong length."""


class IndexOutOfRangeError(ArrangementError):
    """A hyperplane index is outside 0..n-1."""


class NotACircuitError(ArrangementError):
    """An index set claimed to be a circuit is not minimally dependent."""


class ResourceLimitError(ArrangementError):
    """A configured enumeration cap would be exceeded."""


class InternalInconsistencyError(ArrangementError):
    """Two computations that must agree did not; indicates a bug."""
