"""Exception hierarchy shared by all veriagg modules."""


class VeriaggError(Exception):
    """Base class for all veriagg errors."""


class ConfigurationError(VeriaggError):
    """Invalid or inconsistent configuration (bad field, bad bounds, ...)."""


class FieldMismatchError(ConfigurationError):
    """Two elements or structures from different prime fields were combined."""


class SetupError(ConfigurationError):
    """Dealer setup was asked for parameters outside the supported bounds."""


class DegenerateNodesError(VeriaggError):
    """Interpolation nodes contain duplicates; the interpolant is not unique."""


class ArityError(VeriaggError):
    """A share vector has the wrong number of entries."""


class RangeError(VeriaggError):
    """A residue or packed value lies outside its declared range."""


class KeyMaterialError(VeriaggError):
    """A required mask seed is missing from a participant's view."""


class EncodeOverflowError(VeriaggError):
    """A real value is too large for the fixed-point range."""


class DomainError(VeriaggError):
    """An analytic quantity was requested outside its domain of validity."""


class ProtocolError(VeriaggError):
    """A malformed or out-of-order protocol message (distinct from forgery)."""


class FormatError(VeriaggError):
    """A data file does not follow its declared binary format."""


class BatchError(VeriaggError):
    """A training step received an unusable (e.g. empty) batch."""


class TamperSpecError(VeriaggError):
    """A tamper description is degenerate (e.g. all deltas zero)."""
