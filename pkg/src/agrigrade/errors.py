"""Exception types shared across the grading pipeline.

Every error raised by this package derives from GradingError so callers
(and the CLI) can map failures to a single exit path.
"""


class GradingError(Exception):
    """Base class for all package errors."""


class DomainError(GradingError):
    """An argument is outside the mathematical domain of an operation."""


class ParseError(GradingError):
    """A structured document could not be parsed at all."""


class SchemaError(GradingError):
    """A parsed document is missing or misusing a required field."""


class InvariantError(GradingError):
    """A value violates a structural invariant of its type."""


class NotFoundError(GradingError):
    """Lookup key (variety, entry, field path) does not exist."""


class InfeasibleError(GradingError):
    """An adaptation or fit cannot be performed on the given data."""


class ExtractionError(GradingError):
    """A feature could not be resolved on a sample."""


class CoverageError(GradingError):
    """Feature slices do not cover the feature set exactly once."""


class UnknownStandardError(DomainError):
    """Requested rule standard is not shipped."""


class ConfigError(GradingError):
    """A cascade or simulation configuration is unusable."""


class ClockError(GradingError):
    """Virtual clock moved backwards."""


class JoinError(GradingError):
    """A feedback event could not be joined to a stored feature vector."""


class DegenerateInputError(DomainError):
    """Statistic undefined for this input (zero denominator)."""


class CredentialError(GradingError):
    """Base class for credential encode/decode failures."""


class TruncationError(CredentialError):
    """Payload ends before the declared structure is complete."""


class VersionError(CredentialError):
    """Unsupported credential format version."""


class DigestMismatchError(CredentialError):
    """Recomputed digest differs from the embedded one (tamper signal)."""


class EncodingError(CredentialError):
    """QR text is not well-formed."""


class UnresolvedTraceError(CredentialError):
    """Decision trace has no final accept/reject outcome."""
