"""Exception types shared across the package."""


class FgdError(Exception):
    """Base class for all library errors."""


class ShapeError(FgdError):
    """Operand shapes do not conform for the requested operation."""


class DomainError(FgdError):
    """A value left the mathematical domain of an operation (log <= 0, NaN, ...)."""


class TapeError(FgdError):
    """Gradient tape misuse (backward on a spent tape, no active recording, ...)."""


class ConfigError(FgdError):
    """Invalid or inconsistent configuration."""


class LengthError(FgdError):
    """An input sequence exceeds the encoder's maximum length."""


class SpanRangeError(FgdError, IndexError):
    """A span's token range does not fit the document it points into."""


class MiningRequiredError(FgdError):
    """A negative pool needed for training is missing or too shallow."""


class TrainingError(FgdError):
    """Training diverged or otherwise failed mid-run."""


class IntegrityError(FgdError):
    """Persisted artifact does not match its recorded fingerprint."""


class DegenerateRangeError(FgdError):
    """Score range collapsed to zero where a normalizer is required."""
