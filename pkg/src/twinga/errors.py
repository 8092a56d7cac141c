"""Exception types raised by the GA engine and the experiment harness."""


class GaError(Exception):
    """Base class for all errors raised by this package."""


class EncodingError(GaError):
    """A chromosome is malformed: empty, wrong length, or bad gene values."""


class BoundsError(GaError):
    """Variable bounds are invalid (lower bound not below upper bound)."""


class EvaluationError(GaError):
    """An objective evaluation produced a non-finite value."""

    def __init__(self, message: str, variables: tuple[float, ...] | None = None):
        super().__init__(message)
        self.variables = variables


class InvalidStateError(GaError):
    """An operation was applied to a population that cannot support it."""


class RankingError(GaError):
    """Fitness values passed in the wrong order (runner-up above best)."""


class InputError(GaError):
    """A function received structurally invalid input (e.g. empty vector)."""


class ConfigError(GaError):
    """A run configuration, preset name, or override is invalid."""


class ExportError(GaError):
    """Writing result files failed."""

    def __init__(self, message: str, path: str | None = None):
        super().__init__(message)
        self.path = path
