"""Exception types shared across the package."""


class FtikError(Exception):
    """Base class for all package errors."""


class TruncationError(FtikError):
    """A derivative of higher order than the series truncation was requested.

    Extraction fails loudly instead of extrapolating; the ``required_order``
    attribute tells the caller what truncation would have sufficed.
    """

    def __init__(self, requested: int, available: int):
        self.requested = requested
        self.available = available
        self.required_order = requested
        super().__init__(
            f"derivative of order {requested} needs truncation order >= {requested}, "
            f"series has order {available}"
        )


class SingularSeriesError(FtikError):
    """Inversion of a truncated series with vanishing constant term."""


class DiagramError(FtikError):
    """A structurally invalid link diagram or surgery presentation."""

    def __init__(self, violations):
        if isinstance(violations, str):
            violations = [violations]
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class ResourceLimitError(FtikError):
    """A skein resolution exceeded its configured node budget."""
