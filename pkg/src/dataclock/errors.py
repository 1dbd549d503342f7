"""Exception types shared across the package."""


class DataClockError(Exception):
    """Base class for all errors raised by this package."""


class TopologyMismatch(DataClockError):
    """Two time tuples come from different topologies and cannot be compared."""


class InvalidState(DataClockError):
    """Operation applied to a transaction that is not in the required state."""


class WrongShard(DataClockError):
    """Key is not owned by the handler that was asked to write it."""


class Unavailable(DataClockError):
    """Agent is halted or unreachable and cannot serve the request."""


class QueueFull(DataClockError):
    """Commit queue has no room for all records of an accepted commit."""


class ProtocolViolation(DataClockError):
    """Publication stream broke an ordering or uniqueness rule."""


class NotYetPublished(DataClockError):
    """Query addressed a root tick beyond the published log."""


class NotMeasurable(DataClockError):
    """Metric requested from a run that produced no data for it."""


class TraceError(DataClockError):
    """Trace file or event stream is malformed."""


class ConfigError(DataClockError):
    """Scenario configuration is invalid; ``field`` names the offending entry."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")
