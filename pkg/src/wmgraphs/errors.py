"""Exception types shared by all modules."""


class WMGraphError(Exception):
    """Base class for library errors."""


class GraphFormatError(WMGraphError, ValueError):
    """Malformed graph text, instance JSON, or vertex list."""


class DisconnectedGraphError(WMGraphError, ValueError):
    def __init__(self, components):
        self.components = [sorted(c) for c in components]
        shown = "; ".join(str(c) for c in self.components[:5])
        more = "" if len(self.components) <= 5 else f" (+{len(self.components) - 5} more)"
        super().__init__(f"graph is disconnected: {len(self.components)} components: {shown}{more}")


class NotApplicable(WMGraphError):
    """The operation's structural precondition does not hold for this graph."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class BudgetExceeded(WMGraphError):
    pass


class RadiusTooLarge(WMGraphError):
    pass


class CapReached(WMGraphError):
    def __init__(self, message, value=None, witness=None):
        super().__init__(message)
        self.value = value
        self.witness = witness


class RankDiverges(WMGraphError):
    pass


class NotAClosedWalk(WMGraphError, ValueError):
    pass


class InvariantError(WMGraphError, AssertionError):
    """A property guaranteed by theory failed; indicates a bug or a bad input."""
