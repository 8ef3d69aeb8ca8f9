"""Exception types shared across the package."""


class ParameterError(ValueError):
    """An argument violates an operation's precondition."""


class CapabilityError(RuntimeError):
    """The request is valid but exceeds a configured search budget."""


class InvariantViolation(AssertionError):
    """A runtime check encoding a proof step failed.

    ``ledger`` carries whatever bookkeeping the failing component had at the
    time (for the breaker strategies, the full series ledger as a dict).
    """

    def __init__(self, message, ledger=None):
        super().__init__(message)
        self.ledger = ledger
