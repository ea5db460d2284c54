"""Exception types shared across the package."""


class VpvError(Exception):
    """Base class for package-specific failures."""


class DomainError(VpvError, ValueError):
    """An argument lies outside the supported mathematical domain.

    Examples: |z| too close to the unit circle, a pole of a closed form,
    an order outside the supported set, x = 1 outside zeta mode.
    """


class NonConvergence(VpvError, RuntimeError):
    """A series failed to meet its tolerance within the term cap."""


class TailBoundExceedsTol(VpvError, RuntimeError):
    """No admissible truncation meets the requested tolerance.

    Carries the best certified bound so callers can report what was
    achievable instead of silently degrading.
    """

    def __init__(self, message: str, achievable_bound: float, degree_cap: int):
        super().__init__(message)
        self.achievable_bound = achievable_bound
        self.degree_cap = degree_cap


class ComputationError(VpvError, ArithmeticError):
    """A non-finite value escaped an evaluation, or an internal consistency
    assertion failed. Indicates a bug or a numerically hopeless regime."""
