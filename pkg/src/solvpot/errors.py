"""Exception types raised across the package."""


class SolvPotError(Exception):
    """Base class for all package errors."""


class PoleAt(SolvPotError, ValueError):
    """Argument sits on a pole of a gamma-function expression."""

    def __init__(self, where, message=None):
        self.where = where
        super().__init__(message or f"pole at {where!r}")


class DegenerateRecurrence(SolvPotError, ArithmeticError):
    """A Jacobi recurrence denominator vanished and no fallback applies."""


class ConstructionFailed(SolvPotError, ArithmeticError):
    """Exceptional polynomial construction degenerated (degree drop)."""


class DomainViolation(SolvPotError, ValueError):
    """Evaluation point outside the family domain."""


class SingularDenominator(SolvPotError, ValueError):
    """Rational term of an extended potential vanishes on the domain."""


class InvalidWindow(SolvPotError, ValueError):
    """Parameters outside the validity window of a branch."""

    def __init__(self, branch, message=None):
        self.branch = branch
        super().__init__(message or f"parameters outside the {branch} window")


class IndexBeyondSpectrum(SolvPotError, IndexError):
    """Requested state index exceeds n_max."""


class ConvergenceFailure(SolvPotError, RuntimeError):
    """Eigensolver did not converge."""

    def __init__(self, message, diagnostics=None):
        self.diagnostics = diagnostics or {}
        super().__init__(message)


class ZeroFunction(SolvPotError, ValueError):
    """Sampled function is identically zero."""


class GridMismatch(SolvPotError, ValueError):
    """Sampled functions do not share a grid."""


class EmptySpectrum(SolvPotError, ValueError):
    """Algebraic discrete series has no states."""
