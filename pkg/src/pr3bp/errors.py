"""Exception types shared across the package.

Every error carries the CLI exit status it maps to, so the command-line
front end can translate failures without a lookup table:

* 1 — invalid parameters or evaluation at a meaningless state,
* 2 — a numerical procedure failed to converge,
* 3 — the requested quantity is undefined for the given regime.
"""


class Pr3bpError(Exception):
    """Base class for all package errors."""

    exit_code = 1


class InvalidParamsError(Pr3bpError, ValueError):
    """Inputs violate a documented precondition or invariant."""

    exit_code = 1


class SingularityError(Pr3bpError):
    """State too close to one of the primaries for a meaningful evaluation."""

    exit_code = 1


class NoConvergenceError(Pr3bpError):
    """An iterative procedure exhausted its iteration budget."""

    exit_code = 2


class SingularJacobianError(NoConvergenceError):
    """Newton's method met a (numerically) singular Jacobian."""

    exit_code = 2


class NoRootError(NoConvergenceError):
    """A bracketing search found no sign change over its interval."""

    exit_code = 2


class NanDetectedError(NoConvergenceError):
    """A numerical kernel produced a non-finite value."""

    exit_code = 2


class ResonantDegeneracyError(Pr3bpError):
    """A frequency sits on the 1/sqrt(2) resonance where the normal-mode
    scale factors vanish and the normalization breaks down."""

    exit_code = 3


class UndefinedQuantityError(Pr3bpError):
    """The requested quantity does not exist in this regime (for example
    oscillation frequencies of an unstable equilibrium)."""

    exit_code = 3


class SeriesRangeWarning(UserWarning):
    """A perturbation parameter lies outside the trusted range of the
    first-order series (|perturbation| > 0.05)."""
