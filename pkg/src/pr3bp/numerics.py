"""Shared numerical kernels.

Central finite differences (orders 1-3, optional Richardson extrapolation),
a plain two-dimensional Newton iteration with a finite-difference Jacobian,
a generic fixed-step RK4 driver, a finite-difference Jacobian for vector
fields, and a cancellation-safe biquadratic solver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence, Tuple

import numpy as np

from .errors import (
    InvalidParamsError,
    NanDetectedError,
    NoConvergenceError,
    SingularJacobianError,
)


# Default base steps per derivative order.  Higher orders divide by h^order,
# so they need a much larger step before roundoff in f swamps the stencil;
# with one Richardson halving these all land comfortably below 1e-6 error
# for smooth O(1) functions.
_AUTO_STEP = {1: 1e-5, 2: 1e-3, 3: 4e-3}


@dataclass(frozen=True)
class FdConfig:
    """Finite-difference settings: base step and Richardson halving.

    ``step=None`` picks a per-order default (1e-5 / 1e-3 / 4e-3 for orders
    1 / 2 / 3).
    """

    step: float | None = None
    richardson: bool = True

    def validate(self) -> "FdConfig":
        if self.step is not None and not (1e-9 <= self.step <= 1e-1):
            raise InvalidParamsError(
                f"fd step must lie in [1e-9, 1e-1], got {self.step}")
        return self


def _central(f, x0: float, order: int, h: float) -> float:
    if order == 1:
        val = (f(x0 + h) - f(x0 - h)) / (2.0 * h)
    elif order == 2:
        val = (f(x0 + h) - 2.0 * f(x0) + f(x0 - h)) / (h * h)
    elif order == 3:
        # five-point stencil (the two end points and the two inner points)
        val = (f(x0 + 2.0 * h) - 2.0 * f(x0 + h)
               + 2.0 * f(x0 - h) - f(x0 - 2.0 * h)) / (2.0 * h ** 3)
    else:
        raise InvalidParamsError(f"derivative order must be 1, 2 or 3, got {order}")
    if not math.isfinite(val):
        raise NanDetectedError(f"non-finite stencil value near x0={x0}")
    return val


def fd_derive(f: Callable[[float], float], x0: float, order: int,
              cfg: FdConfig = FdConfig()) -> float:
    """Central-difference derivative of a scalar function.

    All three stencils have O(h^2) truncation error; with ``richardson``
    enabled the step is halved once and the two estimates combined, which
    cancels the h^2 term.
    """
    cfg.validate()
    if order not in (1, 2, 3):
        raise InvalidParamsError(f"derivative order must be 1, 2 or 3, got {order}")
    h = cfg.step if cfg.step is not None else _AUTO_STEP[order]
    coarse = _central(f, x0, order, h)
    if not cfg.richardson:
        return coarse
    fine = _central(f, x0, order, h / 2.0)
    return (4.0 * fine - coarse) / 3.0


def newton2(f: Callable[[Tuple[float, float]], Tuple[float, float]],
            guess: Sequence[float], tol: float = 1e-12, max_iter: int = 50,
            fd_step: float = 1e-3):
    """Two-dimensional Newton iteration with a central-difference Jacobian.

    Converges when the post-update residual satisfies max(|f1|, |f2|) <= tol;
    raises NoConvergenceError when the iteration budget runs out and
    SingularJacobianError on a degenerate Jacobian.
    Returns ``((x, y), iterations)``.

    The default Jacobian step keeps the cancellation noise of the difference
    quotient near 1e-13 relative for O(1) data, so a well-conditioned affine
    system lands inside ``tol`` on the first update.
    """
    x, y = float(guess[0]), float(guess[1])
    h = fd_step
    for it in range(1, max_iter + 1):
        fx, fy = f((x, y))
        if not (math.isfinite(fx) and math.isfinite(fy)):
            raise NanDetectedError("residual is not finite")
        # central-difference Jacobian
        f1p = f((x + h, y))
        f1m = f((x - h, y))
        f2p = f((x, y + h))
        f2m = f((x, y - h))
        j11 = (f1p[0] - f1m[0]) / (2.0 * h)
        j21 = (f1p[1] - f1m[1]) / (2.0 * h)
        j12 = (f2p[0] - f2m[0]) / (2.0 * h)
        j22 = (f2p[1] - f2m[1]) / (2.0 * h)
        det = j11 * j22 - j12 * j21
        scale = max(abs(j11), abs(j12), abs(j21), abs(j22), 1e-300)
        if abs(det) <= 1e-14 * scale * scale:
            raise SingularJacobianError(
                f"Jacobian numerically singular at ({x}, {y})")
        dx = -(j22 * fx - j12 * fy) / det
        dy = -(-j21 * fx + j11 * fy) / det
        x += dx
        y += dy
        rx, ry = f((x, y))
        if max(abs(rx), abs(ry)) <= tol:
            return (x, y), it
    raise NoConvergenceError(
        f"Newton did not converge in {max_iter} iterations (last point ({x}, {y}))")


def rk4_integrate(field: Callable[[float, np.ndarray], np.ndarray],
                  y0: Sequence[float], t_span: Tuple[float, float],
                  dt: float):
    """Classical fixed-step RK4.

    Samples at t0 + k*dt for k = 0..n with n = round((t1-t0)/dt); the field
    is called as field(t, y).  Returns (times, states) as numpy arrays.
    """
    if dt <= 0.0:
        raise InvalidParamsError("dt must be positive")
    t0, t1 = float(t_span[0]), float(t_span[1])
    n = int(round((t1 - t0) / dt))
    if n < 0:
        raise InvalidParamsError("t_span must be increasing")
    y = np.asarray(y0, dtype=float).copy()
    times = t0 + dt * np.arange(n + 1)
    out = np.empty((n + 1, y.size), dtype=float)
    out[0] = y
    for k in range(n):
        t = times[k]
        k1 = field(t, y)
        k2 = field(t + 0.5 * dt, y + 0.5 * dt * k1)
        k3 = field(t + 0.5 * dt, y + 0.5 * dt * k2)
        k4 = field(t + dt, y + dt * k3)
        y = y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if not np.all(np.isfinite(y)):
            raise NanDetectedError(f"integration blew up at t={t + dt}")
        out[k + 1] = y
    return times, out


def fd_jacobian(field: Callable[[np.ndarray], np.ndarray], y0: Sequence[float],
                step: float = 1e-5, richardson: bool = True) -> np.ndarray:
    """Central-difference Jacobian of an R^n -> R^n map at y0."""
    y0 = np.asarray(y0, dtype=float)
    m = y0.size

    def one(h):
        jac = np.empty((m, m), dtype=float)
        for j in range(m):
            e = np.zeros(m)
            e[j] = h
            jac[:, j] = (np.asarray(field(y0 + e)) - np.asarray(field(y0 - e))) / (2.0 * h)
        return jac

    coarse = one(step)
    if not richardson:
        return coarse
    fine = one(step / 2.0)
    return (4.0 * fine - coarse) / 3.0


def biquadratic_roots(b: float, c: float):
    """Roots of z^2 + b*z + c = 0, cancellation-safe.

    The larger-magnitude root is computed from the quadratic formula, the
    other from the product of roots.  Real coefficients with negative
    discriminant yield a complex-conjugate pair.
    """
    disc = b * b - 4.0 * c
    if disc >= 0.0:
        s = math.sqrt(disc)
        if b >= 0.0:
            q = -(b + s) / 2.0
        else:
            q = -(b - s) / 2.0
        z1 = q
        z2 = c / q if q != 0.0 else -b - q
        return z1, z2
    im = math.sqrt(-disc) / 2.0
    re = -b / 2.0
    return complex(re, im), complex(re, -im)
