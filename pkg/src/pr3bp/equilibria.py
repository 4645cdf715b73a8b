"""Triangular equilibrium points.

Two closed-form first-order series locate the points — the full
radiation-anchored form (``locate_series``) and the small-eps linearized
form (``locate_series_linear``) — and a Newton iteration on the exact
rest-state force balance (``refine_newton``) serves as the oracle for both.

The radiation-anchored series is built on the drag-free photogravitational
point: with delta the cube root of q1, that point sits at

    x0 = delta^2/2 - mu,   y0 = +/- delta * sqrt(1 - delta^2/4)

(both primary distances exact: r1 = delta, r2 = 1).  Drag and oblateness
then displace it at first order.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Optional, Tuple

from .dynamics import KineState, drag_numerators, potential_gradient
from .errors import InvalidParamsError, SeriesRangeWarning
from .numerics import newton2
from .params import DerivedParams

_SQRT3 = math.sqrt(3.0)
_SERIES_GUARD = 0.05


@dataclass(frozen=True)
class EquilibriumPoint:
    x_star: float
    y_star: float
    branch: str                  # 'L4' (upper) or 'L5' (lower)
    anchor_x0: float             # drag/oblateness-free anchors
    anchor_y0: float
    method: str                  # 'series45', 'series78', or 'newton'
    iterations: Optional[int] = None
    residual: Optional[float] = None

    @property
    def xy(self) -> Tuple[float, float]:
        return self.x_star, self.y_star


def _warn_if_outside_series_range(d: DerivedParams):
    for name, val in (("eps", d.eps), ("a2", d.a2), ("n*w1", d.nw1)):
        if abs(val) > _SERIES_GUARD:
            warnings.warn(
                f"|{name}| = {abs(val):.3g} exceeds the trusted first-order "
                f"series range ({_SERIES_GUARD})",
                SeriesRangeWarning, stacklevel=3)


def _anchors(d: DerivedParams, branch: str):
    if d.q1 <= 0.0:
        raise InvalidParamsError("the triangular-point series needs q1 > 0")
    if branch not in ("L4", "L5"):
        raise InvalidParamsError(f"branch must be 'L4' or 'L5', got {branch!r}")
    ds = d.delta * d.delta
    under = 1.0 - ds / 4.0
    if under < 0.0:
        raise InvalidParamsError("no triangular point: 1 - delta^2/4 < 0")
    y0 = d.delta * math.sqrt(under)
    if branch == "L5":
        y0 = -y0
    x0 = ds / 2.0 - d.mu
    return x0, y0


def locate_series(d: DerivedParams, branch: str = "L4") -> EquilibriumPoint:
    """First-order location of a triangular point, radiation-anchored form.

    The drag displacement carries 1/(3 mu (1-mu) y0) factors, so the series
    needs mu strictly inside (0, 1/2).  The x-equation is evaluated in
    distributed form (the x0 factors cancelled analytically), which is the
    same expression wherever both forms are defined but stays finite at
    x0 = 0.  The y-equation keeps the signed y0^3 denominator, which is what
    breaks the L4/L5 mirror symmetry under drag.
    """
    if not 0.0 < d.mu < 0.5:
        raise InvalidParamsError(
            "the drag displacement divides by mu*(1-mu); need 0 < mu < 1/2")
    _warn_if_outside_series_range(d)
    x0, y0 = _anchors(d, branch)
    ds = d.delta * d.delta
    a2 = d.a2
    w = d.nw1
    denom = 3.0 * d.mu * (1.0 - d.mu)

    x_star = (x0
              - w * ((1.0 - d.mu) * (1.0 + 2.5 * a2)
                     + d.mu * (1.0 - a2 / 2.0) * (ds / 2.0)) / (denom * y0)
              - (ds / 2.0) * a2)

    radicand = (1.0
                - w * ds * (2.0 * d.mu - 1.0
                            - d.mu * (1.0 - 1.5 * a2) * (ds / 2.0)
                            + 3.5 * (1.0 - d.mu) * a2) / (denom * y0 ** 3)
                - ds * (1.0 - ds / 2.0) * a2 / (y0 * y0))
    if radicand < 0.0:
        raise InvalidParamsError(
            "drag/oblateness corrections push y*^2 negative; series invalid here")
    y_star = y0 * math.sqrt(radicand)

    return EquilibriumPoint(x_star, y_star, branch, x0, y0, "series45")


def locate_series_linear(d: DerivedParams):
    """Small-eps linearized location (upper branch) and its shifted anchors.

    Returns (x, y, a, b) where (x, y) is the first-order point with every
    perturbation expanded to linear order in eps as well, and (a, b) =
    (x + mu, y) are the offsets of the point from the radiating primary.
    The a-series is evaluated with its leading constant restored (a -> 1/2
    in the unperturbed limit); as printed in the source series the constant
    term is missing, which would contradict a = x + mu.  Ledger entry
    ``linear_shift_leading_one``.
    """
    _warn_if_outside_series_range(d)
    e = d.eps
    a2 = d.a2
    g = d.gamma
    w = d.nw1
    s3 = _SQRT3

    x = (g / 2.0 - e / 3.0 - a2 / 2.0 + a2 * e / 3.0
         - ((9.0 + g) / (6.0 * s3)) * w
         - (4.0 * g * e / (27.0 * s3)) * w)
    y = (s3 / 2.0) * (1.0 - 2.0 * e / 9.0 - a2 / 3.0 - 2.0 * a2 * e / 9.0
                      + ((1.0 + g) / (9.0 * s3)) * w
                      - (4.0 * g * e / (27.0 * s3)) * w)
    a = 0.5 * (1.0 - 2.0 * e / 3.0 - a2 + 2.0 * a2 * e / 3.0
               - ((9.0 + g) / (3.0 * s3)) * w
               - (8.0 * g * e / (27.0 * s3)) * w)
    b = y
    return x, y, a, b


def equilibrium_residual(pos, d: DerivedParams):
    """The two force-balance conditions at rest.

    At zero velocity the drag numerators reduce to (-n*y, n*(x+mu)); a
    genuine equilibrium (with drag this is a forced balance, not a critical
    point of the potential alone) zeroes both components.
    """
    s = KineState(float(pos[0]), float(pos[1]), 0.0, 0.0)
    gx, gy = potential_gradient((s.x, s.y), d)
    n1, n2 = drag_numerators(s, d)
    u = s.x + d.mu
    r1s = u * u + s.y * s.y
    return gx - d.w1 * n1 / r1s, gy - d.w1 * n2 / r1s


def refine_newton(d: DerivedParams, guess, tol: float = 1e-12,
                  fd_step: float = 1e-6) -> EquilibriumPoint:
    """Newton oracle for the triangular points.

    Two-dimensional Newton iteration on the rest-state force balance with a
    central-difference Jacobian (step 1e-6), tolerance 1e-12 on both step
    and residual, at most 50 iterations.
    """
    if abs(float(guess[1])) < 1e-8:
        raise InvalidParamsError("guess must be off the primaries' axis (y != 0)")

    def f(p):
        return equilibrium_residual(p, d)

    (x, y), iters = newton2(f, (float(guess[0]), float(guess[1])),
                            tol=tol, max_iter=50, fd_step=fd_step)
    rx, ry = f((x, y))
    res = math.hypot(rx, ry)
    branch = "L4" if y > 0.0 else "L5"
    if d.q1 > 0.0:
        x0, y0 = _anchors(d, branch)
    else:  # pragma: no cover - newton itself has no q1 > 0 requirement
        x0, y0 = float("nan"), float("nan")
    return EquilibriumPoint(x, y, branch, x0, y0, "newton",
                            iterations=iters, residual=res)
