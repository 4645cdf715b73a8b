"""Power-series expansion of the Lagrangian/Hamiltonian about the upper
triangular point.

Provides the constant term L0 and the linear coefficients of L1, the
quadratic coefficients (E, F, G), the cubic coefficients (T1..T4 plus the
velocity-dependent drag term T5), evaluation of the quadratic Hamiltonian,
and finite-difference oracles for the quadratic and cubic parts.

Two documented corrections are applied to the printed series (see the
discrepancy ledger): the eps-coefficient pair of E is transposed back into
agreement with the Hessian oracle, and the gamma-bracket of G opens with
"6 + 2 eps/3" rather than "6 eps - eps/3".  Everything else is evaluated
exactly as printed, including the T2/T3 cubic coefficients whose classical
limits are known to disagree with the oracle (flagged, not corrected).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .dynamics import KineState, MomentumState, grav_potential, potential_u1
from .equilibria import EquilibriumPoint, _warn_if_outside_series_range
from .errors import InvalidParamsError
from .params import DerivedParams

_SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class QuadCoeffs:
    """Coefficients of the quadratic Hamiltonian
    (px^2+py^2)/2 + n(y px - x py) + e x^2 + f y^2 + g xy."""

    e: float
    f: float
    g: float
    n: float


@dataclass(frozen=True)
class CubicCoeffs:
    """Position-cubic coefficients: the drag part (T5) is state-dependent
    and lives in drag_cubic_t5."""

    t1: float
    t2: float
    t3: float
    t4: float


def quad_coeffs(d: DerivedParams) -> QuadCoeffs:
    """Quadratic expansion coefficients E, F, G.

    E carries the transposed eps-pair (-2 eps outside, +6 gamma eps inside
    the gamma bracket); G's gamma bracket opens with the constant 6 plus
    2 eps/3.  Both corrections are pinned by the finite-difference Hessian
    oracle and recorded in the ledger.  F is as printed.
    """
    _warn_if_outside_series_range(d)
    e_ = d.eps
    a = d.a2
    g_ = d.gamma
    w = d.nw1
    s3 = _SQRT3

    e_val = (1.0 / 16.0) * (
        2.0 - 2.0 * e_ - 3.0 * a - (31.0 / 2.0) * a * e_
        - ((69.0 + g_) / (6.0 * s3)) * w
        + (2.0 * (307.0 + 75.0 * g_) / (27.0 * s3)) * w * e_
        + g_ * (6.0 * e_ + 12.0 * a + a * e_ / 3.0
                + ((199.0 + 17.0 * g_) / (6.0 * s3)) * w
                - (2.0 * (226.0 + 99.0 * g_) / (27.0 * s3)) * w * e_))

    f_val = (-1.0 / 16.0) * (
        10.0 - 2.0 * e_ + 21.0 * a - (717.0 / 18.0) * a * e_
        - ((67.0 + 19.0 * g_) / (6.0 * s3)) * w
        + (2.0 * (413.0 - 39.0 * g_) / (27.0 * s3)) * w * e_
        + g_ * (6.0 * e_ - (293.0 / 18.0) * a * e_
                + ((187.0 + 27.0 * g_) / (6.0 * s3)) * w
                - (4.0 * (247.0 + 3.0 * g_) / (27.0 * s3)) * w * e_))

    g_val = (s3 / 8.0) * (
        2.0 * e_ + 6.0 * a - (37.0 / 2.0) * a * e_
        - ((13.0 + g_) / (2.0 * s3)) * w
        + (2.0 * (79.0 - 7.0 * g_) / (27.0 * s3)) * w * e_
        - g_ * (6.0 + 2.0 * e_ / 3.0 + 13.0 * a - (33.0 / 2.0) * a * e_
                + ((11.0 - g_) / (2.0 * s3)) * w
                - ((186.0 - g_) / (9.0 * s3)) * w * e_))

    return QuadCoeffs(e=e_val, f=f_val, g=g_val, n=d.n)


def cubic_coeffs(d: DerivedParams) -> CubicCoeffs:
    """Cubic expansion coefficients T1..T4, exactly as printed.

    Sign convention: these are coefficients of the cubic Hamiltonian
    H3 = +(1/3!) (x^3 T1 + 3 x^2 y T2 + 3 x y^2 T3 + y^3 T4 + 6 T5); with
    that reading T1 and T4 match the third-derivative oracle classically.
    T2 and T3 do not (ledger entries; no internal relation pins them).
    """
    _warn_if_outside_series_range(d)
    e = d.eps
    a = d.a2
    g = d.gamma
    w = d.nw1
    s3 = _SQRT3

    t1 = (3.0 / 16.0) * (
        (16.0 / 3.0) * e + 6.0 * a - (979.0 / 18.0) * a * e
        + ((143.0 + 9.0 * g) / (6.0 * s3)) * w
        + ((459.0 + 376.0 * g) / (27.0 * s3)) * w * e
        + g * (14.0 + 4.0 * e / 3.0 + 25.0 * a - (1507.0 / 18.0) * a * e
               - ((215.0 + 29.0 * g) / (6.0 * s3)) * w
               - (2.0 * (1174.0 + 169.0 * g) / (27.0 * s3)) * w * e))

    t2 = (3.0 * s3 / 16.0) * (
        14.0 - (16.0 / 3.0) * e + a / 3.0 - (367.0 / 18.0) * a * e
        + (115.0 * (1.0 + g) / (18.0 * s3)) * w
        - ((959.0 - 136.0 * g) / (27.0 * s3)) * w * e
        + g * ((32.0 / 3.0) * e + 40.0 * a - (382.0 / 9.0) * a * e
               + ((511.0 + 53.0 * g) / (6.0 * s3)) * w
               - ((2519.0 - 24.0 * g) / (27.0 * s3)) * w * e))

    t3 = (-9.0 / 16.0) * (
        (8.0 / 3.0) * e + (203.0 / 6.0) * a - (625.0 / 54.0) * a * e
        - ((105.0 + 15.0 * g) / (18.0 * s3)) * w
        - ((403.0 - 114.0 * g) / (81.0 * s3)) * w * e
        + g * (2.0 - (4.0 / 9.0) * e + (55.0 / 2.0) * a - (797.0 / 54.0) * a * e
               + ((197.0 + 23.0 * g) / (18.0 * s3)) * w
               - ((211.0 - 32.0 * g) / (81.0 * s3)) * w * e))

    t4 = (-9.0 * s3 / 16.0) * (
        2.0 - (8.0 / 3.0) * e + (23.0 / 3.0) * a - 44.0 * a * e
        - ((37.0 + g) / (18.0 * s3)) * w
        - ((219.0 + 253.0 * g) / (81.0 * s3)) * w * e
        + g * (4.0 * e + (88.0 / 27.0) * a * e
               + ((241.0 + 45.0 * g) / (18.0 * s3)) * w
               - ((1558.0 - 126.0 * g) / (81.0 * s3)) * w * e))

    return CubicCoeffs(t1=t1, t2=t2, t3=t3, t4=t4)


def drag_cubic_t5(disp: KineState, a: float, b: float, w1: float) -> float:
    """Velocity-dependent cubic drag term on a displacement state.

    (a, b) are the offsets of the expansion point from the radiating
    primary; (x, y, vx, vy) are displacements from the equilibrium.
    """
    den = a * a + b * b
    if den <= 0.0:
        raise InvalidParamsError("expansion point sits on the radiating primary")
    x, y, vx, vy = disp.x, disp.y, disp.vx, disp.vy
    along = a * x + b * y
    across = b * x - a * y
    return (w1 / (2.0 * den ** 3)) * (
        (a * vx + b * vy) * (3.0 * along - across * across)
        - 2.0 * (x * vx + y * vy) * along * den)


def series_l0_l1(d: DerivedParams):
    """Constant term L0 and the four linear coefficients of L1.

    Returns (l0, {c_vx, c_vy, c_x, c_y}) where c_* are the coefficients of
    vx, vy, x, y in the linear expansion term.  The printed coordinate
    coefficients do not vanish at the expansion point (they should, at a
    true equilibrium); they are evaluated as printed and flagged in the
    ledger, not repaired.
    """
    _warn_if_outside_series_range(d)
    e = d.eps
    a2 = d.a2
    g = d.gamma
    w = d.nw1
    s3 = _SQRT3
    n = d.n

    from .equilibria import locate_series_linear

    _, _, a, b = locate_series_linear(d)
    if a == 0.0:
        raise InvalidParamsError("degenerate expansion point: a = 0")

    l0 = (1.5 - 2.0 * e / 3.0 - g * e / 3.0 + 3.0 * g * a2 / 4.0
          - 1.5 * a2 * e - g * a2
          - (s3 / 4.0) * w + (2.0 * g / (3.0 * s3)) * w
          - (1.0 / (3.0 * s3)) * e * w - (23.0 / (54.0 * s3)) * e * w
          - n * math.atan2(b, a))

    c_vx = (-s3 / 2.0 - 5.0 * a2 / (8.0 * s3) + 7.0 * e * a2 / (12.0 * s3)
            + (4.0 / 9.0) * w - (g / 18.0) * w)
    c_vy = (0.5 - e / 3.0 - a2 / 8.0 + e * a2 / (12.0 * s3)
            - w / (6.0 * s3) + (2.0 * n * e / (3.0 * s3)) * w)
    c_x = -(-0.5 + g / 2.0 + 9.0 * a2 / 8.0 + 15.0 * g * a2 / 8.0
            - 35.0 * e * a2 / 12.0 - 29.0 * g * e * a2 / 12.0
            + (3.0 * s3 / 8.0) * w - (2.0 * g / (3.0 * s3)) * w
            - (5.0 * e / (12.0 * s3)) * w - (7.0 * g * e / (4.0 * s3)) * w)
    c_y = -(15.0 * s3 * a2 / 2.0 + 9.0 * s3 * g * a2 / 8.0
            - 2.0 * s3 * e * a2 - 2.0 * s3 * g * e * a2
            - w / 8.0 + g * w - (43.0 * e / 36.0) * w)

    return l0, {"c_vx": c_vx, "c_vy": c_vy, "c_x": c_x, "c_y": c_y}


def h2_eval(m: MomentumState, q: QuadCoeffs) -> float:
    """Quadratic Hamiltonian on a displacement state in momentum form.

    The y^2 coefficient multiplies y^2 (the printed standalone "F^2" is a
    typo for F y^2; ledger entry).
    """
    return ((m.px * m.px + m.py * m.py) / 2.0
            + q.n * (m.y * m.px - m.x * m.py)
            + q.e * m.x * m.x + q.f * m.y * m.y + q.g * m.x * m.y)


# ---------------------------------------------------------------------------
# finite-difference oracles
# ---------------------------------------------------------------------------
#
# Base steps: 1e-3 for the second derivatives, 4e-3 for the third, each with
# one Richardson halving.  A bare 1e-4 step for the second derivatives looks
# natural but loses ~9e-8 to roundoff (2nd differences divide ~1e-16 noise
# by h^2), busting the 1e-8 classical tolerance; the larger base step plus
# extrapolation lands near 5e-9.

_H2_BASE = 1e-3
_H3_BASE = 4e-3


def _hess_once(f, x, y, h):
    f0 = f((x, y))
    uxx = (f((x + h, y)) - 2.0 * f0 + f((x - h, y))) / (h * h)
    uyy = (f((x, y + h)) - 2.0 * f0 + f((x, y - h))) / (h * h)
    uxy = (f((x + h, y + h)) - f((x + h, y - h))
           - f((x - h, y + h)) + f((x - h, y - h))) / (4.0 * h * h)
    return uxx, uyy, uxy


def fd_hessian_oracle(eq: EquilibriumPoint, d: DerivedParams, base_step: float = _H2_BASE):
    """Richardson-extrapolated second partials of the potential at a point.

    Drag-free check only: the quadratic coefficients' w1 content involves
    momenta, not just the potential, so this oracle requires w1 = 0.
    """
    if d.w1 != 0.0:
        raise InvalidParamsError(
            "the Hessian oracle is position-only; it requires w1 = 0 "
            "(the spectral oracle covers the drag-perturbed case)")

    def f(p):
        return potential_u1(p, d)

    x, y = eq.x_star, eq.y_star
    coarse = _hess_once(f, x, y, base_step)
    fine = _hess_once(f, x, y, base_step / 2.0)
    return tuple((4.0 * fv - cv) / 3.0 for fv, cv in zip(fine, coarse))


def _third_once(f, x, y, h):
    def fxx_at(yy):
        return (f((x + h, yy)) - 2.0 * f((x, yy)) + f((x - h, yy))) / (h * h)

    def fyy_at(xx):
        return (f((xx, y + h)) - 2.0 * f((xx, y)) + f((xx, y - h))) / (h * h)

    pxxx = (f((x + 2.0 * h, y)) - 2.0 * f((x + h, y))
            + 2.0 * f((x - h, y)) - f((x - 2.0 * h, y))) / (2.0 * h ** 3)
    pyyy = (f((x, y + 2.0 * h)) - 2.0 * f((x, y + h))
            + 2.0 * f((x, y - h)) - f((x, y - 2.0 * h))) / (2.0 * h ** 3)
    pxxy = (fxx_at(y + h) - fxx_at(y - h)) / (2.0 * h)
    pxyy = (fyy_at(x + h) - fyy_at(x - h)) / (2.0 * h)
    return pxxx, pxxy, pxyy, pyyy


def fd_third_oracle(eq: EquilibriumPoint, d: DerivedParams, base_step: float = _H3_BASE):
    """Richardson-extrapolated third partials of the gravity+oblateness part
    of the potential (the centrifugal term is quadratic and contributes
    nothing at third order).  Requires w1 = 0."""
    if d.w1 != 0.0:
        raise InvalidParamsError("the cubic oracle is position-only; it requires w1 = 0")

    def f(p):
        return grav_potential(p, d)

    x, y = eq.x_star, eq.y_star
    coarse = _third_once(f, x, y, base_step)
    fine = _third_once(f, x, y, base_step / 2.0)
    return tuple((4.0 * fv - cv) / 3.0 for fv, cv in zip(fine, coarse))
