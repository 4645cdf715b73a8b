"""Second-order normalization of the quadratic Hamiltonian.

The linear symplectic change of variables X = J T sends the quadratic
Hamiltonian to omega1 I1 - omega2 I2 in action-angle variables
(P_i = sqrt(2 I_i omega_i) cos phi_i, Q_i = sqrt(2 I_i / omega_i) sin phi_i).
This module evaluates the printed entries of the map (the x-row and y-row
coefficients), reconstructs orbits from constant actions, and checks the
reconstruction against an RK4 integration of the linearized flow.

Angle rates: Hamilton's equations on omega1 I1 - omega2 I2 give
d(phi1)/dt = +omega1 and d(phi2)/dt = -omega2.  The retrograde mode-2 angle
is essential — with +omega2 the reconstructed mode-2 orbit violates the
linearized flow at leading order (ledger entry ``angle_rate_mode2``).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .dynamics import KineState, eom_rhs
from .equilibria import locate_series, refine_newton
from .errors import (
    InvalidParamsError,
    ResonantDegeneracyError,
    UndefinedQuantityError,
)
from .expansion import quad_coeffs
from .kernels import rk4_linear
from .numerics import fd_jacobian
from .params import DerivedParams
from .stability import char_roots

_SQRT3 = math.sqrt(3.0)
_INV_SQRT2 = 1.0 / math.sqrt(2.0)
_RESONANCE_TOL = 1e-9


@dataclass(frozen=True)
class NormalFormMap:
    """Frequencies, scale factors, and the printed entries of the linear
    normalizing map (x-row: j13, j14; y-row: j21, j22, j23, j24)."""

    omega1: float
    omega2: float
    l1: float
    l2: float
    k1: float
    k2: float
    j13: float
    j14: float
    j21: float
    j22: float
    j23: float
    j24: float


@dataclass(frozen=True)
class ActionAngle:
    i1: float
    i2: float
    phi1: float = 0.0
    phi2: float = 0.0


def lk_factors(omega1: float, omega2: float):
    """Scale factors l_j = sqrt(4 omega_j^2 + 9), k1 = sqrt(2 omega1^2 - 1),
    k2 = sqrt(1 - 2 omega2^2).

    Both k-squares vanish on the omega = 1/sqrt(2) resonance, where the
    normalization degenerates.
    """
    if not (omega1 > _INV_SQRT2 > omega2 > 0.0):
        raise InvalidParamsError(
            f"need omega1 > 1/sqrt(2) > omega2 > 0, got ({omega1}, {omega2})")
    k1_sq = 2.0 * omega1 * omega1 - 1.0
    k2_sq = 1.0 - 2.0 * omega2 * omega2
    if k1_sq < _RESONANCE_TOL or k2_sq < _RESONANCE_TOL:
        raise ResonantDegeneracyError(
            "a frequency sits on the 1/sqrt(2) resonance; the scale factors vanish")
    l1 = math.sqrt(4.0 * omega1 * omega1 + 9.0)
    l2 = math.sqrt(4.0 * omega2 * omega2 + 9.0)
    return l1, l2, math.sqrt(k1_sq), math.sqrt(k2_sq)


def j_coeffs(d: DerivedParams, omega1: float, omega2: float,
             branch: str = "L4") -> NormalFormMap:
    """The six printed entries of the normalizing map, first order in the
    perturbations.

    Evaluated exactly as printed except for the documented corrections: the
    mode-2 y-coefficient's final two brackets carry mode-2 scale factors
    (ledger ``j24_mode2_factors``).  The series were derived for the upper
    point; the lower branch reuses them and is flagged experimental.
    """
    if branch == "L5":
        warnings.warn(
            "the normal-form series were derived for the upper triangular "
            "point; L5 use is experimental", UserWarning, stacklevel=2)
    elif branch != "L4":
        raise InvalidParamsError(f"branch must be 'L4' or 'L5', got {branch!r}")

    l1, l2, k1, k2 = lk_factors(omega1, omega2)
    e = d.eps
    a = d.a2
    g = d.gamma
    w = d.nw1
    n = d.n
    s3 = _SQRT3

    l1s = l1 * l1
    l2s = l2 * l2
    k1s = k1 * k1
    k2s = k2 * k2

    # shared brackets (the trailing eps cross-term differs: 431 vs 413)
    def lead_bracket(c: float) -> float:
        return (e + 45.0 * a / 2.0 - 717.0 * a * e / 36.0
                + ((67.0 + 19.0 * g) / (12.0 * s3)) * w
                - ((c - 3.0 * g) / (27.0 * s3)) * w * e)

    b431 = lead_bracket(431.0)
    b413 = lead_bracket(413.0)

    # gamma/l^2 bracket with the 293 coefficient (J14/J21/J22 flavor)
    gl_293 = (3.0 * e - 293.0 * a / 36.0
              + ((187.0 + 27.0 * g) / (12.0 * s3)) * w
              - (2.0 * (247.0 + 3.0 * g) / (27.0 * s3)) * w * e)
    # J13's own gamma/l^2 bracket (29, and both drag terms negative)
    gl_29 = (3.0 * e - 29.0 * a / 36.0
             - ((187.0 + 27.0 * g) / (12.0 * s3)) * w
             - (2.0 * (247.0 + 3.0 * g) / (27.0 * s3)) * w * e)

    # 1/k^2 bracket, common to all four Q-row coefficients
    k_common = (e / 2.0 - 3.0 * a - 73.0 * a * e / 24.0
                + ((1.0 - 9.0 * g) / (24.0 * s3)) * w
                + ((53.0 - 39.0 * g) / (54.0 * s3)) * w * e)

    # gamma/k^2 bracket: the eps cross-term constant is 266 in the mode-1
    # x-coefficient and 268 elsewhere
    def gk_bracket(c: float) -> float:
        return (e - 3.0 * a - 299.0 * a * e / 72.0
                - ((6.0 - 5.0 * g) / (12.0 * s3)) * w
                - ((c - 93.0 * g) / (54.0 * s3)) * w * e)

    gk_266 = gk_bracket(266.0)
    gk_268 = gk_bracket(268.0)
    # J14's variant: eps cross-term (268 - 9 gamma)/54
    gk_268_9 = (e - 3.0 * a - 299.0 * a * e / 72.0
                - ((6.0 - 5.0 * g) / (12.0 * s3)) * w
                - ((268.0 - 9.0 * g) / (54.0 * s3)) * w * e)

    j13 = (l1 / (2.0 * omega1 * k1)) * (
        1.0
        - (1.0 / (2.0 * l1s)) * b431
        + (g / (2.0 * l1s)) * gl_29
        - (1.0 / (2.0 * k1s)) * k_common
        - (g / (4.0 * k1s)) * gk_266
        + (e / (4.0 * l1s * k1s)) * (3.0 * a / 4.0
                                     + ((33.0 + 14.0 * g) / (12.0 * s3)) * w)
        + (g * e / (8.0 * l1s * k1s)) * (347.0 * a / 36.0
                                         - ((43.0 - 8.0 * g) / (4.0 * s3)) * w))

    j14 = (l2 / (2.0 * omega2 * k2)) * (
        1.0
        - (1.0 / (2.0 * l2s)) * b431
        - (g / (2.0 * l2s)) * gl_293
        - (1.0 / (2.0 * k2s)) * k_common
        + (g / (2.0 * k2s)) * gk_268_9
        - (e / (4.0 * l2s * k2s)) * (33.0 * a / 4.0
                                     + ((1643.0 - 93.0 * g) / (216.0 * s3)) * w)
        + (g * e / (4.0 * l2s * k2s)) * (737.0 * a / 72.0
                                         - ((13.0 + 2.0 * g) / s3) * w))

    j21 = (-4.0 * n * omega1 / (l1 * k1)) * (
        1.0
        + (1.0 / (2.0 * l1s)) * b413
        - (g / (2.0 * l1s)) * gl_293
        - (1.0 / (2.0 * k1s)) * k_common
        - (g / (4.0 * k1s)) * gk_268
        + (e / (8.0 * l1s * k1s)) * (33.0 * a / 4.0
                                     + ((68.0 - 10.0 * g) / (24.0 * s3)) * w)
        + (g * e / (8.0 * l1s * k1s)) * (242.0 * a / 9.0
                                         + ((43.0 - 8.0 * g) / (4.0 * s3)) * w))

    j22 = (4.0 * n * omega2 / (l2 * k2)) * (
        1.0
        + (1.0 / (2.0 * l2s)) * b413
        - (g / (2.0 * l2s)) * gl_293
        + (1.0 / (2.0 * k2s)) * k_common
        - (g / (4.0 * k2s)) * gk_268
        + (e / (4.0 * l2s * k2s)) * (33.0 * a / 4.0
                                     + ((34.0 + 5.0 * g) / (12.0 * s3)) * w)
        + (g * e / (8.0 * l2s * k2s)) * (75.0 * a / 2.0
                                         + ((43.0 - 8.0 * g) / (4.0 * s3)) * w))

    # leading series shared by both P-row coefficients
    p_lead = (2.0 * e + 6.0 * a + 37.0 * a * e / 2.0
              - ((13.0 + g) / (2.0 * s3)) * w
              + (2.0 * (79.0 - 7.0 * g) / (9.0 * s3)) * w * e
              - g * (6.0 + 2.0 * e / 3.0 + 13.0 * a - 33.0 * a * e / 2.0
                     + ((11.0 - g) / (2.0 * s3)) * w
                     - ((186.0 - g) / (9.0 * s3)) * w * e))

    def p_l_bracket() -> float:
        return 51.0 * a + ((14.0 + 8.0 * g) / (3.0 * s3)) * w

    def p_k_eps_bracket() -> float:
        return 3.0 * a + ((19.0 + 6.0 * g) / (6.0 * s3)) * w

    def p_gl_bracket() -> float:
        return (6.0 * e + 135.0 * a - 808.0 * a * e / 9.0
                - ((67.0 + 19.0 * g) / (2.0 * s3)) * w
                - ((755.0 + 19.0 * g) / (9.0 * s3)) * w * e)

    def p_gk_bracket() -> float:
        return (3.0 * e - 18.0 * a - 55.0 * a * e / 4.0
                - ((1.0 - 9.0 * g) / (4.0 * s3)) * w
                + ((923.0 - 60.0 * g) / (12.0 * s3)) * w * e)

    j23 = (s3 / (4.0 * omega1 * l1 * k1)) * (
        p_lead
        + (1.0 / (2.0 * l1s)) * p_l_bracket()
        - (e / k1s) * p_k_eps_bracket()
        - (g / (2.0 * l1s)) * p_gl_bracket()
        - (g / (2.0 * k1s)) * p_gk_bracket()
        + (g * e / (8.0 * l1s * k1s)) * (9.0 * a / 2.0
                                         + ((34.0 - 5.0 * g) / (2.0 * s3)) * w))

    j24 = (s3 / (4.0 * omega2 * l2 * k2)) * (
        p_lead
        - (1.0 / (2.0 * l2s)) * p_l_bracket()
        - (e / k2s) * p_k_eps_bracket()
        - (g / (2.0 * l2s)) * p_gl_bracket()
        - (g / (2.0 * k2s)) * p_gk_bracket()      # ledger: k2 (printed k1)
        - (g * e / (4.0 * l2s * k2s)) * (99.0 * a / 2.0
                                         + ((34.0 - 5.0 * g) / (2.0 * s3)) * w))

    return NormalFormMap(omega1=omega1, omega2=omega2,
                         l1=l1, l2=l2, k1=k1, k2=k2,
                         j13=j13, j14=j14, j21=j21, j22=j22,
                         j23=j23, j24=j24)


def normal_form_map(d: DerivedParams, branch: str = "L4") -> NormalFormMap:
    """Convenience pipeline: quadratic coefficients -> frequencies -> map."""
    sp = char_roots(quad_coeffs(d))
    if sp.classification != "stable" or sp.omega1 is None:
        raise UndefinedQuantityError(
            "the normal form needs an oscillatory (stable) spectrum")
    return j_coeffs(d, sp.omega1, sp.omega2, branch=branch)


def action_angle_map(aa: ActionAngle, omega1: float, omega2: float):
    """(I, phi) -> (Q1, Q2, P1, P2)."""
    if aa.i1 < 0.0 or aa.i2 < 0.0:
        raise InvalidParamsError("actions must be non-negative")
    if omega1 <= 0.0 or omega2 <= 0.0:
        raise InvalidParamsError("frequencies must be positive")
    q1 = math.sqrt(2.0 * aa.i1 / omega1) * math.sin(aa.phi1)
    q2 = math.sqrt(2.0 * aa.i2 / omega2) * math.sin(aa.phi2)
    p1 = math.sqrt(2.0 * aa.i1 * omega1) * math.cos(aa.phi1)
    p2 = math.sqrt(2.0 * aa.i2 * omega2) * math.cos(aa.phi2)
    return q1, q2, p1, p2


def inverse_action_angle(q1: float, q2: float, p1: float, p2: float,
                         omega1: float, omega2: float) -> ActionAngle:
    """(Q, P) -> (I, phi); the angle of a zero-amplitude mode is 0."""
    if omega1 <= 0.0 or omega2 <= 0.0:
        raise InvalidParamsError("frequencies must be positive")
    i1 = (p1 * p1 / omega1 + omega1 * q1 * q1) / 2.0
    i2 = (p2 * p2 / omega2 + omega2 * q2 * q2) / 2.0
    phi1 = math.atan2(omega1 * q1, p1) if i1 > 0.0 else 0.0
    phi2 = math.atan2(omega2 * q2, p2) if i2 > 0.0 else 0.0
    return ActionAngle(i1=i1, i2=i2, phi1=phi1, phi2=phi2)


def normal_h2(aa: ActionAngle, omega1: float, omega2: float) -> float:
    """The normal-form Hamiltonian omega1 I1 - omega2 I2."""
    return omega1 * aa.i1 - omega2 * aa.i2


def _angles_at(nf: NormalFormMap, aa0: ActionAngle, t: float):
    # prograde mode 1, retrograde mode 2 (see module docstring)
    return aa0.phi1 + nf.omega1 * t, aa0.phi2 - nf.omega2 * t


def orbit_reconstruct(nf: NormalFormMap, aa0: ActionAngle, t: float) -> Tuple[float, float]:
    """Position displacement (x, y) of the constant-action orbit at time t."""
    x, y, _, _ = orbit_reconstruct_state(nf, aa0, t)
    return x, y


def orbit_reconstruct_state(nf: NormalFormMap, aa0: ActionAngle, t: float):
    """Displacement (x, y, vx, vy) of the constant-action orbit at time t.

    x uses the two Q-row terms; y uses all four printed terms with the final
    one read as j24 sqrt(2 I2 omega2) cos(phi2) (ledger entry
    ``orbit_y_final_term``).  Velocities are the exact time derivatives.
    """
    if aa0.i1 < 0.0 or aa0.i2 < 0.0:
        raise InvalidParamsError("actions must be non-negative")
    w1_, w2_ = nf.omega1, nf.omega2
    amp_q1 = math.sqrt(2.0 * aa0.i1 / w1_)
    amp_q2 = math.sqrt(2.0 * aa0.i2 / w2_)
    amp_p1 = math.sqrt(2.0 * aa0.i1 * w1_)
    amp_p2 = math.sqrt(2.0 * aa0.i2 * w2_)
    ph1, ph2 = _angles_at(nf, aa0, t)
    c1, s1 = math.cos(ph1), math.sin(ph1)
    c2, s2 = math.cos(ph2), math.sin(ph2)

    x = nf.j13 * amp_p1 * c1 + nf.j14 * amp_p2 * c2
    y = (nf.j21 * amp_q1 * s1 + nf.j22 * amp_q2 * s2
         + nf.j23 * amp_p1 * c1 + nf.j24 * amp_p2 * c2)
    # d(ph1)/dt = +w1, d(ph2)/dt = -w2
    vx = -nf.j13 * amp_p1 * w1_ * s1 + nf.j14 * amp_p2 * w2_ * s2
    vy = (nf.j21 * amp_q1 * w1_ * c1 - nf.j22 * amp_q2 * w2_ * c2
          - nf.j23 * amp_p1 * w1_ * s1 + nf.j24 * amp_p2 * w2_ * s2)
    return x, y, vx, vy


def linearized_matrix(d: DerivedParams, eq_xy) -> np.ndarray:
    """Finite-difference Jacobian of the full vector field at a rest point."""
    def field(state):
        s = KineState(float(state[0]), float(state[1]),
                      float(state[2]), float(state[3]))
        return np.array(eom_rhs(s, d))

    y0 = np.array([float(eq_xy[0]), float(eq_xy[1]), 0.0, 0.0])
    return fd_jacobian(field, y0, step=1e-5, richardson=True)


def reconstruction_residual(nf: NormalFormMap, d: DerivedParams,
                            aa0: ActionAngle, t_span, dt: float) -> float:
    """Largest relative gap between the reconstructed orbit and an RK4
    integration of the linearized flow started from the reconstructed state.

    The residual is max_t |(x, y)_recon - (x, y)_rk4|_2 normalized by the
    largest reconstructed position amplitude.  Zero-action input returns 0.
    """
    if aa0.i1 == 0.0 and aa0.i2 == 0.0:
        return 0.0
    t0, t1 = float(t_span[0]), float(t_span[1])
    if not (t1 > t0 and dt > 0.0):
        raise InvalidParamsError("need t1 > t0 and dt > 0")
    eq = refine_newton(d, locate_series(d, "L4").xy)
    mat = linearized_matrix(d, eq.xy)
    nsteps = int(round((t1 - t0) / dt))
    x0, y0, vx0, vy0 = orbit_reconstruct_state(nf, aa0, t0)
    traj = rk4_linear(mat, (x0, y0, vx0, vy0), nsteps, dt)

    worst = 0.0
    amp = 0.0
    for k in range(nsteps + 1):
        t = t0 + k * dt
        xr, yr = orbit_reconstruct(nf, aa0, t)
        amp = max(amp, math.hypot(xr, yr))
        gap = math.hypot(xr - traj[k, 0], yr - traj[k, 1])
        worst = max(worst, gap)
    if amp == 0.0:
        return 0.0
    return worst / amp
