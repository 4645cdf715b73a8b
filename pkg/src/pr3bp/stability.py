"""Linear stability of the triangular points.

Characteristic matrix and biquadratic polynomial, discriminant and
frequencies, critical mass ratio (printed series and a bisection oracle),
the printed frequency/gamma^2 identities as residual evaluators, and a
finite-difference spectral oracle on the full vector field.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .dynamics import KineState, eom_rhs
from .equilibria import EquilibriumPoint, locate_series, refine_newton
from .errors import NoRootError, UndefinedQuantityError
from .expansion import QuadCoeffs, quad_coeffs
from .numerics import biquadratic_roots, fd_jacobian
from .params import DerivedParams, SystemParams, derive_params

_SQRT3 = math.sqrt(3.0)
_MARGINAL_TOL = 1e-12


@dataclass(frozen=True)
class Spectrum:
    """Characteristic data of the quadratic Hamiltonian.

    The quartic in lambda is lambda^4 + b_coeff lambda^2 + c_coeff; disc is
    its discriminant as a quadratic in lambda^2.  omega1/omega2 are present
    when the roots are purely imaginary pairs +/- i omega (and for marginal
    spectra, where they coincide at sqrt(b/2)).
    """

    b_coeff: float
    c_coeff: float
    disc: float
    omega1: Optional[float]
    omega2: Optional[float]
    classification: str  # 'stable' | 'marginal' | 'unstable'


@dataclass(frozen=True)
class CriticalMu:
    mu_c: float
    method: str  # 'series' | 'numeric'


def char_roots(q: QuadCoeffs) -> Spectrum:
    """Solve the characteristic biquadratic and classify.

    b = 2(E + F + n^2), c = 4EF - G^2 + n^4 - 2n^2(E + F),
    D = b^2 - 4c.  Stable needs D > 0 and both lambda^2 roots negative;
    |D| <= 1e-12 is marginal (double root at the resonance).
    """
    n2 = q.n * q.n
    b = 2.0 * (q.e + q.f + n2)
    c = 4.0 * q.e * q.f - q.g * q.g + n2 * n2 - 2.0 * n2 * (q.e + q.f)
    disc = b * b - 4.0 * c

    if abs(disc) <= _MARGINAL_TOL:
        if b > 0.0:
            w = math.sqrt(b / 2.0)
            return Spectrum(b, c, disc, w, w, "marginal")
        return Spectrum(b, c, disc, None, None, "marginal")

    z1, z2 = biquadratic_roots(b, c)
    if disc < 0.0 or not (isinstance(z1, float) and isinstance(z2, float)):
        return Spectrum(b, c, disc, None, None, "unstable")
    if z1 < 0.0 and z2 < 0.0:
        w_a = math.sqrt(-z1)
        w_b = math.sqrt(-z2)
        w1, w2 = (w_a, w_b) if w_a >= w_b else (w_b, w_a)
        return Spectrum(b, c, disc, w1, w2, "stable")
    return Spectrum(b, c, disc, None, None, "unstable")


def matrix_a_det(q: QuadCoeffs, lam):
    """Determinant of the 4x4 characteristic matrix at lambda.

    Rows: [2E, G, lambda, -n], [G, 2F, n, lambda], [-lambda, n, 1, 0],
    [-n, -lambda, 0, 1].  For real or purely imaginary lambda the value is
    real (the quartic is even) and a float is returned; otherwise complex.
    """
    lam_c = complex(lam)
    a = np.array(
        [[2.0 * q.e, q.g, lam_c, -q.n],
         [q.g, 2.0 * q.f, q.n, lam_c],
         [-lam_c, q.n, 1.0, 0.0],
         [-q.n, -lam_c, 0.0, 1.0]],
        dtype=complex)
    det = complex(np.linalg.det(a))
    if lam_c.imag == 0.0 or lam_c.real == 0.0:
        return det.real
    return det


# printed critical-mass-ratio series
MU_CRIT_CLASSICAL = 0.0385208965045513718
_MU_C_EPS = -0.221895916277307669
_MU_C_A2 = 2.1038871010983331
_MU_C_EPS_A2 = 0.493433373141671349
_MU_C_W = 0.704139054372097028
_MU_C_EPS_W = 0.401154273957540929


def mu_crit_series(d: DerivedParams) -> CriticalMu:
    """Critical mass ratio from the printed first-order series."""
    w = d.nw1
    mu_c = (MU_CRIT_CLASSICAL
            + _MU_C_EPS * d.eps
            + _MU_C_A2 * d.a2
            + _MU_C_EPS_A2 * d.eps * d.a2
            + _MU_C_W * w
            + _MU_C_EPS_W * d.eps * w)
    return CriticalMu(mu_c, "series")


def _disc_at_mu(mu: float, d: DerivedParams) -> float:
    p = SystemParams(mu=mu, q1=d.q1, a2=d.a2, c_d=d.c_d,
                     w1_override=d.w1_override)
    return char_roots(quad_coeffs(derive_params(p))).disc


def mu_crit_numeric(d: DerivedParams, tol: float = 1e-13) -> CriticalMu:
    """Critical mass ratio by bisection on the discriminant.

    The discriminant is evaluated through the quadratic-coefficient series
    at each trial mu (the perturbation parameters ride along; w1 follows
    c_d unless overridden).  Bracket (1e-6, 0.5 - 1e-6).
    """
    lo, hi = 1e-6, 0.5 - 1e-6
    f_lo = _disc_at_mu(lo, d)
    f_hi = _disc_at_mu(hi, d)
    if f_lo == 0.0:
        return CriticalMu(lo, "numeric")
    if f_hi == 0.0:
        return CriticalMu(hi, "numeric")
    if (f_lo > 0.0) == (f_hi > 0.0):
        raise NoRootError("discriminant does not change sign on (0, 1/2)")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        f_mid = _disc_at_mu(mid, d)
        if abs(f_mid) <= tol or (hi - lo) <= 1e-17:
            return CriticalMu(mid, "numeric")
        if (f_mid > 0.0) == (f_lo > 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return CriticalMu(0.5 * (lo + hi), "numeric")


def freq_identity_residuals(d: DerivedParams, sp: Spectrum) -> dict:
    """Residuals of the printed frequency/gamma^2 identities.

    r24: (w1^2 + w2^2) minus its printed series.
    r25: w1^2 w2^2 minus its printed series.
    r26_1, r26_2: gamma^2 minus the printed quartic-in-omega identity at
                  each frequency.
    r27: gamma^2 minus the printed identity in u = w1 w2.
    Evaluated as residuals only; never solved for gamma.
    """
    if sp.omega1 is None or sp.omega2 is None:
        raise UndefinedQuantityError(
            "frequency identities need an oscillatory spectrum")
    e = d.eps
    a = d.a2
    g = d.gamma
    w = d.nw1
    s3 = _SQRT3
    w1sq = sp.omega1 * sp.omega1
    w2sq = sp.omega2 * sp.omega2

    rhs24 = (1.0 - g * e / 2.0 + 3.0 * g * a / 2.0 + 83.0 * e * a / 12.0
             + 299.0 * g * e * a / 144.0
             - w / (24.0 * s3) + 5.0 * g * w / (8.0 * s3)
             - 53.0 * e * w / (54.0 * s3) - 5.0 * g * g * w / (24.0 * s3)
             + 173.0 * g * e * w / (54.0 * s3)
             - 3.0 * g * g * e * w / (36.0 * s3))

    rhs25 = (27.0 / 16.0 - 27.0 * g * g / 16.0 + 9.0 * e / 8.0
             + 9.0 * g * e / 8.0 - 3.0 * g * g * e / 8.0
             + 117.0 * g * a / 16.0 - 241.0 * e * a / 32.0
             + 2515.0 * g * e * a / 192.0
             + 35.0 * w / (16.0 * s3) - 55.0 * s3 * g * w / 16.0
             - 5.0 * s3 * g * g * w / 4.0
             - 1277.0 * e * w / (288.0 * s3)
             + 5021.0 * g * e * w / (288.0 * s3)
             + 991.0 * g * g * e * w / (48.0 * s3))

    def rhs26(wsq: float) -> float:
        const = (1.0 + 4.0 * e / 9.0 - 107.0 * e * a / 27.0 + 2.0 * g * e / 3.0
                 + 1579.0 * g * e * a / 324.0
                 - 25.0 * w / (27.0 * s3) - 55.0 * g * w / (9.0 * s3)
                 + 3809.0 * e * w / (486.0 * s3)
                 + 4961.0 * g * e * w / (486.0 * s3))
        quad = (-16.0 / 27.0 + 32.0 * e / 243.0 + 208.0 * a / 81.0
                - 8.0 * g * a / 27.0 - 4868.0 * e * a / 729.0
                - 563.0 * g * e * a / 243.0
                + 296.0 * w / (243.0 * s3) - 10.0 * g * w / (27.0 * s3)
                - 15892.0 * e * w / (2187.0 * s3)
                - 1864.0 * g * e * w / (729.0 * s3))
        quart = (16.0 / 27.0 - 32.0 * e / 243.0 - 208.0 * a / 81.0
                 - 1880.0 * e * a / 729.0
                 - 2720.0 * w / (2187.0 * s3)
                 + 49552.0 * e * w / (6561.0 * s3)
                 - 80.0 * g * e * w / (2187.0 * s3))
        return const + quad * wsq + quart * wsq * wsq

    usq = w1sq * w2sq
    rhs27 = (1.0 + 4.0 * e / 9.0 - 107.0 * e * a / 27.0
             - 25.0 * w / (27.0 * s3) + 3809.0 * e * w / (486.0 * s3)
             + g * (2.0 * e / 3.0 + 1579.0 * e * a / 324.0
                    - 55.0 * g * w / (9.0 * s3)
                    + 4961.0 * g * e * w / (486.0 * s3))
             + (-16.0 / 27.0 + 32.0 * e / 243.0 + 208.0 * a / 81.0
                - 1880.0 * e * a / 729.0 + 320.0 * w / (243.0 * s3)
                - 15856.0 * e * w / (2187.0 * s3)) * usq)

    gsq = g * g
    return {
        "r24": (w1sq + w2sq) - rhs24,
        "r25": usq - rhs25,
        "r26_1": gsq - rhs26(w1sq),
        "r26_2": gsq - rhs26(w2sq),
        "r27": gsq - rhs27,
    }


def spectral_oracle(eq: EquilibriumPoint, d: DerivedParams,
                    fd_step: float = 1e-6):
    """Eigen-structure of the finite-difference Jacobian of the full vector
    field at an equilibrium.

    Returns (frequencies, eigenvalues): frequencies are the two distinct
    |Im lambda| values sorted descending; eigenvalues the raw 4 roots.  With
    drag the eigenvalues pick up O(w1) real parts (the damping shows up
    there first) while the frequencies move only at O(w1^2), so frequency
    comparisons are the meaningful ones.
    """
    def field(state):
        s = KineState(float(state[0]), float(state[1]),
                      float(state[2]), float(state[3]))
        return np.array(eom_rhs(s, d))

    y0 = np.array([eq.x_star, eq.y_star, 0.0, 0.0])
    jac = fd_jacobian(field, y0, step=fd_step, richardson=True)
    eigs = np.linalg.eigvals(jac)
    ims = np.sort(np.abs(eigs.imag))
    # conjugate pairs: take one representative of each
    freqs = (float(ims[3]), float(ims[1]))
    return freqs, eigs


def classify(d: DerivedParams) -> dict:
    """End-to-end stability summary.

    Locates and refines the upper triangular point, evaluates the quadratic
    coefficients and the characteristic roots, and computes both critical
    mass ratios.
    """
    eq = refine_newton(d, locate_series(d, "L4").xy)
    sp = char_roots(quad_coeffs(d))
    return {
        "equilibrium": eq,
        "spectrum": sp,
        "mu_c_series": mu_crit_series(d),
        "mu_c_numeric": mu_crit_numeric(d),
        "stable": sp.classification == "stable",
    }
