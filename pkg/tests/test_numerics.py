"""Finite differences, 2-D Newton, RK4, biquadratic roots."""

import math

import numpy as np
import pytest

from pr3bp import (
    InvalidParamsError,
    NanDetectedError,
    NoConvergenceError,
    SingularJacobianError,
)
from pr3bp.numerics import (
    FdConfig,
    biquadratic_roots,
    fd_derive,
    newton2,
    rk4_integrate,
)


# --- finite differences -------------------------------------------------

def test_fd_first_order():
    assert fd_derive(lambda x: x * x, 1.0, 1) == pytest.approx(2.0, abs=1e-10)


def test_fd_third_order_constant():
    # constant third derivative: the five-point stencil is exact up to
    # roundoff at the per-order default step
    assert fd_derive(lambda x: x ** 3, 2.0, 3) == pytest.approx(6.0, abs=1e-6)


def test_fd_second_order_odd_function():
    assert abs(fd_derive(math.sin, 0.0, 2)) < 1e-9


def test_fd_explicit_step_honored():
    got = fd_derive(math.exp, 0.0, 1, FdConfig(step=1e-4))
    assert got == pytest.approx(1.0, abs=1e-11)


def test_fd_richardson_improves_smooth_case():
    plain = fd_derive(math.sin, 0.7, 1, FdConfig(step=1e-3, richardson=False))
    rich = fd_derive(math.sin, 0.7, 1, FdConfig(step=1e-3, richardson=True))
    exact = math.cos(0.7)
    assert abs(rich - exact) < abs(plain - exact)


def test_fd_step_range_validated():
    with pytest.raises(InvalidParamsError):
        fd_derive(math.sin, 0.0, 1, FdConfig(step=1e-10))
    with pytest.raises(InvalidParamsError):
        fd_derive(math.sin, 0.0, 1, FdConfig(step=0.5))


def test_fd_bad_order_rejected():
    with pytest.raises(InvalidParamsError):
        fd_derive(math.sin, 0.0, 4)


def test_fd_nan_detected():
    with pytest.raises(NanDetectedError):
        fd_derive(lambda x: float("nan") if x < 0 else x, 0.0, 1,
                  FdConfig(step=1e-3))


# --- newton2 -------------------------------------------------------------

def test_newton_linear_single_iteration():
    root, iterations = newton2(lambda p: (p[0] - 1.0, p[1] + 2.0), (0.0, 0.0))
    assert root[0] == pytest.approx(1.0, abs=1e-12)
    assert root[1] == pytest.approx(-2.0, abs=1e-12)
    assert iterations == 1


def test_newton_circle_line_intersection():
    root, _ = newton2(lambda p: (p[0] ** 2 + p[1] ** 2 - 1.0, p[0] - p[1]),
                      (1.0, 0.5))
    assert root[0] == pytest.approx(math.sqrt(2) / 2, abs=1e-12)
    assert root[1] == pytest.approx(math.sqrt(2) / 2, abs=1e-12)


def test_newton_degenerate_terminates():
    # double root at the origin: either converges slowly or raises, but
    # must not hang
    try:
        root, iterations = newton2(lambda p: (p[0] ** 2, p[1]), (1.0, 1.0),
                                   max_iter=60)
        assert iterations <= 60
        assert abs(root[0]) < 1e-5
    except (NoConvergenceError, SingularJacobianError):
        pass


def test_newton_row_scaling_invariance():
    def f(p):
        return (math.sin(p[0]) - 0.3, p[1] ** 3 - 2.0)

    def f_scaled(p):
        a, b = f(p)
        return (1e6 * a, 1e-4 * b)

    r1, _ = newton2(f, (0.5, 1.5))
    r2, _ = newton2(f_scaled, (0.5, 1.5), tol=1e-10)
    assert r1[0] == pytest.approx(r2[0], abs=1e-9)
    assert r1[1] == pytest.approx(r2[1], abs=1e-9)


def test_newton_no_convergence_raises():
    with pytest.raises(NoConvergenceError):
        # exp(-x) has no zero: the iteration walks right forever
        newton2(lambda p: (math.exp(-p[0]), p[1]), (0.0, 1.0), max_iter=10)


def test_newton_singular_jacobian_raises():
    with pytest.raises(SingularJacobianError):
        newton2(lambda p: (p[0] + p[1], 2.0 * p[0] + 2.0 * p[1]), (0.3, 0.4))


def test_newton_nan_detected():
    with pytest.raises(NanDetectedError):
        newton2(lambda p: (float("nan"), p[1]), (0.1, 0.1))


# --- rk4 ------------------------------------------------------------------

def test_rk4_exponential():
    ts, ys = rk4_integrate(lambda t, y: y, np.array([1.0]), (0.0, 1.0), 1e-3)
    assert ts[-1] == pytest.approx(1.0, abs=1e-12)
    assert ys[-1][0] == pytest.approx(math.e, abs=1e-9)


def test_rk4_harmonic_period():
    def field(t, y):
        return np.array([y[1], -y[0]])

    # step chosen commensurate with the period so the final sample lands
    # exactly on t = 2*pi
    dt = 2.0 * math.pi / 6000.0
    ts, ys = rk4_integrate(field, np.array([1.0, 0.0]), (0.0, 2.0 * math.pi), dt)
    assert np.abs(ys[-1] - ys[0]).max() < 1e-8


def test_rk4_fourth_order_convergence():
    def field(t, y):
        return np.array([y[1], -y[0]])

    errs = []
    for dt in (2.0 * math.pi / 200.0, 2.0 * math.pi / 400.0):
        _, ys = rk4_integrate(field, np.array([1.0, 0.0]),
                              (0.0, 2.0 * math.pi), dt)
        errs.append(np.abs(ys[-1] - ys[0]).max())
    ratio = errs[0] / errs[1]
    assert 12.0 < ratio < 20.0   # halving dt cuts the error ~16x


def test_rk4_classical_equilibrium_stays_fixed():
    from pr3bp import SystemParams, derive_params
    from pr3bp.dynamics import eom_field

    d = derive_params(SystemParams(mu=0.01, q1=1.0, a2=0.0, w1_override=0.0))
    f = eom_field(d)
    y0 = np.array([0.49, math.sqrt(3) / 2, 0.0, 0.0])
    _, ys = rk4_integrate(lambda t, y: np.asarray(f(y)), y0, (0.0, 5.0), 1e-2)
    assert np.abs(ys - y0).max() < 1e-12


def test_rk4_validates_dt():
    with pytest.raises(InvalidParamsError):
        rk4_integrate(lambda t, y: y, np.array([1.0]), (0.0, 1.0), 0.0)


def test_rk4_nan_mid_integration():
    def field(t, y):
        return np.array([y[0] ** 3])   # blows up in finite time

    with np.errstate(over="ignore"), pytest.raises(NanDetectedError):
        rk4_integrate(field, np.array([5.0]), (0.0, 10.0), 1e-2)


# --- biquadratic ----------------------------------------------------------

def test_biquadratic_classical_case():
    r1, r2 = biquadratic_roots(1.0, 0.066825)
    lo, hi = sorted((r1, r2))
    assert lo == pytest.approx(-0.9279895, abs=1e-7)
    assert hi == pytest.approx(-0.0720105, abs=1e-7)


def test_biquadratic_double_root():
    r1, r2 = biquadratic_roots(1.0, 0.25)
    assert r1 == pytest.approx(-0.5, abs=1e-13)
    assert r2 == pytest.approx(-0.5, abs=1e-13)


def test_biquadratic_symmetric_pair():
    assert sorted(biquadratic_roots(0.0, -1.0)) == [-1.0, 1.0]


@pytest.mark.parametrize("b,c", [
    (1.0, 0.066825),
    (1.0, 0.2499),
    (0.3, 0.02),
    (2.0, 1e-8),        # tiny product: naive formula would cancel
    (1e4, 1.0),
    (-3.0, 2.0),
])
def test_biquadratic_vieta(b, c):
    r1, r2 = biquadratic_roots(b, c)
    assert r1 + r2 == pytest.approx(-b, rel=1e-13, abs=1e-300)
    assert r1 * r2 == pytest.approx(c, rel=1e-13, abs=1e-300)


def test_biquadratic_cancellation_safety():
    # with c << b^2 the small root is c/b to leading order; the subtractive
    # formula would lose most digits
    b, c = 1.0, 1e-14
    _, small = sorted(biquadratic_roots(b, c), key=abs, reverse=True)
    assert small == pytest.approx(-c / b, rel=1e-10)
