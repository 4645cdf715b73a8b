"""Triangular equilibrium location: closed-form series and Newton oracle."""

import math
import warnings

import pytest

from pr3bp import (
    InvalidParamsError,
    SeriesRangeWarning,
    SystemParams,
    derive_params,
    equilibrium_residual,
    locate_series,
    locate_series_linear,
    refine_newton,
)

SQ3 = math.sqrt(3.0)


def mk(mu=0.01, q1=1.0, a2=0.0, w1=0.0):
    return derive_params(SystemParams(mu=mu, q1=q1, a2=a2, w1_override=w1))


def test_classical_location_is_exact():
    s = locate_series(mk(), "L4")
    assert s.x_star == pytest.approx(0.49, abs=1e-15)
    assert s.y_star == pytest.approx(SQ3 / 2, abs=1e-15)
    assert s.method == "series45"


def test_l5_is_the_mirror_branch():
    s = locate_series(mk(), "L5")
    assert s.x_star == pytest.approx(0.49, abs=1e-15)
    assert s.y_star == pytest.approx(-SQ3 / 2, abs=1e-15)


def test_radiation_only_location_closed_form():
    # with only radiation pressure the distances to the primaries are exactly
    # delta = q1^(1/3) and 1, so the location has a closed form the series
    # must reproduce
    d = mk(q1=0.99)
    s = locate_series(d, "L4")
    ds = d.delta * d.delta
    assert s.x_star == pytest.approx(ds / 2.0 - 0.01, abs=1e-15)
    assert s.y_star == pytest.approx(d.delta * math.sqrt(1.0 - ds / 4.0), abs=1e-15)
    # and Newton confirms it is an equilibrium to machine precision
    nw = refine_newton(d, s.xy)
    assert abs(nw.x_star - s.x_star) < 1e-10
    assert abs(nw.y_star - s.y_star) < 1e-10


def test_linearized_location_small_radiation():
    lx, ly, a, b = locate_series_linear(mk(q1=0.99))
    assert lx == pytest.approx(0.4866667, abs=2e-7)
    assert ly == pytest.approx(0.8641009, abs=2e-7)
    assert a == pytest.approx(0.5 - 0.01 / 3.0, abs=1e-9)


def test_linearized_location_oblateness():
    lx, ly, a, b = locate_series_linear(mk(a2=1e-3))
    assert lx == pytest.approx(0.4895, abs=1e-7)
    assert ly == pytest.approx(0.8657367, abs=1e-7)


def test_series_forms_agree_at_small_perturbation():
    # quadratic-vs-linear form difference is O(pert^2) for radiation and
    # oblateness
    for d in (mk(q1=1.0 - 1e-3), mk(a2=1e-3)):
        s = locate_series(d, "L4")
        lx, ly, _, _ = locate_series_linear(d)
        assert abs(s.x_star - lx) < 5e-6
        assert abs(s.y_star - ly) < 5e-6


@pytest.mark.parametrize("d,gap", [
    (mk(q1=1.0 - 1e-3), 1e-12),     # series exact here
    (mk(a2=1e-3), 1e-5),
    (mk(w1=1e-3), 5e-3),            # printed drag terms miss the 1/(mu(1-mu)) scale
])
def test_series_vs_newton_gap(d, gap):
    s = locate_series(d, "L4")
    nw = refine_newton(d, s.xy)
    assert max(abs(s.x_star - nw.x_star), abs(s.y_star - nw.y_star)) < gap


def test_newton_iteration_budget():
    # from the series guess the oracle converges fast everywhere we trust
    # the series
    for d in (mk(), mk(q1=0.99), mk(a2=1e-3), mk(w1=1e-4)):
        nw = refine_newton(d, locate_series(d, "L4").xy)
        assert nw.iterations is not None and nw.iterations <= 8
        assert nw.residual is not None and nw.residual <= 1e-11
        rx, ry = equilibrium_residual(nw.xy, d)
        assert max(abs(rx), abs(ry)) <= 1e-11


def test_drag_breaks_l4_l5_symmetry():
    d = mk(w1=1e-4)
    e4 = refine_newton(d, locate_series(d, "L4").xy)
    e5 = refine_newton(d, locate_series(d, "L5").xy)
    assert e5.y_star < 0.0 < e4.y_star
    asym = abs(abs(e4.y_star) - abs(e5.y_star))
    assert 1e-6 < asym < 1e-2     # O(w1) effect, not a reflection any more


def test_no_drag_l4_l5_mirror_exact():
    d = mk(q1=0.995, a2=5e-4)
    e4 = refine_newton(d, locate_series(d, "L4").xy)
    e5 = refine_newton(d, locate_series(d, "L5").xy)
    assert e4.x_star == pytest.approx(e5.x_star, abs=1e-12)
    assert e4.y_star == pytest.approx(-e5.y_star, abs=1e-12)


def test_equilibrium_residual_drag_example():
    rx, ry = equilibrium_residual((0.49, SQ3 / 2), mk(w1=1e-4))
    assert rx == pytest.approx(8.66e-5, abs=1e-6)
    assert ry == pytest.approx(-5.0e-5, abs=1e-6)


def test_series_range_warning():
    with pytest.warns(SeriesRangeWarning):
        locate_series(mk(q1=0.9), "L4")
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        locate_series(mk(q1=0.999), "L4")   # inside the trusted range


def test_branch_validation():
    with pytest.raises(InvalidParamsError):
        locate_series(mk(), "L3")


def test_refine_rejects_near_axis_guess():
    with pytest.raises(InvalidParamsError):
        refine_newton(mk(), (0.49, 0.0))


def test_refine_accepts_tolerance_overrides():
    d = mk(q1=0.999)
    nw = refine_newton(d, locate_series(d, "L4").xy, tol=1e-10, fd_step=1e-5)
    rx, ry = equilibrium_residual(nw.xy, d)
    assert max(abs(rx), abs(ry)) <= 1e-10
