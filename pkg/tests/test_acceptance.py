"""Acceptance criteria: eleven end-to-end checks at pinned tolerances.

Each test evaluates one numbered criterion in full and prints a single
PASS/FAIL line with the worst measured number.  Five criteria (4, 7, 8, 9,
11) currently fail and are left failing on purpose: the first-order series
the package reproduces do not reach the stated tolerances in the drag and
oblateness sectors, and the tests state the truth rather than hide it.  The
README and the in-package discrepancy ledger describe what was measured.
"""

import math

import numpy as np
import pytest

from pr3bp import ActionAngle, SystemParams, derive_params
from pr3bp.equilibria import locate_series, refine_newton
from pr3bp.expansion import cubic_coeffs, fd_hessian_oracle, fd_third_oracle, quad_coeffs
from pr3bp.ledger import standard_ledger
from pr3bp.normalform import normal_form_map, reconstruction_residual
from pr3bp.stability import (
    char_roots,
    freq_identity_residuals,
    matrix_a_det,
    mu_crit_numeric,
    mu_crit_series,
    spectral_oracle,
)

MU_C0 = 0.0385208965045513718
PERT = 1e-3

# single-perturbation systems at the standard probe size, classical mass
SECTORS = {
    "eps": SystemParams(mu=0.01, q1=1.0 - PERT, a2=0.0, w1_override=0.0),
    "a2": SystemParams(mu=0.01, q1=1.0, a2=PERT, w1_override=0.0),
    "w1": SystemParams(mu=0.01, q1=1.0, a2=0.0, w1_override=PERT),
}
CLASSICAL = SystemParams(mu=0.01, q1=1.0, a2=0.0, w1_override=0.0)


def _report(num, ok, detail):
    print(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'} — {detail}")
    return ok


def test_c01_critical_mass_constant():
    numeric = mu_crit_numeric(derive_params(CLASSICAL)).mu_c
    series = mu_crit_series(derive_params(CLASSICAL)).mu_c
    err = abs(numeric - MU_C0)
    ok = err <= 1e-12 and series == MU_C0
    assert _report(1, ok, f"numeric err {err:.3e}, series exact: {series == MU_C0}")


def test_c02_classical_frequency_identities():
    worst = 0.0
    for mu in (0.005, 0.01, 0.02, 0.035):
        d = derive_params(SystemParams(mu=mu, q1=1.0, a2=0.0, w1_override=0.0))
        sp = char_roots(quad_coeffs(d))
        r_sum = abs(sp.omega1**2 + sp.omega2**2 - 1.0)
        r_prod = abs((sp.omega1 * sp.omega2) ** 2 - 27.0 * mu * (1.0 - mu) / 4.0)
        worst = max(worst, r_sum, r_prod)
    assert _report(2, worst <= 1e-12, f"worst identity residual {worst:.3e}")


def test_c03_frequency_band():
    grid = [CLASSICAL] + list(SECTORS.values())
    grid += [
        SystemParams(mu=mu, q1=1.0, a2=0.0, w1_override=0.0)
        for mu in (0.005, 0.02, 0.035, 0.038)
    ]
    inv = 1.0 / math.sqrt(2.0)
    ok = True
    for p in grid:
        sp = char_roots(quad_coeffs(derive_params(p)))
        if sp.classification != "stable":
            continue
        ok = ok and (0.0 < sp.omega2 < inv < sp.omega1 < 1.0)
    assert _report(3, ok, "band 0 < w2 < 1/sqrt(2) < w1 < 1 on all stable cases")


def test_c04_equilibrium_oracle():
    worst_gap = 0.0
    worst_sector = ""
    iters_ok = True
    resid_ok = True
    for name, p in SECTORS.items():
        d = derive_params(p)
        ser = locate_series(d)
        newt = refine_newton(d, ser.xy)
        gap = max(abs(ser.x_star - newt.x_star), abs(ser.y_star - newt.y_star))
        if gap > worst_gap:
            worst_gap, worst_sector = gap, name
        iters_ok = iters_ok and newt.iterations <= 8
        resid_ok = resid_ok and newt.residual <= 1e-11
    ok = worst_gap <= 1e-4 and iters_ok and resid_ok
    assert _report(
        4, ok, f"worst series-newton gap {worst_gap:.4e} ({worst_sector}); "
        f"iters<=8 {iters_ok}, resid<=1e-11 {resid_ok}"
    )


def test_c05_quadratic_coefficient_oracle():
    worst = 0.0
    for name, p in (("classical", CLASSICAL), ("eps", SECTORS["eps"]), ("a2", SECTORS["a2"])):
        d = derive_params(p)
        eq = refine_newton(d, locate_series(d).xy)
        uxx, uyy, uxy = fd_hessian_oracle(eq, d)
        q = quad_coeffs(d)
        tol = 1e-8 if name == "classical" else max(1e-8, 5.0 * PERT**2)
        gap = max(
            abs((d.n**2 - 2.0 * q.e) - uxx),
            abs((d.n**2 - 2.0 * q.f) - uyy),
            abs(-q.g - uxy),
        )
        worst = max(worst, gap / tol)
    d = derive_params(CLASSICAL)
    eq = refine_newton(d, locate_series(d).xy)
    q = quad_coeffs(d)
    gamma = 0.98
    exact = max(
        abs((d.n**2 - 2.0 * q.e) - 0.75),
        abs((d.n**2 - 2.0 * q.f) - 2.25),
        abs(-q.g - 3.0 * math.sqrt(3.0) * gamma / 4.0),
    )
    ok = worst <= 1.0 and exact <= 1e-8
    assert _report(5, ok, f"worst gap/tol {worst:.3e}, exact classical trio err {exact:.3e}")


def test_c06_cubic_oracle():
    d = derive_params(CLASSICAL)
    eq = refine_newton(d, locate_series(d).xy)
    pxxx, pxxy, pxyy, pyyy = fd_third_oracle(eq, d)
    g = 0.98
    targets = (21.0 * g / 8.0, -3.0 * math.sqrt(3.0) / 8.0, -33.0 * g / 8.0,
               -9.0 * math.sqrt(3.0) / 8.0)
    gap3 = max(abs(a - b) for a, b in zip((pxxx, pxxy, pxyy, pyyy), targets))
    t = cubic_coeffs(d)
    gap_t = max(abs(t.t1 - pxxx), abs(t.t4 - pyyy))
    names = {e.name: e for e in standard_ledger()}
    flags = all(
        k in names
        and names[k].series_value is not None
        and names[k].oracle_value is not None
        and names[k].series_value != names[k].oracle_value
        for k in ("cubic_t2_classical", "cubic_t3_classical")
    )
    ok = gap3 <= 1e-6 and gap_t <= 1e-6 and flags
    assert _report(
        6, ok, f"third partials {gap3:.3e}, T1/T4 {gap_t:.3e}, ledger flags {flags}"
    )


def test_c07_spectral_oracle():
    worst_ratio = 0.0
    worst_sector = ""
    for name, p in [("classical", CLASSICAL)] + list(SECTORS.items()):
        d = derive_params(p)
        eq = refine_newton(d, locate_series(d).xy)
        freqs, _ = spectral_oracle(eq, d)
        sp = char_roots(quad_coeffs(d))
        pert = 0.0 if name == "classical" else PERT
        tol = max(1e-8, 10.0 * pert**2)
        gap = max(abs(freqs[0] - sp.omega1), abs(freqs[1] - sp.omega2))
        if gap / tol > worst_ratio:
            worst_ratio, worst_sector = gap / tol, f"{name} gap {gap:.4e} tol {tol:.0e}"
    assert _report(7, worst_ratio <= 1.0, f"worst {worst_sector}")


def test_c08_normal_form_reconstruction():
    results = []
    for name, p in (("classical", CLASSICAL), ("eps", SECTORS["eps"])):
        d = derive_params(p)
        nf = normal_form_map(d)
        tol = 1e-6 if name == "classical" else 1e-2
        for mode, aa in (
            (1, ActionAngle(1e-6, 0.0, 0.0, 0.0)),
            (2, ActionAngle(0.0, 1e-6, 0.0, 0.0)),
        ):
            omega = nf.omega1 if mode == 1 else nf.omega2
            period = 2.0 * math.pi / omega
            res = reconstruction_residual(nf, d, aa, (0.0, period), period / 2000.0)
            results.append((name, mode, res, tol))
    ok = all(res <= tol for _, _, res, tol in results)
    worst = max(results, key=lambda r: r[2] / r[3])
    assert _report(
        8, ok, f"worst {worst[0]} mode{worst[1]} residual {worst[2]:.4e} (tol {worst[3]:.0e})"
    )


def test_c09_mu_crit_consistency():
    worst = 0.0
    worst_sector = ""
    for name, p in SECTORS.items():
        d = derive_params(p)
        gap = abs(mu_crit_series(d).mu_c - mu_crit_numeric(d).mu_c)
        if gap > worst:
            worst, worst_sector = gap, name
    assert _report(9, worst <= 5e-5, f"worst series-numeric gap {worst:.4e} ({worst_sector})")


def test_c10_determinant_identity():
    q = quad_coeffs(derive_params(CLASSICAL))
    sp = char_roots(q)
    rng = np.random.default_rng(20260819)
    worst = 0.0
    for lam in rng.uniform(-2.0, 2.0, 100):
        quartic = lam**4 + sp.b_coeff * lam**2 + sp.c_coeff
        worst = max(worst, abs(matrix_a_det(q, lam) - quartic) / abs(quartic))
    assert _report(10, worst <= 1e-12, f"worst relative det error {worst:.3e}")


def test_c11_identity_residual_suite():
    d = derive_params(CLASSICAL)
    classical = freq_identity_residuals(d, char_roots(quad_coeffs(d)))
    worst_classical = max(abs(v) for v in classical.values())
    worst_pert = 0.0
    worst_sector = ""
    for name, p in SECTORS.items():
        d = derive_params(p)
        res = freq_identity_residuals(d, char_roots(quad_coeffs(d)))
        m = max(abs(v) for v in res.values())
        if m > worst_pert:
            worst_pert, worst_sector = m, name
    ok = worst_classical <= 1e-12 and worst_pert <= 1e-4
    assert _report(
        11, ok,
        f"classical {worst_classical:.3e}, worst perturbed {worst_pert:.4e} ({worst_sector})"
    )
