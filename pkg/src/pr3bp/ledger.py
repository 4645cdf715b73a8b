"""Discrepancy ledger.

An immutable record of every place where the printed closed-form series
disagrees with an independent numerical oracle, together with the value this
package actually adopts.  Corrections are applied only where an internal
consistency condition pins the right value; bare mismatches are recorded
with both values and left as printed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Union

Value = Union[float, str]

_SQRT3 = math.sqrt(3.0)
# reference configuration for the numeric entries below
_GAMMA_REF = 0.98  # mu = 0.01


@dataclass(frozen=True)
class LedgerEntry:
    name: str
    series_value: Value   # what the printed series gives
    oracle_value: Value   # what the independent oracle gives
    adopted_value: Value  # what this package evaluates
    note: str


# Names of the entries that the consistency report must always contain.
CORE_ENTRY_NAMES = (
    "quad_g_gamma_constant",
    "h2_y_squared_term",
    "j24_mode2_factors",
    "cubic_sign_convention",
    "cubic_t2_classical",
    "cubic_t3_classical",
)


def standard_ledger() -> List[LedgerEntry]:
    """The documented series-vs-oracle discrepancies.

    Numeric values quote the classical reference configuration mu = 0.01
    (gamma = 0.98).
    """
    g = _GAMMA_REF
    return [
        LedgerEntry(
            name="quad_g_gamma_constant",
            series_value=0.0,
            oracle_value=-(3.0 * _SQRT3 / 4.0) * g,
            adopted_value=-(3.0 * _SQRT3 / 4.0) * g,
            note=("the gamma bracket of the xy quadratic coefficient opens "
                  "with '6 eps' as printed, so the classical limit would be 0; "
                  "the Hessian oracle, the classical product identity "
                  "4EF - G^2 + n^4 - 2n^2(E+F) = 27 mu (1-mu)/4, and the "
                  "matching bracket in the mode-1 y-map coefficient all "
                  "require the constant 6; adopted bracket opens with "
                  "'6 + 2 eps/3'"),
        ),
        LedgerEntry(
            name="quad_g_gamma_eps_term",
            series_value="gamma bracket eps term '-eps/3'",
            oracle_value="d(xy coefficient)/d(eps) = sqrt(3)/12 * (3 - gamma)",
            adopted_value="gamma bracket eps term '+2 eps/3'",
            note=("with the constant fixed to 6, the printed '-eps/3' still "
                  "fails the Hessian oracle at first order in eps; the "
                  "mode-1 y-map coefficient prints the same bracket as "
                  "'6 + 2 eps/3', which matches the oracle slope exactly"),
        ),
        LedgerEntry(
            name="quad_e_eps_pair",
            series_value=(-6.0 + 2.0 * g) / 16.0,
            oracle_value=(-2.0 + 6.0 * g) / 16.0,
            adopted_value=(-2.0 + 6.0 * g) / 16.0,
            note=("eps-slope of the x^2 quadratic coefficient: the printed "
                  "pair (-6 eps outside, +2 gamma eps inside the gamma "
                  "bracket) contradicts the Hessian oracle; the transposed "
                  "pair (-2 eps, +6 gamma eps) matches it and mirrors the "
                  "printed y^2 coefficient, whose pair (-2 eps, +6 gamma eps) "
                  "verifies as printed"),
        ),
        LedgerEntry(
            name="h2_y_squared_term",
            series_value="'+ F^2' (constant, dimensionally inconsistent)",
            oracle_value="Legendre transform of the quadratic Lagrangian",
            adopted_value="'+ F y^2'",
            note="typo in the quadratic Hamiltonian display",
        ),
        LedgerEntry(
            name="cubic_sign_convention",
            series_value="cubic block printed with a leading minus in the Lagrangian",
            oracle_value="T1, T4 classical limits equal +third partials of the potential",
            adopted_value="coefficients of H3 = +(1/3!)(x^3 T1 + 3x^2 y T2 + 3x y^2 T3 + y^3 T4 + 6 T5)",
            note=("the printed leading minus is inconsistent with a "
                  "Lagrangian that adds the potential; with the plus-H3 "
                  "reading the oracle confirms T1 and T4"),
        ),
        LedgerEntry(
            name="cubic_t2_classical",
            series_value=(3.0 * _SQRT3 / 16.0) * 14.0,
            oracle_value=-3.0 * _SQRT3 / 8.0,
            adopted_value=(3.0 * _SQRT3 / 16.0) * 14.0,
            note=("classical limit of the x^2 y cubic coefficient disagrees "
                  "with the third-derivative oracle (+4.5466 vs -0.6495); no "
                  "internal consistency condition pins it, so it is evaluated "
                  "as printed and flagged"),
        ),
        LedgerEntry(
            name="cubic_t3_classical",
            series_value=-(9.0 / 8.0) * g,
            oracle_value=-(33.0 / 8.0) * g,
            adopted_value=-(9.0 / 8.0) * g,
            note=("classical limit of the x y^2 cubic coefficient disagrees "
                  "with the third-derivative oracle (-9 gamma/8 vs "
                  "-33 gamma/8); evaluated as printed and flagged"),
        ),
        LedgerEntry(
            name="j24_mode2_factors",
            series_value="final two brackets divided by k1^2 and l1^2 k1^2",
            oracle_value="mode-2 coefficient must carry mode-2 factors",
            adopted_value="k2^2 and l2^2 k2^2",
            note=("copy-paste slip in the mode-2 y-map coefficient; the "
                  "mode-1 partner uses its own factors throughout"),
        ),
        LedgerEntry(
            name="angle_rate_mode2",
            series_value="phi_2(t) = phi_20 + omega2 t",
            oracle_value="linearized-flow residual O(1) with the + sign",
            adopted_value="phi_2(t) = phi_20 - omega2 t",
            note=("the normal form omega1 I1 - omega2 I2 gives "
                  "d(phi2)/dt = -omega2 by Hamilton's equations; with the "
                  "retrograde mode-2 angle the reconstructed orbit satisfies "
                  "the linearized flow to integrator accuracy"),
        ),
        LedgerEntry(
            name="orbit_y_final_term",
            series_value="'J24 sqrt(2 I2) omega2 sin(phi2)'",
            oracle_value="linearized-flow residual",
            adopted_value="'J24 sqrt(2 I2 omega2) cos(phi2)'",
            note=("the final y-term is read in structural symmetry with the "
                  "mode-1 term (amplitude sqrt(2 I omega), cosine phase): the "
                  "J23/J24 terms are the momentum-variable (P) components of "
                  "the y row"),
        ),
        LedgerEntry(
            name="linear_shift_leading_one",
            series_value="a-series without a constant term (a -> 0 classically)",
            oracle_value="a = x + mu -> 1/2 classically",
            adopted_value="leading 1 restored inside the 1/2 bracket",
            note="dropped constant in the shifted-anchor series",
        ),
        LedgerEntry(
            name="series_l1_coordinate_terms",
            series_value="c_x -> mu, c_y -> 0 classically (x-coefficient nonzero)",
            oracle_value="linear terms must vanish at an equilibrium",
            adopted_value="evaluated as printed, flagged",
            note=("the linear expansion term's coordinate coefficients do not "
                  "vanish at the expansion point as printed; no correction is "
                  "pinned, so they are reported as-is"),
        ),
        LedgerEntry(
            name="locate_linear_drag_terms",
            series_value="drag displacement O(1) * (n w1) in the small-eps location",
            oracle_value="Newton oracle: displacement (-38.68, +22.11) * (n w1) at mu = 0.01",
            adopted_value="evaluated as printed, flagged",
            note=("the small-eps linearized location's drag terms are "
                  "mass-ratio-independent constants, but the true drag "
                  "displacement scales like 1/(mu (1-mu)); the "
                  "radiation-anchored location carries that factor and "
                  "matches the oracle at first order"),
        ),
    ]


def ledger_as_dicts() -> list:
    """The standard ledger as plain dicts (for the JSON report)."""
    return [
        {
            "name": e.name,
            "series_value": e.series_value,
            "oracle_value": e.oracle_value,
            "adopted_value": e.adopted_value,
            "note": e.note,
        }
        for e in standard_ledger()
    ]
