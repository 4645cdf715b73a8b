"""Physical parameter model.

The setting is the planar circular restricted three-body problem in the
rotating (synodic) frame, with three perturbations of the classical model:

* the bigger primary radiates — its effective gravity is scaled by a mass
  reduction factor ``q1`` (``eps = 1 - q1`` measures the radiation pressure);
* the re-emission of absorbed sunlight brakes the particle — a drag force
  with coefficient ``w1 = (1 - mu) * (1 - q1) / c_d`` where ``c_d`` is the
  dimensionless light speed;
* the smaller primary is oblate with coefficient ``a2``, which also raises
  the mean motion to ``n = sqrt(1 + 1.5 * a2)``.

Canonical units everywhere: the primary separation is 1, the mass sum is 1,
and the unperturbed mean motion is 1.  ``c_d`` has no canonical default and
must be supplied explicitly, or bypassed with ``w1_override``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import InvalidParamsError


def _cbrt(v: float) -> float:
    # math.cbrt is 3.11+; keep 3.10 support.
    return math.copysign(abs(v) ** (1.0 / 3.0), v)


@dataclass(frozen=True)
class SystemParams:
    """Raw physical inputs.

    mu          mass ratio m2/(m1+m2), in [0, 1/2]
    q1          mass reduction factor of the radiating primary, <= 1
    a2          oblateness coefficient of the smaller primary, >= 0
    c_d         dimensionless light speed, > 0 (optional if w1_override given)
    w1_override direct drag coefficient, bypasses c_d
    """

    mu: float
    q1: float = 1.0
    a2: float = 0.0
    c_d: Optional[float] = None
    w1_override: Optional[float] = None


@dataclass(frozen=True)
class DerivedParams:
    """SystemParams plus the derived constants used throughout."""

    mu: float
    q1: float
    a2: float
    c_d: Optional[float]
    w1_override: Optional[float]
    n: float      # mean motion, sqrt(1 + 1.5*a2)
    w1: float     # drag coefficient
    eps: float    # 1 - q1
    delta: float  # cube root of q1
    gamma: float  # 1 - 2*mu

    @property
    def nw1(self) -> float:
        """The drag strength as it enters every series: n * w1."""
        return self.n * self.w1


def derive_params(p: SystemParams) -> DerivedParams:
    """Validate raw parameters and compute the derived constants."""
    mu, q1, a2 = float(p.mu), float(p.q1), float(p.a2)
    if not (math.isfinite(mu) and math.isfinite(q1) and math.isfinite(a2)):
        raise InvalidParamsError("mu, q1, a2 must be finite")
    if not 0.0 <= mu <= 0.5:
        raise InvalidParamsError(f"mu must lie in [0, 1/2], got {mu}")
    if q1 > 1.0:
        raise InvalidParamsError(f"q1 must be <= 1, got {q1}")
    if a2 < 0.0:
        raise InvalidParamsError(f"a2 must be >= 0, got {a2}")

    if p.w1_override is not None:
        w1 = float(p.w1_override)
        if w1 < 0.0 or not math.isfinite(w1):
            raise InvalidParamsError(f"w1_override must be >= 0, got {w1}")
    else:
        if p.c_d is None:
            raise InvalidParamsError(
                "c_d must be supplied explicitly (or use w1_override); "
                "there is no canonical default for the light speed"
            )
        c_d = float(p.c_d)
        if c_d <= 0.0 or not math.isfinite(c_d):
            raise InvalidParamsError(f"c_d must be > 0, got {c_d}")
        w1 = (1.0 - mu) * (1.0 - q1) / c_d

    return DerivedParams(
        mu=mu,
        q1=q1,
        a2=a2,
        c_d=None if p.c_d is None else float(p.c_d),
        w1_override=None if p.w1_override is None else float(p.w1_override),
        n=math.sqrt(1.0 + 1.5 * a2),
        w1=w1,
        eps=1.0 - q1,
        delta=_cbrt(q1),
        gamma=1.0 - 2.0 * mu,
    )


def mass_reduction_factor(grain_radius: float, density: float,
                          efficiency: float) -> float:
    """Mass reduction factor of a dust grain in CGS units.

    grain_radius in cm, density in g/cm^3, efficiency is the radiation
    pressure efficiency factor.  Returns 1 - 5.6e-5 * efficiency /
    (grain_radius * density), unclamped.
    """
    if grain_radius <= 0.0 or density <= 0.0:
        raise InvalidParamsError("grain radius and density must be positive")
    if efficiency < 0.0:
        raise InvalidParamsError("efficiency must be >= 0")
    return 1.0 - 5.6e-5 * efficiency / (grain_radius * density)


def oblateness_coeff(r_e: float, r_p: float, r: float) -> float:
    """Oblateness coefficient from equatorial/polar radii and separation."""
    if r <= 0.0:
        raise InvalidParamsError("separation r must be positive")
    if r_p < 0.0 or r_p > r_e:
        raise InvalidParamsError("need 0 <= r_p <= r_e")
    return (r_e * r_e - r_p * r_p) / (5.0 * r * r)
