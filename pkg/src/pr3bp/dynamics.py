"""Exact planar dynamics in the rotating frame.

Effective potential, its closed-form gradient, the drag numerators, the
equations of motion, and the velocity <-> canonical-momentum map.  These are
the non-series ground truth that every series result is checked against.

With r1, r2 the distances to the radiating and the oblate primary, the
effective potential is

    u1 = n^2 (x^2 + y^2) / 2 + (1-mu) q1 / r1 + mu / r2 + mu a2 / (2 r2^3)

and the equations of motion are

    ax - 2 n vy = du1/dx - w1 * N1 / r1^2
    ay + 2 n vx = du1/dy - w1 * N2 / r1^2

where the drag numerators N1, N2 collect the radial and the aberration
velocity terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidParamsError, SingularityError
from .params import DerivedParams

_GUARD = 1e-12  # singularity guard radius around each primary


@dataclass(frozen=True)
class KineState:
    """Planar phase state in position/velocity form."""

    x: float
    y: float
    vx: float = 0.0
    vy: float = 0.0


@dataclass(frozen=True)
class MomentumState:
    """Planar phase state in position/canonical-momentum form."""

    x: float
    y: float
    px: float = 0.0
    py: float = 0.0


def _radii_sq(x: float, y: float, mu: float):
    u = x + mu
    v = u - 1.0
    r1s = u * u + y * y
    r2s = v * v + y * y
    if r1s < _GUARD * _GUARD or r2s < _GUARD * _GUARD:
        raise SingularityError(
            f"state ({x}, {y}) is within {_GUARD} of a primary")
    return u, v, r1s, r2s


def _r1_sq(x: float, y: float, mu: float):
    """Distance (squared) to the radiating primary only.

    The drag terms and the momentum shift involve r1 alone, so they stay
    defined arbitrarily close to the second primary.
    """
    u = x + mu
    r1s = u * u + y * y
    if r1s < _GUARD * _GUARD:
        raise SingularityError(
            f"state ({x}, {y}) is within {_GUARD} of the radiating primary")
    return u, r1s


def potential_u1(pos, d: DerivedParams) -> float:
    """Effective potential at a position (centrifugal + gravity + oblateness)."""
    x, y = float(pos[0]), float(pos[1])
    _, _, r1s, r2s = _radii_sq(x, y, d.mu)
    r1 = math.sqrt(r1s)
    r2 = math.sqrt(r2s)
    return (d.n * d.n * (x * x + y * y) / 2.0
            + (1.0 - d.mu) * d.q1 / r1
            + d.mu / r2
            + d.mu * d.a2 / (2.0 * r2s * r2))


def grav_potential(pos, d: DerivedParams) -> float:
    """Gravity + oblateness part of the potential (no centrifugal term).

    The quadratic centrifugal term has no third derivatives, so this is the
    natural target for the cubic-coefficient oracle.
    """
    x, y = float(pos[0]), float(pos[1])
    _, _, r1s, r2s = _radii_sq(x, y, d.mu)
    r1 = math.sqrt(r1s)
    r2 = math.sqrt(r2s)
    return ((1.0 - d.mu) * d.q1 / r1
            + d.mu / r2
            + d.mu * d.a2 / (2.0 * r2s * r2))


def potential_gradient(pos, d: DerivedParams):
    """Closed-form (du1/dx, du1/dy)."""
    x, y = float(pos[0]), float(pos[1])
    u, v, r1s, r2s = _radii_sq(x, y, d.mu)
    r13 = r1s * math.sqrt(r1s)
    r23 = r2s * math.sqrt(r2s)
    r25 = r23 * r2s
    gx = (d.n * d.n * x
          - (1.0 - d.mu) * d.q1 * u / r13
          - d.mu * v / r23
          - 1.5 * d.mu * d.a2 * v / r25)
    gy = (d.n * d.n * y
          - (1.0 - d.mu) * d.q1 * y / r13
          - d.mu * y / r23
          - 1.5 * d.mu * d.a2 * y / r25)
    return gx, gy


def drag_numerators(s: KineState, d: DerivedParams):
    """The two drag numerators (radial Doppler plus aberration terms)."""
    u, r1s = _r1_sq(s.x, s.y, d.mu)
    radial = u * s.vx + s.y * s.vy
    n1 = u * radial / r1s + s.vx - d.n * s.y
    n2 = s.y * radial / r1s + s.vy + d.n * u
    return n1, n2


def eom_rhs(s: KineState, d: DerivedParams):
    """Right-hand side of the first-order equations of motion.

    Returns (vx, vy, ax, ay) with the Coriolis terms moved to the
    acceleration side.
    """
    u, _, r1s, _ = _radii_sq(s.x, s.y, d.mu)
    gx, gy = potential_gradient((s.x, s.y), d)
    n1, n2 = drag_numerators(s, d)
    ax = 2.0 * d.n * s.vy + gx - d.w1 * n1 / r1s
    ay = -2.0 * d.n * s.vx + gy - d.w1 * n2 / r1s
    return s.vx, s.vy, ax, ay


def eom_field(d: DerivedParams):
    """The RHS as a plain R^4 -> R^4 callable (for Jacobians/integrators)."""

    def field(state):
        s = KineState(float(state[0]), float(state[1]),
                      float(state[2]), float(state[3]))
        return eom_rhs(s, d)

    return field


def momenta_map(s, d: DerivedParams, direction: str = "forward"):
    """Convert between velocity and canonical-momentum states.

    direction='forward' maps KineState -> MomentumState via

        px = vx - n y + w1 (x+mu) / (2 r1^2)
        py = vy + n x + w1 y / (2 r1^2)

    direction='backward' inverts exactly (the drag gauge term depends only on
    position, so the round trip is the identity).
    """
    if direction == "forward":
        if not isinstance(s, KineState):
            raise InvalidParamsError("forward map expects a KineState")
        u, r1s = _r1_sq(s.x, s.y, d.mu)
        half = d.w1 / (2.0 * r1s)
        return MomentumState(
            x=s.x,
            y=s.y,
            px=s.vx - d.n * s.y + half * u,
            py=s.vy + d.n * s.x + half * s.y,
        )
    if direction == "backward":
        if not isinstance(s, MomentumState):
            raise InvalidParamsError("backward map expects a MomentumState")
        u, r1s = _r1_sq(s.x, s.y, d.mu)
        half = d.w1 / (2.0 * r1s)
        return KineState(
            x=s.x,
            y=s.y,
            vx=s.px + d.n * s.y - half * u,
            vy=s.py - d.n * s.x - half * s.y,
        )
    raise InvalidParamsError(f"direction must be 'forward' or 'backward', got {direction!r}")
