"""Backend dispatch for the propagation kernels.

The compiled extension (pr3bp._core) is preferred; the pure-Python module
pr3bp._kernels_py is the fallback.  Set PR3BP_FORCE_PYTHON=1 before import
to force the fallback (the benchmark and the backend-equality tests do).
Both backends are bit-identical by construction.
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_py
from .errors import InvalidParamsError
from .params import DerivedParams

if os.environ.get("PR3BP_FORCE_PYTHON") == "1":
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:  # pragma: no cover - build-dependent
        _impl = _kernels_py
        BACKEND = "python"


def backend_name() -> str:
    """Which kernel implementation is active: 'compiled' or 'python'."""
    return BACKEND


def rk4_eom(d: DerivedParams, state, nsteps: int, dt: float) -> np.ndarray:
    """Propagate the full nonlinear equations of motion.

    Returns an array of shape (nsteps+1, 4) with rows (x, y, vx, vy) at
    t0 + k*dt.
    """
    if dt <= 0.0 or nsteps < 0:
        raise InvalidParamsError("need dt > 0 and nsteps >= 0")
    out = np.empty((nsteps + 1, 4), dtype=np.float64)
    _impl.rk4_eom(d.mu, d.n, d.q1, d.a2, d.w1,
                  float(state[0]), float(state[1]),
                  float(state[2]), float(state[3]),
                  int(nsteps), float(dt), out)
    return out


def rk4_linear(matrix, state, nsteps: int, dt: float) -> np.ndarray:
    """Propagate the linear system state' = M state (M is 4x4)."""
    if dt <= 0.0 or nsteps < 0:
        raise InvalidParamsError("need dt > 0 and nsteps >= 0")
    m = np.ascontiguousarray(np.asarray(matrix, dtype=np.float64).reshape(16))
    out = np.empty((nsteps + 1, 4), dtype=np.float64)
    _impl.rk4_linear(m, float(state[0]), float(state[1]),
                     float(state[2]), float(state[3]),
                     int(nsteps), float(dt), out)
    return out
