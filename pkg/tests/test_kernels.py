"""Backend dispatch and compiled/pure-Python agreement.

The two implementations mirror each other operation for operation and the
extension is built without contraction or fast-math, so outputs must agree
bit for bit, not merely to rounding.
"""

import json
import math
import os
import subprocess
import sys

import numpy as np
import pytest

from pr3bp import InvalidParamsError, SystemParams, backend_name, derive_params
from pr3bp import kernels
from pr3bp.dynamics import eom_field
from pr3bp.numerics import rk4_integrate

_PROBE = r"""
import json
import numpy as np
from pr3bp import kernels, backend_name, SystemParams, derive_params

d = derive_params(SystemParams(mu=0.01, q1=0.999, a2=5e-4, c_d=250.0))
y0 = np.array([0.49, 0.8660254, 1e-3, -2e-3])
ys = kernels.rk4_eom(d, y0, 2000, 1e-3)
M = np.array([[0.0, 0.0, 1.0, 0.0],
              [0.0, 0.0, 0.0, 1.0],
              [0.25, -1.27, 0.0, 2.0],
              [-1.27, 2.25, -2.0, 0.0]])
ys2 = kernels.rk4_linear(M, y0 * 1e-3, 3000, 1e-3)
print(json.dumps({
    "backend": backend_name(),
    "eom_last": [float.hex(float(v)) for v in ys[-1]],
    "eom_mid": [float.hex(float(v)) for v in ys[1000]],
    "lin_last": [float.hex(float(v)) for v in ys2[-1]],
}))
"""


def _run_probe(force_python):
    env = dict(os.environ)
    env.pop("PR3BP_FORCE_PYTHON", None)
    if force_python:
        env["PR3BP_FORCE_PYTHON"] = "1"
    proc = subprocess.run([sys.executable, "-c", _PROBE],
                          capture_output=True, text=True, env=env)
    assert proc.returncode == 0, proc.stderr
    return json.loads(proc.stdout)


def test_backends_bit_identical():
    compiled = _run_probe(force_python=False)
    python = _run_probe(force_python=True)
    assert python["backend"] == "python"
    for key in ("eom_last", "eom_mid", "lin_last"):
        assert compiled[key] == python[key]


def test_force_python_env_var():
    out = _run_probe(force_python=True)
    assert out["backend"] == "python"


def test_backend_name_reports_a_backend():
    assert backend_name() in ("compiled", "python")


def test_rk4_eom_matches_generic_integrator():
    d = derive_params(SystemParams(mu=0.01, q1=0.999, a2=5e-4, c_d=250.0))
    y0 = np.array([0.49, 0.8660254, 1e-3, -2e-3])
    ys = kernels.rk4_eom(d, y0, 500, 1e-3)

    f = eom_field(d)
    _, ref = rk4_integrate(lambda t, y: np.asarray(f(y)), y0, (0.0, 0.5), 1e-3)
    assert ys.shape == ref.shape
    assert np.abs(ys - ref).max() < 1e-13


def test_rk4_linear_matches_expm():
    from scipy.linalg import expm

    M = np.array([[0.0, 0.0, 1.0, 0.0],
                  [0.0, 0.0, 0.0, 1.0],
                  [0.25, -1.27, 0.0, 2.0],
                  [-1.27, 2.25, -2.0, 0.0]])
    y0 = np.array([1e-4, -2e-4, 3e-4, 4e-4])
    ys = kernels.rk4_linear(M, y0, 1000, 1e-3)
    want = expm(M * 1.0) @ y0
    assert np.abs(ys[-1] - want).max() < 1e-12


def test_rk4_eom_equilibrium_fixed_point():
    d = derive_params(SystemParams(mu=0.01, q1=1.0, a2=0.0, w1_override=0.0))
    y0 = np.array([0.49, math.sqrt(3) / 2, 0.0, 0.0])
    ys = kernels.rk4_eom(d, y0, 300, 1e-2)
    assert np.abs(ys - y0).max() < 1e-12


def test_kernel_input_validation():
    d = derive_params(SystemParams(mu=0.01, q1=1.0, a2=0.0, w1_override=0.0))
    with pytest.raises(InvalidParamsError):
        kernels.rk4_eom(d, [0.49, 0.86, 0.0, 0.0], 10, 0.0)
    with pytest.raises(InvalidParamsError):
        kernels.rk4_linear(np.eye(4), [1.0, 0.0, 0.0, 0.0], -1, 1e-3)


def test_zero_steps_returns_initial_state():
    d = derive_params(SystemParams(mu=0.01, q1=1.0, a2=0.0, w1_override=0.0))
    ys = kernels.rk4_eom(d, [0.3, 0.9, 0.01, 0.02], 0, 1e-3)
    assert ys.shape == (1, 4)
    assert list(ys[0]) == [0.3, 0.9, 0.01, 0.02]
