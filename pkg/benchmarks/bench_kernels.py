#!/usr/bin/env python3
"""Benchmark the compiled RK4 kernels against the pure-Python fallback.

The backend is chosen once at import time (PR3BP_FORCE_PYTHON=1 forces the
fallback), so each side runs in its own subprocess and reports steps/second;
this parent script prints both and the speedup.

Usage: python3 benchmarks/bench_kernels.py [--steps N] [--repeats K]
"""

import argparse
import json
import os
import subprocess
import sys

SNIPPET = r"""
import json, time
from pr3bp import SystemParams, derive_params
from pr3bp import kernels

d = derive_params(SystemParams(mu=0.01, q1=0.999, a2=5e-4, c_d=250.0))
state = (0.45, 0.80, 0.01, -0.02)
steps = {steps}
dt = 1e-3

best = float("inf")
for _ in range({repeats}):
    t0 = time.perf_counter()
    out = kernels.rk4_eom(d, state, steps, dt)
    best = min(best, time.perf_counter() - t0)

print(json.dumps({{
    "backend": kernels.backend_name(),
    "seconds": best,
    "steps_per_sec": steps / best,
    "final": list(out[-1]),
}}))
"""


def run_side(force_python: bool, steps: int, repeats: int) -> dict:
    env = dict(os.environ)
    env.pop("PR3BP_FORCE_PYTHON", None)
    if force_python:
        env["PR3BP_FORCE_PYTHON"] = "1"
    code = SNIPPET.format(steps=steps, repeats=repeats)
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True
    )
    return json.loads(out.stdout)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--steps", type=int, default=200_000)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    compiled = run_side(False, args.steps, args.repeats)
    python = run_side(True, args.steps, args.repeats)

    print(f"workload: {args.steps} RK4 steps of the drag-perturbed field, "
          f"best of {args.repeats}")
    for side in (compiled, python):
        print(f"  {side['backend']:>8s}: {side['seconds']*1e3:9.2f} ms   "
              f"{side['steps_per_sec']:12.0f} steps/s")

    if compiled["backend"] == python["backend"]:
        print("note: compiled extension unavailable; both runs used the fallback")
    else:
        speedup = python["seconds"] / compiled["seconds"]
        print(f"  speedup: {speedup:.1f}x")

    drift = max(abs(a - b) for a, b in zip(compiled["final"], python["final"]))
    print(f"  final-state agreement: {drift:.3e}")
    return 0 if drift == 0.0 else 1


if __name__ == "__main__":
    sys.exit(main())
