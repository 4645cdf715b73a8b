"""Pure-Python propagation kernels.

Fallback used when the compiled extension is unavailable (or when
PR3BP_FORCE_PYTHON=1).  Every arithmetic expression here mirrors
``pr3bp._core`` operation for operation — same grouping, same evaluation
order, no power operators on the hot path — so the two backends produce
bit-identical trajectories.
"""

import math


def rk4_eom(mu, n, q1, a2, w1, x, y, vx, vy, nsteps, dt, out):
    """Fixed-step RK4 on the full nonlinear equations of motion.

    Fills ``out`` (shape (nsteps+1, 4)) with samples of (x, y, vx, vy).
    """
    gm1 = (1.0 - mu) * q1
    n2 = n * n
    oblate = 1.5 * mu * a2
    out[0, 0] = x
    out[0, 1] = y
    out[0, 2] = vx
    out[0, 3] = vy
    for i in range(nsteps):
        # stage 1
        ax1, ay1 = _accel(mu, n, n2, gm1, oblate, w1, x, y, vx, vy)
        # stage 2
        x2 = x + 0.5 * dt * vx
        y2 = y + 0.5 * dt * vy
        vx2 = vx + 0.5 * dt * ax1
        vy2 = vy + 0.5 * dt * ay1
        ax2, ay2 = _accel(mu, n, n2, gm1, oblate, w1, x2, y2, vx2, vy2)
        # stage 3
        x3 = x + 0.5 * dt * vx2
        y3 = y + 0.5 * dt * vy2
        vx3 = vx + 0.5 * dt * ax2
        vy3 = vy + 0.5 * dt * ay2
        ax3, ay3 = _accel(mu, n, n2, gm1, oblate, w1, x3, y3, vx3, vy3)
        # stage 4
        x4 = x + dt * vx3
        y4 = y + dt * vy3
        vx4 = vx + dt * ax3
        vy4 = vy + dt * ay3
        ax4, ay4 = _accel(mu, n, n2, gm1, oblate, w1, x4, y4, vx4, vy4)
        x = x + (dt / 6.0) * (vx + 2.0 * vx2 + 2.0 * vx3 + vx4)
        y = y + (dt / 6.0) * (vy + 2.0 * vy2 + 2.0 * vy3 + vy4)
        vx = vx + (dt / 6.0) * (ax1 + 2.0 * ax2 + 2.0 * ax3 + ax4)
        vy = vy + (dt / 6.0) * (ay1 + 2.0 * ay2 + 2.0 * ay3 + ay4)
        out[i + 1, 0] = x
        out[i + 1, 1] = y
        out[i + 1, 2] = vx
        out[i + 1, 3] = vy
    return None


def _accel(mu, n, n2, gm1, oblate, w1, x, y, vx, vy):
    u = x + mu
    v = u - 1.0
    r1s = u * u + y * y
    r2s = v * v + y * y
    r13 = r1s * math.sqrt(r1s)
    r23 = r2s * math.sqrt(r2s)
    r25 = r23 * r2s
    gx = n2 * x - gm1 * u / r13 - mu * v / r23 - oblate * v / r25
    gy = n2 * y - gm1 * y / r13 - mu * y / r23 - oblate * y / r25
    radial = u * vx + y * vy
    d1 = u * radial / r1s + vx - n * y
    d2 = y * radial / r1s + vy + n * u
    ax = 2.0 * n * vy + gx - w1 * d1 / r1s
    ay = -2.0 * n * vx + gy - w1 * d2 / r1s
    return ax, ay


def rk4_linear(m, x, y, vx, vy, nsteps, dt, out):
    """Fixed-step RK4 on the linear system state' = M state.

    ``m`` is the 4x4 matrix flattened row-major (length 16).
    """
    m00 = m[0]; m01 = m[1]; m02 = m[2]; m03 = m[3]
    m10 = m[4]; m11 = m[5]; m12 = m[6]; m13 = m[7]
    m20 = m[8]; m21 = m[9]; m22 = m[10]; m23 = m[11]
    m30 = m[12]; m31 = m[13]; m32 = m[14]; m33 = m[15]
    out[0, 0] = x
    out[0, 1] = y
    out[0, 2] = vx
    out[0, 3] = vy
    for i in range(nsteps):
        a1 = m00 * x + m01 * y + m02 * vx + m03 * vy
        b1 = m10 * x + m11 * y + m12 * vx + m13 * vy
        c1 = m20 * x + m21 * y + m22 * vx + m23 * vy
        d1 = m30 * x + m31 * y + m32 * vx + m33 * vy
        x2 = x + 0.5 * dt * a1
        y2 = y + 0.5 * dt * b1
        vx2 = vx + 0.5 * dt * c1
        vy2 = vy + 0.5 * dt * d1
        a2 = m00 * x2 + m01 * y2 + m02 * vx2 + m03 * vy2
        b2 = m10 * x2 + m11 * y2 + m12 * vx2 + m13 * vy2
        c2 = m20 * x2 + m21 * y2 + m22 * vx2 + m23 * vy2
        d2 = m30 * x2 + m31 * y2 + m32 * vx2 + m33 * vy2
        x3 = x + 0.5 * dt * a2
        y3 = y + 0.5 * dt * b2
        vx3 = vx + 0.5 * dt * c2
        vy3 = vy + 0.5 * dt * d2
        a3 = m00 * x3 + m01 * y3 + m02 * vx3 + m03 * vy3
        b3 = m10 * x3 + m11 * y3 + m12 * vx3 + m13 * vy3
        c3 = m20 * x3 + m21 * y3 + m22 * vx3 + m23 * vy3
        d3 = m30 * x3 + m31 * y3 + m32 * vx3 + m33 * vy3
        x4 = x + dt * a3
        y4 = y + dt * b3
        vx4 = vx + dt * c3
        vy4 = vy + dt * d3
        a4 = m00 * x4 + m01 * y4 + m02 * vx4 + m03 * vy4
        b4 = m10 * x4 + m11 * y4 + m12 * vx4 + m13 * vy4
        c4 = m20 * x4 + m21 * y4 + m22 * vx4 + m23 * vy4
        d4 = m30 * x4 + m31 * y4 + m32 * vx4 + m33 * vy4
        x = x + (dt / 6.0) * (a1 + 2.0 * a2 + 2.0 * a3 + a4)
        y = y + (dt / 6.0) * (b1 + 2.0 * b2 + 2.0 * b3 + b4)
        vx = vx + (dt / 6.0) * (c1 + 2.0 * c2 + 2.0 * c3 + c4)
        vy = vy + (dt / 6.0) * (d1 + 2.0 * d2 + 2.0 * d3 + d4)
        out[i + 1, 0] = x
        out[i + 1, 1] = y
        out[i + 1, 2] = vx
        out[i + 1, 3] = vy
    return None
