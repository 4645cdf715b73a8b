# cython: language_level=3
"""Compiled propagation kernels.

Arithmetic mirrors pr3bp._kernels_py operation for operation (same grouping,
same evaluation order); together with -ffp-contract=off this keeps the two
backends bit-identical.
"""

from libc.math cimport sqrt


cdef inline void _accel(double mu, double n, double n2, double gm1,
                        double oblate, double w1,
                        double x, double y, double vx, double vy,
                        double *ax, double *ay) noexcept nogil:
    cdef double u = x + mu
    cdef double v = u - 1.0
    cdef double r1s = u * u + y * y
    cdef double r2s = v * v + y * y
    cdef double r13 = r1s * sqrt(r1s)
    cdef double r23 = r2s * sqrt(r2s)
    cdef double r25 = r23 * r2s
    cdef double gx = n2 * x - gm1 * u / r13 - mu * v / r23 - oblate * v / r25
    cdef double gy = n2 * y - gm1 * y / r13 - mu * y / r23 - oblate * y / r25
    cdef double radial = u * vx + y * vy
    cdef double d1 = u * radial / r1s + vx - n * y
    cdef double d2 = y * radial / r1s + vy + n * u
    ax[0] = 2.0 * n * vy + gx - w1 * d1 / r1s
    ay[0] = -2.0 * n * vx + gy - w1 * d2 / r1s


def rk4_eom(double mu, double n, double q1, double a2, double w1,
            double x, double y, double vx, double vy,
            Py_ssize_t nsteps, double dt, double[:, ::1] out):
    """Fixed-step RK4 on the full nonlinear equations of motion."""
    cdef double gm1 = (1.0 - mu) * q1
    cdef double n2 = n * n
    cdef double oblate = 1.5 * mu * a2
    cdef double ax1 = 0.0, ay1 = 0.0, ax2 = 0.0, ay2 = 0.0
    cdef double ax3 = 0.0, ay3 = 0.0, ax4 = 0.0, ay4 = 0.0
    cdef double x2, y2, vx2, vy2, x3, y3, vx3, vy3, x4, y4, vx4, vy4
    cdef Py_ssize_t i
    out[0, 0] = x
    out[0, 1] = y
    out[0, 2] = vx
    out[0, 3] = vy
    with nogil:
        for i in range(nsteps):
            _accel(mu, n, n2, gm1, oblate, w1, x, y, vx, vy, &ax1, &ay1)
            x2 = x + 0.5 * dt * vx
            y2 = y + 0.5 * dt * vy
            vx2 = vx + 0.5 * dt * ax1
            vy2 = vy + 0.5 * dt * ay1
            _accel(mu, n, n2, gm1, oblate, w1, x2, y2, vx2, vy2, &ax2, &ay2)
            x3 = x + 0.5 * dt * vx2
            y3 = y + 0.5 * dt * vy2
            vx3 = vx + 0.5 * dt * ax2
            vy3 = vy + 0.5 * dt * ay2
            _accel(mu, n, n2, gm1, oblate, w1, x3, y3, vx3, vy3, &ax3, &ay3)
            x4 = x + dt * vx3
            y4 = y + dt * vy3
            vx4 = vx + dt * ax3
            vy4 = vy + dt * ay3
            _accel(mu, n, n2, gm1, oblate, w1, x4, y4, vx4, vy4, &ax4, &ay4)
            x = x + (dt / 6.0) * (vx + 2.0 * vx2 + 2.0 * vx3 + vx4)
            y = y + (dt / 6.0) * (vy + 2.0 * vy2 + 2.0 * vy3 + vy4)
            vx = vx + (dt / 6.0) * (ax1 + 2.0 * ax2 + 2.0 * ax3 + ax4)
            vy = vy + (dt / 6.0) * (ay1 + 2.0 * ay2 + 2.0 * ay3 + ay4)
            out[i + 1, 0] = x
            out[i + 1, 1] = y
            out[i + 1, 2] = vx
            out[i + 1, 3] = vy
    return None


def rk4_linear(double[::1] m, double x, double y, double vx, double vy,
               Py_ssize_t nsteps, double dt, double[:, ::1] out):
    """Fixed-step RK4 on the linear system state' = M state (M row-major)."""
    cdef double m00 = m[0], m01 = m[1], m02 = m[2], m03 = m[3]
    cdef double m10 = m[4], m11 = m[5], m12 = m[6], m13 = m[7]
    cdef double m20 = m[8], m21 = m[9], m22 = m[10], m23 = m[11]
    cdef double m30 = m[12], m31 = m[13], m32 = m[14], m33 = m[15]
    cdef double a1, b1, c1, d1, a2, b2, c2, d2, a3, b3, c3, d3, a4, b4, c4, d4
    cdef double x2, y2, vx2, vy2, x3, y3, vx3, vy3, x4, y4, vx4, vy4
    cdef Py_ssize_t i
    out[0, 0] = x
    out[0, 1] = y
    out[0, 2] = vx
    out[0, 3] = vy
    with nogil:
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
