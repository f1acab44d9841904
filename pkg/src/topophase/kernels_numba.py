"""Numba-compiled hot kernels (per-trial loops, RK4 time stepping).

Arithmetic matches ``kernels_numpy`` expression for expression; only the loop
structure differs.  Compiled lazily with on-disk caching, so the first call
in a fresh environment pays the JIT cost once.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def rk4_bloch(seg_dt, seg_rate, seg_steps, s0):
    total = 1 + int(np.sum(seg_steps))
    out = np.empty((total, 3))
    sx = float(s0[0])
    sy = float(s0[1])
    sz = float(s0[2])
    out[0, 0] = sx
    out[0, 1] = sy
    out[0, 2] = sz
    row = 1
    for k in range(seg_dt.shape[0]):
        n = int(seg_steps[k])
        h = seg_dt[k] / n
        w = seg_rate[k]
        for _ in range(n):
            k1x = -w * sy
            k1y = w * sx
            k2x = -w * (sy + 0.5 * h * k1y)
            k2y = w * (sx + 0.5 * h * k1x)
            k3x = -w * (sy + 0.5 * h * k2y)
            k3y = w * (sx + 0.5 * h * k2x)
            k4x = -w * (sy + h * k3y)
            k4y = w * (sx + h * k3x)
            sx = sx + (h / 6.0) * (k1x + 2.0 * k2x + 2.0 * k3x + k4x)
            sy = sy + (h / 6.0) * (k1y + 2.0 * k2y + 2.0 * k3y + k4y)
            out[row, 0] = sx
            out[row, 1] = sy
            out[row, 2] = sz
            row += 1
    return out


@njit(cache=True)
def two_coupling_batch(a0, b0, v1, phase, v2, g, delta, u, z):
    n = u.shape[0]
    readouts = np.empty((n, 2))
    zmid = np.empty(n)
    psi = np.empty((n, 2), dtype=np.complex128)
    inv4 = 1.0 / (4.0 * delta * delta) if delta > 0.0 else 0.0
    ph = np.exp(-1j * phase)
    phc = np.conj(ph)
    for i in range(n):
        a = a0
        b = b0
        # first coupling
        u0 = np.conj(v1[0, 0]) * a + np.conj(v1[1, 0]) * b
        u1 = np.conj(v1[0, 1]) * a + np.conj(v1[1, 1]) * b
        w0 = u0.real * u0.real + u0.imag * u0.imag
        w1 = u1.real * u1.real + u1.imag * u1.imag
        p0 = w0 / (w0 + w1)
        s = 1.0 if u[i, 0] < p0 else -1.0
        q = s * g + delta * z[i, 0]
        c0 = np.exp(-(q - g) * (q - g) * inv4)
        c1 = np.exp(-(q + g) * (q + g) * inv4)
        u0 = c0 * u0
        u1 = c1 * u1
        a2 = v1[0, 0] * u0 + v1[0, 1] * u1
        b2 = v1[1, 0] * u0 + v1[1, 1] * u1
        nrm = np.sqrt(a2.real * a2.real + a2.imag * a2.imag + b2.real * b2.real + b2.imag * b2.imag)
        a = a2 / nrm
        b = b2 / nrm
        readouts[i, 0] = q
        # precession between the couplings
        a = ph * a
        b = phc * b
        zmid[i] = (a.real * a.real + a.imag * a.imag) - (b.real * b.real + b.imag * b.imag)
        # second coupling
        u0 = np.conj(v2[0, 0]) * a + np.conj(v2[1, 0]) * b
        u1 = np.conj(v2[0, 1]) * a + np.conj(v2[1, 1]) * b
        w0 = u0.real * u0.real + u0.imag * u0.imag
        w1 = u1.real * u1.real + u1.imag * u1.imag
        p0 = w0 / (w0 + w1)
        s = 1.0 if u[i, 1] < p0 else -1.0
        q = s * g + delta * z[i, 1]
        c0 = np.exp(-(q - g) * (q - g) * inv4)
        c1 = np.exp(-(q + g) * (q + g) * inv4)
        u0 = c0 * u0
        u1 = c1 * u1
        a2 = v2[0, 0] * u0 + v2[0, 1] * u1
        b2 = v2[1, 0] * u0 + v2[1, 1] * u1
        nrm = np.sqrt(a2.real * a2.real + a2.imag * a2.imag + b2.real * b2.real + b2.imag * b2.imag)
        a = a2 / nrm
        b = b2 / nrm
        readouts[i, 1] = q
        psi[i, 0] = a
        psi[i, 1] = b
    return readouts, zmid, psi


@njit(cache=True)
def single_coupling_batch(a0, b0, v, g, delta, u, z):
    n = u.shape[0]
    readouts = np.empty(n)
    psi = np.empty((n, 2), dtype=np.complex128)
    inv4 = 1.0 / (4.0 * delta * delta) if delta > 0.0 else 0.0
    for i in range(n):
        a = a0
        b = b0
        u0 = np.conj(v[0, 0]) * a + np.conj(v[1, 0]) * b
        u1 = np.conj(v[0, 1]) * a + np.conj(v[1, 1]) * b
        w0 = u0.real * u0.real + u0.imag * u0.imag
        w1 = u1.real * u1.real + u1.imag * u1.imag
        p0 = w0 / (w0 + w1)
        s = 1.0 if u[i] < p0 else -1.0
        q = s * g + delta * z[i]
        c0 = np.exp(-(q - g) * (q - g) * inv4)
        c1 = np.exp(-(q + g) * (q + g) * inv4)
        u0 = c0 * u0
        u1 = c1 * u1
        a2 = v[0, 0] * u0 + v[0, 1] * u1
        b2 = v[1, 0] * u0 + v[1, 1] * u1
        nrm = np.sqrt(a2.real * a2.real + a2.imag * a2.imag + b2.real * b2.real + b2.imag * b2.imag)
        readouts[i] = q
        psi[i, 0] = a2 / nrm
        psi[i, 1] = b2 / nrm
    return readouts, psi
