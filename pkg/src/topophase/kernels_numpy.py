"""Pure-numpy kernels: vectorized fallback for the numba hot loops.

Every function here mirrors a function in ``kernels_numba`` operation for
operation (same arithmetic expressions in the same order), so the two
backends agree to the last bit on identical inputs.
"""

import numpy as np


def rk4_bloch(seg_dt, seg_rate, seg_steps, s0):
    """Fixed-step RK4 for sx' = -w·sy, sy' = +w·sx, sz' = 0, per segment.

    seg_dt, seg_rate : per-segment duration and (constant) angular rate w
    seg_steps        : steps per segment
    Returns bloch array of shape (1 + sum(seg_steps), 3).
    """
    total = 1 + int(np.sum(seg_steps))
    out = np.empty((total, 3))
    sx, sy, sz = float(s0[0]), float(s0[1]), float(s0[2])
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


def _couple(a, b, v, g, delta, u, z):
    """One Gaussian-pointer coupling applied to a batch of spin states.

    v columns are the +1/-1 eigenvectors of the measured observable.
    Returns (readouts, a', b') with the states renormalized.
    """
    inv4 = 1.0 / (4.0 * delta * delta) if delta > 0.0 else 0.0
    u0 = np.conj(v[0, 0]) * a + np.conj(v[1, 0]) * b
    u1 = np.conj(v[0, 1]) * a + np.conj(v[1, 1]) * b
    w0 = u0.real * u0.real + u0.imag * u0.imag
    w1 = u1.real * u1.real + u1.imag * u1.imag
    p0 = w0 / (w0 + w1)
    s = np.where(u < p0, 1.0, -1.0)
    q = s * g + delta * z
    c0 = np.exp(-(q - g) * (q - g) * inv4)
    c1 = np.exp(-(q + g) * (q + g) * inv4)
    u0 = c0 * u0
    u1 = c1 * u1
    a2 = v[0, 0] * u0 + v[0, 1] * u1
    b2 = v[1, 0] * u0 + v[1, 1] * u1
    nrm = np.sqrt(a2.real * a2.real + a2.imag * a2.imag + b2.real * b2.real + b2.imag * b2.imag)
    return q, a2 / nrm, b2 / nrm


def two_coupling_batch(a0, b0, v1, phase, v2, g, delta, u, z):
    """Pointer coupling, z-axis precession by phase-operator angle, second coupling.

    a0, b0 : initial spin amplitudes (shared by all trials)
    v1, v2 : 2x2 eigenvector matrices of the two coupled observables
    phase  : sigma_z = +1 phase accumulated between the couplings
    u, z   : per-trial uniforms / normals, shape (n, 2)
    Returns (readouts (n,2), z_mid (n,), psi (n,2)).
    """
    n = u.shape[0]
    a = np.full(n, a0, dtype=np.complex128)
    b = np.full(n, b0, dtype=np.complex128)
    q1, a, b = _couple(a, b, v1, g, delta, u[:, 0], z[:, 0])
    ph = np.exp(-1j * phase)
    a = ph * a
    b = np.conj(ph) * b
    zmid = (a.real * a.real + a.imag * a.imag) - (b.real * b.real + b.imag * b.imag)
    q2, a, b = _couple(a, b, v2, g, delta, u[:, 1], z[:, 1])
    readouts = np.empty((n, 2))
    readouts[:, 0] = q1
    readouts[:, 1] = q2
    psi = np.empty((n, 2), dtype=np.complex128)
    psi[:, 0] = a
    psi[:, 1] = b
    return readouts, zmid, psi


def single_coupling_batch(a0, b0, v, g, delta, u, z):
    """One pointer coupling on a batch; returns (readouts (n,), psi (n,2))."""
    n = u.shape[0]
    a = np.full(n, a0, dtype=np.complex128)
    b = np.full(n, b0, dtype=np.complex128)
    q, a, b = _couple(a, b, v, g, delta, u, z)
    psi = np.empty((n, 2), dtype=np.complex128)
    psi[:, 0] = a
    psi[:, 1] = b
    return q, psi
