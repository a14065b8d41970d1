"""Independent reference implementations used only by the tests.

Everything here is written with explicit index loops or textbook algorithms
and shares no code with the package.
"""

import math

import numpy as np


def realign_loops(x, m, n):
    out = np.zeros((m * m, n * n), dtype=complex)
    for i in range(m):
        for j in range(m):
            for k in range(n):
                for l in range(n):
                    out[i * m + j, k * n + l] = x[i * n + k, j * n + l]
    return out


def partial_trace_b_loops(x, m, n):
    out = np.zeros((m, m), dtype=complex)
    for i in range(m):
        for k in range(m):
            out[i, k] = sum(x[i * n + j, k * n + j] for j in range(n))
    return out


def partial_trace_a_loops(x, m, n):
    out = np.zeros((n, n), dtype=complex)
    for j in range(n):
        for l in range(n):
            out[j, l] = sum(x[i * n + j, i * n + l] for i in range(m))
    return out


def partial_transpose_loops(x, m, n):
    out = np.zeros_like(x, dtype=complex)
    for i in range(m):
        for j in range(n):
            for k in range(m):
                for l in range(n):
                    out[i * n + j, k * n + l] = x[k * n + j, i * n + l]
    return out


def jacobi_singular_values(a, sweeps=100, tol=1e-15):
    """One-sided (Hestenes) Jacobi SVD on the columns of ``a``."""
    a = np.array(a, dtype=complex)
    if a.shape[0] < a.shape[1]:
        a = a.conj().T
    u = a.copy()
    cols = u.shape[1]
    floor = 1e-300 + 1e-32 * float(np.vdot(u, u).real)
    for _ in range(sweeps):
        rotated = False
        for p in range(cols - 1):
            for q in range(p + 1, cols):
                alpha = np.vdot(u[:, p], u[:, p]).real
                beta = np.vdot(u[:, q], u[:, q]).real
                gamma = np.vdot(u[:, p], u[:, q])
                if abs(gamma) <= tol * math.sqrt(alpha * beta) or abs(gamma) <= floor:
                    continue
                rotated = True
                phase = gamma / abs(gamma)
                zeta = (beta - alpha) / (2 * abs(gamma))
                if abs(zeta) > 1e150:
                    t = 1 / (2 * zeta)
                else:
                    t = math.copysign(1.0, zeta) / (abs(zeta) + math.sqrt(1 + zeta * zeta))
                c = 1 / math.sqrt(1 + t * t)
                s = c * t
                up = u[:, p].copy()
                uq = u[:, q].copy()
                u[:, p] = c * up - s * np.conj(phase) * uq
                u[:, q] = s * phase * up + c * uq
        if not rotated:
            break
    return np.sort(np.linalg.norm(u, axis=0))[::-1]


def trace_norm_jacobi(a):
    return float(jacobi_singular_values(a).sum())


def enhanced_f_loops(rho, m, n):
    """f via loops and the Jacobi SVD."""
    ra = partial_trace_b_loops(rho, m, n)
    rb = partial_trace_a_loops(rho, m, n)
    prod = np.zeros_like(rho, dtype=complex)
    for i in range(m):
        for j in range(n):
            for k in range(m):
                for l in range(n):
                    prod[i * n + j, k * n + l] = ra[i, k] * rb[j, l]
    tn = trace_norm_jacobi(realign_loops(rho - prod, m, n))
    pa = sum(ra[i, k] * ra[k, i] for i in range(m) for k in range(m)).real
    pb = sum(rb[i, k] * rb[k, i] for i in range(n) for k in range(n)).real
    return tn - math.sqrt(max(0.0, (1 - pa) * (1 - pb)))


def lower_bound_loops(rho, m, n):
    N = max(m, n)
    return max(0.0, math.sqrt(2 * N / ((N - 1) * (N + 1) ** 2)) * enhanced_f_loops(rho, m, n))


def horodecki_transcribed(a):
    """The 9x9 matrix typed in row by row."""
    b = (1 + a) / 2
    c = math.sqrt(1 - a * a) / 2
    rows = [
        [a, 0, 0, 0, a, 0, 0, 0, a],
        [0, a, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, a, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, a, 0, 0, 0, 0, 0],
        [a, 0, 0, 0, a, 0, 0, 0, a],
        [0, 0, 0, 0, 0, a, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, b, 0, c],
        [0, 0, 0, 0, 0, 0, 0, a, 0],
        [a, 0, 0, 0, a, 0, c, 0, b],
    ]
    return np.array(rows, dtype=float) / (8 * a + 1)


def alpha_transcribed(alpha):
    """Uses kets |01>,|12>,|20> for sigma_+ and |10>,|21>,|02> for sigma_-."""
    def ket(i, j):
        v = np.zeros(9)
        v[3 * i + j] = 1
        return v

    psi = (ket(0, 0) + ket(1, 1) + ket(2, 2)) / math.sqrt(3)
    sp = sum(np.outer(ket(i, j), ket(i, j)) for i, j in [(0, 1), (1, 2), (2, 0)]) / 3
    sm = sum(np.outer(ket(i, j), ket(i, j)) for i, j in [(1, 0), (2, 1), (0, 2)]) / 3
    return 2 / 7 * np.outer(psi, psi) + alpha / 7 * sp + (5 - alpha) / 7 * sm
