"""Independent brute-force oracles used by the tests.

Everything here is written against bare numpy, separately from the package
implementations, so the tests compare two genuinely different routes.
"""

import numpy as np

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)


def dag(a):
    return np.asarray(a).conj().T


def brute_power(mat, kappa, cutoff=1e-12):
    """Spectral-decomposition power with the support convention."""
    w, v = np.linalg.eigh(np.asarray(mat, dtype=complex))
    out = np.zeros(len(w))
    for i, x in enumerate(w):
        if x > cutoff:
            out[i] = x**kappa
    return (v * out) @ dag(v)


def brute_apply(ops, mat):
    """Kraus application as an explicit loop."""
    mat = np.asarray(mat, dtype=complex)
    total = np.zeros_like(mat)
    for k in ops:
        total = total + k @ mat @ dag(k)
    return total


def brute_mgv(mat, ops, alpha, beta):
    """Operator-by-operator total uncertainty from explicit matrix powers."""
    s = alpha + beta
    total = 0.0
    for k in ops:
        t1 = np.trace(mat @ dag(k) @ k).real
        t2 = np.trace(brute_power(mat, s) @ k @ brute_power(mat, 1 - s) @ dag(k)).real
        total += 0.5 * (t1 + t2) - abs(np.trace(mat @ k)) ** 2
    return total


def brute_mgwyd(mat, ops, alpha, beta):
    total = 0.0
    for k in ops:
        t1 = np.trace(mat @ dag(k) @ k).real
        ta = np.trace(brute_power(mat, alpha) @ k @ brute_power(mat, 1 - alpha) @ dag(k)).real
        tb = np.trace(brute_power(mat, beta) @ k @ brute_power(mat, 1 - beta) @ dag(k)).real
        ts = np.trace(
            brute_power(mat, alpha + beta) @ k @ brute_power(mat, 1 - alpha - beta) @ dag(k)
        ).real
        total += 0.5 * (t1 - ta - tb + ts)
    return total


def brute_partial_trace(mat, da, db, keep):
    """Loop-based block trace."""
    mat = np.asarray(mat, dtype=complex)
    if keep == "A":
        out = np.zeros((da, da), dtype=complex)
        for a in range(da):
            for c in range(da):
                out[a, c] = sum(mat[a * db + b, c * db + b] for b in range(db))
    else:
        out = np.zeros((db, db), dtype=complex)
        for b in range(db):
            for d in range(db):
                out[b, d] = sum(mat[a * db + b, a * db + d] for a in range(da))
    return out


def bloch_of(mat):
    """Bloch components (tr rho sigma_j) of a qubit matrix."""
    mat = np.asarray(mat, dtype=complex)
    return np.array([np.trace(mat @ s).real for s in (SX, SY, SZ)])


def random_bloch(rng, rmin=0.05, rmax=0.98):
    u = rng.normal(size=3)
    u /= np.linalg.norm(u)
    return u * rng.uniform(rmin, rmax)


def sample_ab(rng):
    a, b = rng.uniform(0.0, 1.0, size=2)
    if a + b > 1.0:
        a, b = 1.0 - a, 1.0 - b
    return float(a), float(b)
