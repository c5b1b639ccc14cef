"""Analytic closed forms for the channel catalog.

These expressions validate the generic spectral path and generate the sweep
curves exactly.  Qubit formulas are written in the state eigenvalues
``lam_{1,2} = (1 -+ r)/2`` with ``r`` the Bloch radius; scalar powers follow
the same support convention as the spectral code (``0**k = 0``, including
k = 0), which keeps the formulas consistent with the generic path at the
parameter boundaries.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .linalg import spow, support_powers, xlog2
from .states import DensityMatrix
from .uncertainty import AlphaBeta


def qubit_spectrum(r: float) -> tuple[float, float]:
    """Eigenvalues ``((1-r)/2, (1+r)/2)`` of a qubit with Bloch radius r."""
    if not 0.0 <= r <= 1.0 + 1e-12:
        raise ValueError(f"Bloch radius must lie in [0, 1], got {r}")
    return (1.0 - r) / 2.0, (1.0 + r) / 2.0


def _qubit_terms(r: float, alpha: float, beta: float):
    l1, l2 = qubit_spectrum(r)
    s = alpha + beta

    def asum(k):
        return spow(l1, k) + spow(l2, k)

    def adiff(k):
        return spow(l1, k) - spow(l2, k)

    return l1, l2, s, asum, adiff


def amplitude_damping_vq(bloch, p: float, alpha: float, beta: float) -> tuple[float, float]:
    """(V, Q) of the amplitude damping channel on a Bloch-vector qubit."""
    AlphaBeta(alpha, beta)
    r1, r2, r3 = (float(c) for c in bloch)
    r = np.sqrt(r1 * r1 + r2 * r2 + r3 * r3)
    q = 1.0 - p
    rq = np.sqrt(q)
    if r < 1e-12:
        # direction-independent limit at the fully mixed state
        return 0.5 + p / 4.0 - rq / 2.0, 0.0
    l1, l2, s, asum, adiff = _qubit_terms(r, alpha, beta)
    v = (
        asum(s) * asum(1.0 - s) / 4.0
        - p * r * r / 4.0
        + (p + rq - 1.0) / 2.0 * r3 * r3
        - (2.0 * p * r3 - p + 2.0 * rq) / 4.0
        + p * r3 / (4.0 * r)
        * (spow(l1, 1.0 - s) * spow(l2, s) - spow(l2, 1.0 - s) * spow(l1, s) + l2 - l1)
        + (2.0 * rq * (r * r - r3 * r3) + 2.0 * q * r3 * r3)
        / (8.0 * r * r) * adiff(s) * adiff(1.0 - s)
    )
    quantum = 0.5 * (
        ((1.0 - rq) * (r1 * r1 + r2 * r2) + p * r3 * r3) / (2.0 * r * r) * asum(1.0 - s)
        + p * r3 / (2.0 * r) * adiff(1.0 - s)
    ) * adiff(alpha) * adiff(beta)
    return float(v), float(quantum)


def phase_damping_vq(bloch, p: float, alpha: float, beta: float) -> tuple[float, float]:
    """(V, Q) of the phase damping channel on a Bloch-vector qubit."""
    AlphaBeta(alpha, beta)
    r1, r2, r3 = (float(c) for c in bloch)
    r = np.sqrt(r1 * r1 + r2 * r2 + r3 * r3)
    rq = np.sqrt(1.0 - p)
    if r < 1e-12:
        return (1.0 - rq) / 2.0, 0.0
    l1, l2, s, asum, adiff = _qubit_terms(r, alpha, beta)
    v = (
        asum(s) * asum(1.0 - s) / 4.0
        - (rq + (1.0 - rq) * r3 * r3) / 2.0
        + ((1.0 - rq) * r3 * r3 + rq * r * r) / (4.0 * r * r) * adiff(s) * adiff(1.0 - s)
    )
    quantum = (
        0.5 * (1.0 - rq) * (r1 * r1 + r2 * r2) / (2.0 * r * r)
        * adiff(alpha) * adiff(beta) * asum(1.0 - s)
    )
    return float(v), float(quantum)


def depolarizing_vq(bloch, p: float, alpha: float, beta: float) -> tuple[float, float]:
    """(V, Q) of the depolarizing channel on a Bloch-vector qubit."""
    AlphaBeta(alpha, beta)
    r1, r2, r3 = (float(c) for c in bloch)
    r = np.sqrt(r1 * r1 + r2 * r2 + r3 * r3)
    if r < 1e-12:
        return 3.0 * p, 0.0
    l1, l2, s, asum, adiff = _qubit_terms(r, alpha, beta)
    v = (
        2.0 + asum(s) * asum(1.0 - s) + (1.0 - 4.0 * p) * adiff(s) * adiff(1.0 - s)
    ) / 4.0 - (1.0 - 3.0 * p + p * r * r)
    quantum = p * adiff(alpha) * adiff(beta) * asum(1.0 - s)
    return float(v), float(quantum)


def decoherence_vq(bloch, theta: float, alpha: float, beta: float) -> tuple[float, float]:
    """(V, Q) of the entrywise decoherence channel on a Bloch-vector qubit."""
    AlphaBeta(alpha, beta)
    r1, r2, r3 = (float(c) for c in bloch)
    r = np.sqrt(r1 * r1 + r2 * r2 + r3 * r3)
    t = float(theta)
    if r < 1e-12:
        return (1.0 - t) / 2.0, 0.0
    l1, l2, s, asum, adiff = _qubit_terms(r, alpha, beta)
    v = (
        asum(s) * asum(1.0 - s) / 4.0
        - (r3 * r3 + t - r3 * r3 * t) / 2.0
        + (t * r * r + r3 * r3 - t * r3 * r3) / (4.0 * r * r) * adiff(s) * adiff(1.0 - s)
    )
    w = (r3 * r3 + t * (r1 * r1 + r2 * r2)) / (4.0 * r * r)
    quantum = (
        (asum(s) * asum(1.0 - s) + 2.0) / 4.0
        - (asum(alpha) * asum(1.0 - alpha) + asum(beta) * asum(1.0 - beta)) / 4.0
        - w * (adiff(alpha) * adiff(1.0 - alpha) + adiff(beta) * adiff(1.0 - beta))
        + w * adiff(s) * adiff(1.0 - s)
    )
    return float(v), float(quantum)


QUBIT_CHANNEL_VQ = {
    "amplitude_damping": amplitude_damping_vq,
    "phase_damping": phase_damping_vq,
    "depolarizing": depolarizing_vq,
    "hadamard_decoherence": decoherence_vq,
}


def qubit_channel_vq(kind: str, bloch, param: float,
                     alpha: float, beta: float) -> tuple[float, float]:
    """Dispatch the qubit closed forms by channel kind."""
    try:
        fn = QUBIT_CHANNEL_VQ[kind]
    except KeyError:
        raise ValueError(f"unknown qubit channel kind {kind!r}") from None
    return fn(bloch, param, alpha, beta)


def basis_channel_vq(rho: DensityMatrix, alpha: float, beta: float) -> tuple[float, float]:
    """(V, Q) of the flat operator-basis channel from eigenvalue power traces.

    V = [d + tr rho^(a+b) tr rho^(1-a-b) - 2 tr rho^2] / (2d)
    Q = [d + tr rho^(a+b) tr rho^(1-a-b) - tr rho^a tr rho^(1-a)
         - tr rho^b tr rho^(1-b)] / (2d)
    """
    AlphaBeta(alpha, beta)
    w, _ = rho.spectrum()
    d = rho.dim
    s = alpha + beta

    def tr_pow(k):
        # eigenvalues carry numerical noise, so cut at the support threshold
        return float(support_powers(w, k).sum())

    v = (d + tr_pow(s) * tr_pow(1.0 - s) - 2.0 * float((w**2).sum())) / (2.0 * d)
    quantum = (
        d + tr_pow(s) * tr_pow(1.0 - s)
        - tr_pow(alpha) * tr_pow(1.0 - alpha)
        - tr_pow(beta) * tr_pow(1.0 - beta)
    ) / (2.0 * d)
    return float(v), float(quantum)


def werner_vq(p: float, alpha: float, beta: float) -> tuple[float, float]:
    """(V, Q) of the flat-basis channel on the Werner family, in closed form."""
    AlphaBeta(alpha, beta)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"Werner parameter must lie in [0, 1], got {p}")
    s = alpha + beta

    def cross(k):
        # 3^k p^(1-k) (1-p)^k + 3^(1-k) p^k (1-p)^(1-k)
        return (3.0**k * spow(p, 1.0 - k) * spow(1.0 - p, k)
                + 3.0 ** (1.0 - k) * spow(p, k) * spow(1.0 - p, 1.0 - k))

    v = (3.0 + 6.0 * p - 8.0 * p * p / 3.0 + cross(s)) / 8.0
    quantum = (3.0 - 2.0 * p + cross(s) - cross(alpha) - cross(beta)) / 8.0
    return float(v), float(quantum)


def isotropic_vq(f: float, alpha: float, beta: float) -> tuple[float, float]:
    """(V, Q) of the flat-basis channel on the isotropic family, in closed form."""
    AlphaBeta(alpha, beta)
    if not 0.0 <= f <= 1.0:
        raise ValueError(f"isotropic parameter must lie in [0, 1], got {f}")
    s = alpha + beta

    def cross(k):
        # 3^k f^k (1-f)^(1-k) + 3^(1-k) f^(1-k) (1-f)^k
        return (3.0**k * spow(f, k) * spow(1.0 - f, 1.0 - k)
                + 3.0 ** (1.0 - k) * spow(f, 1.0 - k) * spow(1.0 - f, k))

    v = (19.0 - 2.0 * f - 8.0 * f * f + 3.0 * cross(s)) / 24.0
    quantum = (1.0 + 2.0 * f + cross(s) - cross(alpha) - cross(beta)) / 8.0
    return float(v), float(quantum)


def projective_vq(rho: DensityMatrix, basis, alpha: float, beta: float) -> tuple[float, float]:
    """(V, Q) of a von Neumann measurement from diagonal power elements.

    Uses ``m_k[i] = <i| rho^k |i>`` in the measurement basis:
    V = (1 + sum_i m_s m_(1-s)) / 2 - sum_i m_1^2,
    Q = (1 + sum_i m_s m_(1-s) - sum_i m_a m_(1-a) - sum_i m_b m_(1-b)) / 2.
    """
    AlphaBeta(alpha, beta)
    u = np.asarray(basis, dtype=complex)
    drift = np.linalg.norm(u.conj().T @ u - np.eye(u.shape[0]))
    if drift > 1e-10 * max(1.0, u.shape[0]):
        raise ValueError("measurement basis is not unitary")
    s = alpha + beta

    def diag_pow(k):
        return np.einsum("ij,jk,ki->i", u.conj().T, rho.power(k), u).real

    m_s, m_1s = diag_pow(s), diag_pow(1.0 - s)
    m_a, m_1a = diag_pow(alpha), diag_pow(1.0 - alpha)
    m_b, m_1b = diag_pow(beta), diag_pow(1.0 - beta)
    m_1 = diag_pow(1.0)
    v = 0.5 * (1.0 + float(m_s @ m_1s)) - float(m_1 @ m_1)
    quantum = 0.5 * (1.0 + float(m_s @ m_1s) - float(m_a @ m_1a) - float(m_b @ m_1b))
    return float(v), float(quantum)


def werner_tradeoff_sides(p: float, alpha: float, beta: float) -> tuple[float, float]:
    """Both sides of the fidelity trade-off for a Werner state under the
    computational-basis measurement.

    The right side is piecewise in p (the largest diagonal power element
    switches position at p = 3/4, where both sides equal 1).
    """
    AlphaBeta(alpha, beta)
    s = alpha + beta
    up = 3.0 ** (s - 1.0) * spow(p, 1.0 - s) * spow(1.0 - p, s)
    down = 3.0**-s * spow(p, s) * spow(1.0 - p, 1.0 - s)
    lhs = 0.75 + p / 6.0 + 0.25 * (up + down)
    if p < 0.75:
        rhs = 0.75 + 0.25 * (3.0 ** (1.0 - s) * spow(p, s) * spow(1.0 - p, 1.0 - s) + up)
    elif p > 0.75:
        rhs = p / 2.0 + 0.5 * (1.0 + up)
    else:
        rhs = 1.0
    return float(lhs), float(rhs)


def isotropic_tradeoff_sides(f: float, alpha: float, beta: float) -> tuple[float, float]:
    """Both sides of the fidelity trade-off for an isotropic state under the
    computational-basis measurement (switch point at f = 1/4)."""
    AlphaBeta(alpha, beta)
    s = alpha + beta
    hi = 3.0 ** (s - 1.0) * spow(f, s) * spow(1.0 - f, 1.0 - s)
    lo = 3.0**-s * spow(f, 1.0 - s) * spow(1.0 - f, s)
    lhs = 11.0 / 12.0 - f / 6.0 + 0.25 * (lo + hi)
    if f < 0.25:
        rhs = 1.0 + 0.5 * (hi - f)
    elif f > 0.25:
        rhs = 0.75 + 0.25 * (3.0 ** (1.0 - s) * spow(f, 1.0 - s) * spow(1.0 - f, s) + hi)
    else:
        rhs = 1.0
    return float(lhs), float(rhs)


class BoundCurves(NamedTuple):
    """The four curves of the entropy-exchange and coherent-information bounds.

    exchange_bound >= exchange is the entropy-exchange bound under the
    measurement channel; coherent_bound >= coherent_floor is the
    coherent-information bound.  ``exchange`` equals the state entropy, the
    entropy exchanged by measuring in the family's own eigenbasis (the Bell
    basis); ``exchange_bound`` is the bound side under the computational-basis
    measurement.
    """

    exchange_bound: float
    exchange: float
    coherent_bound: float
    coherent_floor: float


def werner_bound_curves(p: float) -> BoundCurves:
    """Bound curves for the Werner family under the von Neumann measurement."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"Werner parameter must lie in [0, 1], got {p}")
    exchange_bound = 3.0 + 8.0 * p / 3.0 - 16.0 * p * p / 9.0
    exchange = -xlog2(1.0 - p)
    if p > 0.0:
        exchange -= p * np.log2(p / 3.0)
    coherent_bound = 4.0 + 16.0 * p / 3.0 - 32.0 * p * p / 9.0
    coherent_bound += xlog2(1.0 - p)
    if p > 0.0:
        coherent_bound += (p / 3.0) * np.log2(p / 3.0)
    coherent_bound -= ((3.0 - 2.0 * p) / 3.0) * np.log2((3.0 - 2.0 * p) / 6.0)
    return BoundCurves(
        float(exchange_bound), float(exchange),
        float(coherent_bound), float(exchange - 2.0),
    )


def isotropic_bound_curves(f: float) -> BoundCurves:
    """Bound curves for the isotropic family under the von Neumann measurement."""
    if not 0.0 <= f <= 1.0:
        raise ValueError(f"isotropic parameter must lie in [0, 1], got {f}")
    exchange_bound = 35.0 / 9.0 + 8.0 * f / 9.0 - 16.0 * f * f / 9.0
    exchange = -xlog2(f)
    if f < 1.0:
        exchange -= (1.0 - f) * np.log2((1.0 - f) / 3.0)
    coherent_bound = 52.0 / 9.0 + (16.0 / 9.0) * f * (1.0 - 2.0 * f)
    if f < 1.0:
        coherent_bound += ((1.0 - f) / 3.0) * np.log2((1.0 - f) / 3.0)
    coherent_bound += xlog2(f)
    coherent_bound -= ((1.0 + 2.0 * f) / 3.0) * np.log2((1.0 + 2.0 * f) / 6.0)
    return BoundCurves(
        float(exchange_bound), float(exchange),
        float(coherent_bound), float(exchange - 2.0),
    )
