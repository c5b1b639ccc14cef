"""Kraus-form quantum channels.

The catalog covers amplitude damping, phase damping, depolarizing, the
Hadamard-product decoherence channel, the flat operator-basis channel, von
Neumann measurements, and seeded random channels.  Channels validate the
completeness relation ``sum_i K_i^dag K_i = 1`` on construction and are
immutable afterwards.
"""

from __future__ import annotations

import numpy as np

from .exceptions import (
    DimensionMismatchError,
    NotTracePreservingError,
    NotUnitaryError,
)
from .linalg import PAULIS, as_complex_matrix
from .states import DensityMatrix, random_unitary

CPTP_TOL = 1e-10


def _check_unitary(u, tol: float = 1e-10, name: str = "matrix") -> np.ndarray:
    m = as_complex_matrix(u, name)
    drift = np.linalg.norm(m.conj().T @ m - np.eye(m.shape[0]))
    if drift > tol * max(1.0, m.shape[0]):
        raise NotUnitaryError(f"{name} is not unitary: ||u^dag u - 1||_F = {drift:.3e}")
    return m


class KrausChannel:
    """Quantum channel ``rho -> sum_i K_i rho K_i^dag``.

    Zero Kraus operators are legal and retained; the operator ordering is
    fixed at construction (significant only for reproducibility, never for
    channel action).
    """

    __slots__ = ("kraus_ops", "dim")

    def __init__(self, kraus_ops, *, validate: bool = True, atol: float = CPTP_TOL):
        ops = tuple(as_complex_matrix(k, "Kraus operator").copy() for k in kraus_ops)
        if not ops:
            raise ValueError("a channel needs at least one Kraus operator")
        dim = ops[0].shape[0]
        if any(k.shape != (dim, dim) for k in ops):
            raise DimensionMismatchError("Kraus operators must share one square shape")
        for k in ops:
            k.setflags(write=False)
        if validate:
            drift = np.linalg.norm(
                sum(k.conj().T @ k for k in ops) - np.eye(dim)
            )
            if drift > atol:
                raise NotTracePreservingError(
                    f"sum K^dag K deviates from identity by {drift:.3e} (Frobenius)"
                )
        self.kraus_ops = ops
        self.dim = dim

    def __len__(self) -> int:
        return len(self.kraus_ops)

    def __iter__(self):
        return iter(self.kraus_ops)

    def apply(self, x):
        """Channel action; maps DensityMatrix to DensityMatrix, array to array."""
        if isinstance(x, DensityMatrix):
            return DensityMatrix(self.apply(x.mat), validate=False)
        m = as_complex_matrix(x, "input matrix")
        if m.shape[0] != self.dim:
            raise DimensionMismatchError(
                f"input dim {m.shape[0]} does not match channel dim {self.dim}"
            )
        out = np.zeros_like(m)
        for k in self.kraus_ops:
            out += k @ m @ k.conj().T
        return out

    def completeness(self) -> np.ndarray:
        """``sum_i K_i^dag K_i`` (identity for a CPTP channel)."""
        return sum(k.conj().T @ k for k in self.kraus_ops)

    def dual_completeness(self) -> np.ndarray:
        """``sum_i K_i K_i^dag`` = channel applied to the identity."""
        return sum(k @ k.conj().T for k in self.kraus_ops)

    def is_unital(self, atol: float = CPTP_TOL) -> bool:
        """True iff the channel fixes the identity operator."""
        drift = np.linalg.norm(self.dual_completeness() - np.eye(self.dim))
        return bool(drift <= atol)

    def __repr__(self) -> str:
        return f"KrausChannel(dim={self.dim}, n_kraus={len(self)})"


def identity_channel(dim: int = 2) -> KrausChannel:
    return KrausChannel([np.eye(dim, dtype=complex)])


def amplitude_damping(p: float) -> KrausChannel:
    """Amplitude damping with decay probability ``p`` in [0, 1].

    Kraus pair ``diag(1, sqrt(1-p))`` and ``sqrt(p) |0><1|``; the second
    operator is kept even when it vanishes at p = 0.
    """
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"damping probability must lie in [0, 1], got {p}")
    k1 = np.array([[1.0, 0.0], [0.0, np.sqrt(1.0 - p)]], dtype=complex)
    k2 = np.array([[0.0, np.sqrt(p)], [0.0, 0.0]], dtype=complex)
    return KrausChannel([k1, k2])


def phase_damping(p: float) -> KrausChannel:
    """Phase damping with probability ``p`` in [0, 1]."""
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"damping probability must lie in [0, 1], got {p}")
    k1 = np.array([[1.0, 0.0], [0.0, np.sqrt(1.0 - p)]], dtype=complex)
    k2 = np.array([[0.0, 0.0], [0.0, np.sqrt(p)]], dtype=complex)
    return KrausChannel([k1, k2])


def depolarizing(p: float) -> KrausChannel:
    """Depolarizing channel ``(1-3p) rho + p sum_j sigma_j rho sigma_j``.

    ``p`` in [0, 1/3]; the Bloch vector contracts as ``r -> (1-4p) r``.
    """
    p = float(p)
    if not 0.0 <= p <= 1.0 / 3.0 + 1e-15:
        raise ValueError(f"depolarizing probability must lie in [0, 1/3], got {p}")
    ops = [np.sqrt(max(1.0 - 3.0 * p, 0.0)) * np.eye(2, dtype=complex)]
    ops += [np.sqrt(p) * s for s in PAULIS]
    return KrausChannel(ops)


def hadamard_decoherence(theta: float) -> KrausChannel:
    """Decoherence channel acting as the entrywise product with [[1, t], [t, 1]].

    Realized by the Kraus pair ``sqrt((1+t)/2) 1`` and ``sqrt((1-t)/2) sigma_z``,
    which is trace preserving for ``t`` in [-1, 1] and damps the off-diagonal
    qubit entries by the factor ``t``.
    """
    t = float(theta)
    if not -1.0 <= t <= 1.0:
        raise ValueError(f"decoherence parameter must lie in [-1, 1], got {t}")
    k1 = np.sqrt((1.0 + t) / 2.0) * np.eye(2, dtype=complex)
    k2 = np.sqrt((1.0 - t) / 2.0) * PAULIS[2]
    return KrausChannel([k1, k2])


def basis_channel(d: int) -> KrausChannel:
    """Channel built from the full matrix-unit basis, ``d*d`` Kraus operators.

    The operators are ``|l><m| / sqrt(d)`` in lexicographic (l, m) order; the
    action collapses every input to ``tr(x) 1 / d``.
    """
    if d < 2:
        raise ValueError(f"dimension must be at least 2, got {d}")
    ops = []
    for l in range(d):
        for m in range(d):
            k = np.zeros((d, d), dtype=complex)
            k[l, m] = 1.0 / np.sqrt(d)
            ops.append(k)
    return KrausChannel(ops)


def von_neumann_measurement(basis) -> KrausChannel:
    """Projective measurement in the basis given by a unitary's columns."""
    u = _check_unitary(basis, name="measurement basis")
    ops = [np.outer(u[:, i], u[:, i].conj()) for i in range(u.shape[0])]
    return KrausChannel(ops)


def computational_measurement(d: int) -> KrausChannel:
    return von_neumann_measurement(np.eye(d, dtype=complex))


def mix_kraus(phi: KrausChannel, u) -> KrausChannel:
    """Re-express a channel through the unitary Kraus-representation freedom.

    ``E_i = sum_j u_ij F_j`` for a k x k unitary ``u``; if ``u`` is larger
    than the Kraus count, the collection is zero-padded first.  The channel
    action is unchanged.
    """
    u = _check_unitary(u, name="mixing matrix")
    k = len(phi)
    m = u.shape[0]
    if m < k:
        raise ValueError(f"mixing matrix of size {m} cannot act on {k} Kraus operators")
    ops = list(phi.kraus_ops)
    ops += [np.zeros((phi.dim, phi.dim), dtype=complex)] * (m - k)
    mixed = [sum(u[i, j] * ops[j] for j in range(m)) for i in range(m)]
    return KrausChannel(mixed)


def tensor_with_identity(phi: KrausChannel, side: str, d_other: int) -> KrausChannel:
    """Extend a channel by the identity on a second factor.

    ``side`` names where the channel acts: ``'left'`` gives Kraus operators
    ``K_i (x) 1`` and ``'right'`` gives ``1 (x) K_i``.
    """
    eye = np.eye(d_other, dtype=complex)
    if side == "left":
        ops = [np.kron(k, eye) for k in phi.kraus_ops]
    elif side == "right":
        ops = [np.kron(eye, k) for k in phi.kraus_ops]
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return KrausChannel(ops, validate=False)


def convex_combination(phi1: KrausChannel, phi2: KrausChannel, lam: float) -> KrausChannel:
    """Channel ``lam phi1 + (1-lam) phi2`` as the sqrt-weighted union Kraus set."""
    if not 0.0 <= lam <= 1.0:
        raise ValueError(f"mixing weight must lie in [0, 1], got {lam}")
    if phi1.dim != phi2.dim:
        raise DimensionMismatchError("channels must share a dimension")
    ops = [np.sqrt(lam) * k for k in phi1.kraus_ops]
    ops += [np.sqrt(1.0 - lam) * k for k in phi2.kraus_ops]
    return KrausChannel(ops)


def random_channel(dim: int, n_kraus: int, seed=None) -> KrausChannel:
    """Seeded random CPTP channel from slices of a Haar-random dilation."""
    if n_kraus < 1:
        raise ValueError("need at least one Kraus operator")
    u = random_unitary(dim * n_kraus, seed)
    blocks = u.reshape(n_kraus, dim, n_kraus, dim)
    ops = [blocks[i, :, 0, :] for i in range(n_kraus)]
    return KrausChannel(ops)


def conjugate_channel(phi: KrausChannel, u) -> KrausChannel:
    """Channel with every Kraus operator conjugated: ``K_i -> U K_i U^dag``."""
    u = _check_unitary(u, name="conjugating unitary")
    ops = [u @ k @ u.conj().T for k in phi.kraus_ops]
    return KrausChannel(ops, validate=False)
