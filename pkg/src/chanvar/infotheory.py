"""Entanglement fidelity, entropy exchange, coherent information, and the
trade-off bounds tying them to the channel uncertainty.

Every bound evaluator returns a :class:`BoundReport` with ``slack = rhs - lhs``
oriented so that non-negative slack (within tolerance) means the bound holds.
Unsatisfied bounds are data, not errors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .channels import KrausChannel, tensor_with_identity
from .exceptions import DimensionMismatchError, NotUnitalError
from .linalg import binary_entropy, von_neumann_entropy
from .states import DensityMatrix, projector, purify
from .uncertainty import AlphaBeta, mgv_channel

BOUND_TOL = 1e-9
IDENTITY_DRIFT_TOL = 1e-10


@dataclass(frozen=True)
class BoundReport:
    """Two sides of an inequality; satisfied iff ``rhs - lhs >= -1e-9``."""

    lhs: float
    rhs: float

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs

    @property
    def satisfied(self) -> bool:
        return self.slack >= -BOUND_TOL


def _as_state(rho) -> DensityMatrix:
    return rho if isinstance(rho, DensityMatrix) else DensityMatrix(rho)


def _check_dims(rho: DensityMatrix, phi: KrausChannel):
    if rho.dim != phi.dim:
        raise DimensionMismatchError(
            f"state dim {rho.dim} does not match channel dim {phi.dim}"
        )


def entanglement_fidelity(rho, phi: KrausChannel) -> float:
    """``F_e = sum_i |tr rho K_i|^2``, in [0, 1].

    Measures how well entanglement with an ancilla survives the channel;
    independent of the Kraus representation.
    """
    rho = _as_state(rho)
    _check_dims(rho, phi)
    return float(sum(abs(np.trace(rho.mat @ k)) ** 2 for k in phi.kraus_ops))


def entanglement_fidelity_from_purification(rho, phi: KrausChannel) -> float:
    """Purification route: overlap of the purified input with the joint output.

    Cross-check oracle for :func:`entanglement_fidelity`; the two agree for
    every purification.
    """
    rho = _as_state(rho)
    _check_dims(rho, phi)
    psi, da, db = purify(rho)
    eye = np.eye(da, dtype=complex)
    total = 0.0
    for k in phi.kraus_ops:
        total += abs(np.vdot(psi, np.kron(eye, k) @ psi)) ** 2
    return float(total)


def exchange_matrix(rho, phi: KrausChannel) -> np.ndarray:
    """Gram matrix ``W_ij = tr(K_i rho K_j^dag)``.

    Shares its nonzero spectrum with the joint output of the purified input,
    so its entropy is the entropy exchange at k x k cost instead of
    (d_A d)^2.
    """
    rho = _as_state(rho)
    _check_dims(rho, phi)
    ops = phi.kraus_ops
    k = len(ops)
    w = np.empty((k, k), dtype=complex)
    for i in range(k):
        left = ops[i] @ rho.mat
        for j in range(k):
            w[i, j] = np.trace(left @ ops[j].conj().T)
    return w


def entropy_exchange(rho, phi: KrausChannel) -> float:
    """Entropy exchanged with the environment, in bits."""
    return von_neumann_entropy(exchange_matrix(rho, phi))


def entropy_exchange_from_purification(rho, phi: KrausChannel) -> float:
    """Entropy of the explicitly built joint output of a purification.

    Cross-check oracle for :func:`entropy_exchange`.
    """
    rho = _as_state(rho)
    _check_dims(rho, phi)
    psi, da, db = purify(rho)
    extended = tensor_with_identity(phi, "right", da)
    joint = extended.apply(projector(psi))
    return joint.entropy()


def coherent_information(rho, phi: KrausChannel) -> float:
    """``I_c = S(Phi(rho)) - S_e``, the transmitted quantum information in bits."""
    rho = _as_state(rho)
    _check_dims(rho, phi)
    out_entropy = von_neumann_entropy(phi.apply(rho.mat))
    return out_entropy - entropy_exchange(rho, phi)


def _uncertainty_and_overlap(rho: DensityMatrix, phi: KrausChannel,
                             alpha: float, beta: float) -> tuple[float, float]:
    """(V, tr rho^(a+b) Phi(rho^(1-a-b))) with a single spectrum reuse."""
    s = alpha + beta
    out = phi.apply(rho.power(1.0 - s))
    overlap = float(np.trace(rho.power(s) @ out).real)
    v = mgv_channel(rho, phi, alpha, beta)
    return v, overlap


def fidelity_tradeoff(rho, phi: KrausChannel, alpha: float, beta: float) -> BoundReport:
    """Trade-off between channel uncertainty and entanglement fidelity.

    lhs = V + F_e, rhs = (1 + lambda_max(Phi(rho^(1-a-b))) tr rho^(a+b)) / 2.
    The lhs equals ``(1 + tr rho^(a+b) Phi(rho^(1-a-b))) / 2`` identically;
    that identity is asserted internally.  Saturates whenever the nonzero
    spectrum of ``Phi(rho^(1-a-b))`` is flat.
    """
    AlphaBeta(alpha, beta)
    rho = _as_state(rho)
    _check_dims(rho, phi)
    s = alpha + beta
    v, overlap = _uncertainty_and_overlap(rho, phi, alpha, beta)
    lhs = v + entanglement_fidelity(rho, phi)
    identity = 0.5 * (1.0 + overlap)
    if abs(lhs - identity) > IDENTITY_DRIFT_TOL:
        raise ArithmeticError(
            f"internal identity drift: V + F_e = {lhs}, expected {identity}"
        )
    w, _ = rho.spectrum()
    tr_s = float(linalg.support_powers(w, s).sum())
    lam = linalg.max_eigenvalue(phi.apply(rho.power(1.0 - s)))
    return BoundReport(lhs, 0.5 * (1.0 + lam * tr_s))


def unital_conservation(rho, phi: KrausChannel) -> BoundReport:
    """Conservation ``V + F_e = 1`` for unital channels at exponent sum 1.

    At exponent sum 1 the uncertainty depends only on the sum, so it is
    evaluated at alpha = beta = 1/2.  Raises :class:`NotUnitalError` for
    non-unital channels and ``ArithmeticError`` if the identity drifts beyond
    1e-10.
    """
    rho = _as_state(rho)
    _check_dims(rho, phi)
    if not phi.is_unital():
        raise NotUnitalError("channel is not unital; conservation does not apply")
    lhs = mgv_channel(rho, phi, 0.5, 0.5) + entanglement_fidelity(rho, phi)
    if abs(lhs - 1.0) > IDENTITY_DRIFT_TOL:
        raise ArithmeticError(f"V + F_e = {lhs}, expected 1 for a unital channel")
    return BoundReport(lhs, 1.0)


def entropy_exchange_bound(rho, phi: KrausChannel, alpha: float, beta: float) -> BoundReport:
    """Upper bound on the entropy exchange from the channel uncertainty.

    lhs = S_e, rhs = 1 + (2V + 1 - tr rho^(a+b) Phi(rho^(1-a-b))) log2(d)
    with d the system dimension.
    """
    AlphaBeta(alpha, beta)
    rho = _as_state(rho)
    _check_dims(rho, phi)
    v, overlap = _uncertainty_and_overlap(rho, phi, alpha, beta)
    rhs = 1.0 + (2.0 * v + 1.0 - overlap) * np.log2(phi.dim)
    return BoundReport(entropy_exchange(rho, phi), float(rhs))


def coherent_info_bound(rho, phi: KrausChannel, alpha: float, beta: float) -> BoundReport:
    """Floor on uncertainty plus coherent information.

    lhs = S(rho) - 2,
    rhs = 2 (2V + 1 - tr rho^(a+b) Phi(rho^(1-a-b))) log2(d) + I_c.
    """
    AlphaBeta(alpha, beta)
    rho = _as_state(rho)
    _check_dims(rho, phi)
    v, overlap = _uncertainty_and_overlap(rho, phi, alpha, beta)
    rhs = 2.0 * (2.0 * v + 1.0 - overlap) * np.log2(phi.dim)
    rhs += coherent_information(rho, phi)
    return BoundReport(rho.entropy() - 2.0, float(rhs))


def quantum_fano(rho, phi: KrausChannel) -> BoundReport:
    """Quantum Fano inequality: ``S_e <= H(F_e) + (1 - F_e) log2(d^2 - 1)``.

    Saturated when the joint output spectrum is ``(F_e, (1-F_e)/(d^2-1), ...)``.
    """
    rho = _as_state(rho)
    _check_dims(rho, phi)
    fe = min(max(entanglement_fidelity(rho, phi), 0.0), 1.0)
    d = phi.dim
    rhs = binary_entropy(fe) + (1.0 - fe) * np.log2(d * d - 1.0)
    return BoundReport(entropy_exchange(rho, phi), float(rhs))
