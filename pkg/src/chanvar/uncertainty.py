"""Two-parameter uncertainty functionals of operators and channels.

For a state ``rho``, an operator ``K`` and exponents ``alpha, beta >= 0``
with ``alpha + beta <= 1``, the total uncertainty is the generalized variance

    V = (tr rho K^dag K + tr rho^(a+b) K rho^(1-a-b) K^dag) / 2 - |tr rho K|^2,

its quantum part is the generalized skew information

    Q = (tr rho K^dag K - tr rho^a K rho^(1-a) K^dag
         - tr rho^b K rho^(1-b) K^dag + tr rho^(a+b) K rho^(1-a-b) K^dag) / 2,

and the classical part is C = V - Q.  Channel-level quantities sum these over
the Kraus operators; the results are independent of the chosen Kraus
representation.

Every trace above reduces, in the eigenbasis of ``rho``, to a weighted sum of
``|K_ij|^2`` with eigenvalue-power weights, so one eigendecomposition per call
serves all six fractional powers.  Boundary exponents follow the support
convention (``lambda^0 = 0`` on the kernel of ``rho``).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channels import KrausChannel
from .exceptions import DimensionMismatchError
from .linalg import as_complex_matrix, support_powers
from .states import DensityMatrix

DECOMPOSITION_TOL = 1e-10
NEGATIVITY_TOL = 1e-12


@dataclass(frozen=True)
class AlphaBeta:
    """Validated exponent pair: both non-negative, sum at most 1."""

    alpha: float
    beta: float

    def __post_init__(self):
        if self.alpha < 0.0 or self.beta < 0.0:
            raise ValueError(f"exponents must be non-negative: {self.alpha}, {self.beta}")
        if self.alpha + self.beta > 1.0 + 1e-12:
            raise ValueError(
                f"exponent sum {self.alpha + self.beta} exceeds 1"
            )

    @property
    def total(self) -> float:
        return self.alpha + self.beta


@dataclass(frozen=True)
class UncertaintyTriple:
    """Total, quantum and classical uncertainty of one evaluation.

    Validates the decomposition ``total = quantum + classical`` and the
    non-negativity of the total on construction.
    """

    total: float
    quantum: float
    classical: float

    def __post_init__(self):
        if self.total < -NEGATIVITY_TOL:
            raise ValueError(f"total uncertainty is negative: {self.total}")
        if abs(self.total - self.quantum - self.classical) > DECOMPOSITION_TOL:
            raise ValueError(
                "decomposition drift: "
                f"{self.total} != {self.quantum} + {self.classical}"
            )

    @property
    def residual(self) -> float:
        return self.total - self.quantum - self.classical


def _as_state(rho) -> DensityMatrix:
    return rho if isinstance(rho, DensityMatrix) else DensityMatrix(rho)


def _transformed(rho: DensityMatrix, k) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues of rho and K expressed in its eigenbasis."""
    m = as_complex_matrix(k, "operator")
    if m.shape[0] != rho.dim:
        raise DimensionMismatchError(
            f"operator dim {m.shape[0]} does not match state dim {rho.dim}"
        )
    w, v = rho.spectrum()
    return w, v.conj().T @ m @ v


def sandwich_trace(rho, k, a: float, b: float) -> float:
    """``tr rho^a K rho^b K^dag`` via the eigenbasis weighted sum (real)."""
    rho = _as_state(rho)
    w, kt = _transformed(rho, k)
    return float(support_powers(w, a) @ (np.abs(kt) ** 2) @ support_powers(w, b))


def expectation(rho, k) -> complex:
    """``tr rho K``."""
    rho = _as_state(rho)
    m = as_complex_matrix(k, "operator")
    if m.shape[0] != rho.dim:
        raise DimensionMismatchError("operator and state dims differ")
    return complex(np.trace(rho.mat @ m))


def _weights(w: np.ndarray, alpha: float, beta: float):
    s = alpha + beta
    return (
        support_powers(w, alpha),
        support_powers(w, 1.0 - alpha),
        support_powers(w, beta),
        support_powers(w, 1.0 - beta),
        support_powers(w, s),
        support_powers(w, 1.0 - s),
    )


def _operator_terms(rho: DensityMatrix, k, alpha: float, beta: float):
    """Shared reduction for one operator.

    Returns (tr rho K^dag K, T_a, T_b, T_s, |tr rho K|^2) where
    T_x = tr rho^x K rho^(1-x) K^dag.
    """
    w, kt = _transformed(rho, k)
    absq = np.abs(kt) ** 2
    wa, wia, wb, wib, ws, wis = _weights(w, alpha, beta)
    second_moment = float(absq.sum(axis=0) @ w)
    t_a = float(wa @ absq @ wia)
    t_b = float(wb @ absq @ wib)
    t_s = float(ws @ absq @ wis)
    mean = complex(np.diag(kt) @ w)
    return second_moment, t_a, t_b, t_s, abs(mean) ** 2


def mgv_operator(rho, k, alpha: float, beta: float) -> float:
    """Total uncertainty (generalized variance) of an operator in a state."""
    AlphaBeta(alpha, beta)
    rho = _as_state(rho)
    m2, _, _, t_s, f = _operator_terms(rho, k, alpha, beta)
    return 0.5 * (m2 + t_s) - f


def mgwyd_operator(rho, k, alpha: float, beta: float) -> float:
    """Quantum uncertainty (generalized skew information) of an operator."""
    AlphaBeta(alpha, beta)
    rho = _as_state(rho)
    m2, t_a, t_b, t_s, _ = _operator_terms(rho, k, alpha, beta)
    return 0.5 * (m2 - t_a - t_b + t_s)


def classical_operator(rho, k, alpha: float, beta: float) -> float:
    """Classical uncertainty of an operator: the variance minus its quantum part."""
    AlphaBeta(alpha, beta)
    rho = _as_state(rho)
    _, t_a, t_b, _, f = _operator_terms(rho, k, alpha, beta)
    return 0.5 * (t_a + t_b) - f


def _channel_reduction(rho: DensityMatrix, ops):
    """Aggregate |K_ij|^2 over a Kraus collection in the state eigenbasis.

    Returns (M, second_moment, fidelity_sum) with M = sum_i |K~_i|^2,
    second_moment = sum_i tr rho K_i^dag K_i and fidelity_sum =
    sum_i |tr rho K_i|^2.
    """
    w, v = rho.spectrum()
    vh = v.conj().T
    m = np.zeros((rho.dim, rho.dim))
    fid = 0.0
    for k in ops:
        k = as_complex_matrix(k, "Kraus operator")
        if k.shape[0] != rho.dim:
            raise DimensionMismatchError(
                f"Kraus dim {k.shape[0]} does not match state dim {rho.dim}"
            )
        kt = vh @ k @ v
        m += np.abs(kt) ** 2
        fid += abs(np.diag(kt) @ w) ** 2
    second_moment = float(m.sum(axis=0) @ w)
    return m, second_moment, float(fid)


def mgv_kraus_sum(rho, ops, alpha: float, beta: float) -> float:
    """Operator-level total uncertainty summed over an arbitrary collection.

    Unlike :func:`mgv_channel` this does not assume the completeness relation,
    so it also evaluates conic combinations of channels.
    """
    AlphaBeta(alpha, beta)
    rho = _as_state(rho)
    m, m2, fid = _channel_reduction(rho, ops)
    _, _, _, _, ws, wis = _weights(rho.spectrum()[0], alpha, beta)
    return 0.5 * (m2 + float(ws @ m @ wis)) - fid


def mgwyd_kraus_sum(rho, ops, alpha: float, beta: float) -> float:
    AlphaBeta(alpha, beta)
    rho = _as_state(rho)
    m, m2, _ = _channel_reduction(rho, ops)
    wa, wia, wb, wib, ws, wis = _weights(rho.spectrum()[0], alpha, beta)
    return 0.5 * (m2 - float(wa @ m @ wia) - float(wb @ m @ wib) + float(ws @ m @ wis))


def classical_kraus_sum(rho, ops, alpha: float, beta: float) -> float:
    AlphaBeta(alpha, beta)
    rho = _as_state(rho)
    m, _, fid = _channel_reduction(rho, ops)
    wa, wia, wb, wib, _, _ = _weights(rho.spectrum()[0], alpha, beta)
    return 0.5 * (float(wa @ m @ wia) + float(wb @ m @ wib)) - fid


def mgv_channel(rho, phi: KrausChannel, alpha: float, beta: float) -> float:
    """Total uncertainty of a channel in a state.

    Uses the trace-preservation shortcut
    ``V = (1 + tr rho^(a+b) Phi(rho^(1-a-b))) / 2 - sum_i |tr rho K_i|^2``;
    equals the sum of :func:`mgv_operator` over the Kraus operators.
    """
    AlphaBeta(alpha, beta)
    rho = _as_state(rho)
    m, _, fid = _channel_reduction(rho, phi.kraus_ops)
    _, _, _, _, ws, wis = _weights(rho.spectrum()[0], alpha, beta)
    return 0.5 * (1.0 + float(ws @ m @ wis)) - fid


def mgwyd_channel(rho, phi: KrausChannel, alpha: float, beta: float) -> float:
    """Quantum uncertainty of a channel in a state."""
    AlphaBeta(alpha, beta)
    rho = _as_state(rho)
    m, _, _ = _channel_reduction(rho, phi.kraus_ops)
    wa, wia, wb, wib, ws, wis = _weights(rho.spectrum()[0], alpha, beta)
    return 0.5 * (
        1.0 - float(wa @ m @ wia) - float(wb @ m @ wib) + float(ws @ m @ wis)
    )


def classical_channel(rho, phi: KrausChannel, alpha: float, beta: float) -> float:
    """Classical uncertainty of a channel in a state; vanishes on pure states."""
    AlphaBeta(alpha, beta)
    rho = _as_state(rho)
    m, _, fid = _channel_reduction(rho, phi.kraus_ops)
    wa, wia, wb, wib, _, _ = _weights(rho.spectrum()[0], alpha, beta)
    return 0.5 * (float(wa @ m @ wia) + float(wb @ m @ wib)) - fid


def channel_uncertainty(rho, phi: KrausChannel, alpha: float, beta: float) -> UncertaintyTriple:
    """Full (total, quantum, classical) evaluation with one reduction."""
    AlphaBeta(alpha, beta)
    rho = _as_state(rho)
    m, _, fid = _channel_reduction(rho, phi.kraus_ops)
    wa, wia, wb, wib, ws, wis = _weights(rho.spectrum()[0], alpha, beta)
    t_a = float(wa @ m @ wia)
    t_b = float(wb @ m @ wib)
    t_s = float(ws @ m @ wis)
    total = 0.5 * (1.0 + t_s) - fid
    quantum = 0.5 * (1.0 - t_a - t_b + t_s)
    return UncertaintyTriple(total, quantum, total - quantum)


def pure_state_uncertainty(psi, phi: KrausChannel) -> float:
    """Uncertainty of a channel in a pure state: ``(1 - sum |<K_i>|^2) / 2``.

    For pure states the total and quantum uncertainties coincide and the
    classical part vanishes.
    """
    v = np.asarray(psi, dtype=complex).reshape(-1)
    n = np.linalg.norm(v)
    if abs(n - 1.0) > 1e-12:
        raise ValueError(f"state vector norm is {n!r}, expected 1")
    if v.size != phi.dim:
        raise DimensionMismatchError("state vector and channel dims differ")
    total = sum(abs(np.vdot(v, k @ v)) ** 2 for k in phi.kraus_ops)
    return 0.5 * (1.0 - float(total))


def morozova_chentsov(x: float, y: float, alpha: float, beta: float) -> float:
    """Scalar kernel of the metric adjusted to the quantum-uncertainty form.

        c(x, y) = [ (x^a - y^a)(x^(1-a) - y^(1-a))
                    + (x^b - y^b)(x^(1-b) - y^(1-b))
                    - (x^(a+b) - y^(a+b))(x^(1-a-b) - y^(1-a-b)) ] / (x - y)^2

    Symmetric, homogeneous of order -1.  Near-coincident arguments
    (``|x - y| < 1e-10``) return the confluent limit ``2 a b / mean(x, y)``.
    """
    AlphaBeta(alpha, beta)
    if x <= 0.0 or y <= 0.0:
        raise ValueError(f"arguments must be positive, got ({x}, {y})")
    if abs(x - y) < 1e-10:
        return 2.0 * alpha * beta / ((x + y) / 2.0)
    s = alpha + beta

    def bracket(k: float) -> float:
        return (x**k - y**k) * (x ** (1.0 - k) - y ** (1.0 - k))

    return (bracket(alpha) + bracket(beta) - bracket(s)) / (x - y) ** 2
