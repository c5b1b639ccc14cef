"""Complex Hermitian spectral machinery.

Eigendecompositions, fractional matrix powers, entropies, partial traces and
Kronecker products, shared by every other module.  All functions are pure and
operate on square complex numpy arrays (objects exposing a ``.mat`` array,
such as :class:`chanvar.states.DensityMatrix`, are accepted transparently).

Spectral powers follow the support convention: a zero eigenvalue contributes
zero for every exponent, including zero, so ``fractional_power(rho, 0)`` is
the projector onto the support of ``rho``.
"""

from __future__ import annotations

import numpy as np

from .exceptions import (
    DimensionMismatchError,
    NotHermitianError,
    NotPositiveError,
)

HERMITIAN_TOL = 1e-10
EIGENVALUE_CLIP = 1e-12  # negative eigenvalues above -EIGENVALUE_CLIP clip to 0
SUPPORT_CUTOFF = 1e-12   # eigenvalues at or below this count as zero

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (PAULI_X, PAULI_Y, PAULI_Z)

kron = np.kron


def dagger(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(a).conj().T


def frobenius_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(np.asarray(a)))


def as_complex_matrix(a, name: str = "matrix") -> np.ndarray:
    """Coerce input to a square, finite complex128 array.

    Accepts nested sequences, real or complex arrays, and objects carrying a
    ``.mat`` attribute.  Raises ``ValueError`` on non-square or non-finite
    input.
    """
    a = getattr(a, "mat", a)
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise ValueError(f"{name} must be a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.view(float))):
        raise ValueError(f"{name} contains non-finite entries")
    return m


def check_hermitian(a, tol: float = HERMITIAN_TOL, name: str = "matrix") -> np.ndarray:
    """Validate Hermiticity with a relative Frobenius gate.

    The gate is ``||a - a^dag||_F <= tol * max(1, ||a||_F)``.  Returns the
    coerced array; raises :class:`NotHermitianError` otherwise.  Inputs are
    never symmetrized silently.
    """
    m = as_complex_matrix(a, name)
    drift = np.linalg.norm(m - m.conj().T)
    if drift > tol * max(1.0, np.linalg.norm(m)):
        raise NotHermitianError(
            f"{name} is not Hermitian: ||a - a^dag||_F = {drift:.3e}"
        )
    return m


def hermitian_eig(a, tol: float = HERMITIAN_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Returns ``(eigenvalues, eigenvectors)`` with real eigenvalues in ascending
    order and orthonormal eigenvectors as columns, so that
    ``(v * w) @ v.conj().T`` reconstructs the input.
    """
    m = check_hermitian(a, tol)
    w, v = np.linalg.eigh(m)
    return w, v


def spow(x: float, kappa: float) -> float:
    """Scalar power under the support convention: ``0**kappa = 0``, even at 0."""
    return 0.0 if x <= 0.0 else float(x) ** kappa


def power_from_spectrum(w: np.ndarray, v: np.ndarray, kappa: float) -> np.ndarray:
    """Rebuild ``sum_i w_i^kappa v_i v_i^dag`` under the support convention."""
    wk = support_powers(w, kappa)
    return (v * wk) @ v.conj().T


def support_powers(w: np.ndarray, kappa: float) -> np.ndarray:
    """Elementwise eigenvalue powers; entries at or below the cutoff give 0."""
    w = np.asarray(w, dtype=float)
    out = np.zeros_like(w)
    mask = w > SUPPORT_CUTOFF
    out[mask] = w[mask] ** kappa
    return out


def fractional_power(rho, kappa: float) -> np.ndarray:
    """``rho**kappa`` for a PSD Hermitian matrix, ``0 <= kappa <= 1``.

    Eigenvalues in ``(-EIGENVALUE_CLIP, 0)`` are clipped to zero; anything
    below that raises :class:`NotPositiveError`.  ``kappa = 0`` returns the
    support projector.
    """
    if not 0.0 <= kappa <= 1.0:
        raise ValueError(f"kappa must lie in [0, 1], got {kappa}")
    w, v = hermitian_eig(rho)
    if w[0] < -EIGENVALUE_CLIP:
        raise NotPositiveError(
            f"matrix has negative eigenvalue {w[0]:.3e} below -{EIGENVALUE_CLIP:.0e}"
        )
    return power_from_spectrum(w, v, kappa)


def qubit_power_closed_form(bloch, kappa: float) -> np.ndarray:
    """Closed-form qubit state power from its Bloch vector.

    For ``rho = (1 + r.sigma)/2`` with eigenvalues ``(1 -+ |r|)/2``, returns
    the 2x2 matrix of ``rho**kappa`` assembled directly from the eigenvalue
    powers.  The formula divides by ``|r|``; a vanishing Bloch vector raises
    ``ValueError`` (use :func:`fractional_power` there instead).
    """
    r1, r2, r3 = (float(c) for c in bloch)
    r = np.sqrt(r1 * r1 + r2 * r2 + r3 * r3)
    if r < 1e-14:
        raise ValueError("Bloch vector is zero; the closed form divides by |r|")
    if r > 1.0 + 1e-12:
        raise ValueError(f"Bloch vector has norm {r} > 1")
    if kappa < 0.0:
        raise ValueError("kappa must be non-negative")
    lam1, lam2 = (1.0 - r) / 2.0, (1.0 + r) / 2.0
    p1, p2 = spow(lam1, kappa), spow(lam2, kappa)
    mean = (p1 + p2) / 2.0
    off = (-r1 + 1j * r2) * (p1 - p2) / (2.0 * r)
    shift = r3 * (p2 - p1) / (2.0 * r)
    return np.array([[mean + shift, off], [np.conj(off), mean - shift]])


def von_neumann_entropy(rho) -> float:
    """Von Neumann entropy ``-tr(rho log2 rho)`` in bits.

    Uses the 0*log(0) = 0 convention on the support.  Eigenvalues below the
    negativity clip raise :class:`NotPositiveError`.
    """
    w, _ = hermitian_eig(rho)
    if w[0] < -EIGENVALUE_CLIP:
        raise NotPositiveError(f"matrix has negative eigenvalue {w[0]:.3e}")
    w = w[w > SUPPORT_CUTOFF]
    return float(-(w * np.log2(w)).sum())


def binary_entropy(p: float) -> float:
    """Binary Shannon entropy ``H(p)`` in bits, with H(0) = H(1) = 0."""
    p = float(p)
    if p < -1e-12 or p > 1.0 + 1e-12:
        raise ValueError(f"probability out of range: {p}")
    p = min(max(p, 0.0), 1.0)
    out = 0.0
    if p > 0.0:
        out -= p * np.log2(p)
    if p < 1.0:
        out -= (1.0 - p) * np.log2(1.0 - p)
    return float(out)


def xlog2(x: float) -> float:
    """``x * log2(x)`` extended by 0 at ``x <= 0``."""
    return 0.0 if x <= 0.0 else float(x * np.log2(x))


def partial_trace(w, dims: tuple[int, int], keep) -> np.ndarray:
    """Trace out one tensor factor of a matrix on ``A (x) B``.

    Parameters
    ----------
    w : array_like
        Square matrix of dimension ``dims[0] * dims[1]``, indexed with the A
        factor major (matching :func:`numpy.kron` ordering).
    dims : (int, int)
        Dimensions ``(dA, dB)``.
    keep : {'A', 'B', 0, 1}
        Which subsystem survives.

    Returns
    -------
    numpy.ndarray
        The reduced matrix on the kept factor; the total trace is preserved.
    """
    m = as_complex_matrix(w, "joint matrix")
    da, db = int(dims[0]), int(dims[1])
    if da < 1 or db < 1 or m.shape[0] != da * db:
        raise DimensionMismatchError(
            f"matrix of dim {m.shape[0]} does not factor as {da} x {db}"
        )
    if isinstance(keep, str):
        keep = {"a": 0, "b": 1, "left": 0, "right": 1}[keep.lower()]
    t = m.reshape(da, db, da, db)
    if keep == 0:
        return np.einsum("abcb->ac", t)
    if keep == 1:
        return np.einsum("abad->bd", t)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


def max_eigenvalue(h) -> float:
    """Largest eigenvalue of a Hermitian matrix."""
    m = check_hermitian(h)
    return float(np.linalg.eigvalsh(m)[-1])
