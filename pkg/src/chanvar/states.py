"""Density-matrix construction and validation.

Bloch qubits, the Werner and isotropic two-qubit families, seeded random
states from the Ginibre ensemble, purification, and assorted helpers.  All
constructors return validated :class:`DensityMatrix` values; randomness is
owned per call through a seed or an explicit ``numpy.random.Generator``.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from . import linalg
from .exceptions import NotPositiveError
from .linalg import PAULIS, SUPPORT_CUTOFF, as_complex_matrix, check_hermitian

TRACE_TOL = 1e-10


class DensityMatrix:
    """Unit-trace positive-semidefinite complex matrix with a cached spectrum.

    The eigendecomposition is computed once and reused by every fractional
    power taken from the state, so one functional evaluation costs a single
    ``eigh``.  Instances are immutable; the backing array is read-only.
    """

    __slots__ = ("mat", "dim", "_eigenvalues", "_eigenvectors")

    def __init__(self, mat, *, validate: bool = True):
        m = as_complex_matrix(mat, "density matrix").copy()
        if validate:
            check_hermitian(m, name="density matrix")
            tr = complex(np.trace(m))
            if abs(tr - 1.0) > TRACE_TOL:
                raise ValueError(f"density matrix trace is {tr:.12g}, expected 1")
        self.mat = m
        self.mat.setflags(write=False)
        self.dim = m.shape[0]
        w, v = np.linalg.eigh(m)
        if validate and w[0] < -linalg.EIGENVALUE_CLIP:
            raise NotPositiveError(
                f"density matrix has negative eigenvalue {w[0]:.3e}"
            )
        self._eigenvalues = np.maximum(w, 0.0)
        self._eigenvectors = v

    def spectrum(self) -> tuple[np.ndarray, np.ndarray]:
        """Eigenvalues (ascending, clipped at 0) and eigenvector columns."""
        return self._eigenvalues, self._eigenvectors

    def power(self, kappa: float) -> np.ndarray:
        """``rho**kappa`` under the support convention, from the cached spectrum."""
        return linalg.power_from_spectrum(self._eigenvalues, self._eigenvectors, kappa)

    def entropy(self) -> float:
        """Von Neumann entropy in bits."""
        w = self._eigenvalues[self._eigenvalues > SUPPORT_CUTOFF]
        return float(-(w * np.log2(w)).sum())

    def purity(self) -> float:
        return float((self._eigenvalues**2).sum())

    def rank(self, tol: float = SUPPORT_CUTOFF) -> int:
        return int((self._eigenvalues > tol).sum())

    def is_pure(self, tol: float = 1e-10) -> bool:
        return abs(self.purity() - 1.0) <= tol

    def __repr__(self) -> str:
        return f"DensityMatrix(dim={self.dim}, purity={self.purity():.6f})"


class Purification(NamedTuple):
    """Pure state on ancilla (x) system whose system marginal is the input."""

    vector: np.ndarray
    dim_ancilla: int
    dim_system: int


def from_bloch(bloch) -> DensityMatrix:
    """Qubit state ``(1 + r.sigma)/2`` from a Bloch vector inside the ball."""
    r = np.asarray(bloch, dtype=float)
    if r.shape != (3,):
        raise ValueError(f"Bloch vector must have 3 components, got {r.shape}")
    if r @ r > 1.0 + 1e-12:
        raise ValueError(f"Bloch vector lies outside the unit ball: |r|={np.linalg.norm(r)}")
    m = 0.5 * (np.eye(2, dtype=complex) + sum(c * s for c, s in zip(r, PAULIS)))
    return DensityMatrix(m)


def werner(p: float) -> DensityMatrix:
    """Two-qubit Werner state, ``p`` in [0, 1].

    Spectrum is ``{1-p, p/3, p/3, p/3}``; pure (singlet) at p = 0 and
    separable for p <= 1/3.
    """
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"Werner parameter must lie in [0, 1], got {p}")
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = m[3, 3] = p / 3.0
    m[1, 1] = m[2, 2] = (3.0 - 2.0 * p) / 6.0
    m[1, 2] = m[2, 1] = (4.0 * p - 3.0) / 6.0
    return DensityMatrix(m)


def isotropic(f: float) -> DensityMatrix:
    """Two-qubit isotropic state, fidelity parameter ``f`` in [0, 1].

    Spectrum is ``{f, (1-f)/3 x3}``; pure (Bell) at f = 1 and separable for
    f <= 1/2.
    """
    f = float(f)
    if not 0.0 <= f <= 1.0:
        raise ValueError(f"isotropic parameter must lie in [0, 1], got {f}")
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = m[3, 3] = (2.0 * f + 1.0) / 6.0
    m[1, 1] = m[2, 2] = (1.0 - f) / 3.0
    m[0, 3] = m[3, 0] = (4.0 * f - 1.0) / 6.0
    return DensityMatrix(m)


def werner_separable(p: float) -> bool:
    return p <= 1.0 / 3.0


def isotropic_separable(f: float) -> bool:
    return f <= 0.5


def maximally_mixed(dim: int) -> DensityMatrix:
    return DensityMatrix(np.eye(dim, dtype=complex) / dim)


def basis_state(dim: int, index: int = 0) -> np.ndarray:
    """Computational basis ket as a unit vector."""
    if not 0 <= index < dim:
        raise ValueError(f"basis index {index} out of range for dim {dim}")
    v = np.zeros(dim, dtype=complex)
    v[index] = 1.0
    return v


def projector(psi) -> DensityMatrix:
    """Density matrix ``|psi><psi|`` of a unit-norm state vector."""
    v = np.asarray(psi, dtype=complex).reshape(-1)
    n = np.linalg.norm(v)
    if abs(n - 1.0) > 1e-12:
        raise ValueError(f"state vector norm is {n!r}, expected 1")
    return DensityMatrix(np.outer(v, v.conj()), validate=False)


def linear_entropy(rho: DensityMatrix) -> float:
    """Mixedness ``1 - tr(rho^2)``."""
    return 1.0 - rho.purity()


def bell_basis() -> np.ndarray:
    """Unitary whose columns are the four Bell vectors.

    This basis simultaneously diagonalizes the Werner and isotropic families.
    Column order: (|00>+|11>)/sqrt2, (|00>-|11>)/sqrt2, (|01>+|10>)/sqrt2,
    (|01>-|10>)/sqrt2.
    """
    b = np.zeros((4, 4), dtype=complex)
    b[:, 0] = [1, 0, 0, 1]
    b[:, 1] = [1, 0, 0, -1]
    b[:, 2] = [0, 1, 1, 0]
    b[:, 3] = [0, 1, -1, 0]
    return b / np.sqrt(2.0)


def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def ginibre(n: int, m: int, seed=None) -> np.ndarray:
    """n x m matrix of standard complex Gaussians."""
    rng = _rng(seed)
    return rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m))


def random_density(dim: int, rank: int | None = None, seed=None) -> DensityMatrix:
    """Seeded random state ``G G^dag / tr`` with G a dim x rank Ginibre draw.

    Deterministic for a fixed integer seed.  ``rank=None`` means full rank.
    """
    if rank is None:
        rank = dim
    if not 1 <= rank <= dim:
        raise ValueError(f"rank must lie in [1, {dim}], got {rank}")
    g = ginibre(dim, rank, seed)
    m = g @ g.conj().T
    return DensityMatrix(m / np.trace(m).real, validate=False)


def random_pure(dim: int, seed=None) -> np.ndarray:
    """Seeded Haar-random unit vector."""
    v = ginibre(dim, 1, seed).reshape(-1)
    return v / np.linalg.norm(v)


def random_unitary(dim: int, seed=None) -> np.ndarray:
    """Seeded Haar-random unitary via phase-fixed QR of a Ginibre draw."""
    q, r = np.linalg.qr(ginibre(dim, dim, seed))
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def purify(rho: DensityMatrix) -> Purification:
    """Pure state on ancilla (x) system with system marginal equal to ``rho``.

    Uses eigen-basis ancilla labeling ``sum_i sqrt(lam_i) |i>_A |v_i>_B`` over
    the support, so the ancilla dimension equals ``rank(rho)`` and tracing out
    the ancilla (factor A) recovers the input.
    """
    w, v = rho.spectrum()
    keep = w > SUPPORT_CUTOFF
    lam = w[keep][::-1]
    vecs = v[:, keep][:, ::-1]
    psi = (np.sqrt(lam)[:, None] * vecs.T).reshape(-1)
    return Purification(psi, int(lam.size), rho.dim)
