"""Seeded property-verification suite.

Fuzzes the structural properties of the uncertainty functionals and the
information-theoretic bounds over random states and channels.  Every check
reports a margin oriented so that ``margin >= -tol`` means the property held;
the suite records the worst margin and the failure count per property.
Deterministic for a fixed seed, sample count and dimension list.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import infotheory
from .channels import (
    KrausChannel,
    basis_channel,
    conjugate_channel,
    mix_kraus,
    random_channel,
    tensor_with_identity,
)
from .states import DensityMatrix, projector, purify, random_density, random_unitary
from .uncertainty import (
    channel_uncertainty,
    classical_channel,
    mgv_channel,
    mgv_kraus_sum,
    mgwyd_channel,
)

DEFAULT_TOL = 1e-9


@dataclass
class PropertyResult:
    """Outcome of one fuzzed property."""

    name: str
    samples: int
    failures: int
    worst_margin: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.failures == 0


def _sample_ab(rng) -> tuple[float, float]:
    a, b = rng.uniform(0.0, 1.0, size=2)
    if a + b > 1.0:
        a, b = 1.0 - a, 1.0 - b
    return float(a), float(b)


def _sample_ab_restricted(rng) -> tuple[float, float]:
    # convexity of the quantum part needs a + 2b <= 1 and 2a + b <= 1
    while True:
        a, b = _sample_ab(rng)
        if a + 2.0 * b <= 1.0 and 2.0 * a + b <= 1.0:
            return a, b


def _sample_state(rng, dim: int) -> DensityMatrix:
    rank = int(rng.integers(1, dim + 1))
    return random_density(dim, rank=rank, seed=rng)


def _sample_channel(rng, dim: int) -> KrausChannel:
    return random_channel(dim, int(rng.integers(1, 5)), seed=rng)


def _sample_weights(rng, n: int) -> np.ndarray:
    w = rng.uniform(0.1, 1.0, size=n)
    return w / w.sum()


def _commuting_channel(rng, rho: DensityMatrix) -> KrausChannel:
    """Random channel whose Kraus operators commute with the state."""
    _, v = rho.spectrum()
    probs = _sample_weights(rng, int(rng.integers(2, 4)))
    ops = []
    for p in probs:
        phases = np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, size=rho.dim))
        ops.append(np.sqrt(p) * (v * phases) @ v.conj().T)
    return KrausChannel(ops)


def _dim_of(rng, dims) -> int:
    return int(rng.choice(dims))


Check = Callable[[np.random.Generator, tuple[int, ...]], float]


def _margin_loop(name: str, stream: int, seed, dims, samples: int, tol: float,
                 check: Check) -> PropertyResult:
    rng = np.random.default_rng([seed, stream])
    worst = np.inf
    failures = 0
    for _ in range(samples):
        margin = check(rng, dims)
        worst = min(worst, margin)
        if margin < -tol:
            failures += 1
    return PropertyResult(name, samples, failures, float(worst), tol)


def _check_nonneg(rng, dims) -> float:
    dim = _dim_of(rng, dims)
    rho, phi = _sample_state(rng, dim), _sample_channel(rng, dim)
    a, b = _sample_ab(rng)
    return mgv_channel(rho, phi, a, b)


def _check_decomposition(rng, dims) -> float:
    dim = _dim_of(rng, dims)
    rho, phi = _sample_state(rng, dim), _sample_channel(rng, dim)
    a, b = _sample_ab(rng)
    triple = channel_uncertainty(rho, phi, a, b)
    v = mgv_channel(rho, phi, a, b)
    q = mgwyd_channel(rho, phi, a, b)
    c = classical_channel(rho, phi, a, b)
    return -max(abs(triple.total - v), abs(v - q - c), abs(triple.residual))


def _check_kraus_independence(rng, dims) -> float:
    dim = _dim_of(rng, dims)
    rho, phi = _sample_state(rng, dim), _sample_channel(rng, dim)
    a, b = _sample_ab(rng)
    pad = int(rng.integers(0, 3))
    u = random_unitary(len(phi) + pad, seed=rng)
    mixed = mix_kraus(phi, u)
    drift = max(
        abs(mgv_channel(rho, phi, a, b) - mgv_channel(rho, mixed, a, b)),
        abs(mgwyd_channel(rho, phi, a, b) - mgwyd_channel(rho, mixed, a, b)),
        abs(classical_channel(rho, phi, a, b) - classical_channel(rho, mixed, a, b)),
    )
    return -drift


def _check_linearity(rng, dims) -> float:
    dim = _dim_of(rng, dims)
    rho = _sample_state(rng, dim)
    phi1, phi2 = _sample_channel(rng, dim), _sample_channel(rng, dim)
    a, b = _sample_ab(rng)
    lam1, lam2 = rng.uniform(0.0, 1.5, size=2)
    union = [np.sqrt(lam1) * k for k in phi1.kraus_ops]
    union += [np.sqrt(lam2) * k for k in phi2.kraus_ops]
    combined = mgv_kraus_sum(rho, union, a, b)
    expected = lam1 * mgv_channel(rho, phi1, a, b) + lam2 * mgv_channel(rho, phi2, a, b)
    return -abs(combined - expected)


def _check_concavity_total(rng, dims) -> float:
    dim = _dim_of(rng, dims)
    phi = _sample_channel(rng, dim)
    a, b = _sample_ab(rng)
    n = int(rng.integers(2, 4))
    parts = [_sample_state(rng, dim) for _ in range(n)]
    lam = _sample_weights(rng, n)
    mix = DensityMatrix(sum(l * r.mat for l, r in zip(lam, parts)), validate=False)
    avg = sum(l * mgv_channel(r, phi, a, b) for l, r in zip(lam, parts))
    return mgv_channel(mix, phi, a, b) - avg


def _check_unitary_invariance(rng, dims) -> float:
    dim = _dim_of(rng, dims)
    rho, phi = _sample_state(rng, dim), _sample_channel(rng, dim)
    a, b = _sample_ab(rng)
    u = random_unitary(dim, seed=rng)
    rho_u = DensityMatrix(u @ rho.mat @ u.conj().T, validate=False)
    phi_u = conjugate_channel(phi, u)
    drift = max(
        abs(mgv_channel(rho, phi, a, b) - mgv_channel(rho_u, phi_u, a, b)),
        abs(mgwyd_channel(rho, phi, a, b) - mgwyd_channel(rho_u, phi_u, a, b)),
    )
    return -drift


def _check_ancillary_independence(rng, dims) -> float:
    da, db = _dim_of(rng, dims), _dim_of(rng, dims)
    rho_a, rho_b = _sample_state(rng, da), _sample_state(rng, db)
    phi = _sample_channel(rng, da)
    a, b = _sample_ab(rng)
    joint = DensityMatrix(np.kron(rho_a.mat, rho_b.mat), validate=False)
    extended = tensor_with_identity(phi, "left", db)
    return -abs(mgv_channel(joint, extended, a, b) - mgv_channel(rho_a, phi, a, b))


def _check_purification_bound(rng, dims) -> float:
    dim = _dim_of(rng, dims)
    rho, phi = _sample_state(rng, dim), _sample_channel(rng, dim)
    a, b = _sample_ab(rng)
    psi, da, _ = purify(rho)
    extended = tensor_with_identity(phi, "right", da)
    return mgv_channel(rho, phi, a, b) - mgv_channel(projector(psi), extended, a, b)


def _check_subadditivity_product(rng, dims) -> float:
    da, db = _dim_of(rng, dims), _dim_of(rng, dims)
    rho_a, rho_b = _sample_state(rng, da), _sample_state(rng, db)
    phi_a, phi_b = _sample_channel(rng, da), _sample_channel(rng, db)
    a, b = _sample_ab(rng)
    joint = DensityMatrix(np.kron(rho_a.mat, rho_b.mat), validate=False)
    union = [np.kron(k, np.eye(db)) for k in phi_a.kraus_ops]
    union += [np.kron(np.eye(da), k) for k in phi_b.kraus_ops]
    lhs = mgv_kraus_sum(joint, union, a, b)
    return mgv_channel(rho_a, phi_a, a, b) + mgv_channel(rho_b, phi_b, a, b) - lhs


def _check_quantum_convexity(rng, dims) -> float:
    dim = _dim_of(rng, dims)
    phi = _sample_channel(rng, dim)
    a, b = _sample_ab_restricted(rng)
    n = int(rng.integers(2, 4))
    parts = [_sample_state(rng, dim) for _ in range(n)]
    lam = _sample_weights(rng, n)
    mix = DensityMatrix(sum(l * r.mat for l, r in zip(lam, parts)), validate=False)
    avg = sum(l * mgwyd_channel(r, phi, a, b) for l, r in zip(lam, parts))
    return avg - mgwyd_channel(mix, phi, a, b)


def _check_classical_concavity(rng, dims) -> float:
    dim = _dim_of(rng, dims)
    phi = _sample_channel(rng, dim)
    a, b = _sample_ab(rng)
    n = int(rng.integers(2, 4))
    parts = [_sample_state(rng, dim) for _ in range(n)]
    lam = _sample_weights(rng, n)
    mix = DensityMatrix(sum(l * r.mat for l, r in zip(lam, parts)), validate=False)
    avg = sum(l * classical_channel(r, phi, a, b) for l, r in zip(lam, parts))
    return classical_channel(mix, phi, a, b) - avg


def _check_commuting_quantum_zero(rng, dims) -> float:
    dim = _dim_of(rng, dims)
    rho = _sample_state(rng, dim)
    phi = _commuting_channel(rng, rho)
    a, b = _sample_ab(rng)
    return -abs(mgwyd_channel(rho, phi, a, b))


def _check_tradeoff_holds(rng, dims) -> float:
    dim = _dim_of(rng, dims)
    rho, phi = _sample_state(rng, dim), _sample_channel(rng, dim)
    a, b = _sample_ab(rng)
    return infotheory.fidelity_tradeoff(rho, phi, a, b).slack


def _check_tradeoff_saturation_flat(rng, dims) -> float:
    dim = _dim_of(rng, dims)
    rho = _sample_state(rng, dim)
    a, b = _sample_ab(rng)
    report = infotheory.fidelity_tradeoff(rho, basis_channel(dim), a, b)
    return -abs(report.slack)


def _check_exchange_bound(rng, dims) -> float:
    dim = _dim_of(rng, dims)
    rho, phi = _sample_state(rng, dim), _sample_channel(rng, dim)
    a, b = _sample_ab(rng)
    return infotheory.entropy_exchange_bound(rho, phi, a, b).slack


def _check_coherent_bound(rng, dims) -> float:
    dim = _dim_of(rng, dims)
    rho, phi = _sample_state(rng, dim), _sample_channel(rng, dim)
    a, b = _sample_ab(rng)
    return infotheory.coherent_info_bound(rho, phi, a, b).slack


def _check_fano(rng, dims) -> float:
    dim = _dim_of(rng, dims)
    rho, phi = _sample_state(rng, dim), _sample_channel(rng, dim)
    return infotheory.quantum_fano(rho, phi).slack


def _check_fidelity_representation(rng, dims) -> float:
    dim = _dim_of(rng, dims)
    rho, phi = _sample_state(rng, dim), _sample_channel(rng, dim)
    u = random_unitary(len(phi) + int(rng.integers(0, 3)), seed=rng)
    drift = abs(
        infotheory.entanglement_fidelity(rho, phi)
        - infotheory.entanglement_fidelity(rho, mix_kraus(phi, u))
    )
    return -drift


def _check_exchange_two_paths(rng, dims) -> float:
    dim = _dim_of(rng, dims)
    rho, phi = _sample_state(rng, dim), _sample_channel(rng, dim)
    drift = abs(
        infotheory.entropy_exchange(rho, phi)
        - infotheory.entropy_exchange_from_purification(rho, phi)
    )
    return -drift


def _check_pure_state_identity(rng, dims) -> float:
    dim = _dim_of(rng, dims)
    rho = random_density(dim, rank=1, seed=rng)
    phi = _sample_channel(rng, dim)
    a, b = _sample_ab(rng)
    v = mgv_channel(rho, phi, a, b)
    fe = infotheory.entanglement_fidelity(rho, phi)
    return -abs(2.0 * v + fe - 1.0)


# name, check function, tolerance override (None = suite default)
PROPERTY_CHECKS: tuple[tuple[str, Check, float | None], ...] = (
    ("total_nonnegative", _check_nonneg, 1e-12),
    ("decomposition", _check_decomposition, None),
    ("kraus_independence", _check_kraus_independence, None),
    ("linearity_in_channel", _check_linearity, None),
    ("total_concave_in_state", _check_concavity_total, None),
    ("unitary_invariance", _check_unitary_invariance, None),
    ("ancillary_independence", _check_ancillary_independence, None),
    ("purification_lower_bound", _check_purification_bound, None),
    ("subadditivity_product", _check_subadditivity_product, None),
    ("quantum_convex_restricted", _check_quantum_convexity, None),
    ("classical_concave_in_state", _check_classical_concavity, None),
    ("commuting_quantum_zero", _check_commuting_quantum_zero, None),
    ("pure_state_identity", _check_pure_state_identity, 1e-12),
    ("fidelity_tradeoff_holds", _check_tradeoff_holds, None),
    ("fidelity_tradeoff_flat_saturation", _check_tradeoff_saturation_flat, None),
    ("exchange_bound_holds", _check_exchange_bound, None),
    ("coherent_bound_holds", _check_coherent_bound, None),
    ("quantum_fano_holds", _check_fano, None),
    ("fidelity_representation_free", _check_fidelity_representation, 1e-12),
    ("exchange_two_paths_agree", _check_exchange_two_paths, None),
)


def run_suite(seed: int = 7, samples: int = 500, dims=(2, 3, 4),
              tol: float = DEFAULT_TOL,
              extra_channel: KrausChannel | None = None) -> list[PropertyResult]:
    """Run every property check; deterministic for fixed arguments.

    ``extra_channel`` (already CPTP-validated) is additionally exercised
    against random states of its own dimension in the bound checks.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    dims = tuple(int(d) for d in dims)
    if any(d < 2 for d in dims):
        raise ValueError(f"dimensions must be at least 2, got {dims}")
    results = [
        _margin_loop(name, stream, seed, dims, samples,
                     override if override is not None else tol, check)
        for stream, (name, check, override) in enumerate(PROPERTY_CHECKS)
    ]
    if extra_channel is not None:
        def fixed_channel_bounds(rng, _dims) -> float:
            rho = _sample_state(rng, extra_channel.dim)
            a, b = _sample_ab(rng)
            return min(
                infotheory.fidelity_tradeoff(rho, extra_channel, a, b).slack,
                infotheory.entropy_exchange_bound(rho, extra_channel, a, b).slack,
                infotheory.coherent_info_bound(rho, extra_channel, a, b).slack,
                infotheory.quantum_fano(rho, extra_channel).slack,
            )

        results.append(
            _margin_loop("user_channel_bounds", len(PROPERTY_CHECKS), seed, dims,
                         samples, tol, fixed_channel_bounds)
        )
    return results


def worst_margins(results: list[PropertyResult]) -> dict[str, float]:
    return {r.name: r.worst_margin for r in results}
