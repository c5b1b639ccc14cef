import numpy as np
import pytest

from chanvar.exceptions import DimensionMismatchError, NotHermitianError, NotPositiveError
from chanvar.linalg import (
    binary_entropy,
    fractional_power,
    hermitian_eig,
    kron,
    max_eigenvalue,
    partial_trace,
    qubit_power_closed_form,
    spow,
    von_neumann_entropy,
    xlog2,
)
from chanvar.states import from_bloch, random_density, random_unitary, werner

from helpers import brute_partial_trace, brute_power, dag, random_bloch


class TestHermitianEig:
    def test_identity(self):
        w, _ = hermitian_eig(np.eye(2))
        assert np.allclose(w, [1.0, 1.0])

    def test_diagonal_ascending(self):
        w, _ = hermitian_eig(np.diag([0.75, 0.25]))
        assert np.allclose(w, [0.25, 0.75])

    def test_bloch_qubit_eigenvalues(self):
        # spectrum of (1 + r sigma_z)/2 is (1 -+ r)/2
        for r3 in (0.2, 0.6, 0.95):
            w, _ = hermitian_eig(from_bloch([0, 0, r3]).mat)
            assert np.allclose(w, [(1 - r3) / 2, (1 + r3) / 2], atol=1e-14)

    def test_reconstruction_and_unitarity(self):
        rng = np.random.default_rng(11)
        for dim in (2, 3, 5, 8):
            g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
            h = g + dag(g)
            w, v = hermitian_eig(h)
            assert np.all(np.diff(w) >= -1e-12)
            scale = max(1.0, np.linalg.norm(h))
            assert np.linalg.norm((v * w) @ dag(v) - h) <= 1e-10 * scale
            assert np.linalg.norm(dag(v) @ v - np.eye(dim)) <= 1e-10

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitianError):
            hermitian_eig(np.array([[0, 1], [0, 0]], dtype=complex))


class TestFractionalPower:
    def test_scaled_identity(self):
        for kappa in (0.0, 0.3, 1.0):
            out = fractional_power(np.eye(2) / 2, kappa)
            assert np.allclose(out, 2.0**-kappa * np.eye(2), atol=1e-14)

    def test_support_convention_pure_projector(self):
        proj = np.diag([1.0, 0.0]).astype(complex)
        assert np.allclose(fractional_power(proj, 0.0), proj, atol=1e-14)

    def test_matches_qubit_closed_form(self):
        rng = np.random.default_rng(5)
        for _ in range(50):
            r = random_bloch(rng)
            kappa = rng.uniform(0, 1)
            got = fractional_power(from_bloch(r).mat, kappa)
            assert np.linalg.norm(got - qubit_power_closed_form(r, kappa)) <= 1e-12

    def test_semigroup(self):
        rng = np.random.default_rng(6)
        for _ in range(30):
            rho = random_density(4, seed=rng).mat
            k1, k2 = rng.uniform(0, 0.5, size=2)
            lhs = fractional_power(rho, k1) @ fractional_power(rho, k2)
            assert np.linalg.norm(lhs - fractional_power(rho, k1 + k2)) <= 1e-10

    def test_zeroth_power_trace_is_rank(self):
        rng = np.random.default_rng(7)
        for rank in (1, 2, 3):
            rho = random_density(4, rank=rank, seed=rng).mat
            assert np.trace(fractional_power(rho, 0.0)).real == pytest.approx(rank, abs=1e-9)

    def test_rejects_negative_matrix(self):
        with pytest.raises(NotPositiveError):
            fractional_power(np.diag([1.5, -0.5]).astype(complex), 0.5)

    def test_rejects_bad_exponent(self):
        with pytest.raises(ValueError):
            fractional_power(np.eye(2) / 2, 1.5)


class TestQubitPowerClosedForm:
    def test_pure_z_state_sqrt(self):
        out = qubit_power_closed_form([0, 0, 1], 0.5)
        assert np.allclose(out, np.diag([1.0, 0.0]), atol=1e-14)

    def test_unit_power_returns_state(self):
        out = qubit_power_closed_form([1, 0, 0], 1.0)
        expected = 0.5 * np.array([[1, 1], [1, 1]], dtype=complex)
        assert np.allclose(out, expected, atol=1e-14)

    def test_agrees_with_spectral_oracle(self):
        rng = np.random.default_rng(8)
        for _ in range(100):
            r = random_bloch(rng)
            kappa = rng.uniform(0, 1)
            got = qubit_power_closed_form(r, kappa)
            assert np.linalg.norm(got - brute_power(from_bloch(r).mat, kappa)) <= 1e-12

    def test_rejects_zero_bloch(self):
        with pytest.raises(ValueError):
            qubit_power_closed_form([0, 0, 0], 0.5)


class TestEntropies:
    def test_pure_state_zero(self):
        assert von_neumann_entropy(np.diag([1.0, 0.0])) == pytest.approx(0.0, abs=1e-12)

    def test_maximally_mixed(self):
        for d in (2, 3, 4):
            assert von_neumann_entropy(np.eye(d) / d) == pytest.approx(np.log2(d), abs=1e-12)

    def test_werner_entropy_closed_expression(self):
        # spectrum {1-p, p/3 x3} gives -(1-p)log2(1-p) - p log2(p/3)
        for p in (0.2, 0.5, 0.9):
            expected = -(1 - p) * np.log2(1 - p) - p * np.log2(p / 3)
            assert von_neumann_entropy(werner(p).mat) == pytest.approx(expected, abs=1e-12)

    def test_unitary_invariance(self):
        rng = np.random.default_rng(9)
        for _ in range(20):
            rho = random_density(4, seed=rng).mat
            u = random_unitary(4, seed=rng)
            drift = abs(von_neumann_entropy(u @ rho @ dag(u)) - von_neumann_entropy(rho))
            assert drift <= 1e-10

    def test_binary_entropy_values(self):
        assert binary_entropy(0.5) == pytest.approx(1.0, abs=1e-15)
        assert binary_entropy(0.0) == 0.0
        assert binary_entropy(1.0) == 0.0
        # H(1/4) = 2 - (3/4) log2(3), frozen from a 50-digit evaluation
        assert binary_entropy(0.25) == pytest.approx(0.8112781244591328, abs=1e-15)

    def test_binary_entropy_range_gate(self):
        with pytest.raises(ValueError):
            binary_entropy(1.5)
        with pytest.raises(ValueError):
            binary_entropy(-0.2)

    def test_scalar_helpers(self):
        assert spow(0.0, 0.0) == 0.0
        assert spow(2.0, 0.5) == pytest.approx(np.sqrt(2))
        assert xlog2(0.0) == 0.0
        assert xlog2(2.0) == pytest.approx(2.0)


class TestPartialTraceKron:
    def test_product_state_marginal(self):
        rng = np.random.default_rng(10)
        a = random_density(2, seed=rng).mat
        b = random_density(3, seed=rng).mat
        joint = kron(a, b)
        assert np.allclose(partial_trace(joint, (2, 3), "A"), a, atol=1e-12)
        assert np.allclose(partial_trace(joint, (2, 3), "B"), b, atol=1e-12)

    def test_kron_trace_weighting(self):
        rng = np.random.default_rng(12)
        g = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        h = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        got = partial_trace(kron(g, h), (3, 2), "A")
        assert np.allclose(got, np.trace(h) * g, atol=1e-12)

    def test_werner_marginal_is_maximally_mixed(self):
        for p in (0.0, 0.3, 1.0):
            got = partial_trace(werner(p).mat, (2, 2), "A")
            brute = brute_partial_trace(werner(p).mat, 2, 2, "A")
            assert np.allclose(got, np.eye(2) / 2, atol=1e-12)
            assert np.allclose(got, brute, atol=1e-14)

    def test_trace_preserved(self):
        rng = np.random.default_rng(13)
        joint = random_density(6, seed=rng).mat
        assert np.trace(partial_trace(joint, (2, 3), "B")).real == pytest.approx(1.0, abs=1e-12)

    def test_identity_kron(self):
        assert np.allclose(kron(np.eye(2), np.eye(2)), np.eye(4))

    def test_kron_multiplicativity(self):
        rng = np.random.default_rng(14)
        a, b, c, d = (
            rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
            for _ in range(4)
        )
        assert np.allclose(kron(a, b) @ kron(c, d), kron(a @ c, b @ d), atol=1e-12)

    def test_dimension_gate(self):
        with pytest.raises(DimensionMismatchError):
            partial_trace(np.eye(6), (2, 2), "A")


class TestMaxEigenvalue:
    def test_diagonal(self):
        assert max_eigenvalue(np.diag([1.0, 3.0])) == pytest.approx(3.0)
        assert max_eigenvalue(np.eye(5)) == pytest.approx(1.0)

    def test_matches_full_decomposition(self):
        rng = np.random.default_rng(15)
        from chanvar.channels import depolarizing

        for _ in range(20):
            rho = random_density(2, seed=rng)
            out = depolarizing(rng.uniform(0, 1 / 3)).apply(rho.power(rng.uniform(0, 1)))
            assert max_eigenvalue(out) == pytest.approx(
                np.linalg.eigvalsh(out)[-1], abs=1e-12
            )

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitianError):
            max_eigenvalue(np.array([[0, 2], [0, 0]], dtype=complex))
