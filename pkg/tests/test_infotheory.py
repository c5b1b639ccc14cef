import numpy as np
import pytest

from chanvar.channels import (
    amplitude_damping,
    basis_channel,
    computational_measurement,
    depolarizing,
    identity_channel,
    mix_kraus,
    random_channel,
    von_neumann_measurement,
)
from chanvar.exceptions import NotUnitalError
from chanvar.infotheory import (
    BoundReport,
    coherent_info_bound,
    coherent_information,
    entanglement_fidelity,
    entanglement_fidelity_from_purification,
    entropy_exchange,
    entropy_exchange_bound,
    entropy_exchange_from_purification,
    exchange_matrix,
    fidelity_tradeoff,
    quantum_fano,
    unital_conservation,
)
from chanvar.states import (
    bell_basis,
    from_bloch,
    isotropic,
    maximally_mixed,
    projector,
    random_density,
    random_pure,
    random_unitary,
    werner,
)
from chanvar.uncertainty import mgv_channel

from helpers import random_bloch, sample_ab


class TestEntanglementFidelity:
    def test_identity_channel(self):
        rho = random_density(3, seed=1)
        assert entanglement_fidelity(rho, identity_channel(3)) == pytest.approx(1.0, abs=1e-12)

    def test_depolarizing_bloch_formula(self):
        # direct Kraus summation gives (1 - 3p) + p |r|^2
        rng = np.random.default_rng(2)
        for _ in range(25):
            r = random_bloch(rng)
            p = rng.uniform(0, 1 / 3)
            rho = from_bloch(r)
            direct = sum(
                abs(np.trace(rho.mat @ k)) ** 2 for k in depolarizing(p).kraus_ops
            )
            got = entanglement_fidelity(rho, depolarizing(p))
            assert got == pytest.approx(1 - 3 * p + p * float(r @ r), abs=1e-12)
            assert got == pytest.approx(direct, abs=1e-13)

    def test_purification_route_agrees(self):
        rng = np.random.default_rng(3)
        for _ in range(40):
            dim = int(rng.integers(2, 5))
            rho = random_density(dim, rank=int(rng.integers(1, dim + 1)), seed=rng)
            phi = random_channel(dim, int(rng.integers(1, 5)), seed=rng)
            assert entanglement_fidelity(rho, phi) == pytest.approx(
                entanglement_fidelity_from_purification(rho, phi), abs=1e-10
            )

    def test_representation_free(self):
        rng = np.random.default_rng(4)
        rho = random_density(2, seed=rng)
        phi = amplitude_damping(0.35)
        u = random_unitary(4, seed=rng)
        assert entanglement_fidelity(rho, phi) == pytest.approx(
            entanglement_fidelity(rho, mix_kraus(phi, u)), abs=1e-12
        )


class TestEntropyExchange:
    def test_identity_channel_exchanges_nothing(self):
        rho = random_density(4, seed=5)
        assert entropy_exchange(rho, identity_channel(4)) == pytest.approx(0.0, abs=1e-12)

    def test_exchange_matrix_is_gram(self):
        rho = random_density(2, seed=6)
        phi = amplitude_damping(0.3)
        w = exchange_matrix(rho, phi)
        assert np.allclose(w, w.conj().T, atol=1e-13)
        assert np.trace(w).real == pytest.approx(1.0, abs=1e-12)

    def test_werner_under_eigenbasis_measurement(self):
        # measuring in the Bell basis leaves the Werner state fixed, so the
        # exchange equals the state entropy -(1-p)log2(1-p) - p log2(p/3)
        pi = von_neumann_measurement(bell_basis())
        for p in (0.15, 0.5, 0.95):
            expected = -(1 - p) * np.log2(1 - p) - p * np.log2(p / 3)
            assert entropy_exchange(werner(p), pi) == pytest.approx(expected, abs=1e-11)

    def test_isotropic_under_eigenbasis_measurement(self):
        pi = von_neumann_measurement(bell_basis())
        for f in (0.2, 0.6, 0.9):
            expected = -(1 - f) * np.log2((1 - f) / 3) - f * np.log2(f)
            assert entropy_exchange(isotropic(f), pi) == pytest.approx(expected, abs=1e-11)

    def test_two_paths_agree(self):
        rng = np.random.default_rng(7)
        for _ in range(40):
            dim = int(rng.integers(2, 5))
            rho = random_density(dim, rank=int(rng.integers(1, dim + 1)), seed=rng)
            phi = random_channel(dim, int(rng.integers(1, 5)), seed=rng)
            assert entropy_exchange(rho, phi) == pytest.approx(
                entropy_exchange_from_purification(rho, phi), abs=1e-9
            )


class TestCoherentInformation:
    def test_identity_channel_transmits_state_entropy(self):
        rho = random_density(3, seed=8)
        assert coherent_information(rho, identity_channel(3)) == pytest.approx(
            rho.entropy(), abs=1e-11
        )

    def test_pure_state_identity_channel(self):
        rho = projector(random_pure(3, seed=9))
        assert coherent_information(rho, identity_channel(3)) == pytest.approx(0.0, abs=1e-11)

    def test_projective_measurement_transmits_nothing(self):
        # any rank-1 projective measurement has S(Phi(rho)) = S_e exactly
        rng = np.random.default_rng(10)
        for _ in range(10):
            rho = random_density(4, seed=rng)
            assert coherent_information(rho, computational_measurement(4)) == pytest.approx(
                0.0, abs=1e-11
            )


class TestFidelityTradeoff:
    def test_flat_output_spectrum_saturates(self):
        rng = np.random.default_rng(11)
        for dim in (2, 3, 4):
            rho = random_density(dim, seed=rng)
            a, b = sample_ab(rng)
            report = fidelity_tradeoff(rho, basis_channel(dim), a, b)
            assert abs(report.slack) <= 1e-10
            assert report.satisfied

    def test_werner_three_quarters_measurement_saturation(self):
        report = fidelity_tradeoff(werner(0.75), computational_measurement(4), 0.2, 0.3)
        assert report.lhs == pytest.approx(1.0, abs=1e-9)
        assert report.rhs == pytest.approx(1.0, abs=1e-9)

    def test_pure_state_identity(self):
        rng = np.random.default_rng(12)
        for _ in range(25):
            dim = int(rng.integers(2, 5))
            rho = projector(random_pure(dim, seed=rng))
            phi = random_channel(dim, 3, seed=rng)
            a, b = sample_ab(rng)
            v = mgv_channel(rho, phi, a, b)
            fe = entanglement_fidelity(rho, phi)
            assert 2 * v + fe == pytest.approx(1.0, abs=1e-12)
            assert fidelity_tradeoff(rho, phi, a, b).satisfied

    def test_holds_on_random_inputs(self):
        rng = np.random.default_rng(13)
        for _ in range(50):
            dim = int(rng.integers(2, 5))
            rho = random_density(dim, seed=rng)
            phi = random_channel(dim, int(rng.integers(1, 5)), seed=rng)
            a, b = sample_ab(rng)
            assert fidelity_tradeoff(rho, phi, a, b).slack >= -1e-9


class TestUnitalConservation:
    def test_depolarizing(self):
        rng = np.random.default_rng(14)
        for _ in range(10):
            report = unital_conservation(random_density(2, seed=rng),
                                         depolarizing(rng.uniform(0, 1 / 3)))
            assert abs(report.slack) <= 1e-10

    def test_measurement(self):
        report = unital_conservation(random_density(4, seed=15),
                                     computational_measurement(4))
        assert abs(report.slack) <= 1e-10

    def test_rejects_non_unital(self):
        with pytest.raises(NotUnitalError):
            unital_conservation(random_density(2, seed=16), amplitude_damping(0.2))


class TestExchangeBound:
    def test_werner_measurement_quadratic(self):
        # bound side under the computational measurement is a quadratic in p
        pi = computational_measurement(4)
        for p in np.linspace(0, 1, 21):
            report = entropy_exchange_bound(werner(float(p)), pi, 0.2, 0.3)
            assert report.rhs == pytest.approx(3 + 8 * p / 3 - 16 * p**2 / 9, abs=1e-10)
            assert report.satisfied

    def test_isotropic_measurement_quadratic(self):
        pi = computational_measurement(4)
        for f in np.linspace(0, 1, 21):
            report = entropy_exchange_bound(isotropic(float(f)), pi, 0.2, 0.3)
            assert report.rhs == pytest.approx(
                35 / 9 + 8 * f / 9 - 16 * f**2 / 9, abs=1e-10
            )
            assert report.satisfied

    def test_identity_channel_trivially_satisfied(self):
        report = entropy_exchange_bound(random_density(3, seed=17), identity_channel(3), 0.4, 0.2)
        assert report.lhs == pytest.approx(0.0, abs=1e-11)
        assert report.satisfied

    def test_exponent_independent(self):
        # 2V + 1 - overlap collapses to 2 - 2 Fe, so the bound side cannot
        # depend on the exponents
        rho = random_density(3, seed=18)
        phi = random_channel(3, 2, seed=18)
        r1 = entropy_exchange_bound(rho, phi, 0.1, 0.15)
        r2 = entropy_exchange_bound(rho, phi, 0.45, 0.5)
        assert r1.rhs == pytest.approx(r2.rhs, abs=1e-11)


class TestCoherentBound:
    def test_pure_state_identity_channel(self):
        rho = projector(random_pure(2, seed=19))
        report = coherent_info_bound(rho, identity_channel(2), 0.3, 0.3)
        assert report.lhs == pytest.approx(-2.0, abs=1e-11)
        assert report.satisfied

    def test_holds_on_random_inputs(self):
        rng = np.random.default_rng(20)
        for _ in range(50):
            dim = int(rng.integers(2, 5))
            rho = random_density(dim, seed=rng)
            phi = random_channel(dim, int(rng.integers(1, 5)), seed=rng)
            a, b = sample_ab(rng)
            assert coherent_info_bound(rho, phi, a, b).slack >= -1e-9


class TestQuantumFano:
    def test_identity_channel_equality(self):
        rho = projector(random_pure(2, seed=21))
        report = quantum_fano(rho, identity_channel(2))
        assert report.lhs == pytest.approx(0.0, abs=1e-11)
        assert report.rhs == pytest.approx(0.0, abs=1e-11)

    def test_depolarizing_on_random_qubits(self):
        rng = np.random.default_rng(22)
        for _ in range(25):
            rho = random_density(2, seed=rng)
            assert quantum_fano(rho, depolarizing(rng.uniform(0, 1 / 3))).satisfied

    def test_flat_construction_saturates(self):
        # fully mixed qubit through depolarizing noise has joint spectrum
        # (1-3p, p, p, p) with p = (1 - Fe)/3: exact equality
        for p in (0.02, 0.1, 0.25, 1 / 3):
            report = quantum_fano(maximally_mixed(2), depolarizing(p))
            assert abs(report.slack) <= 1e-9


class TestBoundReport:
    def test_satisfaction_threshold(self):
        assert BoundReport(1.0, 1.0).satisfied
        assert BoundReport(1.0, 1.0 - 5e-10).satisfied
        assert not BoundReport(1.0, 1.0 - 5e-9).satisfied
        assert BoundReport(0.0, 2.0).slack == pytest.approx(2.0)
