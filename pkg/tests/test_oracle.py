import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scsdiscord import closed_form as cf
from scsdiscord import oracle
from scsdiscord.errors import NotHermitian, ZeroProbabilityOutcome
from scsdiscord.states import CoherentParams, Parity, pure_scs_vector, quasi_werner_density

photon = st.floats(0.05, 6.0)
parities = st.sampled_from(list(Parity))
I4 = np.eye(4) / 4


def bell():
    v = np.array([1, 0, 0, 1]) / math.sqrt(2)
    return np.outer(v, v)


def random_density(rng, rank=4):
    g = rng.normal(size=(4, rank)) + 1j * rng.normal(size=(4, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho)


class TestSpectrumAndEntropy:
    def test_identity(self):
        np.testing.assert_allclose(oracle.eigvals_hermitian(I4), [0.25] * 4, atol=1e-16)

    def test_quasi_werner_spectrum(self):
        rho = quasi_werner_density(CoherentParams(1, 2), Parity.PLUS, 0.5).rho
        np.testing.assert_allclose(oracle.eigvals_hermitian(rho), [0.625, 0.125, 0.125, 0.125], atol=1e-15)

    def test_rank_one(self):
        psi = pure_scs_vector(CoherentParams(1, 2), Parity.MINUS).amplitudes
        np.testing.assert_allclose(oracle.eigvals_hermitian(np.outer(psi, psi.conj())), [1, 0, 0, 0], atol=1e-15)

    def test_rejects_non_hermitian(self):
        m = np.zeros((4, 4))
        m[0, 1] = 1.0
        with pytest.raises(NotHermitian):
            oracle.eigvals_hermitian(m)

    def test_entropy_values(self):
        assert oracle.von_neumann_entropy([1, 0, 0, 0]) == 0.0
        assert oracle.von_neumann_entropy([0.25] * 4) == 2.0
        with mpmath.workdps(30):
            expected = float(-3 * mpmath.mpf("0.125") * mpmath.log(mpmath.mpf("0.125"), 2)
                             - mpmath.mpf("0.625") * mpmath.log(mpmath.mpf("0.625"), 2))
        value = oracle.von_neumann_entropy([0.625, 0.125, 0.125, 0.125])
        assert value == pytest.approx(expected, abs=1e-14)
        assert value == pytest.approx(1.54879, abs=5e-6)


class TestPartialTrace:
    def test_identity(self):
        np.testing.assert_allclose(oracle.partial_trace_X(I4), np.eye(2) / 2)
        np.testing.assert_allclose(oracle.partial_trace_Y(I4), np.eye(2) / 2)

    def test_product_state(self):
        rng = np.random.default_rng(3)
        ra = random_density(rng)[:2, :2]
        ra = ra / np.trace(ra)
        rb = np.array([[0.7, 0.1 - 0.2j], [0.1 + 0.2j, 0.3]])
        rho = np.kron(ra, rb)
        np.testing.assert_allclose(oracle.partial_trace_X(rho), ra, atol=1e-15)
        np.testing.assert_allclose(oracle.partial_trace_Y(rho), rb, atol=1e-15)

    @pytest.mark.parametrize("parity", list(Parity))
    def test_reduced_spectrum_matches_closed_form(self, parity):
        p = CoherentParams(0.7, 3.1)
        rho = quasi_werner_density(p, parity, 0.45).rho
        expected = sorted(cf.reduced_eigenvalues(p, parity, 0.45), reverse=True)
        np.testing.assert_allclose(oracle.eigvals_hermitian(oracle.partial_trace_Y(rho)), expected, atol=1e-12)


class TestMeasurement:
    def test_computational_basis(self):
        pi1, pi2 = oracle.measurement_projectors(0.0, 1.7)
        np.testing.assert_allclose(pi1, [[1, 0], [0, 0]], atol=1e-16)
        np.testing.assert_allclose(pi2, [[0, 0], [0, 1]], atol=1e-16)

    def test_swapped_basis(self):
        pi1, pi2 = oracle.measurement_projectors(math.pi / 2, 0.0)
        np.testing.assert_allclose(pi1, [[0, 0], [0, 1]], atol=1e-16)
        np.testing.assert_allclose(pi2, [[1, 0], [0, 0]], atol=1e-16)

    def test_circular_basis(self):
        pi1, pi2 = oracle.measurement_projectors(math.pi / 4, math.pi / 2)
        v = np.array([1, 1j]) / math.sqrt(2)
        w = np.array([1, -1j]) / math.sqrt(2)
        np.testing.assert_allclose(pi1, np.outer(v, v.conj()), atol=1e-15)
        np.testing.assert_allclose(pi2, np.outer(w, w.conj()), atol=1e-15)

    @settings(max_examples=100, deadline=None)
    @given(st.floats(-10, 10), st.floats(-10, 10))
    def test_projector_pair(self, theta, phi):
        pi1, pi2 = oracle.measurement_projectors(theta, phi)
        for pi in (pi1, pi2):
            np.testing.assert_allclose(pi @ pi, pi, atol=1e-12)
            assert abs(np.trace(pi) - 1) <= 1e-12
        np.testing.assert_allclose(pi1 + pi2, np.eye(2), atol=1e-12)

    def test_conditional_state_of_noise(self):
        p, rho_x = oracle.conditional_state(I4, oracle.measurement_projectors(0.3, 0.2).pi1)
        assert p == pytest.approx(0.5, abs=1e-15)
        np.testing.assert_allclose(rho_x, np.eye(2) / 2, atol=1e-15)

    def test_pure_even_state_collapses(self):
        rho = quasi_werner_density(CoherentParams(1, 2), Parity.PLUS, 1.0).rho
        _, rho_x = oracle.conditional_state(rho, oracle.measurement_projectors(0.0).pi1)
        np.testing.assert_allclose(oracle.eigvals_hermitian(rho_x), [1, 0], atol=1e-15)

    def test_probability_matches_closed_form(self):
        p = CoherentParams(1, 2)
        rho = quasi_werner_density(p, Parity.PLUS, 0.6).rho
        prob, _ = oracle.conditional_state(rho, oracle.measurement_projectors(0.9).pi1)
        assert prob == pytest.approx(cf.outcome_probabilities(p, Parity.PLUS, 0.6, 0.9).p1, abs=1e-15)

    def test_zero_probability_branch(self):
        rho = np.diag([1.0, 0, 0, 0]).astype(complex)
        with pytest.raises(ZeroProbabilityOutcome):
            oracle.conditional_state(rho, oracle.measurement_projectors(0.0).pi2)
        assert oracle.discord_by_definition(rho, 0.0) == 0.0

    @settings(max_examples=100, deadline=None)
    @given(st.integers(0, 2**32 - 1), st.floats(0, math.pi), st.floats(0, 2 * math.pi))
    def test_completeness(self, seed, theta, phi):
        rho = random_density(np.random.default_rng(seed))
        total = sum(oracle.conditional_state(rho, pi)[0] for pi in oracle.measurement_projectors(theta, phi))
        assert abs(total - 1) <= 1e-12


class TestInformation:
    def test_noise_and_bell(self):
        assert abs(oracle.mutual_information(I4)) <= 1e-15
        assert oracle.mutual_information(bell()) == pytest.approx(2.0, abs=1e-14)
        assert oracle.discord_by_definition(I4, 0.4, 2.0) == pytest.approx(0.0, abs=1e-15)

    def test_bell_from_large_amplitudes(self):
        rho = quasi_werner_density(CoherentParams(25, 25), Parity.PLUS, 1.0).rho
        assert oracle.mutual_information(rho) == pytest.approx(2.0, abs=1e-12)

    def test_mutual_information_matches_closed_form(self):
        p = CoherentParams(1, 2)
        rho = quasi_werner_density(p, Parity.PLUS, 0.5).rho
        assert oracle.mutual_information(rho) == pytest.approx(cf.mutual_information(p, Parity.PLUS, 0.5), abs=1e-13)

    def test_classical_product_state(self):
        rho = np.kron(np.diag([0.8, 0.2]), np.diag([0.35, 0.65])).astype(complex)
        assert abs(oracle.mutual_information(rho)) <= 1e-14
        assert abs(oracle.discord_by_definition(rho, 0.0, 0.7)) <= 1e-14

    @settings(max_examples=150, deadline=None)
    @given(photon, photon, parities, st.floats(0.0, 1.0), st.floats(0, math.pi), st.floats(0, 2 * math.pi))
    def test_phase_invariance(self, a_sq, b_sq, parity, a, theta, phi):
        rho = quasi_werner_density(CoherentParams(a_sq, b_sq), parity, a).rho
        d = oracle.discord_by_definition(rho, theta, phi)
        assert abs(d - oracle.discord_by_definition(rho, theta, 0.0)) <= 1e-10
        assert d >= -1e-10

    def test_pure_state_discord_is_entanglement_entropy(self):
        rng = np.random.default_rng(11)
        for _ in range(10):
            v = rng.normal(size=4) + 1j * rng.normal(size=4)
            v /= np.linalg.norm(v)
            rho = np.outer(v, v.conj())
            s = oracle.entropy(oracle.partial_trace_X(rho))
            # optimal measurement on Y for a pure state reaches S(rho_X); any basis gives >= it
            assert oracle.discord_by_definition(rho, 0.3, 0.5) >= s - 1e-12
            assert oracle.mutual_information(rho) == pytest.approx(2 * s, abs=1e-12)


class TestWootters:
    def test_noise(self):
        np.testing.assert_allclose(oracle.wootters_sqrt_spectrum(I4), [0.25] * 4, atol=1e-15)
        assert oracle.wootters_concurrence(I4) == 0.0

    def test_bell(self):
        assert oracle.wootters_concurrence(bell()) == pytest.approx(1.0, abs=1e-15)
        assert oracle.entanglement_of_formation(bell()) == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("parity", list(Parity))
    def test_matches_closed_form(self, parity):
        p = CoherentParams(1, 2)
        rho = quasi_werner_density(p, parity, 0.7).rho
        np.testing.assert_allclose(oracle.wootters_sqrt_spectrum(rho),
                                   cf.sqrt_eigenvalues_rho_rhotilde(p, parity, 0.7), atol=1e-10)

    def test_svd_route_matches_general_eigensolver(self):
        rng = np.random.default_rng(5)
        for _ in range(200):
            rho = random_density(rng)
            raw = oracle.rho_rhotilde_eigenvalues(rho)
            assert np.max(np.abs(raw.imag)) <= 1e-10
            direct = np.sort(np.sqrt(np.clip(raw.real, 0, None)))[::-1]
            np.testing.assert_allclose(oracle.wootters_sqrt_spectrum(rho), direct, atol=1e-10)

    @settings(max_examples=150, deadline=None)
    @given(photon, photon, parities, st.floats(0.0, 1.0))
    def test_imaginary_residue(self, a_sq, b_sq, parity, a):
        rho = quasi_werner_density(CoherentParams(a_sq, b_sq), parity, a).rho
        assert np.max(np.abs(oracle.rho_rhotilde_eigenvalues(rho).imag)) <= 1e-10
