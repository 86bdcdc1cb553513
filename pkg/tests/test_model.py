"""Hamiltonian, eigensystem and thermal-state closed forms."""

import math

import numpy as np
import pytest

from gravcat import (
    EigenSystem,
    ModelParams,
    PhysicalGeometry,
    XState,
    build_hamiltonian,
    eigensystem,
    gamma_from_geometry,
    gibbs_xstate,
    ground_state,
    log_partition_function,
    partition_function,
)
from support import oracle_gibbs, random_params


class TestParamValidation:
    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            ModelParams(-1.0, 1.0)
        with pytest.raises(ValueError):
            ModelParams(1.0, -0.5)

    def test_rejects_both_zero(self):
        with pytest.raises(ValueError):
            ModelParams(0.0, 0.0)

    def test_geometry_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            PhysicalGeometry(G=1.0, m=1.0, d1=0.0, d=1.0)
        with pytest.raises(ValueError):
            PhysicalGeometry(G=-1.0, m=1.0, d1=1.0, d=1.0)


class TestHamiltonian:
    def test_one_coupling_off(self):
        h = build_hamiltonian(ModelParams(1.0, 0.0))
        assert np.array_equal(h, np.diag([1.0, 0.0, 0.0, -1.0]))

    def test_matrix_layout(self):
        h = build_hamiltonian(ModelParams(1.0, 2.0))
        assert h[0, 0] == 1.0 and h[3, 3] == -1.0
        assert h[0, 3] == h[3, 0] == h[1, 2] == h[2, 1] == -2.0
        assert h[1, 1] == h[2, 2] == 0.0
        # everything off the diagonal and anti-diagonal vanishes
        mask = np.zeros((4, 4), dtype=bool)
        mask[np.arange(4), np.arange(4)] = True
        mask[np.arange(4), 3 - np.arange(4)] = True
        assert np.all(h[~mask] == 0.0)


class TestEigensystem:
    def test_degenerate_spectrum_at_omega_zero(self):
        es = eigensystem(ModelParams(0.0, 1.0))
        assert (es.lambda1, es.lambda2, es.lambda3, es.lambda4) == (-1.0, 1.0, -1.0, 1.0)
        assert es.kappa_plus == pytest.approx(math.pi / 4)

    def test_equal_couplings(self):
        es = eigensystem(ModelParams(1.0, 1.0))
        assert es.lambda3 == pytest.approx(-math.sqrt(2.0), abs=1e-15)
        assert es.kappa_plus == pytest.approx(math.pi / 8, abs=1e-15)

    def test_generic_point(self):
        es = eigensystem(ModelParams(1.4, 1.0))
        assert es.lambda4 == pytest.approx(math.sqrt(2.96), abs=1e-12)
        assert es.kappa_plus == pytest.approx(
            math.atan(1.0 / (1.4 + math.sqrt(2.96))), abs=1e-15
        )
        assert es.kappa_plus == pytest.approx(0.3101247, abs=1e-6)

    def test_matches_dense_diagonalization(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            p = random_params(rng)
            es = eigensystem(p)
            w = np.linalg.eigvalsh(build_hamiltonian(p))
            closed = np.sort([es.lambda1, es.lambda2, es.lambda3, es.lambda4])
            assert np.allclose(closed, w, atol=1e-10)

    def test_spectrum_sums_to_zero(self):
        rng = np.random.default_rng(8)
        for _ in range(50):
            es = eigensystem(random_params(rng))
            assert es.lambda1 + es.lambda2 + es.lambda3 + es.lambda4 == 0.0

    def test_angle_ranges_and_orthogonality(self):
        rng = np.random.default_rng(9)
        for _ in range(100):
            p = random_params(rng, lo=0.0, hi=5.0)
            es = eigensystem(p)
            assert 0.0 <= es.kappa_plus <= math.pi / 4
            assert -math.pi / 2 <= es.kappa_minus <= 0.0
            if p.gamma > 0:
                # kappa_plus - kappa_minus = pi/2 <=> tan(k+) tan(k-) = -1
                assert math.tan(es.kappa_plus) * math.tan(es.kappa_minus) == pytest.approx(
                    -1.0, rel=1e-10
                )

    def test_gamma_zero_convention(self):
        es = eigensystem(ModelParams(2.0, 0.0))
        assert es.kappa_plus == 0.0
        assert es.kappa_minus == -math.pi / 2


class TestPartitionFunction:
    def test_infinite_temperature_limit(self):
        assert partition_function(ModelParams(1.3, 0.4), 1e9) == pytest.approx(4.0, abs=1e-6)

    def test_degenerate_spectrum(self):
        # spectrum is {-1, +1} twice
        assert partition_function(ModelParams(0.0, 1.0), 1.0) == pytest.approx(
            4.0 * math.cosh(1.0), rel=1e-14
        )

    def test_equal_couplings(self):
        expected = 2.0 * math.cosh(1.0) + 2.0 * math.cosh(math.sqrt(2.0))
        z = partition_function(ModelParams(1.0, 1.0), 1.0)
        assert z == pytest.approx(expected, rel=1e-14)
        assert z == pytest.approx(7.4425284, abs=1e-6)

    def test_matches_spectral_sum(self):
        rng = np.random.default_rng(10)
        for _ in range(50):
            p = random_params(rng)
            t = rng.uniform(0.05, 10.0)
            es = eigensystem(p)
            direct = sum(
                math.exp(-lam / t) for lam in (es.lambda1, es.lambda2, es.lambda3, es.lambda4)
            )
            assert partition_function(p, t) == pytest.approx(direct, rel=1e-12)

    def test_lower_bound(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            assert partition_function(random_params(rng), rng.uniform(0.01, 100.0)) >= 4.0

    def test_log_form_survives_extreme_cold(self):
        lz = log_partition_function(ModelParams(3.0, 4.0), 1e-3)
        assert lz == pytest.approx(5000.0, rel=1e-12)  # beta*s with s = 5
        assert math.isinf(partition_function(ModelParams(3.0, 4.0), 1e-3))

    def test_rejects_bad_temperature(self):
        with pytest.raises(ValueError):
            partition_function(ModelParams(1.0, 1.0), 0.0)
        with pytest.raises(ValueError):
            gibbs_xstate(ModelParams(1.0, 1.0), -2.0)


class TestGibbsState:
    def test_infinite_temperature_is_maximally_mixed(self):
        x = gibbs_xstate(ModelParams(1.0, 1.0), 1e6)
        for pop in (x.r11, x.r22, x.r33, x.r44):
            assert pop == pytest.approx(0.25, abs=1e-5)
        assert abs(x.r14) < 1e-5 and abs(x.r23) < 1e-5

    def test_cold_limit_is_ground_projector(self):
        # s = 1/sqrt(2), kappa_plus = pi/8; ground state leans on |11>
        x = gibbs_xstate(ModelParams(0.5, 0.5), 0.01)
        g = ground_state(ModelParams(0.5, 0.5))
        assert g.r11 == pytest.approx(math.sin(math.pi / 8) ** 2, abs=1e-12)
        assert g.r44 == pytest.approx(math.cos(math.pi / 8) ** 2, abs=1e-12)
        assert g.r14 == pytest.approx(0.5 * math.sin(math.pi / 4), abs=1e-12)
        # thermal corrections at T = 0.01 are exp(-beta(s - gamma)) ~ 1e-9
        for name in ("r11", "r22", "r33", "r44", "r14", "r23"):
            assert getattr(x, name) == pytest.approx(getattr(g, name), abs=1e-8)

    def test_ground_state_matches_dense_ground_projector(self):
        rng = np.random.default_rng(21)
        for _ in range(25):
            p = random_params(rng, lo=0.1, hi=5.0)
            w, v = np.linalg.eigh(build_hamiltonian(p))
            proj = np.outer(v[:, 0], v[:, 0])
            g = ground_state(p).to_matrix()
            assert np.max(np.abs(g - proj)) < 1e-10

    def test_ground_state_rejects_degenerate_level(self):
        with pytest.raises(ValueError):
            ground_state(ModelParams(0.0, 1.0))

    def test_matches_matrix_exponential(self):
        x = gibbs_xstate(ModelParams(1.0, 2.0), 1.0)
        ref = oracle_gibbs(ModelParams(1.0, 2.0), 1.0)
        assert np.max(np.abs(x.to_matrix() - ref)) < 1e-10

    @pytest.mark.parametrize("omega,gamma", [(0.0, 1.7), (2.3, 0.0)])
    def test_matches_matrix_exponential_on_edges(self, omega, gamma):
        p = ModelParams(omega, gamma)
        for t in (0.05, 0.7, 4.0):
            err = np.max(np.abs(gibbs_xstate(p, t).to_matrix() - oracle_gibbs(p, t)))
            assert err < 1e-10

    def test_matches_matrix_exponential_random(self):
        rng = np.random.default_rng(12)
        for _ in range(60):
            p = random_params(rng)
            t = rng.uniform(0.01, 10.0)
            err = np.max(np.abs(gibbs_xstate(p, t).to_matrix() - oracle_gibbs(p, t)))
            assert err < 1e-10

    def test_inner_block_symmetry_is_exact(self):
        rng = np.random.default_rng(13)
        for _ in range(50):
            x = gibbs_xstate(random_params(rng), rng.uniform(0.01, 10.0))
            assert x.r22 == x.r33
            assert x.r23 >= 0.0

    def test_commutes_with_hamiltonian(self):
        rng = np.random.default_rng(14)
        for _ in range(25):
            p = random_params(rng)
            h = build_hamiltonian(p)
            rho = gibbs_xstate(p, rng.uniform(0.01, 10.0)).to_matrix()
            assert np.max(np.abs(h @ rho - rho @ h)) < 1e-10

    def test_purity_non_increasing_in_temperature(self):
        rng = np.random.default_rng(15)
        for _ in range(10):
            p = random_params(rng, lo=0.1, hi=5.0)
            temps = np.geomspace(0.02, 20.0, 40)
            purities = [gibbs_xstate(p, t).purity() for t in temps]
            assert all(b <= a + 1e-12 for a, b in zip(purities, purities[1:]))


class TestXStateValidation:
    def test_rejects_bad_trace(self):
        with pytest.raises(ValueError):
            XState(r11=0.5, r22=0.5, r33=0.5, r44=0.5, r14=0.0, r23=0.0)

    def test_rejects_oversized_coherence(self):
        with pytest.raises(ValueError):
            XState(r11=0.25, r22=0.25, r33=0.25, r44=0.25, r14=0.3, r23=0.0)

    def test_rejects_negative_population(self):
        with pytest.raises(ValueError):
            XState(r11=-0.1, r22=0.4, r33=0.4, r44=0.3, r14=0.0, r23=0.0)


class TestGeometry:
    def test_far_second_well(self):
        g = PhysicalGeometry(G=1.0, m=1.0, d1=1.0, d=1e9)
        assert gamma_from_geometry(g) == pytest.approx(0.5, abs=1e-8)

    def test_hand_computed_value(self):
        g = PhysicalGeometry(G=1.0, m=2.0, d1=1.0, d=1.0)
        assert gamma_from_geometry(g) == pytest.approx(2.0 * (1.0 - 1.0 / math.sqrt(2.0)), rel=1e-14)
        assert gamma_from_geometry(g) == pytest.approx(0.5857864, abs=1e-6)

    def test_vanishes_as_wells_merge(self):
        g = PhysicalGeometry(G=1.0, m=1.0, d1=2.0, d=1e-9)
        assert gamma_from_geometry(g) == pytest.approx(0.0, abs=1e-12)

    def test_second_separation_exceeds_first(self):
        g = PhysicalGeometry(G=1.0, m=1.0, d1=1.0, d=0.5)
        assert g.d2 > g.d1
        assert gamma_from_geometry(g) > 0.0
