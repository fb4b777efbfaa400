import numpy as np
import pytest

from conftest import random_density, random_product_density
from qutrit_dsd.linalg import partial_transpose, trace_norm
from qutrit_dsd.states import horodecki_state, psi_plus
from qutrit_dsd.witnesses import WitnessReport, ccnr, compute_report, min_pt_eigenvalue, negativity

# Golden values frozen from the independent oracles below (full eigensolve
# of the loop-built partial transpose, SVD of the loop-built realignment).
NEGATIVITY_ALPHA_5 = 0.200446319633264
CCNR_ALPHA_3_5 = 0.076454822641142
CCNR_ALPHA_4_0 = 0.156738220101390


def oracle_pt(rho):
    """Partial transpose on B built entry by entry, independent of reshapes."""
    out = np.zeros((9, 9), dtype=complex)
    for i in range(3):
        for j in range(3):
            for k in range(3):
                for l in range(3):
                    out[3 * i + l, 3 * j + k] = rho[3 * i + k, 3 * j + l]
    return out


def oracle_negativity(rho):
    """Brute-force route: general (non-Hermitian) eigensolver on the PT."""
    eigs = np.linalg.eigvals(oracle_pt(rho))
    return float(np.sum(np.abs(eigs.real))) - 1.0


def oracle_ccnr(rho):
    """Brute-force route: SVD of the loop-built realigned matrix."""
    out = np.zeros((9, 9), dtype=complex)
    for i in range(3):
        for j in range(3):
            for k in range(3):
                for l in range(3):
                    out[3 * i + j, 3 * k + l] = rho[3 * i + k, 3 * j + l]
    return float(np.linalg.svd(out, compute_uv=False).sum()) - 1.0


def psi_plus_projector():
    v = psi_plus()
    return np.outer(v, v.conj())


class TestNegativity:
    def test_maximally_entangled(self):
        assert abs(negativity(psi_plus_projector()) - 2.0) < 1e-12

    def test_product_state_is_zero(self, rng):
        for _ in range(5):
            assert negativity(random_product_density(rng)) == 0.0

    def test_golden_value_alpha_5(self):
        rho = horodecki_state(5.0)
        assert abs(oracle_negativity(rho) - NEGATIVITY_ALPHA_5) < 1e-9
        assert abs(negativity(rho) - NEGATIVITY_ALPHA_5) < 1e-9

    def test_equals_trace_norm_form(self, rng):
        for _ in range(5):
            rho = random_density(rng)
            expected = trace_norm(partial_transpose(rho, "B")) - 1.0
            value = negativity(rho)
            assert abs(value - max(expected, 0.0)) < 1e-10

    def test_clamps_tiny_values_to_zero(self, rng):
        rho = random_product_density(rng)
        assert negativity(rho) == 0.0

    def test_subsystem_symmetry(self, rng):
        # The two partial transposes are transposes of each other, hence
        # share a spectrum; negativity must not depend on the choice.
        for _ in range(5):
            rho = random_density(rng)
            n_b = trace_norm(partial_transpose(rho, "B")) - 1.0
            n_a = trace_norm(partial_transpose(rho, "A")) - 1.0
            assert abs(n_a - n_b) < 1e-10

    def test_continuity_smoke(self, rng):
        eps = 1e-6
        rho = random_density(rng)
        g = rng.standard_normal((9, 9)) + 1j * rng.standard_normal((9, 9))
        h = (g + g.conj().T) / 2
        perturbed = rho + eps * h
        maxdiff = float(np.max(np.abs(perturbed - rho)))
        base = trace_norm(partial_transpose(rho)) - 1.0
        moved = trace_norm(partial_transpose(perturbed)) - 1.0
        assert abs(moved - base) <= 9 * maxdiff


class TestCcnr:
    def test_maximally_mixed(self):
        assert abs(ccnr(np.eye(9, dtype=complex) / 9) - (-2.0 / 3.0)) < 1e-12

    def test_maximally_entangled(self):
        assert abs(ccnr(psi_plus_projector()) - 2.0) < 1e-12

    def test_golden_bound_entangled_values(self):
        rho = horodecki_state(3.5)
        assert abs(oracle_ccnr(rho) - CCNR_ALPHA_3_5) < 1e-9
        assert abs(ccnr(rho) - CCNR_ALPHA_3_5) < 1e-9
        rho4 = horodecki_state(4.0)
        assert abs(oracle_ccnr(rho4) - CCNR_ALPHA_4_0) < 1e-9
        assert abs(ccnr(rho4) - CCNR_ALPHA_4_0) < 1e-9

    def test_detects_bound_region(self):
        assert ccnr(horodecki_state(3.5)) > 0.0
        assert min_pt_eigenvalue(horodecki_state(3.5)) > 0.0  # PPT, yet detected

    def test_nonpositive_for_product_states(self, rng):
        for _ in range(10):
            assert ccnr(random_product_density(rng)) <= 1e-12

    def test_not_clamped(self, rng):
        value = ccnr(random_product_density(rng))
        assert value < 0.0  # negative distance from threshold is preserved


class TestMinPtEigenvalue:
    def test_maximally_entangled(self):
        assert abs(min_pt_eigenvalue(psi_plus_projector()) + 1.0 / 3.0) < 1e-12

    def test_product_states_are_ppt(self, rng):
        for _ in range(5):
            assert min_pt_eigenvalue(random_product_density(rng)) >= -1e-12

    def test_boundary_alpha_4(self):
        assert abs(min_pt_eigenvalue(horodecki_state(4.0))) < 1e-9

    def test_sign_change_across_boundary(self):
        assert min_pt_eigenvalue(horodecki_state(3.99)) > 0.0
        assert min_pt_eigenvalue(horodecki_state(4.01)) < 0.0


class TestConsistency:
    def test_sign_consistency_on_random_mixtures(self, rng):
        proj = psi_plus_projector()
        for _ in range(20):
            w = rng.uniform()
            rho = w * proj + (1 - w) * random_product_density(rng)
            n = negativity(rho)
            lam = min_pt_eigenvalue(rho)
            assert (n > 1e-10) == (lam < -1e-10)

    def test_report_matches_components(self, rng):
        rho = random_density(rng)
        report = compute_report(rho)
        assert isinstance(report, WitnessReport)
        assert report.negativity == negativity(rho)
        assert report.ccnr == ccnr(rho)
        assert report.lambda_min == min_pt_eigenvalue(rho)
        assert report.negativity >= 0.0

    def test_oracle_agreement_on_random_states(self, rng):
        for _ in range(10):
            rho = random_density(rng)
            assert abs(negativity(rho) - max(oracle_negativity(rho), 0.0)) < 1e-9
            assert abs(ccnr(rho) - oracle_ccnr(rho)) < 1e-9
