import numpy as np
import pytest

from qutrit_dsd.errors import DomainError
from qutrit_dsd.linalg import validate_density_matrix
from qutrit_dsd.states import (
    InitialClass,
    classify_initial,
    horodecki_state,
    psi_plus,
)
from qutrit_dsd.witnesses import negativity


class TestHorodeckiState:
    def test_direct_expansion_entries(self):
        rho = horodecki_state(2.5)
        assert rho[0, 0] == pytest.approx(2.5 / 21, abs=1e-15)       # |00><00|
        assert rho[1, 3] == pytest.approx(2 / 21, abs=1e-15)         # |01><10|
        rho4 = horodecki_state(4.0)
        assert rho4[4, 4] == pytest.approx(1 / 21, abs=1e-15)        # |11><11|

    def test_full_diagonal_pattern(self):
        alpha = 3.7
        rho = horodecki_state(alpha)
        a, m, e = alpha / 21, (5 - alpha) / 21, 2 / 21
        expected = np.array([a, e, m, e, m, a, m, a, e])
        np.testing.assert_allclose(np.diag(rho).real, expected, atol=1e-15)

    def test_entangled_block_off_diagonals(self):
        rho = horodecki_state(3.0)
        for i, j in [(1, 3), (1, 8), (3, 8)]:
            assert rho[i, j] == pytest.approx(2 / 21, abs=1e-15)
            assert rho[j, i] == pytest.approx(2 / 21, abs=1e-15)

    def test_unit_trace_exact(self):
        for alpha in np.linspace(2.0, 5.0, 31):
            assert abs(np.trace(horodecki_state(alpha)) - 1.0) < 1e-15

    def test_rejects_out_of_domain(self):
        for alpha in (1.9, 5.1, -3.0):
            with pytest.raises(DomainError, match="alpha"):
                horodecki_state(alpha)

    def test_density_matrix_invariants(self, rng):
        for alpha in rng.uniform(2.0, 5.0, size=50):
            validate_density_matrix(horodecki_state(alpha))

    def test_exactly_positive_semidefinite(self, rng):
        # Convex mixture of states: no negative eigenvalue beyond roundoff.
        for alpha in rng.uniform(2.0, 5.0, size=20):
            assert np.linalg.eigvalsh(horodecki_state(alpha))[0] >= -1e-12

    def test_psi_plus_is_normalized(self):
        v = psi_plus()
        assert abs(np.vdot(v, v) - 1.0) < 1e-15
        assert np.count_nonzero(v) == 3


class TestClassifyInitial:
    @pytest.mark.parametrize(
        "alpha,expected",
        [
            (2.0, InitialClass.SEPARABLE),
            (2.5, InitialClass.SEPARABLE),
            (3.0, InitialClass.SEPARABLE),
            (3.5, InitialClass.BOUND_ENTANGLED),
            (4.0, InitialClass.BOUND_ENTANGLED),
            (4.3, InitialClass.FREE_ENTANGLED),
            (4.8, InitialClass.FREE_ENTANGLED),
            (5.0, InitialClass.FREE_ENTANGLED),
        ],
    )
    def test_boundaries(self, alpha, expected):
        assert classify_initial(alpha) is expected

    def test_rejects_out_of_domain(self):
        with pytest.raises(DomainError):
            classify_initial(5.5)

    def test_negativity_agrees_with_classification(self):
        # Grid of step 0.05, excluding a narrow band around the NPT boundary.
        for alpha in np.arange(2.0, 5.0 + 1e-12, 0.05):
            if abs(alpha - 4.0) <= 0.01:
                continue
            is_free = classify_initial(alpha) is InitialClass.FREE_ENTANGLED
            assert (negativity(horodecki_state(alpha)) > 0.0) == is_free
