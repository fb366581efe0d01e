"""
Tests for the comb basis, the DFT and the Weyl pair
"""

import numpy as np
import pytest
from hypothesis import given, seed, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from services.kinematics_service import (
    CombIndex,
    DimensionError,
    InvalidPlanckError,
    PlanckN,
    ThetaPoint,
    comb_index,
    dft,
    harmonic,
    harmonic_observable,
    parity_matrix,
    time_reversal_image,
    u_matrix,
    unit_phase,
    v_matrix,
    z_matrix,
)

EVEN_DIMENSIONS = [2, 4, 8, 16, 32, 64]


class TestPlanckN:
    """Test the dimension type"""

    def test_constants(self):
        """Test h and hbar"""
        n = PlanckN(8)
        assert n.h == 0.125
        assert n.hbar == pytest.approx(1.0 / (16.0 * np.pi))
        assert n.half == 4

    @pytest.mark.parametrize("value", [0, 1, 3, -2, 2.0, True, "4"])
    def test_rejects(self, value):
        """Test odd, small and non-integer dimensions"""
        with pytest.raises(InvalidPlanckError):
            PlanckN(value)

    def test_numpy_integer(self):
        """Test numpy integers are accepted"""
        assert PlanckN(np.int64(6)).n == 6

    def test_even_requirement_message(self):
        """Test the error names the requirement"""
        with pytest.raises(InvalidPlanckError, match="even integer"):
            PlanckN(3)


class TestCombs:
    """Test comb labels and sectors"""

    def test_comb_periodicity(self):
        """Test Phi_{m+N} = Phi_m"""
        assert comb_index(9, 8) == 1
        assert comb_index(-1, 8) == 7
        assert CombIndex(5, 4).m == 1
        assert CombIndex(3, 4).shifted(2).m == 1

    def test_theta_sectors(self):
        """Test only the two sectors used by the propagator"""
        assert ThetaPoint.PERIODIC.theta2 == 0.0
        assert ThetaPoint.HALF_PERIODIC.theta2 == 0.5
        with pytest.raises(ValueError):
            ThetaPoint(0.5, 0.0)


class TestUnitPhase:
    """Test exact roots of unity"""

    def test_quarter_turns_exact(self):
        """Test quarter turns carry no rounding"""
        values = unit_phase(np.arange(8), 8)
        assert values[0] == 1
        assert values[2] == 1j
        assert values[4] == -1
        assert values[6] == -1j

    def test_scalar_shape(self):
        """Test scalars stay scalars"""
        assert np.shape(unit_phase(1, 4)) == ()
        assert complex(unit_phase(-1, 4)) == -1j

    def test_generic_angle(self):
        """Test against exp"""
        assert abs(complex(unit_phase(1, 8)) - np.exp(2j * np.pi / 8)) < 1e-15


class TestDft:
    """Test the discrete Fourier transform"""

    @pytest.mark.parametrize("dim", range(1, 65))
    def test_unitary(self, dim):
        """Test A^H A = I"""
        A = dft(dim)
        assert np.max(np.abs(A.conj().T @ A - np.eye(dim))) < 1e-12

    def test_dft2(self):
        """Test exact entries"""
        assert_allclose(dft(2), np.array([[1, 1], [1, -1]]) / np.sqrt(2), atol=0)

    def test_rejects_zero(self):
        """Test invalid dimension"""
        with pytest.raises(DimensionError):
            dft(0)

    def test_diagonalises_shift(self):
        """Test A^-1 V A is diagonal"""
        for n in EVEN_DIMENSIONS:
            A = dft(n)
            D = A.conj().T @ v_matrix(n) @ A
            assert np.max(np.abs(D - np.diag(np.diag(D)))) < 1e-12

    def test_z_matrix(self):
        """Test half-step phases"""
        assert_allclose(np.diag(z_matrix(2)), [1, 1j], atol=0)


class TestWeylPair:
    """Test clock and shift matrices"""

    @pytest.mark.parametrize("n", range(2, 65, 2))
    def test_weyl_relation(self, n):
        """Test UV = exp(2 pi i / N) VU"""
        U, V = u_matrix(n), v_matrix(n)
        omega = np.exp(2j * np.pi / n)
        assert np.max(np.abs(U @ V - omega * V @ U)) < 1e-13

    @pytest.mark.parametrize("n", EVEN_DIMENSIONS)
    def test_center(self, n):
        """Test U^N = V^N = I"""
        identity = np.eye(n)
        assert np.max(np.abs(np.linalg.matrix_power(u_matrix(n), n) - identity)) < 1e-13
        assert np.max(np.abs(np.linalg.matrix_power(v_matrix(n), n) - identity)) < 1e-13

    def test_shift_direction(self):
        """Test V Phi_m = Phi_{m+1}"""
        V = v_matrix(4)
        e0 = np.zeros(4)
        e0[0] = 1.0
        assert_allclose(V @ e0, [0, 1, 0, 0])

    @seed(3)
    @settings(max_examples=50, deadline=None)
    @given(a=st.integers(-12, 12), b=st.integers(-12, 12), n=st.sampled_from([2, 4, 6, 8]))
    def test_harmonic_is_product(self, a, b, n):
        """Test harmonic(N, a, b) = U^a V^b"""
        U, V = u_matrix(n), v_matrix(n)
        expected = (np.linalg.matrix_power(U, a % n) @ np.linalg.matrix_power(V, b % n))
        assert np.max(np.abs(harmonic(n, a, b) - expected)) < 1e-12

    def test_harmonic_observable(self):
        """Test the continuum harmonic uses the inverse shift"""
        assert_allclose(harmonic_observable(8, 1, 2), harmonic(8, 1, -2))


class TestParity:
    """Test the parity permutation"""

    def test_small_cases(self):
        """Test N=2 identity and N=4 swap"""
        assert_allclose(parity_matrix(2), np.eye(2))
        P = parity_matrix(4)
        assert_allclose(P @ np.arange(4), [0, 3, 2, 1])

    @pytest.mark.parametrize("n", EVEN_DIMENSIONS)
    def test_involutive_orthogonal(self, n):
        """Test P^2 = I and P real orthogonal"""
        P = parity_matrix(n)
        assert np.isrealobj(P)
        assert_allclose(P @ P, np.eye(n))
        assert_allclose(P.T @ P, np.eye(n))

    def test_flips_harmonics(self):
        """Test P U^a V^b P = U^-a V^-b"""
        P = parity_matrix(4)
        assert np.max(np.abs(P @ harmonic(4, 1, 2) @ P - harmonic(4, -1, -2))) < 1e-13


class TestTimeReversal:
    """Test the antilinear time reversal"""

    def test_identity(self):
        """Test Omega I Omega = I"""
        assert np.max(np.abs(time_reversal_image(np.eye(4)) - np.eye(4))) < 1e-13

    def test_antilinear(self):
        """Test Omega (cI) Omega = conj(c) I"""
        c = 0.3 + 0.7j
        image = time_reversal_image(c * np.eye(4))
        assert np.max(np.abs(image - np.conj(c) * np.eye(4))) < 1e-13

    @pytest.mark.parametrize("n", [4, 8])
    def test_swaps_weyl_pair(self, n):
        """Test U <-> V"""
        U, V = u_matrix(n), v_matrix(n)
        assert np.max(np.abs(time_reversal_image(U) - V)) < 1e-13
        assert np.max(np.abs(time_reversal_image(V) - U)) < 1e-13

    def test_rejects_non_square(self):
        """Test dimension mismatch"""
        with pytest.raises(DimensionError):
            time_reversal_image(np.zeros((2, 3)))
