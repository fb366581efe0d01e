"""
Tests for the operator-pipeline construction of the corrected propagator
"""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from services.propagator_service import (
    PipelineState,
    build_corrected,
    build_via_pipeline,
    momentum_cut,
    position_cut,
    propagate_comb,
    stretch,
)

SQRT_HALF = 1.0 / np.sqrt(2.0)


class TestPipelineState:
    """Test the doubled coefficient vector"""

    def test_zeros(self):
        """Test empty state"""
        state = PipelineState.zeros(4)
        assert state.n == 4
        assert state.norm() == 0.0
        assert state.sector_residual() == 0.0

    def test_shape_mismatch(self):
        """Test sectors must have equal length"""
        with pytest.raises(ValueError):
            PipelineState(np.zeros(4), np.zeros(2))

    def test_non_finite(self):
        """Test coefficients must be finite"""
        with pytest.raises(ValueError):
            PipelineState(np.array([np.nan, 0]), np.zeros(2))


class TestStages:
    """Test each stage on basis combs"""

    def test_stretch_left_half(self):
        """Test Phi_0 splits into 1/sqrt 2 on both sectors"""
        state = stretch(4, 0)
        assert_allclose(state.periodic, [SQRT_HALF, 0, 0, 0])
        assert_allclose(state.half_periodic, [SQRT_HALF, 0, 0, 0])

    def test_stretch_phase(self):
        """Test the half-periodic phase exp(-2 pi i m / N) for m < N/2"""
        state = stretch(8, 3)
        assert state.periodic[6] == pytest.approx(SQRT_HALF)
        assert state.half_periodic[6] == pytest.approx(SQRT_HALF * np.exp(-2j * np.pi * 3 / 8))

    def test_stretch_right_half(self):
        """Test odd images for m >= N/2"""
        state = stretch(8, 6)
        assert state.periodic[4] == pytest.approx(SQRT_HALF)
        assert state.half_periodic[4] == pytest.approx(-SQRT_HALF * np.exp(-1j * np.pi * 4 / 8))

    @pytest.mark.parametrize("n", [2, 4, 8, 16])
    def test_stages_preserve_norm(self, n):
        """Test every stage is an isometry on the doubled space"""
        for m in range(n):
            state = stretch(n, m)
            assert state.norm() == pytest.approx(1.0)
            state = momentum_cut(state)
            assert state.norm() == pytest.approx(1.0)
            state = position_cut(state)
            assert state.norm() == pytest.approx(1.0)

    def test_momentum_cut_keeps_periodic_sector(self):
        """Test Y^-1 = 1 on the periodic sector"""
        state = stretch(8, 5)
        assert_allclose(momentum_cut(state).periodic, state.periodic)

    def test_position_cut_even_combs(self):
        """Test even combs pass through unchanged"""
        state = PipelineState(np.arange(4, dtype=complex), 10 + np.arange(4, dtype=complex))
        out = position_cut(state)
        assert_allclose(out.periodic[0::2], state.periodic[0::2])
        assert_allclose(out.half_periodic[0::2], state.half_periodic[0::2])

    def test_n2_column(self):
        """Test Phi_1 at N=2 lands on (1, -i)/sqrt 2"""
        out = propagate_comb(2, 1)
        assert_allclose(out.periodic, SQRT_HALF * np.array([1, -1j]), atol=1e-12)
        assert out.sector_residual() < 1e-12


class TestPipelineOracle:
    """Test equivalence with the matrix formula"""

    @pytest.mark.parametrize("n", [2, 4, 8, 16, 32])
    def test_matches_corrected(self, n):
        """Test entrywise agreement and an empty half-periodic sector"""
        matrix, sector_residual = build_via_pipeline(n)
        assert np.max(np.abs(matrix - build_corrected(n))) < 1e-10
        assert sector_residual < 1e-12

    def test_n4_phi0_coefficient(self):
        """Test Phi_0 keeps 1/sqrt 2 on Phi_0 of the periodic sector"""
        matrix, _ = build_via_pipeline(4)
        assert abs(matrix[0, 0] - SQRT_HALF) < 1e-12

    def test_n8_sector_vanishes(self):
        """Test the half-periodic remainder cancels"""
        _, sector_residual = build_via_pipeline(8)
        assert sector_residual < 1e-13
