"""
Tests for comb projection and the finite-N weak-limit scan
"""

import cmath
import math

import numpy as np
import pytest
from pydantic import ValidationError

from services.propagator_service import PropagatorVariant
from services.semiclassics_service import (
    CoherentStateParams,
    CombProjectionError,
    LimitScanRow,
    ScanParameterError,
    project_to_comb,
    weak_limit_scan,
)

GENERIC_POINTS = [(0.3, 0.4), (0.2, 0.7), (0.65, 0.3), (0.8, 0.6), (0.35, 0.15)]
HARMONICS = [(1, 0), (0, 1), (1, 1)]


class TestLimitScanRow:
    """Test the row model"""

    def test_error_filled(self):
        """Test abs_error defaults to |quantum - classical|"""
        row = LimitScanRow(n=16, quantum_value=0.5 + 0.5j, classical_value=1.0)
        assert row.abs_error == pytest.approx(abs(-0.5 + 0.5j))
        assert isinstance(row.classical_value, complex)

    def test_inconsistent_error(self):
        """Test a mismatched abs_error is rejected"""
        with pytest.raises(ValidationError):
            LimitScanRow(n=16, quantum_value=1.0, classical_value=1.0, abs_error=0.5)

    def test_dimension_bound(self):
        """Test n >= 2"""
        with pytest.raises(ValidationError):
            LimitScanRow(n=0, quantum_value=1.0, classical_value=1.0)


class TestProjectToComb:
    """Test coherent states sampled on the comb lattice"""

    def test_unit_norm(self):
        """Test the coefficients are normalised"""
        params = CoherentStateParams.for_dimension(0.3, 0.4, 32)
        coefficients = project_to_comb(params, 32)
        assert np.linalg.norm(coefficients) == pytest.approx(1.0, abs=1e-12)

    def test_peak(self):
        """Test the largest weight sits at the nearest lattice point"""
        params = CoherentStateParams.for_dimension(0.3, 0.0, 32)
        assert int(np.argmax(np.abs(project_to_comb(params, 32)))) == 10

    @pytest.mark.parametrize("n", [8, 32, 128])
    def test_symmetric_about_centre(self, n):
        """Test a packet between two lattice points gives mirrored weights"""
        params = CoherentStateParams.for_dimension(0.5 - 1 / (2 * n), 0.0, n)
        weights = np.abs(project_to_comb(params, n))
        for j in range(n // 2):
            assert weights[n // 2 - 1 - j] == pytest.approx(weights[n // 2 + j], abs=1e-12)

    def test_hbar_mismatch(self):
        """Test the packet width must match the lattice"""
        params = CoherentStateParams(x0=0.3, p0=0.4, hbar=1e-3)
        with pytest.raises(CombProjectionError, match="hbar"):
            project_to_comb(params, 32)

    @pytest.mark.parametrize("x0", [0.0, 1.0, -0.2])
    def test_centre_outside_unit_interval(self, x0):
        """Test x0 must lie in (0, 1)"""
        params = CoherentStateParams.for_dimension(x0, 0.4, 32)
        with pytest.raises(CombProjectionError):
            project_to_comb(params, 32)


class TestWeakLimitScan:
    """Test convergence of quantum expectations to classical values"""

    def test_trivial_harmonic(self):
        """Test (a, b) = (0, 0) gives 1 for every N"""
        rows = weak_limit_scan(0.3, 0.4, 0, 0, [16, 64])
        for row in rows:
            assert row.classical_value == 1 + 0j
            assert row.abs_error < 1e-12

    def test_classical_value(self):
        """Test the classical side uses the mapped point (0.6, 0.2)"""
        row = weak_limit_scan(0.3, 0.4, 1, 1, [16])[0]
        assert abs(row.classical_value - cmath.exp(2j * math.pi * 0.8)) < 1e-12

    def test_large_n_error(self):
        """Test N=256 is already close to the classical value"""
        row = weak_limit_scan(0.3, 0.4, 1, 0, [256])[0]
        assert row.n == 256
        assert row.abs_error < 0.05

    def test_rows_follow_dimensions(self):
        """Test one row per N in order"""
        rows = weak_limit_scan(0.3, 0.4, 1, 0, [16, 32, 64])
        assert [row.n for row in rows] == [16, 32, 64]

    @pytest.mark.slow
    @pytest.mark.parametrize("variant", list(PropagatorVariant))
    @pytest.mark.parametrize("a,b", HARMONICS)
    @pytest.mark.parametrize("x0,p0", GENERIC_POINTS)
    def test_error_decreases(self, x0, p0, a, b, variant):
        """Test |quantum - classical| shrinks from N=16 to N=256"""
        coarse, fine = weak_limit_scan(x0, p0, a, b, [16, 256], variant=variant)
        assert fine.abs_error < coarse.abs_error

    def test_two_steps(self):
        """Test iterating the propagator tracks the second classical image"""
        row = weak_limit_scan(0.3, 0.4, 0, 1, [256], steps=2)[0]
        # (0.3, 0.4) -> (0.6, 0.2) -> (0.2, 0.6)
        assert abs(row.classical_value - cmath.exp(2j * math.pi * 0.6)) < 1e-12
        assert np.isfinite(row.abs_error)

    @pytest.mark.parametrize("x0,p0", [(0.5, 0.4), (0.0, 0.4), (0.3, 0.0)])
    def test_boundary_points_rejected(self, x0, p0):
        """Test points on region boundaries"""
        with pytest.raises(ScanParameterError, match="boundary"):
            weak_limit_scan(x0, p0, 1, 0, [16])

    def test_off_torus_rejected(self):
        """Test coordinates outside [0, 1)"""
        with pytest.raises(ScanParameterError):
            weak_limit_scan(1.3, 0.4, 1, 0, [16])

    @pytest.mark.parametrize("n_list", [[32, 16], [16, 16], []])
    def test_dimension_list(self, n_list):
        """Test N must be non-empty and strictly ascending"""
        with pytest.raises(ScanParameterError):
            weak_limit_scan(0.3, 0.4, 1, 0, n_list)

    def test_steps_positive(self):
        """Test steps >= 1"""
        with pytest.raises(ScanParameterError, match="steps"):
            weak_limit_scan(0.3, 0.4, 1, 0, [16], steps=0)

    def test_odd_dimension(self):
        """Test odd N is rejected"""
        with pytest.raises(ValueError):
            weak_limit_scan(0.3, 0.4, 1, 0, [15])
