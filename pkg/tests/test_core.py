"""Tests for the symplectic spectrum machinery and positivity checks."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncgauss import (
    DimensionError,
    MatrixStructureError,
    NCParams,
    NotPositiveDefiniteError,
    SingularMatrixError,
    build_covariance,
    build_darboux_map,
    family_form,
    hermitian_min_eigenvalue,
    matrix_from_json,
    matrix_to_json,
    nc_williamson_spectrum,
    rsup_holds,
    standard_symplectic_form,
    validate_covariance,
    validate_skew_form,
)
from oracles import brute_force_spectrum, random_skew_nonsingular, random_spd, random_symplectic

# Family covariance at the figure slice (m, n) = (sqrt(2)/6, 1/6) against the
# deformed form with theta = 1/4, eta = 1/2; frozen from the complex
# eigensolver oracle.
FROZEN_SPECTRUM = (
    1.2187822642129633,
    1.273835083454588,
    2.6992374882779266,
    2.8211629854694626,
)
FROZEN_MIN_EIG = 0.1424188440603755

FIG_M, FIG_N = np.sqrt(2.0) / 6.0, 1.0 / 6.0


def _family_pair(theta, eta, m=FIG_M, n=FIG_N):
    nc = NCParams(theta, eta)
    return build_covariance(m, n, nc).sigma, family_form(nc).assembled


class TestStandardForm:
    def test_single_mode(self):
        np.testing.assert_array_equal(
            standard_symplectic_form(1), np.array([[0.0, 1.0], [-1.0, 0.0]])
        )

    def test_two_mode_blocks(self):
        jay = standard_symplectic_form(2)
        np.testing.assert_array_equal(jay[:2, 2:], np.eye(2))
        np.testing.assert_array_equal(jay[2:, :2], -np.eye(2))
        np.testing.assert_array_equal(jay[:2, :2], np.zeros((2, 2)))
        np.testing.assert_array_equal(jay[2:, 2:], np.zeros((2, 2)))

    @pytest.mark.parametrize("n_modes", [1, 2, 3, 5, 8])
    def test_squares_to_minus_identity(self, n_modes):
        jay = standard_symplectic_form(n_modes)
        np.testing.assert_array_equal(jay @ jay, -np.eye(2 * n_modes))

    def test_rejects_zero_modes(self):
        with pytest.raises(DimensionError):
            standard_symplectic_form(0)

    def test_rejects_oversized(self):
        with pytest.raises(DimensionError):
            standard_symplectic_form(33)


class TestValidation:
    def test_covariance_rejects_asymmetric(self):
        with pytest.raises(MatrixStructureError):
            validate_covariance([[1.0, 0.1], [0.0, 1.0]])

    def test_covariance_rejects_indefinite(self):
        with pytest.raises(NotPositiveDefiniteError):
            validate_covariance([[1.0, 0.0], [0.0, -1.0]])

    def test_covariance_rejects_odd_dimension(self):
        with pytest.raises(DimensionError):
            validate_covariance(np.eye(3))

    def test_skew_rejects_symmetric(self):
        with pytest.raises(MatrixStructureError):
            validate_skew_form(np.eye(2))

    def test_skew_rejects_singular(self):
        with pytest.raises(SingularMatrixError):
            validate_skew_form(np.zeros((2, 2)))

    def test_returns_readonly(self):
        out = validate_covariance(np.eye(2))
        with pytest.raises(ValueError):
            out[0, 0] = 2.0


class TestSpectrum:
    def test_vacuum_boundary(self):
        spectrum = nc_williamson_spectrum(0.5 * np.eye(2), standard_symplectic_form(1))
        assert spectrum.invariants == pytest.approx((1.0,), rel=1e-12)
        assert spectrum.smallest == pytest.approx(1.0, rel=1e-12)

    def test_scaled_identity(self):
        spectrum = nc_williamson_spectrum(np.diag([1.5, 1.5]), standard_symplectic_form(1))
        assert spectrum.invariants == pytest.approx((3.0,), rel=1e-12)

    def test_family_point_matches_complex_eigensolver(self):
        sigma, form = _family_pair(0.25, 0.5)
        spectrum = np.asarray(nc_williamson_spectrum(sigma, form).invariants)
        np.testing.assert_allclose(spectrum, FROZEN_SPECTRUM, rtol=1e-8)
        np.testing.assert_allclose(spectrum, brute_force_spectrum(sigma, form), rtol=1e-8)

    def test_sorted_ascending_and_positive(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            sigma = random_spd(rng, 8)
            form = random_skew_nonsingular(rng, 8)
            spectrum = nc_williamson_spectrum(sigma, form)
            inv = np.asarray(spectrum.invariants)
            assert np.all(inv > 0)
            assert np.all(np.diff(inv) >= 0)
            assert len(spectrum) == 4

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            nc_williamson_spectrum(np.eye(4), standard_symplectic_form(1))

    def test_rejects_non_positive_definite(self):
        with pytest.raises(NotPositiveDefiniteError):
            nc_williamson_spectrum(np.diag([1.0, -0.5]), standard_symplectic_form(1))

    def test_rejects_singular_form(self):
        with pytest.raises(SingularMatrixError):
            nc_williamson_spectrum(np.eye(2), np.zeros((2, 2)))

    def test_negation_closure_of_pencil(self):
        # The eigenvalues of 2i O^-1 S come in +-nu pairs and the positive
        # half must reproduce the returned spectrum.
        rng = np.random.default_rng(7)
        for _ in range(15):
            sigma = random_spd(rng, 6)
            form = random_skew_nonsingular(rng, 6)
            vals = np.linalg.eigvals(2j * np.linalg.inv(form) @ sigma)
            assert np.max(np.abs(vals.imag)) < 1e-9
            ordered = np.sort(vals.real)
            np.testing.assert_allclose(ordered[:3], -ordered[::-1][:3], rtol=0, atol=1e-9 * np.max(ordered))
            spectrum = np.asarray(nc_williamson_spectrum(sigma, form).invariants)
            np.testing.assert_allclose(spectrum, ordered[3:], rtol=1e-9)

    @settings(max_examples=30, deadline=None)
    @given(scale=st.floats(min_value=1e-3, max_value=1e3))
    def test_scaling_homogeneity(self, scale):
        sigma, form = _family_pair(0.25, 0.5)
        base = np.asarray(nc_williamson_spectrum(sigma, form).invariants)
        scaled = np.asarray(nc_williamson_spectrum(scale * sigma, form).invariants)
        np.testing.assert_allclose(scaled, scale * base, rtol=1e-10)

    def test_symplectic_congruence_invariance_standard(self):
        rng = np.random.default_rng(19)
        jay = standard_symplectic_form(3)
        sigma = random_spd(rng, 6)
        base = np.asarray(nc_williamson_spectrum(sigma, jay).invariants)
        for _ in range(5):
            sym = random_symplectic(rng, jay)
            moved = sym @ sigma @ sym.T
            moved = 0.5 * (moved + moved.T)
            np.testing.assert_allclose(
                np.asarray(nc_williamson_spectrum(moved, jay).invariants), base, rtol=1e-9
            )

    def test_symplectic_congruence_invariance_deformed(self):
        # M = S M_J S^-1 preserves Omega = S J S^T.
        rng = np.random.default_rng(23)
        nc = NCParams(0.25, 0.5)
        darboux = build_darboux_map(nc).assembled
        omega = family_form(nc).assembled
        sigma = random_spd(rng, 8)
        base = np.asarray(nc_williamson_spectrum(sigma, omega).invariants)
        # The composite standard form is block-diagonal over the two parties.
        jay = np.kron(np.eye(2), standard_symplectic_form(2))
        for _ in range(5):
            sym = darboux @ random_symplectic(rng, jay) @ np.linalg.inv(darboux)
            moved = sym @ sigma @ sym.T
            moved = 0.5 * (moved + moved.T)
            np.testing.assert_allclose(
                np.asarray(nc_williamson_spectrum(moved, omega).invariants), base, rtol=1e-9
            )


class TestRsup:
    def test_vacuum_saturates(self):
        assert rsup_holds(0.5 * np.eye(2), standard_symplectic_form(1))

    def test_subvacuum_violates(self):
        assert not rsup_holds(0.25 * np.eye(2), standard_symplectic_form(1))

    def test_commutative_family_point(self):
        sigma, form = _family_pair(0.0, 0.0, m=0.3, n=0.4)
        assert rsup_holds(sigma, form)
        spectrum = nc_williamson_spectrum(sigma, form)
        assert spectrum.smallest == pytest.approx(3.0 * np.sqrt(3.0) / 2.0, rel=1e-10)

    def test_agrees_with_hermitian_positivity(self):
        rng = np.random.default_rng(101)
        for _ in range(200):
            dim = 2 * int(rng.integers(1, 5))
            scale = float(np.exp(rng.uniform(-3.0, 1.0)))
            sigma = scale * random_spd(rng, dim) / dim
            form = random_skew_nonsingular(rng, dim)
            direct = hermitian_min_eigenvalue(sigma + 0.5j * form) >= -1e-10
            assert rsup_holds(sigma, form) == direct


class TestHermitianMinEigenvalue:
    def test_identity(self):
        assert hermitian_min_eigenvalue(np.eye(2)) == pytest.approx(1.0)

    def test_vacuum_pencil_is_marginal(self):
        mat = 0.5 * np.eye(2) + 0.5j * standard_symplectic_form(1)
        assert hermitian_min_eigenvalue(mat) == pytest.approx(0.0, abs=1e-12)

    def test_rejects_non_hermitian(self):
        with pytest.raises(MatrixStructureError):
            hermitian_min_eigenvalue(np.array([[0.0, 1.0], [-1.0, 0.0]]))

    def test_sign_consistent_with_spectrum(self):
        sigma, form = _family_pair(0.25, 0.5)
        value = hermitian_min_eigenvalue(sigma + 0.5j * form)
        assert value == pytest.approx(FROZEN_MIN_EIG, rel=1e-8)
        assert (value >= -1e-10) == (nc_williamson_spectrum(sigma, form).smallest >= 1.0 - 1e-12)


class TestMatrixJson:
    def test_known_encoding(self):
        obj = matrix_to_json(standard_symplectic_form(1))
        assert obj == {"dim": 2, "entries": [0.0, 1.0, -1.0, 0.0]}

    @settings(max_examples=50, deadline=None)
    @given(
        data=st.lists(
            st.floats(min_value=-1e12, max_value=1e12, allow_nan=False), min_size=4, max_size=4
        )
    )
    def test_round_trip(self, data):
        mat = np.asarray(data).reshape(2, 2)
        np.testing.assert_array_equal(matrix_from_json(matrix_to_json(mat)), mat)

    def test_rejects_wrong_entry_count(self):
        with pytest.raises(DimensionError):
            matrix_from_json({"dim": 2, "entries": [1.0, 2.0, 3.0]})

    def test_rejects_malformed(self):
        with pytest.raises(Exception):
            matrix_from_json({"entries": [1.0]})
