"""Tests for the symmetrised-product algebra checks."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from numpy.testing import assert_allclose

from quasilogic import hilbert, jordan
from quasilogic.errors import DimensionMismatchError, NotHermitianError

ATOL = 1e-12

dims = st.integers(min_value=2, max_value=8)
seeds = st.integers(min_value=0, max_value=10_000)


def proj(*diag):
    return hilbert.validate_projector(np.diag([float(x) for x in diag]))


class TestJordanProduct:
    def test_projector_squares_to_itself(self):
        p = proj(1, 0)
        assert_allclose(jordan.jordan_product(p, p), p.matrix, atol=ATOL)

    def test_identity_is_unit(self):
        y = hilbert.sample_hermitian(3, seed=1)
        assert_allclose(jordan.jordan_product(np.eye(3), y), y, atol=ATOL)

    def test_hand_expanded_example(self):
        x = proj(1, 0)
        y = hilbert.rank_one_projector(np.array([1.0, 1.0]))
        expected = np.array([[0.5, 0.25], [0.25, 0.0]])
        assert_allclose(jordan.jordan_product(x, y), expected, atol=ATOL)

    @given(dims, seeds)
    @settings(max_examples=50, deadline=None)
    def test_commutative_and_hermitian(self, dim, seed):
        x = hilbert.sample_hermitian(dim, seed=seed)
        y = hilbert.sample_hermitian(dim, seed=seed + 1)
        xy = jordan.jordan_product(x, y)
        assert_allclose(xy, jordan.jordan_product(y, x), atol=ATOL)
        assert hilbert.operator_norm(xy - xy.conj().T) <= ATOL

    @given(dims, seeds)
    @settings(max_examples=30, deadline=None)
    def test_power_associativity(self, dim, seed):
        x = hilbert.sample_hermitian(dim, seed=seed)
        xx = jordan.jordan_product(x, x)
        left = jordan.jordan_product(xx, x)
        right = jordan.jordan_product(x, xx)
        assert hilbert.operator_norm(left - right) <= 1e-10 * max(
            1.0, hilbert.operator_norm(x) ** 3
        )

    def test_non_associative_in_general(self):
        # (x ∘ y) ∘ z != x ∘ (y ∘ z) for generic inputs
        x = hilbert.sample_hermitian(3, seed=5)
        y = hilbert.sample_hermitian(3, seed=6)
        z = hilbert.sample_hermitian(3, seed=7)
        left = jordan.jordan_product(jordan.jordan_product(x, y), z)
        right = jordan.jordan_product(x, jordan.jordan_product(y, z))
        assert hilbert.operator_norm(left - right) > 1e-6

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitianError):
            jordan.jordan_product(np.array([[0.0, 1.0], [0.0, 0.0]]), np.eye(2))

    def test_rejects_mixed_dims(self):
        with pytest.raises(DimensionMismatchError):
            jordan.jordan_product(np.eye(2), np.eye(3))


class TestMappedConjunction:
    def test_identity_second_question(self):
        a = hilbert.sample_projector(4, 2, seed=11)
        i = hilbert.validate_projector(np.eye(4))
        assert_allclose(jordan.mapped_conjunction(a, i), a.matrix, atol=ATOL)

    def test_commuting_projectors_reduce_to_product(self):
        a, b = proj(1, 1, 0), proj(0, 1, 1)
        assert_allclose(jordan.mapped_conjunction(a, b), a.matrix @ b.matrix, atol=ATOL)

    def test_matches_jordan_product(self):
        a = hilbert.sample_projector(3, 1, seed=12)
        b = hilbert.sample_projector(3, 2, seed=13)
        assert_allclose(
            jordan.mapped_conjunction(a, b), jordan.jordan_product(a, b), atol=ATOL
        )

    @given(dims, seeds)
    @settings(max_examples=40, deadline=None)
    def test_operator_marginality(self, dim, seed):
        rng = np.random.default_rng(seed)
        a = hilbert.sample_projector(dim, int(rng.integers(1, dim)), seed=seed)
        b = hilbert.sample_projector(dim, int(rng.integers(1, dim)), seed=seed + 1)
        abar = hilbert.complement_projector(a)
        bbar = hilbert.complement_projector(b)
        left = jordan.mapped_conjunction(a, b) + jordan.mapped_conjunction(a, bbar)
        assert hilbert.operator_norm(left - a.matrix) <= 1e-10
        right = jordan.mapped_conjunction(a, b) + jordan.mapped_conjunction(abar, b)
        assert hilbert.operator_norm(right - b.matrix) <= 1e-10


class TestIdempotencyTransfer:
    def test_projector_passes(self):
        report = jordan.idempotency_transfer_check(proj(1, 1, 0))
        assert report.passed
        assert report.cubic_residual <= 1e-12

    def test_random_rank_k_projector_passes(self):
        report = jordan.idempotency_transfer_check(hilbert.sample_projector(6, 3, seed=21))
        assert report.passed

    def test_near_projector_fails_with_residual(self):
        perturbed = np.diag([1.0, 0.0]) + 1e-3 * np.diag([1.0, -1.0])
        report = jordan.idempotency_transfer_check(perturbed, tol=1e-10)
        assert not report.passed
        assert report.square_residual == pytest.approx(1e-3, rel=0.1)


class TestFormalReality:
    def test_zero_inputs_consistent(self):
        report = jordan.formal_reality_probe(np.zeros((2, 2)), np.zeros((2, 2)))
        assert report.residual_norm == 0.0
        assert report.verdict == "consistent"

    def test_signed_matrix_still_positive_square(self):
        report = jordan.formal_reality_probe(np.diag([1.0, -1.0]), np.zeros((2, 2)))
        assert report.residual_norm == pytest.approx(1.0)
        assert report.verdict == "consistent"

    @given(dims, seeds)
    @settings(max_examples=60, deadline=None)
    def test_random_pairs_never_violate(self, dim, seed):
        x = hilbert.sample_hermitian(dim, seed=seed)
        y = hilbert.sample_hermitian(dim, seed=seed + 1)
        report = jordan.formal_reality_probe(x, y)
        assert report.verdict == "consistent"
        floor = 0.01 * max(
            hilbert.operator_norm(x) ** 2, hilbert.operator_norm(y) ** 2
        )
        assert report.residual_norm > floor


class TestXorOperatorSymmetry:
    def test_commuting_pair(self):
        report = jordan.xor_operator_symmetry_check(proj(1, 1, 0), proj(0, 1, 1))
        assert report.passed
        assert report.swap_residual <= 1e-12

    def test_hand_example_is_half_identity(self):
        a = proj(1, 0)
        b = hilbert.rank_one_projector(np.array([1.0, 1.0]))
        abar = hilbert.complement_projector(a)
        bbar = hilbert.complement_projector(b)
        forward = a.matrix @ bbar.matrix @ a.matrix + abar.matrix @ b.matrix @ abar.matrix
        assert_allclose(forward, np.eye(2) / 2, atol=ATOL)
        report = jordan.xor_operator_symmetry_check(a, b)
        assert report.passed

    @given(dims, seeds)
    @settings(max_examples=50, deadline=None)
    def test_random_pairs(self, dim, seed):
        rng = np.random.default_rng(seed)
        a = hilbert.sample_projector(dim, int(rng.integers(1, dim)), seed=seed)
        b = hilbert.sample_projector(dim, int(rng.integers(1, dim)), seed=seed + 1)
        report = jordan.xor_operator_symmetry_check(a, b)
        assert report.swap_residual <= 1e-10
        assert report.expansion_residual_ab <= 1e-10
        assert report.expansion_residual_ba <= 1e-10
