"""Tests for the conditional SMACOF optimizer."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from condmds.exceptions import InputValidationError
from condmds.smacof import (
    cond_smacof,
    initialize_embedding,
    update_embedding,
    update_transform,
    update_transform_diag,
)
from condmds.stress import (
    build_operators,
    conditional_stress,
    guttman_coefficients,
    joint_distance_matrix,
    weight_laplacian,
)
from condmds.weights import weights_uniform

from conftest import random_dissimilarity, random_weights


def _two_point_problem():
    delta = np.array([[0.0, 2.0], [2.0, 0.0]])
    v = np.zeros((2, 1))  # constant auxiliary: B cannot contribute
    return delta, v


class TestInitialize:
    def test_b_is_identity(self):
        _, b0 = initialize_embedding(5, 3, 2, seed=0)
        np.testing.assert_array_equal(b0, np.eye(3))

    def test_deterministic(self):
        u1, _ = initialize_embedding(8, 1, 2, seed=123)
        u2, _ = initialize_embedding(8, 1, 2, seed=123)
        np.testing.assert_array_equal(u1, u2)

    def test_range_and_shape(self):
        u0, _ = initialize_embedding(2, 1, 1, seed=7)
        assert u0.shape == (2, 1)
        assert np.all(u0 >= -1.0) and np.all(u0 <= 1.0)


class TestUpdateEmbedding:
    def test_two_point_hand_computation(self):
        delta, v = _two_point_problem()
        w = weights_uniform(2)
        ops = build_operators(w, v)
        anchor_u = np.array([[0.0], [1.0]])
        c = guttman_coefficients(delta, w, joint_distance_matrix(anchor_u, np.eye(1), v))
        np.testing.assert_array_equal(c, [[2.0, -2.0], [-2.0, 2.0]])
        u_new = update_embedding(ops, c, anchor_u)
        np.testing.assert_allclose(u_new, [[-1.0], [1.0]], atol=1e-14)
        assert conditional_stress(delta, w, u_new, np.eye(1), v) <= 1e-28

    def test_fixed_point_returns_centered_anchor(self):
        rng = np.random.default_rng(2)
        n = 7
        w = weights_uniform(n)
        v = rng.normal(size=(n, 1))
        u = rng.normal(size=(n, 2))
        delta = joint_distance_matrix(u, np.zeros((1, 1)), v)
        ops = build_operators(w, v)
        c = guttman_coefficients(delta, w, delta.copy())
        u_new = update_embedding(ops, c, u)
        np.testing.assert_allclose(u_new, u - u.mean(axis=0), atol=1e-12)

    def test_zero_anchor_maps_to_zero(self):
        rng = np.random.default_rng(6)
        w = random_weights(rng, 5)
        v = rng.normal(size=(5, 1))
        ops = build_operators(w, v)
        c = rng.normal(size=(5, 5))
        np.testing.assert_array_equal(update_embedding(ops, c, np.zeros((5, 2))), 0.0)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 10_000))
    def test_fast_path_matches_pseudoinverse_path(self, seed):
        rng = np.random.default_rng(seed)
        n, p = int(rng.integers(2, 12)), int(rng.integers(1, 4))
        w = weights_uniform(n)
        delta = random_dissimilarity(rng, n)
        u = rng.normal(size=(n, p))
        v = rng.normal(size=(n, 1))
        c = guttman_coefficients(delta, w, joint_distance_matrix(u, np.eye(1), v))
        fast = update_embedding(build_operators(w, v, uniform=True), c, u)
        slow = update_embedding(build_operators(w, v, uniform=False), c, u)
        assert np.abs(fast - slow).max() <= 1e-9


class TestUpdateTransform:
    def test_constant_auxiliary_gives_zero(self):
        rng = np.random.default_rng(14)
        w = random_weights(rng, 5)
        v = np.full((5, 1), 2.0)
        ops = build_operators(w, v)
        c = rng.normal(size=(5, 5))
        np.testing.assert_allclose(update_transform(ops, c, v, np.eye(1)), 0.0, atol=1e-12)
        np.testing.assert_allclose(
            update_transform_diag(ops, c, v, np.eye(1)), 0.0, atol=1e-12
        )

    def test_zero_anchor_maps_to_zero(self):
        rng = np.random.default_rng(15)
        w = random_weights(rng, 5)
        v = rng.normal(size=(5, 2))
        ops = build_operators(w, v)
        c = rng.normal(size=(5, 5))
        np.testing.assert_array_equal(
            update_transform(ops, c, v, np.zeros((2, 2))), 0.0
        )

    def test_planted_solution_is_stationary(self):
        rng = np.random.default_rng(16)
        n = 6
        u_star = rng.normal(size=(n, 2))
        v = rng.normal(size=(n, 1))
        b_star = np.array([[1.3]])
        delta = joint_distance_matrix(u_star, b_star, v)
        w = weights_uniform(n)
        ops = build_operators(w, v)
        c = guttman_coefficients(delta, w, delta.copy())
        b_new = update_transform(ops, c, v, b_star)
        np.testing.assert_allclose(b_new, b_star, atol=1e-6)

    def test_diag_equals_full_when_q_is_one(self):
        rng = np.random.default_rng(17)
        w = random_weights(rng, 6)
        v = rng.normal(size=(6, 1))
        ops = build_operators(w, v)
        c = rng.normal(size=(6, 6))
        anchor = np.array([[0.7]])
        full = update_transform(ops, c, v, anchor)
        diag = update_transform_diag(ops, c, v, anchor)
        np.testing.assert_allclose(diag, full, atol=1e-10)

    def test_diag_matches_full_for_orthogonal_columns(self):
        # V columns orthogonal in the H metric make G diagonal, so the full
        # update restricted to a diagonal anchor stays diagonal and the two
        # paths must agree
        rng = np.random.default_rng(18)
        n = 8
        w = random_weights(rng, n)
        v = rng.normal(size=(n, 2))
        h = weight_laplacian(w)
        # H-metric Gram-Schmidt on the second column
        coef = (v[:, 0] @ h @ v[:, 1]) / (v[:, 0] @ h @ v[:, 0])
        v[:, 1] -= coef * v[:, 0]
        ops = build_operators(w, v)
        assert abs(ops.g[0, 1]) <= 1e-9
        c = rng.normal(size=(n, n))
        c = c + c.T
        anchor = np.diag(rng.normal(size=2))
        full = update_transform(ops, c, v, anchor)
        diag = update_transform_diag(ops, c, v, anchor)
        np.testing.assert_allclose(np.diagonal(diag), np.diagonal(full), atol=1e-8)


class TestFit:
    def test_two_point_problem_converges_in_one_update(self):
        delta, v = _two_point_problem()
        report = cond_smacof(delta, v, "uniform", n_components=1, seed=0)
        assert report.stress_trace[1] <= 1e-20
        assert report.final_stress <= 1e-20
        assert report.termination == "converged"

    def test_trace_monotone_on_random_problems(self):
        for seed in range(8):
            rng = np.random.default_rng(seed)
            n = int(rng.integers(4, 12))
            delta = random_dissimilarity(rng, n)
            v = rng.normal(size=(n, 2))
            w = random_weights(rng, n)
            report = cond_smacof(delta, v, w, seed=seed, gamma=1e-9)
            diffs = np.diff(report.stress_trace)
            assert np.all(diffs <= 1e-9)

    def test_trace_monotone_with_diag_b_and_sammon(self, kinship):
        aux = kinship.auxiliary(["gender", "kinship_degree"])
        for diag_b in (False, True):
            report = cond_smacof(
                kinship.delta, aux, "sammon", diag_b=diag_b, seed=3
            )
            assert np.all(np.diff(report.stress_trace) <= 1e-9)
            if diag_b:
                b = report.b_matrix
                assert np.all(b[~np.eye(2, dtype=bool)] == 0.0)

    def test_trace_length_matches_iterations(self, kinship):
        report = cond_smacof(kinship.delta, kinship.auxiliary(["gender"]), seed=1)
        assert len(report.stress_trace) == report.n_iter + 1

    def test_max_iterations_termination(self, kinship):
        report = cond_smacof(
            kinship.delta, kinship.auxiliary(["gender"]), gamma=0.0, max_iter=5, seed=1
        )
        assert report.n_iter == 5
        assert report.termination == "max_iterations"

    def test_fast_path_override_matches_auto(self, kinship):
        aux = kinship.auxiliary(["gender"])
        auto = cond_smacof(kinship.delta, aux, seed=4)
        forced = cond_smacof(kinship.delta, aux, seed=4, uniform_fast_path=False)
        assert abs(auto.final_stress - forced.final_stress) <= 1e-9 * auto.final_stress
        assert np.abs(auto.embedding - forced.embedding).max() <= 1e-6

    def test_planted_model_recovery(self):
        rng = np.random.default_rng(70)
        n, p, q = 30, 2, 2
        u_star = rng.normal(size=(n, p))
        v = rng.normal(size=(n, q))
        delta = joint_distance_matrix(u_star, np.eye(q), v)
        report = cond_smacof(delta, v, "uniform", gamma=1e-10, seed=42)
        eta_sq = conditional_stress(
            delta, weights_uniform(n), np.zeros((n, p)), np.zeros((q, q)), v
        )
        assert report.final_stress / eta_sq < 1e-3

    def test_determinism(self, kinship):
        aux = kinship.auxiliary(["gender"])
        r1 = cond_smacof(kinship.delta, aux, seed=5)
        r2 = cond_smacof(kinship.delta, aux, seed=5)
        np.testing.assert_array_equal(r1.embedding, r2.embedding)
        np.testing.assert_array_equal(r1.b_matrix, r2.b_matrix)
        np.testing.assert_array_equal(r1.stress_trace, r2.stress_trace)
        assert r1.termination == r2.termination and r1.n_iter == r2.n_iter

    def test_restarts_pick_best(self, kinship):
        aux = kinship.auxiliary(["gender"])
        multi = cond_smacof(kinship.delta, aux, seed=0, restarts=5)
        assert len(multi.restart_stresses) == 5
        finals = [s for _, s in multi.restart_stresses]
        assert multi.final_stress == min(finals)
        # the recorded seed reproduces the winning run
        solo = cond_smacof(kinship.delta, aux, seed=multi.seed)
        np.testing.assert_array_equal(solo.embedding, multi.embedding)

    def test_scale_aux_reports_b_in_original_units(self, kinship):
        aux = kinship.auxiliary(["gender", "kinship_degree"]) * np.array([1.0, 100.0])
        plain = cond_smacof(kinship.delta, aux, seed=2, scale_aux=False)
        scaled = cond_smacof(kinship.delta, aux, seed=2, scale_aux=True)
        # both Bs act on the same original-unit auxiliary matrix
        d_plain = joint_distance_matrix(plain.embedding, plain.b_matrix, aux)
        d_scaled = joint_distance_matrix(scaled.embedding, scaled.b_matrix, aux)
        assert conditional_stress(
            kinship.delta, weights_uniform(14), scaled.embedding, scaled.b_matrix, aux
        ) == pytest.approx(scaled.final_stress, rel=1e-9)
        assert d_plain.shape == d_scaled.shape

    def test_dimension_mismatch_raises(self, kinship):
        with pytest.raises(InputValidationError):
            cond_smacof(kinship.delta, np.ones((5, 1)))

    @pytest.mark.parametrize(
        "bad", [dict(n_components=0), dict(gamma=-1.0), dict(max_iter=0), dict(restarts=0)]
    )
    def test_invalid_config_raises(self, kinship, bad):
        with pytest.raises(InputValidationError):
            cond_smacof(kinship.delta, kinship.auxiliary(["gender"]), **bad)


class TestStressInvariance:
    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 10_000))
    def test_translation_invariance(self, seed):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(3, 9))
        delta = random_dissimilarity(rng, n)
        w = random_weights(rng, n)
        u = rng.normal(size=(n, 2))
        v = rng.normal(size=(n, 1))
        b = rng.normal(size=(1, 1))
        shift = rng.normal(size=(1, 2))
        s0 = conditional_stress(delta, w, u, b, v)
        s1 = conditional_stress(delta, w, u + shift, b, v)
        assert s1 == pytest.approx(s0, rel=1e-9, abs=1e-12)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 10_000))
    def test_rotation_invariance(self, seed):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(3, 9))
        delta = random_dissimilarity(rng, n)
        w = random_weights(rng, n)
        u = rng.normal(size=(n, 2))
        v = rng.normal(size=(n, 1))
        b = rng.normal(size=(1, 1))
        q_mat, _ = np.linalg.qr(rng.normal(size=(2, 2)))
        s0 = conditional_stress(delta, w, u, b, v)
        s1 = conditional_stress(delta, w, u @ q_mat, b, v)
        assert s1 == pytest.approx(s0, rel=1e-9, abs=1e-12)
