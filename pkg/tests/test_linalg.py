import numpy as np
import pytest

from GraphEnsembleEmbed.tensor import economy_svd, orthonormal_polar, solve_right_pinv


class TestEconomySvd:
    @pytest.mark.parametrize("shape", [(7, 3), (3, 7), (5, 5), (1, 4)])
    def test_reconstruction_and_shapes(self, shape):
        a = np.random.default_rng(0).standard_normal(shape)
        p, sigma, z = economy_svd(a)
        r = min(shape)
        assert p.shape == (shape[0], r) and z.shape == (shape[1], r) and sigma.shape == (r,)
        np.testing.assert_allclose((p * sigma) @ z.T, a, atol=1e-12)
        np.testing.assert_allclose(p.T @ p, np.eye(r), atol=1e-12)
        np.testing.assert_allclose(z.T @ z, np.eye(r), atol=1e-12)
        assert np.all(np.diff(sigma) <= 0) and np.all(sigma >= 0)

    def test_identity(self):
        p, sigma, z = economy_svd(np.eye(3))
        np.testing.assert_allclose(sigma, [1.0, 1.0, 1.0], atol=1e-12)
        np.testing.assert_allclose((p * sigma) @ z.T, np.eye(3), atol=1e-12)

    def test_diagonal_matrix(self):
        p, sigma, z = economy_svd(np.diag([3.0, 2.0, 1.0]))
        np.testing.assert_allclose(sigma, [3.0, 2.0, 1.0], atol=1e-12)
        np.testing.assert_allclose(np.abs(p), np.eye(3), atol=1e-12)
        np.testing.assert_allclose(np.abs(z), np.eye(3), atol=1e-12)

    def test_random_tall_matrix(self):
        a = np.random.default_rng(4).standard_normal((20, 7))
        p, sigma, z = economy_svd(a)
        assert np.linalg.norm((p * sigma) @ z.T - a) < 1e-8 * np.linalg.norm(a)
        assert np.linalg.norm(p.T @ p - np.eye(7)) < 1e-8
        assert np.linalg.norm(z.T @ z - np.eye(7)) < 1e-8

    def test_zero_matrix(self):
        _, sigma, _ = economy_svd(np.zeros((4, 2)))
        np.testing.assert_array_equal(sigma, 0.0)

    def test_non_finite(self):
        with pytest.raises(ValueError):
            economy_svd(np.array([[1.0, np.inf]]))


class TestKernels:
    def test_polar_of_orthonormal_is_identity_map(self):
        q, _ = np.linalg.qr(np.random.default_rng(1).standard_normal((6, 3)))
        np.testing.assert_allclose(orthonormal_polar(q), q, atol=1e-12)

    def test_polar_is_column_orthonormal(self):
        out = orthonormal_polar(np.random.default_rng(2).standard_normal((9, 4)))
        np.testing.assert_allclose(out.T @ out, np.eye(4), atol=1e-12)

    def test_right_pinv_solves_regular_system(self):
        rng = np.random.default_rng(3)
        a = rng.standard_normal((4, 4))
        gram = a @ a.T + np.eye(4)
        b = rng.standard_normal((5, 4))
        np.testing.assert_allclose(solve_right_pinv(b, gram) @ gram, b, atol=1e-10)

    def test_right_pinv_singular_gram(self):
        gram = np.diag([2.0, 0.0])
        np.testing.assert_allclose(solve_right_pinv(np.array([[4.0, 1.0]]), gram), [[2.0, 0.0]])
