"""Discrete Frechet distance tests."""
import tests.helper

import frechetrans.errors
import frechetrans.frechet
import frechetrans.geometry


def curve(points):
    """Shortcut for Curve."""
    return frechetrans.geometry.Curve(points)


class FreeSpaceMatrixTests(tests.helper.Tests):
    """FreeSpaceMatrix tests."""

    def test_matrix(self):
        """Shape, bits and equality."""
        matrix = frechetrans.frechet.FreeSpaceMatrix([[1, 0, 1], [0, 1, 1]])
        self.assertEqual(matrix.shape, (2, 3))
        self.assertEqual(matrix.n_rows, 2)
        self.assertEqual(matrix.n_cols, 3)
        self.assertFalse(matrix.is_square())
        self.assertEqual(matrix.bit((1, 1)), 1)
        self.assertEqual(matrix.bit((2, 1)), 0)
        self.assertTrue(matrix.contains((2, 3)))
        self.assertFalse(matrix.contains((3, 1)))
        self.assertFalse(matrix.contains((0, 1)))
        copy = matrix.copy()
        self.assertEqual(copy, matrix)
        copy.bits[0, 0] = False
        self.assertNotEqual(copy, matrix)
        self.assertEqual(str(matrix), 'FreeSpaceMatrix: shape=(2, 3), ones=4')
        self.assertEqual(frechetrans.frechet.FreeSpaceMatrix.zeros(2),
                         frechetrans.frechet.FreeSpaceMatrix([[0, 0], [0, 0]]))
        self.assertEqual(frechetrans.frechet.FreeSpaceMatrix.ones(1, 2),
                         frechetrans.frechet.FreeSpaceMatrix([[1, 1]]))

    def test_matrix_invalid(self):
        """Empty or one-dimensional bits are rejected."""
        self.assertRaises(frechetrans.errors.MatrixError,
                          frechetrans.frechet.FreeSpaceMatrix, [1, 0])
        self.assertRaises(frechetrans.errors.MatrixError,
                          frechetrans.frechet.FreeSpaceMatrix, [[]])


class FreeSpaceTests(tests.helper.Tests):
    """free_space_matrix tests."""

    def test_free_space_matrix(self):
        """Closed disks decide the bits."""
        free_space = frechetrans.frechet.free_space_matrix
        self.assertEqual(free_space(curve([(0, 0)]), curve([(0, 0)]), 0).bits
                         .tolist(), [[True]])
        self.assertEqual(free_space(curve([(0, 0), (2, 0)]), curve([(0, 0)]),
                                    1).bits.tolist(), [[True], [False]])
        self.assertEqual(free_space(curve([(0, 0), (2, 0)]), curve([(1, 0)]),
                                    1).bits.tolist(), [[True], [True]])

    def test_negative_delta(self):
        """Negative thresholds are rejected."""
        self.assertRaises(frechetrans.errors.PreconditionError,
                          frechetrans.frechet.free_space_matrix,
                          curve([(0, 0)]), curve([(0, 0)]), -1)


class MonotonePathTests(tests.helper.Tests):
    """monotone_path_exists tests."""

    def test_examples(self):
        """Small hand-checked matrices."""
        exists = frechetrans.frechet.monotone_path_exists
        matrix = frechetrans.frechet.FreeSpaceMatrix
        self.assertTrue(exists(matrix.ones(3)))
        self.assertFalse(exists(matrix.zeros(3)))
        self.assertTrue(exists(matrix([[1, 0], [0, 1]])))
        self.assertFalse(exists(matrix([[1, 1], [1, 0]])))
        self.assertTrue(exists(matrix([[1, 1, 1, 0], [0, 0, 1, 1]])))
        self.assertFalse(exists(matrix([[1, 0, 1], [0, 0, 1]])))
        self.assertTrue(exists(matrix([[1]])))

    def test_horizontal_runs(self):
        """Horizontal moves stop at zeros."""
        exists = frechetrans.frechet.monotone_path_exists
        matrix = frechetrans.frechet.FreeSpaceMatrix
        self.assertFalse(exists(matrix([[1, 0, 1, 1], [0, 0, 0, 1]])))
        self.assertTrue(exists(matrix([[1, 1, 0, 0], [0, 1, 1, 1]])))

    def test_against_oracle(self):
        """Agreement with a plain dynamic program."""
        for _ in range(300):
            n_rows = self.rng.randint(1, 7)
            n_cols = self.rng.randint(1, 7)
            bits = self.random_bits(n_rows, n_cols, density=0.7)
            self.assertEqual(
                frechetrans.frechet.monotone_path_exists(
                    frechetrans.frechet.FreeSpaceMatrix(bits)),
                tests.helper.overlay_path(bits))


class FrechetValueTests(tests.helper.Tests):
    """frechet_value tests."""

    def test_examples(self):
        """Hand-checked distances."""
        value = frechetrans.frechet.frechet_value
        pi = curve([(0, 0), (1, 2), (3, 1)])
        self.assertEqual(value(pi, pi), 0.0)
        self.assertEqual(value(curve([(0, 0)]), curve([(3, 4)])), 5.0)
        self.assertEqual(value(curve([(0, 0), (2, 0)]),
                               curve([(0, 1), (2, 1)])), 1.0)

    def test_decision_agrees(self):
        """The value is the threshold of the decision."""
        for _ in range(100):
            pi = curve(self.random_curve_coords(self.rng.randint(1, 6)))
            sigma = curve(self.random_curve_coords(self.rng.randint(1, 6)))
            value = frechetrans.frechet.frechet_value(pi, sigma)
            delta = self.rng.uniform(0, 10)
            matrix = frechetrans.frechet.free_space_matrix(pi, sigma, delta)
            if abs(delta - value) > 1e-6:
                self.assertEqual(
                    frechetrans.frechet.monotone_path_exists(matrix),
                    value <= delta)
            self.assertTrue(frechetrans.frechet.monotone_path_exists(
                frechetrans.frechet.free_space_matrix(pi, sigma, value)))

    def test_symmetry_and_translation(self):
        """Symmetric, and invariant under a common translation."""
        for _ in range(50):
            pi = curve(self.random_curve_coords(self.rng.randint(1, 5)))
            sigma = curve(self.random_curve_coords(self.rng.randint(1, 5)))
            t = frechetrans.geometry.Point(self.random_curve_coords(1)[0])
            value = frechetrans.frechet.frechet_value(pi, sigma)
            self.assertAlmostEqual(
                frechetrans.frechet.frechet_value(sigma, pi), value,
                delta=1e-9)
            self.assertAlmostEqual(
                frechetrans.frechet.frechet_value(
                    frechetrans.geometry.translate_curve(pi, t),
                    frechetrans.geometry.translate_curve(sigma, t)),
                value, delta=1e-9)
