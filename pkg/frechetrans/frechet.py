"""Discrete Frechet distance: free-space matrix, decision and value."""
import numpy
from scipy.spatial.distance import cdist

import frechetrans.errors
import frechetrans.settings


class FreeSpaceMatrix(object):
    """Bit matrix of free positions.

    Positions are 1-based (x, y) pairs, x indexing the rows (first curve) and
    y the columns (second curve).

    Attributes:
        bits (numpy.ndarray): n_rows x n_cols boolean array.
    """

    bits = None

    def __init__(self, bits):
        array = numpy.array(bits, dtype=bool)
        if array.ndim != 2 or 0 in array.shape:
            raise frechetrans.errors.MatrixError(
                'matrix must be 2-dimensional and nonempty, got shape %s'
                % (array.shape,))
        self.bits = array

    @classmethod
    def zeros(cls, n_rows, n_cols=None):
        """All-zeros matrix, square unless n_cols is given."""
        if n_cols is None:
            n_cols = n_rows
        return cls(numpy.zeros((n_rows, n_cols), dtype=bool))

    @classmethod
    def ones(cls, n_rows, n_cols=None):
        """All-ones matrix, square unless n_cols is given."""
        if n_cols is None:
            n_cols = n_rows
        return cls(numpy.ones((n_rows, n_cols), dtype=bool))

    @property
    def n_rows(self):
        """int: Number of rows."""
        return self.bits.shape[0]

    @property
    def n_cols(self):
        """int: Number of columns."""
        return self.bits.shape[1]

    @property
    def shape(self):
        """tuple: (n_rows, n_cols)."""
        return self.bits.shape

    def is_square(self):
        """Returns True for n x n matrices."""
        return self.n_rows == self.n_cols

    def bit(self, position):
        """Returns the bit at a 1-based (x, y) position as 0 or 1."""
        x, y = position
        return int(self.bits[x - 1, y - 1])

    def contains(self, position):
        """Returns True if the 1-based position lies in the matrix."""
        x, y = position
        return 1 <= x <= self.n_rows and 1 <= y <= self.n_cols

    def copy(self):
        """Returns an independent copy."""
        return FreeSpaceMatrix(self.bits.copy())

    def __eq__(self, other):
        if not isinstance(other, FreeSpaceMatrix):
            return NotImplemented
        return self.shape == other.shape and \
            bool(numpy.array_equal(self.bits, other.bits))

    def __str__(self):
        return 'FreeSpaceMatrix: shape=%s, ones=%d' \
            % (self.shape, int(self.bits.sum()))

    def __repr__(self):
        return 'FreeSpaceMatrix(bits=%r)' % (self.bits.astype(int).tolist(),)


def _tolerance(tol):
    return frechetrans.settings.TOLERANCE if tol is None else tol


def free_space_matrix(pi, sigma, delta, tol=None):
    """Free-space matrix of two curves.

    Args:
        pi (Curve): Row curve.

        sigma (Curve): Column curve.

        delta (float): Distance threshold, >= 0.

    Kwargs:
        tol (float): Absolute tolerance on squared distances.

    Returns:
        FreeSpaceMatrix: bit (i, j) is 1 iff |pi_i - sigma_j| <= delta.

    Raises:
        frechetrans.errors.PreconditionError: Negative delta.
    """
    if delta < 0:
        raise frechetrans.errors.PreconditionError(
            'negative delta: %r' % (delta,))
    squared = cdist(pi.array, sigma.array, 'sqeuclidean')
    return FreeSpaceMatrix(squared <= delta * delta + _tolerance(tol))


def _reachable_rows(bits):
    """Yield, row by row, the cells reachable from (1, 1) by monotone steps
    over 1-entries."""
    n_cols = bits.shape[1]
    columns = numpy.arange(n_cols)
    reach = numpy.logical_and.accumulate(bits[0])
    yield reach
    for row in bits[1:]:
        seed = reach.copy()
        seed[1:] |= reach[:-1]
        seed &= row
        # horizontal moves stay inside a run of ones
        run = numpy.cumsum(~row)
        last_seed = numpy.maximum.accumulate(numpy.where(seed, columns, -1))
        reach = row & (last_seed >= 0) & \
            (run[numpy.maximum(last_seed, 0)] == run)
        yield reach


def monotone_path_exists(matrix):
    """Decide whether a monotone 1-path joins (1, 1) and (n_rows, n_cols).

    Steps are (+1, 0), (0, +1) and (+1, +1); both endpoints must be free.

    Args:
        matrix (FreeSpaceMatrix): Matrix to search.

    Returns:
        bool: True if the path exists.
    """
    reach = None
    for reach in _reachable_rows(matrix.bits):
        if not reach.any():
            return False
    return bool(reach[-1])


def frechet_value(pi, sigma):
    """Discrete Frechet distance by the min-max recurrence.

    Args:
        pi (Curve): First curve.

        sigma (Curve): Second curve.

    Returns:
        float: The distance.
    """
    dist = cdist(pi.array, sigma.array)
    n_rows, n_cols = dist.shape
    best = numpy.empty_like(dist)
    best[0, 0] = dist[0, 0]
    for j in range(1, n_cols):
        best[0, j] = max(best[0, j - 1], dist[0, j])
    for i in range(1, n_rows):
        best[i, 0] = max(best[i - 1, 0], dist[i, 0])
        for j in range(1, n_cols):
            best[i, j] = max(dist[i, j], min(best[i - 1, j], best[i, j - 1],
                                             best[i - 1, j - 1]))
    return float(best[-1, -1])
