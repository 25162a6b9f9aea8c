"""Offline dynamic grid reachability by chunked batching."""
import collections
import logging
import math

import frechetrans.errors
import frechetrans.frechet
import frechetrans.gridreach
import frechetrans.settings

LOGGER = logging.getLogger(__name__)

UpdateOp = collections.namedtuple('UpdateOp', ['position', 'bit'])


def default_chunk_size(n):
    """Returns max(1, ceil(n^(2/3)))."""
    return max(1, int(math.ceil(n ** (2.0 / 3.0) - 1e-9)))


class ChunkConfig(object):
    """Batching parameters.

    Attributes:
        k (int): Updates per chunk, >= 1.
    """

    k = None

    def __init__(self, k):
        if k < 1:
            raise frechetrans.errors.PreconditionError(
                'chunk size must be >= 1, got %r' % (k,))
        self.k = k

    def __str__(self):
        return 'ChunkConfig: k=%d' % (self.k,)

    def __repr__(self):
        return 'ChunkConfig(k=%r)' % (self.k,)

    @classmethod
    def for_side(cls, n):
        """Configured chunk size, or the default for an n x n grid."""
        return cls(frechetrans.settings.CHUNK_SIZE or default_chunk_size(n))


def parse_updates(matrix, updates):
    """Validate updates against a matrix.

    Args:
        matrix (FreeSpaceMatrix): Matrix the updates apply to.

        updates (iterable): (position, bit) pairs.

    Returns:
        list: UpdateOp objects.

    Raises:
        frechetrans.errors.PreconditionError: Position outside the matrix or
            bit not in {0, 1}.
    """
    ops = []
    for position, bit in updates:
        position = (int(position[0]), int(position[1]))
        if not matrix.contains(position):
            raise frechetrans.errors.PreconditionError(
                'update %s outside the %dx%d matrix'
                % (position, matrix.n_rows, matrix.n_cols))
        if bit not in (0, 1):
            raise frechetrans.errors.PreconditionError(
                'update bit must be 0 or 1, got %r' % (bit,))
        ops.append(UpdateOp(position, int(bit)))
    return ops


def _chunks(ops, k):
    """Yield (chunk, real) with the last chunk padded to k by repeating its
    final update; only the first real updates of a chunk are answered."""
    for start in range(0, len(ops), k):
        chunk = ops[start:start + k]
        real = len(chunk)
        chunk = chunk + [chunk[-1]] * (k - real)
        yield chunk, real


def iter_offline_answers(matrix, updates, cfg=None):
    """Yield, for every prefix of the updates, whether a monotone 1-path
    exists in the updated matrix.

    Each chunk of k updates is answered against one structure whose
    terminals are the chunk's positions, zeroed in its base matrix; the free
    terminals then track the current bits.

    Args:
        matrix (FreeSpaceMatrix): Initial matrix, any shape.

        updates (iterable): (position, bit) pairs.

    Kwargs:
        cfg (ChunkConfig): Batching; defaults to ChunkConfig.for_side.

    Yields:
        bool: Answer after each update.
    """
    ops = parse_updates(matrix, updates)
    if not ops:
        return
    padded = frechetrans.gridreach.pad_matrix(matrix)
    if cfg is None:
        cfg = ChunkConfig.for_side(padded.n_rows)
    LOGGER.debug('offline: side=%d, updates=%d, k=%d, chunks=%d',
                 padded.n_rows, len(ops), cfg.k,
                 int(math.ceil(len(ops) / float(cfg.k))))
    current = padded.bits.copy()
    ds = None
    for chunk, real in _chunks(ops, cfg.k):
        terminals = {op.position for op in chunk}
        base = current.copy()
        for x, y in terminals:
            base[x - 1, y - 1] = False
        if ds is None:
            ds = frechetrans.gridreach.construct_ds(
                frechetrans.frechet.FreeSpaceMatrix(base), terminals)
        else:
            changed = zip(*(ds.matrix.bits != base).nonzero())
            delta = [((int(x) + 1, int(y) + 1), int(base[x, y]))
                     for x, y in changed]
            frechetrans.gridreach.update_ds(ds, delta, terminals)
        free = {t for t in terminals if current[t[0] - 1, t[1] - 1]}
        for op in chunk[:real]:
            x, y = op.position
            current[x - 1, y - 1] = bool(op.bit)
            if op.bit:
                free.add(op.position)
            else:
                free.discard(op.position)
            yield frechetrans.gridreach.reach_query(ds, free)


def offline_grid_reachability(matrix, updates, cfg=None):
    """Answers for every prefix of the updates.

    Args:
        matrix (FreeSpaceMatrix): Initial matrix.

        updates (iterable): (position, bit) pairs.

    Kwargs:
        cfg (ChunkConfig): Batching.

    Returns:
        list: One bool per update.
    """
    return list(iter_offline_answers(matrix, updates, cfg))


def offline_bruteforce(matrix, updates):
    """Same answers as offline_grid_reachability, recomputing the monotone
    path after every update."""
    ops = parse_updates(matrix, updates)
    current = matrix.copy()
    answers = []
    for op in ops:
        x, y = op.position
        current.bits[x - 1, y - 1] = bool(op.bit)
        answers.append(frechetrans.frechet.monotone_path_exists(current))
    return answers
