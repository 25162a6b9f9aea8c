"""Helpers for unit tests."""
import os
import random
import unittest

import numpy

import frechetrans.settings

SLOW = os.environ.get('FRECHET_SLOW_TESTS') == '1'

SAVED_SETTINGS = ('TOLERANCE', 'CHUNK_SIZE', 'ENGINE', 'PRUNE',
                  'DEBUG_CHECKS', 'LOG_LEVEL', 'BENCH_BUDGET')


def scaled(fast, slow):
    """Returns the iteration count for the current test mode."""
    return slow if SLOW else fast


class Tests(unittest.TestCase):
    """Parent class for unit tests."""

    # pylint: disable=C0103
    def setUp(self):
        self.saved = {name: getattr(frechetrans.settings, name)
                      for name in SAVED_SETTINGS}
        frechetrans.settings.TOLERANCE = 1e-9
        frechetrans.settings.CHUNK_SIZE = 0
        frechetrans.settings.ENGINE = 'chunked'
        frechetrans.settings.PRUNE = True
        frechetrans.settings.DEBUG_CHECKS = True
        self.rng = random.Random(1234)

    # pylint: disable=C0103
    def tearDown(self):
        for name, value in self.saved.items():
            setattr(frechetrans.settings, name, value)

    def random_bits(self, n_rows, n_cols=None, density=0.6):
        """Random boolean matrix."""
        n_cols = n_rows if n_cols is None else n_cols
        return numpy.array([[self.rng.random() < density
                             for _ in range(n_cols)]
                            for _ in range(n_rows)], dtype=bool)

    def random_curve_coords(self, n, scale=4, grid=False):
        """Random vertex list; grid coordinates make ties likely."""
        if grid:
            return [(self.rng.randint(-scale, scale),
                     self.rng.randint(-scale, scale)) for _ in range(n)]
        return [(self.rng.uniform(-scale, scale),
                 self.rng.uniform(-scale, scale)) for _ in range(n)]


def overlay_path(bits, free=()):
    """Monotone path from (1, 1) to (n_rows, n_cols) over the 1-bits of bits
    with the positions of free added, by plain dynamic programming."""
    grid = [[bool(b) for b in row] for row in bits]
    for x, y in free:
        grid[x - 1][y - 1] = True
    n_rows, n_cols = len(grid), len(grid[0])
    ok = [[False] * n_cols for _ in range(n_rows)]
    for i in range(n_rows):
        for j in range(n_cols):
            if not grid[i][j]:
                continue
            if i == 0 and j == 0:
                ok[i][j] = True
                continue
            ok[i][j] = (i > 0 and ok[i - 1][j]) or \
                (j > 0 and ok[i][j - 1]) or \
                (i > 0 and j > 0 and ok[i - 1][j - 1])
    return ok[-1][-1]


def in_block(block, position):
    """Returns True if position lies in the (x0, x1, y0, y1) rectangle."""
    return block.x0 <= position[0] <= block.x1 and \
        block.y0 <= position[1] <= block.y1


def walk_reach(bits, block, source):
    """Positions q with source ~> q: monotone steps inside block whose
    strictly interior positions are 1-bits."""
    seen = {source}
    frontier = [source]
    while frontier:
        x, y = frontier.pop()
        if (x, y) != source and not bits[x - 1][y - 1]:
            continue
        for step in ((x + 1, y), (x, y + 1), (x + 1, y + 1)):
            if in_block(block, step) and step not in seen:
                seen.add(step)
                frontier.append(step)
    return seen


def terminal_closure(bits, block, sources, free):
    """Terminals of free reachable from sources through chains of ~> hops
    between free terminals."""
    reached = set(sources)
    frontier = list(sources)
    while frontier:
        position = frontier.pop()
        out = walk_reach(bits, block, position)
        for target in free:
            if target in out and target not in reached:
                reached.add(target)
                frontier.append(target)
    return reached


def prefix_answers(bits, updates):
    """Monotone path answers after every update, recomputed from scratch."""
    grid = numpy.array(bits, dtype=bool)
    answers = []
    for (x, y), bit in updates:
        grid[x - 1, y - 1] = bool(bit)
        answers.append(overlay_path(grid))
    return answers
