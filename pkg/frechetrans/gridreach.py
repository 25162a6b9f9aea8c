"""Hierarchical block reachability with terminals.

The padded n x n grid (n = 2^k + 1) is cut alternately along columns and rows
into canonical blocks down to 2 x 2 leaves; neighbouring children share their
splitting line. Every block keeps a succinct summary of which outputs each
input reaches (BlockInfo), so a batch of bit flips only recomputes the blocks
it touches and terminal reachability is answered by descending the tree.

Positions are 1-based (x, y) tuples with x indexing the first curve.
"""
import bisect
import collections
import logging
import math

import numpy

import frechetrans.errors
import frechetrans.frechet
import frechetrans.orthorange

LOGGER = logging.getLogger(__name__)

INF = math.inf
EMPTY = (INF, -INF)
START = (1, 1)

Block = collections.namedtuple('Block', ['level', 'x0', 'x1', 'y0', 'y1'])


def padded_side(n_rows, n_cols):
    """Smallest 2^k + 1 that is >= max(n_rows, n_cols, 3)."""
    side = 3
    while side < max(n_rows, n_cols):
        side = 2 * side - 1
    return side


def is_padded_side(n):
    """Returns True if n = 2^k + 1 for some k >= 1."""
    return n >= 3 and padded_side(n, n) == n


def pad_matrix(matrix):
    """Embed a matrix in the smallest padded square.

    Original bits are kept. Outside the original rectangle the only 1-bits
    form the staircase leaving (n_rows, n_cols) diagonally and running
    straight on to (n', n'); for square input this is the diagonal. A
    rectangular matrix always gets n' > max(n_rows, n_cols) so that the
    staircase can only be entered from (n_rows, n_cols).

    Args:
        matrix (FreeSpaceMatrix): Matrix to pad.

    Returns:
        FreeSpaceMatrix: Padded matrix, with the same monotone path answer.
    """
    n_rows, n_cols = matrix.shape
    side = padded_side(n_rows, n_cols)
    if n_rows != n_cols and side == max(n_rows, n_cols):
        side = 2 * side - 1
    if n_rows == n_cols == side:
        return matrix.copy()
    bits = numpy.zeros((side, side), dtype=bool)
    bits[:n_rows, :n_cols] = matrix.bits
    x, y = n_rows, n_cols
    while (x, y) != (side, side):
        x, y = min(x + 1, side), min(y + 1, side)
        bits[x - 1, y - 1] = True
    return frechetrans.frechet.FreeSpaceMatrix(bits)


def position_keys(position, n):
    """Order and level keys of a position.

    Args:
        position (tuple): (x, y).

        n (int): Grid side.

    Returns:
        tuple: (ind, L, L_rev) with ind = (y - x) * 2n + x, L = x + y and
        L_rev = -L.
    """
    x, y = position
    return ((y - x) * 2 * n + x, x + y, -x - y)


def position_index(position, n):
    """Returns ind(position)."""
    x, y = position
    return (y - x) * 2 * n + x


def index_position(ind, n):
    """Inverse of position_index."""
    x = (ind - 1) % (2 * n) + 1
    return (x, x + (ind - x) // (2 * n))


def level_key(position):
    """Returns L(position) = x + y."""
    return position[0] + position[1]


def contains(block, position):
    """Returns True if the position lies in the block."""
    x, y = position
    return block.x0 <= x <= block.x1 and block.y0 <= y <= block.y1


def is_leaf(block):
    """Returns True for 2 x 2 blocks."""
    return block.x1 - block.x0 == 1 and block.y1 - block.y0 == 1


def input_positions(block):
    """Inputs B-, in clockwise order (ind increasing)."""
    left = [(x, block.y0) for x in range(block.x1, block.x0, -1)]
    return left + [(block.x0, y) for y in range(block.y0, block.y1 + 1)]


def output_positions(block):
    """Outputs B+, in counter-clockwise order (ind increasing)."""
    right = [(block.x1, y) for y in range(block.y0, block.y1 + 1)]
    return right + [(x, block.y1) for x in range(block.x1 - 1,
                                                 block.x0 - 1, -1)]


def split_block(block):
    """Children (lo, hi) of a non-leaf block.

    Even levels split the columns, odd levels the rows; both children keep the
    middle line.
    """
    level = block.level + 1
    if block.level % 2 == 0:
        mid = (block.y0 + block.y1) // 2
        return (Block(level, block.x0, block.x1, block.y0, mid),
                Block(level, block.x0, block.x1, mid, block.y1))
    mid = (block.x0 + block.x1) // 2
    return (Block(level, block.x0, mid, block.y0, block.y1),
            Block(level, mid, block.x1, block.y0, block.y1))


def mid_positions(block):
    """Splitting line B_mid shared by the two children of a block."""
    lo, hi = split_block(block)
    if block.level % 2 == 0:
        return [(x, hi.y0) for x in range(block.x0, block.x1 + 1)]
    return [(hi.x0, y) for y in range(block.y0, block.y1 + 1)]


def on_mid(block, position):
    """Returns True if the position lies on the splitting line of block."""
    _, hi = split_block(block)
    if block.level % 2 == 0:
        return position[1] == hi.y0
    return position[0] == hi.x0


class BlockTree(object):
    """Canonical blocks of a padded grid, level by level.

    Attributes:
        side (int): Grid side n = 2^kappa + 1.

        kappa (int): log2(n - 1).

        levels (list): levels[l] lists the 2^l blocks of level l.

        children (dict): Block to its (lo, hi) pair, leaves excluded.
    """

    side = None
    kappa = None
    levels = None
    children = None

    def __init__(self, side):
        if not is_padded_side(side):
            raise frechetrans.errors.MatrixError(
                'grid side must be 2^k + 1 >= 3, got %r' % (side,))
        self.side = side
        self.kappa = (side - 1).bit_length() - 1
        self.children = {}
        level = [Block(0, 1, side, 1, side)]
        self.levels = [level]
        for _ in range(2 * self.kappa):
            nxt = []
            for block in level:
                pair = split_block(block)
                self.children[block] = pair
                nxt.extend(pair)
            self.levels.append(nxt)
            level = nxt

    @property
    def root(self):
        """Block: The whole grid."""
        return self.levels[0][0]

    @property
    def depth(self):
        """int: Deepest level, 2 * kappa."""
        return len(self.levels) - 1

    def __len__(self):
        return sum(len(level) for level in self.levels)

    def __iter__(self):
        for level in self.levels:
            for block in level:
                yield block

    def __str__(self):
        return 'BlockTree: side=%d, blocks=%d' % (self.side, len(self))


def build_block_tree(n):
    """Returns the BlockTree of an n x n padded grid."""
    return BlockTree(n)


class BlockInfo(object):
    """Reachability summary of one block.

    Attributes:
        block (Block): Summarized block.

        forward (dict): p in B- or a terminal -> (A, Z), the ind range of
            outputs reached from p; EMPTY when none.

        level (dict): q in B+ -> min L(p) over p in the block reaching q.

        reverse (dict): q in B+ or a terminal -> (A_rev, Z_rev), the ind
            range of inputs reaching q.

        level_rev (dict): p in B- -> min L_rev(q) over q reached from p.

        mid_index (RangeMinMaxIndex): Over free splitting-line positions j,
            value level_rev of the hi child keyed (ind(j), level of the lo
            child). None for leaves.
    """

    block = None
    forward = None
    level = None
    reverse = None
    level_rev = None
    mid_index = None

    def __init__(self, **kwargs):
        for key, val in kwargs.items():
            getattr(self, key)
            setattr(self, key, val)

    def __eq__(self, other):
        if not isinstance(other, BlockInfo):
            return NotImplemented
        return (self.block == other.block and
                self.forward == other.forward and
                self.level == other.level and
                self.reverse == other.reverse and
                self.level_rev == other.level_rev and
                self.mid_index == other.mid_index)

    def __str__(self):
        return 'BlockInfo: block=%s, forward=%d, reverse=%d' \
            % (self.block, len(self.forward), len(self.reverse))

    def __repr__(self):
        return 'BlockInfo(block=%r, forward=%r, level=%r, reverse=%r, '\
               'level_rev=%r, mid_index=%r)' \
               % (self.block, self.forward, self.level, self.reverse,
                  self.level_rev, self.mid_index)

    def mid_free(self):
        """Returns the sorted ind values of free splitting-line positions."""
        if self.mid_index is None:
            return []
        return [entry.key[0] for entry in self.mid_index.entries]


def _successors(block, position):
    x, y = position
    for step in ((x + 1, y), (x, y + 1), (x + 1, y + 1)):
        if contains(block, step):
            yield step


def traversal_reach(block, bits, source):
    """Positions q of the block with source ~> q.

    A reach traversal is a monotone step sequence whose strictly interior
    positions are free; its endpoints may be blocked.

    Args:
        block (Block): Block bounding the traversal.

        bits (numpy.ndarray): Padded matrix bits.

        source (tuple): Start position.

    Returns:
        set: Reached positions, source included.
    """
    reached = {source}
    stack = [source]
    while stack:
        position = stack.pop()
        if position != source and not bits[position[0] - 1, position[1] - 1]:
            continue
        for step in _successors(block, position):
            if step not in reached:
                reached.add(step)
                stack.append(step)
    return reached


def _interval(indices):
    if not indices:
        return EMPTY
    return (min(indices), max(indices))


def base_block_info(block, matrix, terminals):
    """Summary of a 2 x 2 leaf by direct enumeration.

    Args:
        block (Block): Leaf block.

        matrix (FreeSpaceMatrix): Padded matrix.

        terminals (iterable): Terminals inside the block.

    Returns:
        BlockInfo: The leaf summary.
    """
    n = matrix.n_rows
    cells = [(x, y) for x in (block.x0, block.x1)
             for y in (block.y0, block.y1)]
    reach = {p: traversal_reach(block, matrix.bits, p) for p in cells}
    inputs = set(input_positions(block))
    outputs = set(output_positions(block))
    terminals = set(terminals)
    forward = {}
    for p in inputs | terminals:
        forward[p] = _interval([position_index(q, n)
                                for q in reach[p] & outputs])
    level = {q: min(level_key(p) for p in cells if q in reach[p])
             for q in outputs}
    reverse = {}
    for q in outputs | terminals:
        reverse[q] = _interval([position_index(p, n)
                                for p in inputs if q in reach[p]])
    level_rev = {p: min(-level_key(q) for q in reach[p]) for p in inputs}
    return BlockInfo(block=block, forward=forward, level=level,
                     reverse=reverse, level_rev=level_rev)


def merge_block_info(block, lo, hi, matrix, terminals):
    """Summary of a block from the summaries of its children.

    Args:
        block (Block): Parent block.

        lo (BlockInfo): Child with the smaller coordinates.

        hi (BlockInfo): Child with the larger coordinates.

        matrix (FreeSpaceMatrix): Padded matrix.

        terminals (iterable): Terminals inside the block.

    Returns:
        BlockInfo: The parent summary.

    Raises:
        frechetrans.errors.MatrixError: Children do not split block.
    """
    # pylint: disable=R0914
    lo_block, hi_block = split_block(block)
    if lo.block != lo_block or hi.block != hi_block:
        raise frechetrans.errors.MatrixError(
            'children %s, %s do not split %s' % (lo.block, hi.block, block))
    n = matrix.n_rows
    bits = matrix.bits
    build = frechetrans.orthorange.build_minmax
    terminals = set(terminals)
    inputs = input_positions(block)
    outputs = output_positions(block)
    mid_free = [j for j in mid_positions(block) if bits[j[0] - 1, j[1] - 1]]
    mid_keys = {j: position_index(j, n) for j in mid_free}

    # forward intervals
    top = build([((position_index(q, n), lo.level[q]), position_index(q, n))
                 for q in outputs if contains(lo_block, q)])
    mid_a = build([((mid_keys[j], lo.level[j]), hi.forward[j][0])
                   for j in mid_free])
    mid_z = build([((mid_keys[j], lo.level[j]), hi.forward[j][1])
                   for j in mid_free])
    forward = {}
    for p in set(inputs) | terminals:
        if contains(hi_block, p):
            forward[p] = hi.forward[p]
            continue
        a, z = lo.forward[p]
        if a > z:
            forward[p] = EMPTY
            continue
        box = ((a, z), (-INF, level_key(p)))
        first = min(top.range_min(box), mid_a.range_min(box))
        last = max(top.range_max(box), mid_z.range_max(box))
        forward[p] = EMPTY if first == INF else (first, last)

    # levels of outputs
    crossing = build([((mid_keys[j], hi.level_rev[j]), lo.level[j])
                      for j in mid_free])
    level = {}
    for q in outputs:
        if contains(lo_block, q):
            level[q] = lo.level[q]
            continue
        a, z = hi.reverse[q]
        level[q] = min(hi.level[q],
                       crossing.range_min(((a, z), (-INF, -level_key(q)))))

    # reverse intervals
    bottom = build([((position_index(p, n), hi.level_rev[p]),
                     position_index(p, n))
                    for p in inputs if contains(hi_block, p)])
    mid_ra = build([((mid_keys[j], hi.level_rev[j]), lo.reverse[j][0])
                    for j in mid_free])
    mid_rz = build([((mid_keys[j], hi.level_rev[j]), lo.reverse[j][1])
                    for j in mid_free])
    reverse = {}
    for q in set(outputs) | terminals:
        if contains(lo_block, q):
            reverse[q] = lo.reverse[q]
            continue
        a, z = hi.reverse[q]
        if a > z:
            reverse[q] = EMPTY
            continue
        box = ((a, z), (-INF, -level_key(q)))
        first = min(bottom.range_min(box), mid_ra.range_min(box))
        last = max(bottom.range_max(box), mid_rz.range_max(box))
        reverse[q] = EMPTY if first == INF else (first, last)

    # reverse levels of inputs
    mid_index = build([((mid_keys[j], lo.level[j]), hi.level_rev[j])
                       for j in mid_free])
    level_rev = {}
    for p in inputs:
        if contains(hi_block, p):
            level_rev[p] = hi.level_rev[p]
            continue
        a, z = lo.forward[p]
        level_rev[p] = min(lo.level_rev[p],
                           mid_index.range_min(((a, z),
                                                (-INF, level_key(p)))))
    return BlockInfo(block=block, forward=forward, level=level,
                     reverse=reverse, level_rev=level_rev,
                     mid_index=mid_index)


class ReachDS(object):
    """Block summaries of a padded matrix with a terminal set.

    Attributes:
        matrix (FreeSpaceMatrix): Padded matrix, owned by the structure.

        tree (BlockTree): Canonical blocks.

        terminals (frozenset): Terminal positions, corners included.

        infos (dict): Block -> BlockInfo.

        dirty_counts (list): Blocks recomputed per level by the last
            construction or update.
    """

    matrix = None
    tree = None
    terminals = None
    infos = None
    dirty_counts = None

    def __init__(self, matrix, terminals):
        if not matrix.is_square():
            raise frechetrans.errors.MatrixError(
                'matrix must be square, got shape %s' % (matrix.shape,))
        self.tree = BlockTree(matrix.n_rows)
        self.matrix = matrix.copy()
        self.terminals = self._with_corners(terminals)
        self.infos = {}
        self._recompute({block: True for block in self.tree})

    @property
    def side(self):
        """int: Grid side."""
        return self.tree.side

    @property
    def end(self):
        """tuple: Bottom-right corner (n, n)."""
        return (self.side, self.side)

    def __str__(self):
        return 'ReachDS: side=%d, terminals=%d' \
            % (self.side, len(self.terminals))

    def _with_corners(self, terminals):
        terminals = set(terminals) | {START, self.end}
        for position in terminals:
            if not self.matrix.contains(position):
                raise frechetrans.errors.PreconditionError(
                    'terminal %s outside the %dx%d grid'
                    % (position, self.side, self.side))
        return frozenset(terminals)

    def block_terminals(self, block):
        """Returns the terminals inside block."""
        return {t for t in self.terminals if contains(block, t)}

    def _recompute(self, dirty):
        """Recompute the summaries of dirty blocks, deepest level first."""
        counts = []
        for level in reversed(self.tree.levels):
            count = 0
            for block in level:
                if block not in dirty:
                    continue
                count += 1
                terminals = self.block_terminals(block)
                if is_leaf(block):
                    info = base_block_info(block, self.matrix, terminals)
                else:
                    lo, hi = self.tree.children[block]
                    info = merge_block_info(block, self.infos[lo],
                                            self.infos[hi], self.matrix,
                                            terminals)
                self.infos[block] = info
            counts.append(count)
        self.dirty_counts = counts[::-1]

    def dirty_blocks(self, positions):
        """Blocks intersecting a position set, found top-down."""
        dirty = {}
        frontier = [(self.tree.root, list(positions))]
        while frontier:
            block, inside = frontier.pop()
            inside = [p for p in inside if contains(block, p)]
            if not inside:
                continue
            dirty[block] = True
            if not is_leaf(block):
                for child in self.tree.children[block]:
                    frontier.append((child, inside))
        return dirty

    def update(self, delta, terminals):
        """Apply bit changes and switch to a new terminal set.

        Args:
            delta (iterable): (position, bit) pairs.

            terminals (iterable): New terminal set.
        """
        delta = list(delta)
        for position, _ in delta:
            if not self.matrix.contains(position):
                raise frechetrans.errors.PreconditionError(
                    'update %s outside the grid' % (position,))
        terminals = self._with_corners(terminals)
        touched = {p for p, _ in delta} | self.terminals | terminals
        for (x, y), bit in delta:
            self.matrix.bits[x - 1, y - 1] = bool(bit)
        self.terminals = terminals
        self._recompute(self.dirty_blocks(touched))
        LOGGER.debug('update: %d bit changes, %d terminals, %d dirty blocks',
                     len(delta), len(terminals), sum(self.dirty_counts))

    def info(self, block):
        """Returns the BlockInfo of block."""
        return self.infos[block]


def construct_ds(matrix, terminals):
    """Build the structure for a padded matrix.

    Args:
        matrix (FreeSpaceMatrix): Padded square matrix.

        terminals (iterable): Terminal positions; (1, 1) and (n, n) are
            always added.

    Returns:
        ReachDS: The structure.
    """
    return ReachDS(matrix, terminals)


def update_ds(ds, delta, terminals):
    """Update a structure in place and return it.

    Only blocks meeting the changed positions or the old or new terminals are
    recomputed; every other BlockInfo object is kept as is.

    Args:
        ds (ReachDS): Structure to update.

        delta (iterable): (position, bit) changes.

        terminals (iterable): New terminal set.

    Returns:
        ReachDS: ds.
    """
    ds.update(delta, terminals)
    return ds


def _leaf_reach(ds, block, sources, free):
    reached = set(sources)
    stack = list(sources)
    while stack:
        position = stack.pop()
        out = traversal_reach(block, ds.matrix.bits, position)
        for target in free - reached:
            if target in out:
                reached.add(target)
                stack.append(target)
    return reached


def _reach(ds, block, sources, free):
    if not free or not sources:
        return set()
    if is_leaf(block):
        return _leaf_reach(ds, block, sources, free)
    lo, hi = ds.tree.children[block]
    reached_lo = _reach(ds, lo, {s for s in sources if contains(lo, s)},
                        {f for f in free if contains(lo, f)})
    crossed = _single_step_reach(
        ds, block, {r for r in reached_lo if not on_mid(block, r)},
        {f for f in free if not contains(lo, f)})
    seeds = {s for s in sources if contains(hi, s)} | crossed | \
        {r for r in reached_lo if on_mid(block, r)}
    reached_hi = _reach(ds, hi, seeds, {f for f in free if contains(hi, f)})
    return reached_lo | reached_hi


def reach(ds, block, sources, free):
    """Terminals of free reachable from sources by hopping over free
    terminals with reach traversals inside block.

    Args:
        ds (ReachDS): Structure.

        block (Block): Canonical block.

        sources (set): Start terminals, a subset of free.

        free (set): Usable terminals inside block.

    Returns:
        set: Reached terminals, sources included.

    Raises:
        frechetrans.errors.PreconditionError: Sources not in free, or free
            not made of terminals of block.
    """
    sources, free = set(sources), set(free)
    if not sources <= free:
        raise frechetrans.errors.PreconditionError('sources not in free set')
    if not free <= ds.block_terminals(block):
        raise frechetrans.errors.PreconditionError(
            'free set has non-terminals of %s' % (block,))
    return _reach(ds, block, sources, free)


def _single_step_reach(ds, block, sources, targets):
    # pylint: disable=R0914
    if not sources or not targets:
        return set()
    info = ds.infos[block]
    mid = info.mid_free()
    if not mid:
        return set()
    lo, hi = ds.tree.children[block]
    lo_info, hi_info = ds.infos[lo], ds.infos[hi]
    n = ds.side
    cuts = {0, len(mid)}
    for a, z in [lo_info.forward[s] for s in sources] + \
            [hi_info.reverse[t] for t in targets]:
        if a > z:
            continue
        for bound in (a, z):
            cuts.add(bisect.bisect_left(mid, bound))
            cuts.add(bisect.bisect_right(mid, bound))
    cuts = sorted(cuts)
    covering = frechetrans.orthorange.build_minmax(
        [(lo_info.forward[s], level_key(s)) for s in sources
         if lo_info.forward[s] != EMPTY])
    reporter = frechetrans.orthorange.DecrementalReporter(
        [(hi_info.reverse[t] + (-level_key(t),), position_index(t, n))
         for t in targets if hi_info.reverse[t] != EMPTY])
    reached = set()
    for start, stop in zip(cuts, cuts[1:]):
        if start >= stop or not reporter:
            continue
        first, last = mid[start], mid[stop - 1]
        best = covering.range_max(((-INF, first), (last, INF)))
        if best == -INF:
            continue
        lowest = info.mid_index.range_min(((first, last), (-INF, best)))
        if lowest == INF:
            continue
        found = reporter.report_and_delete(
            ((-INF, first), (last, INF), (lowest, INF)))
        reached.update(index_position(ind, n) for ind in found)
    return reached


def single_step_reach(ds, block, sources, targets):
    """Targets reached from sources by one traversal crossing the splitting
    line of block.

    Args:
        ds (ReachDS): Structure.

        block (Block): Non-leaf canonical block.

        sources (set): Terminals of the lo child off the splitting line.

        targets (set): Terminals of the hi child off the splitting line.

    Returns:
        set: Targets t with s ~> t for some source s.

    Raises:
        frechetrans.errors.PreconditionError: Misplaced sources or targets.
    """
    if is_leaf(block):
        raise frechetrans.errors.PreconditionError('leaf block has no split')
    lo, hi = ds.tree.children[block]
    terminals = ds.block_terminals(block)
    sources, targets = set(sources), set(targets)
    if not sources <= terminals or not targets <= terminals:
        raise frechetrans.errors.PreconditionError('non-terminal argument')
    if any(not contains(lo, s) or on_mid(block, s) for s in sources):
        raise frechetrans.errors.PreconditionError(
            'sources must lie in the lo child off the splitting line')
    if any(not contains(hi, t) or on_mid(block, t) for t in targets):
        raise frechetrans.errors.PreconditionError(
            'targets must lie in the hi child off the splitting line')
    return _single_step_reach(ds, block, sources, targets)


def reach_query(ds, free):
    """Decide whether a monotone path joins (1, 1) and (n, n) using only
    1-bits and the terminals of free.

    Args:
        ds (ReachDS): Structure.

        free (iterable): Terminals treated as free.

    Returns:
        bool: True if the path exists.

    Raises:
        frechetrans.errors.PreconditionError: free has non-terminals.
    """
    free = set(free)
    if not free <= ds.terminals:
        raise frechetrans.errors.PreconditionError(
            'free set has non-terminals: %s' % (sorted(free - ds.terminals),))
    for corner in (START, ds.end):
        if corner not in free and not ds.matrix.bit(corner):
            return False
    free |= {START, ds.end}
    return ds.end in _reach(ds, ds.tree.root, {START}, free)
