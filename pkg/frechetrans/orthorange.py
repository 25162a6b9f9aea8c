"""Orthogonal range searching: static 2-d range min/max and 3-d decremental
range reporting."""
import bisect
import collections
import heapq
import itertools
import math

from sortedcontainers import SortedList

import frechetrans.errors

INF = math.inf

# Below this many entries a flat scan beats walking the tree.
LINEAR_SCAN_THRESHOLD = 8

KeyedEntry = collections.namedtuple('KeyedEntry', ['key', 'value'])

FULL_RANGE = (-INF, INF)


def in_box(key, box):
    """Returns True if every key coordinate lies in its closed interval."""
    return all(lo <= k <= hi for k, (lo, hi) in zip(key, box))


def _check_keys(entries, dim):
    for entry in entries:
        if len(entry.key) != dim:
            raise frechetrans.errors.PreconditionError(
                'expected %d-d key, got %r' % (dim, entry.key))


def _tree_size(count):
    size = 1
    while size < count:
        size *= 2
    return size


def _cover(size, lo, hi):
    """Yield the segment tree nodes covering leaf range [lo, hi)."""
    lo += size
    hi += size
    while lo < hi:
        if lo & 1:
            yield lo
            lo += 1
        if hi & 1:
            hi -= 1
            yield hi
        lo >>= 1
        hi >>= 1


class _Node(object):
    """Entries of one segment tree node, ordered by second key."""

    def __init__(self, pairs):
        self.ys = [y for y, _ in pairs]
        self.values = [v for _, v in pairs]
        self.prefix_min = list(itertools.accumulate(self.values, min))
        self.prefix_max = list(itertools.accumulate(self.values, max))
        self.suffix_min = list(itertools.accumulate(
            reversed(self.values), min))[::-1]
        self.suffix_max = list(itertools.accumulate(
            reversed(self.values), max))[::-1]

    def pairs(self):
        return zip(self.ys, self.values)

    def extreme(self, lo, hi, largest):
        """Min (or max) value with second key in [lo, hi], None if none."""
        if lo == -INF:
            idx = bisect.bisect_right(self.ys, hi)
            if idx == 0:
                return None
            return (self.prefix_max if largest else self.prefix_min)[idx - 1]
        if hi == INF:
            idx = bisect.bisect_left(self.ys, lo)
            if idx == len(self.ys):
                return None
            return (self.suffix_max if largest else self.suffix_min)[idx]
        start = bisect.bisect_left(self.ys, lo)
        stop = bisect.bisect_right(self.ys, hi)
        if start >= stop:
            return None
        chunk = self.values[start:stop]
        return max(chunk) if largest else min(chunk)


class RangeMinMaxIndex(object):
    """Static index answering min and max of values over 2-d boxes.

    Bounds may be infinite; finite bounds are closed. A merge-sort tree over
    the first key with prefix and suffix extrema per node answers the
    three-sided boxes used by block merges in O(log^2 m).

    Attributes:
        entries (tuple): The KeyedEntry objects, sorted by key.
    """

    entries = None

    def __init__(self, entries):
        self.entries = tuple(sorted(
            (KeyedEntry(tuple(e[0]), e[1]) for e in entries),
            key=lambda e: e.key))
        _check_keys(self.entries, 2)
        self._xs = [e.key[0] for e in self.entries]
        self._size = 0
        self._nodes = None
        if len(self.entries) > LINEAR_SCAN_THRESHOLD:
            self._build()

    def _build(self):
        self._size = _tree_size(len(self.entries))
        nodes = [None] * (2 * self._size)
        for i in range(self._size):
            if i < len(self.entries):
                entry = self.entries[i]
                nodes[self._size + i] = _Node([(entry.key[1], entry.value)])
            else:
                nodes[self._size + i] = _Node([])
        for i in range(self._size - 1, 0, -1):
            left, right = nodes[2 * i], nodes[2 * i + 1]
            merged = heapq.merge(left.pairs(), right.pairs(),
                                 key=lambda pair: pair[0])
            nodes[i] = _Node(list(merged))
        self._nodes = nodes

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        if not isinstance(other, RangeMinMaxIndex):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self):
        return 'RangeMinMaxIndex(entries=%r)' % (list(self.entries),)

    def _extreme(self, box, largest):
        (x_lo, x_hi), (y_lo, y_hi) = box
        empty = -INF if largest else INF
        if x_lo > x_hi or y_lo > y_hi:
            return empty
        lo = bisect.bisect_left(self._xs, x_lo)
        hi = bisect.bisect_right(self._xs, x_hi)
        if lo >= hi:
            return empty
        if self._nodes is None:
            values = [self.entries[i].value for i in range(lo, hi)
                      if y_lo <= self.entries[i].key[1] <= y_hi]
        else:
            values = [self._nodes[node].extreme(y_lo, y_hi, largest)
                      for node in _cover(self._size, lo, hi)]
            values = [v for v in values if v is not None]
        if not values:
            return empty
        return max(values) if largest else min(values)

    def range_min(self, box):
        """Minimum value with key in box.

        Args:
            box (sequence): Two (lo, hi) intervals.

        Returns:
            Minimum value, INF if no key lies in the box.
        """
        return self._extreme(box, largest=False)

    def range_max(self, box):
        """Maximum value with key in box, -INF if no key lies in the box."""
        return self._extreme(box, largest=True)


def build_minmax(entries):
    """Build a RangeMinMaxIndex from (key, value) pairs."""
    return RangeMinMaxIndex(entries)


def range_min(index, box):
    """Returns index.range_min(box)."""
    return index.range_min(box)


def range_max(index, box):
    """Returns index.range_max(box)."""
    return index.range_max(box)


class DecrementalReporter(object):
    """3-d range reporting over a shrinking entry set.

    A segment tree over the first key holds, per node, the live entries of its
    range in a SortedList ordered by second key. Reported entries are removed
    from every node on their leaf-to-root path and never come back.
    """

    def __init__(self, entries):
        entries = sorted((KeyedEntry(tuple(e[0]), e[1]) for e in entries),
                         key=lambda e: e.key)
        _check_keys(entries, 3)
        self._keys = [e.key for e in entries]
        self._values = [e.value for e in entries]
        self._xs = [k[0] for k in self._keys]
        self._live = len(entries)
        self._size = _tree_size(max(len(entries), 1))
        nodes = [SortedList() for _ in range(2 * self._size)]
        for i, key in enumerate(self._keys):
            nodes[self._size + i].add((key[1], i))
        for i in range(self._size - 1, 0, -1):
            nodes[i] = SortedList(
                itertools.chain(nodes[2 * i], nodes[2 * i + 1]))
        self._nodes = nodes

    def __len__(self):
        return self._live

    def live_entries(self):
        """Returns the live KeyedEntry objects."""
        return [KeyedEntry(self._keys[i], self._values[i])
                for _, i in self._nodes[1]]

    def report_and_delete(self, box):
        """Report the values of all live entries with key in box, then delete
        those entries.

        Args:
            box (sequence): Three (lo, hi) intervals, bounds may be infinite.

        Returns:
            set: Reported values.
        """
        (x_lo, x_hi), (y_lo, y_hi), (z_lo, z_hi) = box
        if x_lo > x_hi or y_lo > y_hi or z_lo > z_hi or not self._live:
            return set()
        lo = bisect.bisect_left(self._xs, x_lo)
        hi = bisect.bisect_right(self._xs, x_hi)
        minimum = None if y_lo == -INF else (y_lo,)
        maximum = None if y_hi == INF else (y_hi, INF)
        found = []
        for node in _cover(self._size, lo, hi):
            for _, i in self._nodes[node].irange(minimum, maximum):
                if z_lo <= self._keys[i][2] <= z_hi:
                    found.append(i)
        for i in found:
            item = (self._keys[i][1], i)
            node = self._size + i
            while node >= 1:
                self._nodes[node].remove(item)
                node >>= 1
        self._live -= len(found)
        return {self._values[i] for i in found}


def report_and_delete(reporter, box):
    """Returns reporter.report_and_delete(box)."""
    return reporter.report_and_delete(box)
