"""Timing harness comparing chunked offline reachability with recompute."""
import csv
import hashlib
import logging
import math
import time

import numpy

import frechetrans.errors
import frechetrans.frechet
import frechetrans.gridreach
import frechetrans.offline
import frechetrans.result
import frechetrans.settings

LOGGER = logging.getLogger(__name__)

DENSITY = 0.6

TRUNCATED = 'TRUNCATED'


def random_instance(n, count, seed):
    """Random n x n matrix and count random updates.

    Args:
        n (int): Matrix side.

        count (int): Number of updates.

        seed (int): Generator seed.

    Returns:
        tuple: (FreeSpaceMatrix, list of UpdateOp).
    """
    rng = numpy.random.default_rng(seed)
    matrix = frechetrans.frechet.FreeSpaceMatrix(rng.random((n, n)) < DENSITY)
    xs = rng.integers(1, n + 1, size=count)
    ys = rng.integers(1, n + 1, size=count)
    bits = rng.random(count) < DENSITY
    updates = [frechetrans.offline.UpdateOp((int(x), int(y)), int(b))
               for x, y, b in zip(xs, ys, bits)]
    return matrix, updates


def checksum(answers):
    """Returns a short digest of an answer sequence."""
    text = ''.join('1' if a else '0' for a in answers)
    return hashlib.sha256(text.encode('ascii')).hexdigest()[:16]


def sweep_sizes(n):
    """Chunk sizes 1, ceil(sqrt n), ceil(n^(2/3)) and n, deduplicated."""
    sizes = [1, int(math.ceil(math.sqrt(n))),
             frechetrans.offline.default_chunk_size(n), n]
    return sorted(set(sizes))


def _timed(algo, n, updates, k, run):
    start = time.perf_counter_ns()
    answers = run()
    elapsed = time.perf_counter_ns() - start
    record = frechetrans.result.BenchRecord(
        algo=algo, n=n, updates=updates, k=k, time_ns=elapsed,
        checksum=checksum(answers))
    LOGGER.info('%s', record)
    return record


def _runs(n, count, seed, sweep_k):
    matrix, updates = random_instance(n, count, seed)
    if sweep_k:
        sizes = sweep_sizes(n)
    else:
        sizes = [frechetrans.offline.ChunkConfig.for_side(
            frechetrans.gridreach.padded_side(n, n)).k]
    for k in sizes:
        cfg = frechetrans.offline.ChunkConfig(k)
        yield 'chunked', k, lambda cfg=cfg: \
            frechetrans.offline.offline_grid_reachability(matrix, updates, cfg)
    yield 'naive', None, lambda: \
        frechetrans.offline.offline_bruteforce(matrix, updates)


def bench_offline(ns, counts, seeds, out=None, sweep_k=False, budget=None):
    """Time both offline algorithms on random instances.

    Args:
        ns (iterable): Matrix sides.

        counts (iterable): Update counts; 0 stands for n^2.

        seeds (iterable): Generator seeds.

    Kwargs:
        out (file): CSV destination, rows written as they complete.

        sweep_k (bool): Run the chunked algorithm for every sweep_sizes k
            instead of the configured chunk size.

        budget (float): Seconds before the remaining runs are dropped;
            defaults to settings.BENCH_BUDGET.

    Returns:
        list: BenchRecord objects.

    Raises:
        frechetrans.errors.BudgetExceeded: Time ran out; a marker row closes
            the CSV and the exception carries the finished records.
    """
    budget = frechetrans.settings.BENCH_BUDGET if budget is None else budget
    writer = None
    if out is not None:
        writer = csv.DictWriter(out, fieldnames=frechetrans.result.BenchRecord
                                .FIELDS)
        writer.writeheader()
    records = []
    start = time.perf_counter()
    for n in ns:
        for count in counts:
            count = count or n * n
            for seed in seeds:
                for algo, k, run in _runs(n, count, seed, sweep_k):
                    if time.perf_counter() - start > budget:
                        if writer is not None:
                            writer.writerow({'algo': TRUNCATED})
                        raise frechetrans.errors.BudgetExceeded(
                            'bench budget of %rs exhausted after %d runs'
                            % (budget, len(records)), records)
                    record = _timed(algo, n, count, k, run)
                    records.append(record)
                    if writer is not None:
                        writer.writerow(record.to_row())
    return records
