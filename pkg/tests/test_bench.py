"""Benchmark harness tests."""
import csv
import io

import tests.helper

import frechetrans.bench
import frechetrans.errors
import frechetrans.offline
import frechetrans.result


class BenchTests(tests.helper.Tests):
    """bench_offline tests."""

    def test_random_instance(self):
        """Seeded instances are reproducible."""
        matrix, updates = frechetrans.bench.random_instance(6, 20, 3)
        again = frechetrans.bench.random_instance(6, 20, 3)
        self.assertEqual(matrix, again[0])
        self.assertEqual(updates, again[1])
        self.assertEqual(matrix.shape, (6, 6))
        self.assertEqual(len(updates), 20)
        for (x, y), bit in updates:
            self.assertTrue(1 <= x <= 6 and 1 <= y <= 6)
            self.assertIn(bit, (0, 1))

    def test_checksum(self):
        """Equal answers, equal digests."""
        self.assertEqual(frechetrans.bench.checksum([True, False]),
                         frechetrans.bench.checksum([1, 0]))
        self.assertNotEqual(frechetrans.bench.checksum([True, False]),
                            frechetrans.bench.checksum([False, True]))
        self.assertEqual(len(frechetrans.bench.checksum([])), 16)

    def test_sweep_sizes(self):
        """Deduplicated and sorted."""
        self.assertEqual(frechetrans.bench.sweep_sizes(9), [1, 3, 5, 9])
        self.assertEqual(frechetrans.bench.sweep_sizes(1), [1])

    def test_bench(self):
        """Both algorithms answer alike on every instance."""
        out = io.StringIO()
        records = frechetrans.bench.bench_offline([5], [10], [0, 1], out=out,
                                                  budget=100)
        self.assertEqual([r.algo for r in records],
                         ['chunked', 'naive', 'chunked', 'naive'])
        for chunked, naive in (records[:2], records[2:]):
            self.assertEqual(chunked.checksum, naive.checksum)
            self.assertIsNone(naive.k)
            self.assertGreaterEqual(chunked.k, 1)
        self.assertEqual(records[0].n, 5)
        self.assertEqual(records[0].updates, 10)
        rows = list(csv.DictReader(io.StringIO(out.getvalue())))
        parsed = frechetrans.result.parse_bench_rows(rows)
        self.assertEqual([r.checksum for r in parsed],
                         [r.checksum for r in records])
        self.assertEqual([r.k for r in parsed], [r.k for r in records])

    def test_all_updates(self):
        """Update count 0 stands for n^2."""
        records = frechetrans.bench.bench_offline([3], [0], [0], budget=100)
        self.assertEqual([r.updates for r in records], [9, 9])

    def test_sweep_k(self):
        """One chunked run per sweep size."""
        records = frechetrans.bench.bench_offline([9], [12], [0],
                                                  sweep_k=True, budget=100)
        self.assertEqual([r.k for r in records], [1, 3, 5, 9, None])
        self.assertEqual(len(set(r.checksum for r in records)), 1)

    def test_budget(self):
        """An exhausted budget closes the CSV with a marker row."""
        out = io.StringIO()
        with self.assertRaises(frechetrans.errors.BudgetExceeded) as context:
            frechetrans.bench.bench_offline([5], [10], [0], out=out, budget=0)
        self.assertEqual(context.exception.rows, [])
        rows = list(csv.DictReader(io.StringIO(out.getvalue())))
        self.assertEqual(len(rows), 1)
        self.assertEqual(rows[0]['algo'], frechetrans.bench.TRUNCATED)
