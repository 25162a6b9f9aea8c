"""Disk arrangement and update stream tests."""
import math

import networkx
import numpy

import tests.helper

import frechetrans.arrangement
import frechetrans.errors
import frechetrans.frechet
import frechetrans.geometry


def points(coords):
    """Shortcut for a Point list."""
    return [frechetrans.geometry.Point(c) for c in coords]


def curve(coords):
    """Shortcut for Curve."""
    return frechetrans.geometry.Curve(coords)


class MatrixAtTests(tests.helper.Tests):
    """matrix_at tests."""

    def test_examples(self):
        """Identity, exact boundary and far translations."""
        pi = curve([(0, 0), (2, 0)])
        sigma = curve([(0, 0), (0, 0)])
        origin = frechetrans.geometry.Point([0, 0])
        self.assertEqual(
            frechetrans.arrangement.matrix_at(pi, sigma, 1, origin),
            frechetrans.frechet.free_space_matrix(pi, sigma, 1))
        self.assertEqual(
            frechetrans.arrangement.matrix_at(
                pi, sigma, 1, frechetrans.geometry.Point([1, 0])),
            frechetrans.frechet.FreeSpaceMatrix.ones(2))
        self.assertEqual(
            frechetrans.arrangement.matrix_at(
                pi, sigma, 1, frechetrans.geometry.Point([10, 0])),
            frechetrans.frechet.FreeSpaceMatrix.zeros(2))

    def test_translated_curve(self):
        """Same bits as the free space of the translated curve."""
        for _ in range(50):
            pi = curve(self.random_curve_coords(self.rng.randint(1, 5)))
            sigma = curve(self.random_curve_coords(self.rng.randint(1, 5)))
            tau = frechetrans.geometry.Point(self.random_curve_coords(1)[0])
            delta = self.rng.uniform(0, 5)
            self.assertEqual(
                frechetrans.arrangement.matrix_at(pi, sigma, delta, tau),
                frechetrans.frechet.free_space_matrix(
                    pi, frechetrans.geometry.translate_curve(sigma, tau),
                    delta))

    def test_negative_delta(self):
        """Negative thresholds are rejected."""
        self.assertRaises(frechetrans.errors.PreconditionError,
                          frechetrans.arrangement.matrix_at,
                          curve([(0, 0)]), curve([(0, 0)]), -0.5,
                          frechetrans.geometry.Point([0, 0]))


class ArrangementGraphTests(tests.helper.Tests):
    """build_arrangement_graph and point_arrangement tests."""

    def test_single_disk(self):
        """An isolated disk gets one representative linked to tau0."""
        arrangement = frechetrans.arrangement.build_arrangement_graph(
            points([(0, 0)]), 1)
        self.assertEqual(arrangement.nodes, points([(-3, -3), (1, 0)]))
        self.assertEqual(arrangement.edges(), [(0, 1)])
        self.assertEqual(arrangement.edge_kind(0, 1),
                         frechetrans.arrangement.LINK)
        self.assertEqual(arrangement.tau0,
                         frechetrans.geometry.Point([-3, -3]))
        self.assertEqual(arrangement.incidence, [(), (0,)])

    def test_two_overlapping_disks(self):
        """Two intersection nodes joined by an arc."""
        arrangement = frechetrans.arrangement.build_arrangement_graph(
            points([(0, 0), (1, 0)]), 1)
        self.assertEqual(len(arrangement.nodes), 3)
        found = sorted((p.x, p.y) for p in arrangement.nodes[1:])
        self.assertAlmostEqual(found[0][0], 0.5)
        self.assertAlmostEqual(found[0][1], -math.sqrt(3) / 2)
        self.assertAlmostEqual(found[1][0], 0.5)
        self.assertAlmostEqual(found[1][1], math.sqrt(3) / 2)
        self.assertEqual(arrangement.edge_kind(1, 2),
                         frechetrans.arrangement.ARC)
        self.assertEqual(arrangement.graph.number_of_edges(), 2)
        self.assertTrue(networkx.is_connected(arrangement.graph))

    def test_two_far_disks(self):
        """Far apart disks are both linked to tau0."""
        arrangement = frechetrans.arrangement.build_arrangement_graph(
            points([(0, 0), (10, 0)]), 1)
        self.assertEqual(arrangement.nodes[1:], points([(1, 0), (11, 0)]))
        self.assertEqual(arrangement.edges(), [(0, 1), (0, 2)])
        self.assertTrue(networkx.is_connected(arrangement.graph))

    def test_invalid(self):
        """No centers or a non-positive radius are rejected."""
        build = frechetrans.arrangement.build_arrangement_graph
        self.assertRaises(frechetrans.errors.PreconditionError, build, [], 1)
        self.assertRaises(frechetrans.errors.PreconditionError, build,
                          points([(0, 0)]), 0)

    def test_random_structure(self):
        """Connected, bounded in size, nodes on their circles."""
        for _ in range(tests.helper.scaled(30, 200)):
            centers = frechetrans.geometry.difference_points(
                curve(self.random_curve_coords(self.rng.randint(1, 4))),
                curve(self.random_curve_coords(self.rng.randint(1, 4))))
            delta = self.rng.uniform(0.1, 4)
            arrangement = frechetrans.arrangement.build_arrangement_graph(
                centers, delta)
            size = len(centers)
            self.assertTrue(networkx.is_connected(arrangement.graph))
            self.assertLessEqual(len(arrangement.nodes),
                                 size * (size - 1) + size + 1)
            tau0 = arrangement.tau0
            for node, incident in zip(arrangement.nodes[1:],
                                      arrangement.incidence[1:]):
                self.assertGreaterEqual(len(incident), 1)
                for i in incident:
                    center = centers[i]
                    dist2 = (node.x - center.x) ** 2 + \
                        (node.y - center.y) ** 2
                    self.assertLessEqual(abs(dist2 - delta * delta), 1e-9)
            for center in centers:
                self.assertGreater(
                    frechetrans.geometry.euclidean_distance(tau0, center),
                    delta)

    def test_point_arrangement(self):
        """Radius 0: tau0 linked to every center."""
        arrangement = frechetrans.arrangement.point_arrangement(
            points([(0, 0), (2, 1)]))
        self.assertEqual(arrangement.nodes, points([(-1, -1), (0, 0),
                                                    (2, 1)]))
        self.assertEqual(arrangement.edges(), [(0, 1), (0, 2)])
        self.assertEqual(arrangement.radius, 0.0)
        self.assertEqual(arrangement.incidence, [(), (0,), (1,)])
        self.assertRaises(frechetrans.errors.PreconditionError,
                          frechetrans.arrangement.point_arrangement, [])

    def test_format(self):
        """Nodes then edges, one per line."""
        arrangement = frechetrans.arrangement.build_arrangement_graph(
            points([(0, 0)]), 1)
        self.assertEqual(frechetrans.arrangement.format_arrangement(
            arrangement), '-3.0 -3.0\n1.0 0.0\n0 1\n')
        self.assertEqual(str(arrangement),
                         'DiskArrangement: centers=1, radius=1, nodes=2, '
                         'edges=1')


class EulerWalkTests(tests.helper.Tests):
    """euler_walk tests."""

    def arrangement(self, nodes, edges):
        """Arrangement with a hand-made graph."""
        graph = networkx.Graph()
        graph.add_nodes_from(range(nodes))
        for u, v in edges:
            graph.add_edge(u, v, kind=frechetrans.arrangement.ARC)
        return frechetrans.arrangement.DiskArrangement(
            centers=[], radius=1.0,
            nodes=points([(i, 0) for i in range(nodes)]), graph=graph,
            incidence=[()] * nodes)

    def test_examples(self):
        """Doubled tree tours."""
        walk = frechetrans.arrangement.euler_walk
        self.assertEqual(walk(self.arrangement(2, [(0, 1)])), [0, 1, 0])
        self.assertEqual(walk(self.arrangement(3, [(0, 1), (1, 2)])),
                         [0, 1, 2, 1, 0])
        self.assertEqual(walk(self.arrangement(1, [])), [0])

    def test_disconnected(self):
        """Disconnected graphs cannot be walked."""
        self.assertRaises(frechetrans.errors.ArrangementError,
                          frechetrans.arrangement.euler_walk,
                          self.arrangement(3, [(0, 1)]))

    def test_random(self):
        """Closed walks covering every node along graph edges."""
        for _ in range(20):
            centers = frechetrans.geometry.difference_points(
                curve(self.random_curve_coords(3)),
                curve(self.random_curve_coords(3)))
            arrangement = frechetrans.arrangement.build_arrangement_graph(
                centers, self.rng.uniform(0.5, 3))
            walk = frechetrans.arrangement.euler_walk(arrangement)
            self.assertEqual(walk[0], frechetrans.arrangement.TAU0)
            self.assertEqual(walk[-1], frechetrans.arrangement.TAU0)
            self.assertEqual(set(walk), set(range(len(arrangement.nodes))))
            self.assertLessEqual(len(walk), 2 * len(arrangement.nodes))
            for u, v in zip(walk, walk[1:]):
                self.assertTrue(arrangement.graph.has_edge(u, v))


class UpdateSequenceTests(tests.helper.Tests):
    """update_sequence tests."""

    def stream(self, pi, sigma, delta, fast=None, centers=None):
        """Arrangement, walk and update stream of a curve pair."""
        if centers is None:
            centers = frechetrans.geometry.difference_points(pi, sigma)
        arrangement = frechetrans.arrangement.build_arrangement_graph(
            centers, delta)
        walk = frechetrans.arrangement.euler_walk(arrangement)
        return (arrangement, walk) + frechetrans.arrangement.update_sequence(
            pi, sigma, delta, arrangement, walk, fast=fast)

    def test_single_disk(self):
        """One disk: switch the bit on, then off again."""
        _, walk, m0, updates, checkpoints = self.stream(
            curve([(0, 0)]), curve([(0, 0)]), 1)
        self.assertEqual(walk, [0, 1, 0])
        self.assertEqual(m0, frechetrans.frechet.FreeSpaceMatrix.zeros(1))
        self.assertEqual(updates, [((1, 1), 1), ((1, 1), 0)])
        self.assertEqual(checkpoints, [0, 1, 2])

    def replay(self, m0, updates):
        """Yield the matrix bits after every prefix, the empty one first."""
        bits = m0.bits.copy()
        yield bits.copy()
        for (x, y), bit in updates:
            bits[x - 1, y - 1] = bool(bit)
            yield bits.copy()

    def check_stream(self, pi, sigma, delta, arrangement, walk, m0, updates,
                     checkpoints):
        """Checkpoints are exact, steps remove before adding, and every
        prefix is dominated by one of its step's end matrices."""
        self.assertFalse(m0.bits.any())
        self.assertEqual(len(checkpoints), len(walk))
        prefixes = list(self.replay(m0, updates))
        targets = [frechetrans.arrangement.matrix_at(
            pi, sigma, delta, arrangement.nodes[node]).bits for node in walk]
        for checkpoint, target in zip(checkpoints, targets):
            self.assertTrue(numpy.array_equal(prefixes[checkpoint], target))
        starts = [0] + checkpoints[:-1]
        for i, (start, stop) in enumerate(zip(starts, checkpoints)):
            bits = [bit for _, bit in updates[start:stop]]
            self.assertEqual(bits, sorted(bits))
            before = targets[i - 1] if i else m0.bits
            if numpy.array_equal(before, targets[i]):
                self.assertEqual(start, stop)
            for prefix in prefixes[start:stop + 1]:
                self.assertTrue((prefix <= before).all() or
                                (prefix <= targets[i]).all())

    def test_replay(self):
        """Random curve pairs, full and incident-circle diffs."""
        for _ in range(tests.helper.scaled(20, 150)):
            pi = curve(self.random_curve_coords(self.rng.randint(1, 4)))
            sigma = curve(self.random_curve_coords(self.rng.randint(1, 4)))
            delta = self.rng.uniform(0.2, 4)
            full = self.stream(pi, sigma, delta, fast=False)
            fast = self.stream(pi, sigma, delta, fast=True)
            self.check_stream(pi, sigma, delta, *full)
            self.assertEqual(fast[3], full[3])
            self.assertEqual(fast[4], full[4])

    def test_subset_of_centers(self):
        """Arrangements over part of the difference points still replay
        exactly at the checkpoints."""
        for _ in range(10):
            pi = curve(self.random_curve_coords(3))
            sigma = curve(self.random_curve_coords(3))
            centers = frechetrans.geometry.difference_points(pi, sigma)
            delta = self.rng.uniform(0.5, 3)
            self.check_stream(pi, sigma, delta, *self.stream(
                pi, sigma, delta, centers=centers[:len(centers) // 2 + 1]))

    def test_isolated_disks(self):
        """Every trip out of tau0 is undone on the way back."""
        _, walk, _, updates, checkpoints = self.stream(
            curve([(0, 0), (5, 0)]), curve([(0, 0)]), 1)
        # tau0 -> (1, 0) -> tau0 -> (6, 0) -> tau0
        self.assertEqual(len(walk), 5)
        self.assertEqual(checkpoints, [0, 1, 2, 3, 4])
        self.assertEqual(updates, [((1, 1), 1), ((1, 1), 0),
                                   ((2, 1), 1), ((2, 1), 0)])
