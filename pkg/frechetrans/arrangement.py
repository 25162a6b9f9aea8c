"""Disk arrangement in translation space and the update stream it drives."""
import collections
import logging
import math

import networkx
import numpy
from scipy.spatial.distance import cdist

import frechetrans.errors
import frechetrans.frechet
import frechetrans.geometry
import frechetrans.offline
import frechetrans.settings

LOGGER = logging.getLogger(__name__)

TAU0 = 0

ARC = 'arc'
LINK = 'link'


def _tolerance(tol):
    return frechetrans.settings.TOLERANCE if tol is None else tol


class DiskArrangement(object):
    """Sample translations of the arrangement of radius-delta disks.

    Node 0 is the outer point tau0. Arc edges join neighbouring nodes on a
    circle; link edges join tau0 to one node per component.

    Attributes:
        centers (list): Disk centers, Point objects.

        radius (float): Disk radius delta.

        nodes (list): Node translations, Point objects.

        graph (networkx.Graph): Nodes 0..len(nodes)-1, edges carry a 'kind'
            attribute, ARC or LINK.

        incidence (list): Per node, the center indices whose circle passes
            through it within tolerance.
    """

    centers = None
    radius = None
    nodes = None
    graph = None
    incidence = None

    def __init__(self, **kwargs):
        for key, val in kwargs.items():
            getattr(self, key)
            setattr(self, key, val)

    def __str__(self):
        return 'DiskArrangement: centers=%d, radius=%r, nodes=%d, edges=%d' \
            % (len(self.centers), self.radius, len(self.nodes),
               self.graph.number_of_edges())

    @property
    def tau0(self):
        """Point: The outer translation."""
        return self.nodes[TAU0]

    def edges(self):
        """Returns the sorted (i, j) edge list with i < j."""
        return sorted(tuple(sorted(edge)) for edge in self.graph.edges())

    def edge_kind(self, u, v):
        """Returns ARC or LINK."""
        return self.graph.edges[u, v]['kind']


def matrix_at(pi, sigma, delta, tau, tol=None):
    """Free-space matrix of pi against sigma translated by tau.

    Args:
        pi (Curve): Row curve.

        sigma (Curve): Column curve.

        delta (float): Distance threshold, >= 0.

        tau (Point): Translation of sigma.

    Kwargs:
        tol (float): Absolute tolerance on squared distances.

    Returns:
        FreeSpaceMatrix: bit (i, j) is 1 iff |(pi_i - sigma_j) - tau| <= delta.
    """
    if delta < 0:
        raise frechetrans.errors.PreconditionError(
            'negative delta: %r' % (delta,))
    diff = frechetrans.geometry.difference_array(pi, sigma) - \
        numpy.array([tau.x, tau.y])
    squared = (diff * diff).sum(axis=2)
    return frechetrans.frechet.FreeSpaceMatrix(
        squared <= delta * delta + _tolerance(tol))


def _intersections(coords, delta, tol):
    """Yield (i, j, points) for every pair of intersecting circles."""
    squared = cdist(coords, coords, 'sqeuclidean')
    first, second = numpy.triu_indices(len(coords), 1)
    reach = 4 * delta * delta + 4 * tol
    for i, j in zip(first, second):
        dist2 = squared[i, j]
        if dist2 > reach:
            continue
        half = (coords[i] + coords[j]) / 2.0
        h2 = delta * delta - dist2 / 4.0
        if h2 <= tol:
            yield i, j, [half]
            continue
        dist = math.sqrt(dist2)
        h = math.sqrt(h2)
        normal = numpy.array([coords[i][1] - coords[j][1],
                              coords[j][0] - coords[i][0]]) / dist
        yield i, j, [half + h * normal, half - h * normal]


def build_arrangement_graph(centers, delta, tol=None):
    """Build the arrangement graph of radius-delta circles.

    Args:
        centers (iterable): Distinct disk centers, Point objects.

        delta (float): Radius, > 0.

    Kwargs:
        tol (float): Absolute tolerance on squared distances.

    Returns:
        DiskArrangement: Connected arrangement graph.

    Raises:
        frechetrans.errors.PreconditionError: No centers or delta <= 0.
    """
    # pylint: disable=R0914
    tol = _tolerance(tol)
    centers = list(centers)
    if delta <= 0:
        raise frechetrans.errors.PreconditionError(
            'radius must be positive, got %r' % (delta,))
    if not centers:
        raise frechetrans.errors.PreconditionError('no disk centers')
    coords = numpy.array([[c.x, c.y] for c in centers], dtype=float)
    min_x, min_y, _, _ = frechetrans.geometry.bounding_box(centers)
    points = [[min_x - 3 * delta, min_y - 3 * delta]]
    on_circle = collections.defaultdict(list)
    for i, j, found in _intersections(coords, delta, tol):
        for point in found:
            on_circle[i].append(len(points))
            on_circle[j].append(len(points))
            points.append(list(point))
    for i, center in enumerate(coords):
        if i not in on_circle:
            on_circle[i].append(len(points))
            points.append([center[0] + delta, center[1]])
    nodes = [frechetrans.geometry.Point(p) for p in points]
    graph = networkx.Graph()
    graph.add_nodes_from(range(len(nodes)))
    for i, members in on_circle.items():
        angles = [math.atan2(points[v][1] - coords[i][1],
                             points[v][0] - coords[i][0]) for v in members]
        ring = [v for _, v in sorted(zip(angles, members))]
        for u, v in zip(ring, ring[1:] + ring[:1]):
            if u != v:
                graph.add_edge(u, v, kind=ARC)
    others = graph.subgraph(range(1, len(nodes)))
    for component in list(networkx.connected_components(others)):
        first = min(component, key=lambda v: (nodes[v].x, nodes[v].y))
        graph.add_edge(TAU0, first, kind=LINK)
    squared = cdist(numpy.array(points), coords, 'sqeuclidean')
    near = numpy.abs(squared - delta * delta) <= tol
    incidence = [tuple(numpy.flatnonzero(row)) for row in near]
    incidence[TAU0] = ()
    arrangement = DiskArrangement(centers=centers, radius=delta, nodes=nodes,
                                  graph=graph, incidence=incidence)
    LOGGER.debug('arrangement: %s', arrangement)
    return arrangement


def euler_walk(arrangement):
    """Closed walk from tau0 around a doubled DFS spanning tree.

    Args:
        arrangement (DiskArrangement): Connected arrangement graph.

    Returns:
        list: Node indices, starting and ending at tau0; consecutive nodes
        are adjacent and every node appears.

    Raises:
        frechetrans.errors.ArrangementError: Disconnected graph.
    """
    graph = arrangement.graph
    if not networkx.is_connected(graph):
        raise frechetrans.errors.ArrangementError(
            'arrangement graph has %d components'
            % (networkx.number_connected_components(graph),))
    walk = [TAU0]
    for u, v, direction in networkx.dfs_labeled_edges(graph, TAU0):
        if u == v:
            continue
        if direction == 'forward':
            walk.append(v)
        elif direction == 'reverse':
            walk.append(u)
    return walk


class _Stream(object):
    """Bit matrix replayed by update operations."""

    def __init__(self, pi, sigma, delta, tol):
        self.shape = (len(pi), len(sigma))
        diffs = frechetrans.geometry.difference_array(pi, sigma).reshape(-1, 2)
        self.centers, self.owner = numpy.unique(diffs, axis=0,
                                                return_inverse=True)
        self.owner = self.owner.reshape(-1)
        self.positions = collections.defaultdict(list)
        for flat, center in enumerate(self.owner):
            self.positions[center].append(flat)
        self.threshold = delta * delta + tol
        self.current = numpy.zeros(len(self.owner), dtype=bool)
        self.updates = []

    def members(self, tau, centers=None):
        """Disk membership of tau for all (or the given) center rows."""
        rows = self.centers if centers is None else self.centers[centers]
        diff = rows - numpy.array([tau.x, tau.y])
        return (diff * diff).sum(axis=1) <= self.threshold

    def target_full(self, tau):
        return self.members(tau)[self.owner]

    def target_fast(self, tau, centers):
        target = self.current.copy()
        centers = sorted(centers)
        for center, member in zip(centers, self.members(tau, centers)):
            target[self.positions[center]] = member
        return target

    def move(self, target):
        """Emit the updates turning the current bits into target, 1->0
        first."""
        for bit, changed in ((0, self.current & ~target),
                             (1, target & ~self.current)):
            for flat in numpy.flatnonzero(changed):
                x, y = divmod(int(flat), self.shape[1])
                self.updates.append(
                    frechetrans.offline.UpdateOp((x + 1, y + 1), bit))
        self.current = target


def update_sequence(pi, sigma, delta, arrangement, walk, tol=None, fast=None):
    """Update stream visiting the free-space matrix of every walk node.

    Args:
        pi (Curve): Row curve.

        sigma (Curve): Column curve.

        delta (float): Distance threshold.

        arrangement (DiskArrangement): Graph the walk runs on.

        walk (list): Node indices.

    Kwargs:
        tol (float): Absolute tolerance on squared distances.

        fast (bool): Diff arc steps through the circles incident to their
            endpoints only; None enables it when the arrangement has every
            difference point as a center.

    Returns:
        tuple: (M0, updates, checkpoints). M0 is all zeros, replaying the
        first checkpoints[i] updates yields matrix_at of walk node i.
    """
    tol = _tolerance(tol)
    stream = _Stream(pi, sigma, delta, tol)
    center_ids = {(c.x, c.y): i for i, c in enumerate(arrangement.centers)}
    translate = [center_ids.get((x, y)) for x, y in stream.centers]
    if fast is None:
        fast = len(center_ids) == len(translate) and None not in translate
    if fast:
        row_of = {gid: row for row, gid in enumerate(translate)}
    checkpoints = []
    previous = None
    for node in walk:
        tau = arrangement.nodes[node]
        incident = set(arrangement.incidence[node])
        if previous is not None:
            incident |= set(arrangement.incidence[previous])
        degenerate = previous is None or \
            arrangement.edge_kind(previous, node) != ARC or \
            len(arrangement.incidence[node]) > 2 or \
            len(arrangement.incidence[previous]) > 2
        if fast and not degenerate:
            target = stream.target_fast(tau, [row_of[g] for g in incident])
            if frechetrans.settings.DEBUG_CHECKS and \
                    not numpy.array_equal(target, stream.target_full(tau)):
                raise frechetrans.errors.ArrangementError(
                    'incident-circle diff diverged at node %d' % (node,))
        else:
            target = stream.target_full(tau)
        stream.move(target)
        checkpoints.append(len(stream.updates))
        previous = node
    LOGGER.debug('update stream: %d walk nodes, %d updates',
                 len(walk), len(stream.updates))
    m0 = frechetrans.frechet.FreeSpaceMatrix.zeros(*stream.shape)
    return m0, stream.updates, checkpoints


def format_arrangement(arrangement):
    """Text dump: one "x y" line per node, then one "i j" line per edge."""
    lines = ['%r %r' % (p.x, p.y) for p in arrangement.nodes]
    lines.extend('%d %d' % edge for edge in arrangement.edges())
    return '\n'.join(lines) + '\n'


def point_arrangement(centers):
    """Arrangement of radius-0 disks: tau0 linked to every center.

    Args:
        centers (iterable): Distinct centers, Point objects.

    Returns:
        DiskArrangement: Star graph around tau0.
    """
    centers = list(centers)
    if not centers:
        raise frechetrans.errors.PreconditionError('no disk centers')
    min_x, min_y, _, _ = frechetrans.geometry.bounding_box(centers)
    nodes = [frechetrans.geometry.Point([min_x - 1.0, min_y - 1.0])]
    nodes.extend(centers)
    graph = networkx.Graph()
    graph.add_nodes_from(range(len(nodes)))
    for v in range(1, len(nodes)):
        graph.add_edge(TAU0, v, kind=LINK)
    incidence = [()] + [(i,) for i in range(len(centers))]
    return DiskArrangement(centers=centers, radius=0.0, nodes=nodes,
                           graph=graph, incidence=incidence)
