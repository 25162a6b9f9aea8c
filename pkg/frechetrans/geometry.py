"""Geometries objects: Points, Curves."""
import math

import numpy
import shapely.geometry

import frechetrans.errors


class Geometry(object):
    """Parent class of all geometries.

    Attributes:
        coordinates (list): Geometry coordinates.
    """

    coordinates = None

    def __init__(self, coordinates):
        self.coordinates = coordinates

    def __str__(self):
        return '%s: coordinates=%s' \
            % (self.__class__.__name__, self.coordinates)

    def __repr__(self):
        return '%s(coordinates=%r)' \
            % (self.__class__.__name__, self.coordinates)


class Point(Geometry):
    """Planar point, also used for translation vectors.

    Attributes:
        x (float): First coordinate.

        y (float): Second coordinate.
    """

    x = None
    y = None

    def __init__(self, coordinates):
        coords = [float(c) for c in coordinates]
        if len(coords) != 2:
            raise frechetrans.errors.GeometryError(
                'point needs 2 coordinates, got %d' % (len(coords),))
        if not all(math.isfinite(c) for c in coords):
            raise frechetrans.errors.GeometryError(
                'non-finite coordinate in %r' % (coords,))
        self.x, self.y = coords
        Geometry.__init__(self, coords)

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))

    def __lt__(self, other):
        return (self.x, self.y) < (other.x, other.y)

    def __add__(self, other):
        return Point([self.x + other.x, self.y + other.y])

    def __sub__(self, other):
        return Point([self.x - other.x, self.y - other.y])

    def __neg__(self):
        return Point([-self.x, -self.y])

    def to_shapely(self):
        return shapely.geometry.Point(self.x, self.y)


class Curve(Geometry):
    """Point sequence traversed in order.

    Attributes:
        points (tuple): Curve vertices as Point objects.
    """

    points = None

    def __init__(self, coordinates):
        self.points = tuple(c if isinstance(c, Point) else Point(c)
                            for c in coordinates)
        if not self.points:
            raise frechetrans.errors.GeometryError('empty curve')
        self._array = None
        Geometry.__init__(self, [p.coordinates for p in self.points])

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, index):
        return self.points[index]

    def __eq__(self, other):
        if not isinstance(other, Curve):
            return NotImplemented
        return self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def __add__(self, other):
        """Concatenation."""
        return Curve(self.points + other.points)

    @property
    def array(self):
        """numpy.ndarray: n x 2 float array of the vertices."""
        if self._array is None:
            self._array = numpy.array(self.coordinates, dtype=float)
            self._array.setflags(write=False)
        return self._array


def euclidean_distance(p, q):
    """Euclidean distance between two points.

    Args:
        p (Point): First point.

        q (Point): Second point.

    Returns:
        float: Distance, >= 0.
    """
    return math.hypot(p.x - q.x, p.y - q.y)


def translate_curve(curve, t):
    """Shift every vertex of a curve.

    Args:
        curve (Curve): Curve to translate.

        t (Point): Translation vector.

    Returns:
        Curve: Translated curve with the same number of points.
    """
    return Curve([p + t for p in curve.points])


def difference_array(pi, sigma):
    """Returns the n x m x 2 array of pi_i - sigma_j."""
    return pi.array[:, numpy.newaxis, :] - sigma.array[numpy.newaxis, :, :]


def difference_points(pi, sigma):
    """Difference point set {pi_i - sigma_j}.

    Duplicates are removed by exact coordinate equality.

    Args:
        pi (Curve): First curve.

        sigma (Curve): Second curve.

    Returns:
        list: Distinct Point objects in lexicographic order.
    """
    diffs = difference_array(pi, sigma).reshape(-1, 2)
    unique = numpy.unique(diffs, axis=0)
    return [Point(row) for row in unique]


def bounding_box(points):
    """Returns (min_x, min_y, max_x, max_y) of a nonempty point set."""
    return shapely.geometry.MultiPoint(
        [(p.x, p.y) for p in points]).bounds
