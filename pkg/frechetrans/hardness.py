"""Hard instances of the translation problem built from 4-OV."""
import itertools
import logging

import shapely.geometry

import frechetrans.errors
import frechetrans.frechet
import frechetrans.geometry
import frechetrans.result
import frechetrans.solver

LOGGER = logging.getLogger(__name__)

VARIANTS = ('F', "F'", 'G', "G'")

PI_SIDE = 'pi'
SIGMA_SIDE = 'sigma'

SPACING = 100.0

# OR gadget auxiliary points
S1 = (-0.25, -0.25)
T1 = (0.25, 0.25)
R1 = (0.99, -1.25)
R1_PRIME = (-0.99, 1.25)
S2 = (0.0, 0.0)
T2 = (0.0, 0.0)
S2_STAR = (-1.5, -1.5)
T2_STAR = (1.5, 1.5)
R2 = (-0.99, -1.25)
R2_PRIME = (0.99, 1.25)

# far apart endpoints put its translation distance at 5 sqrt(2)
TRIVIAL_NO_PI = ((0.0, 0.0), (10.0, 10.0))
TRIVIAL_NO_SIGMA = ((0.0, 0.0), (0.0, 0.0))


class OVInstance(object):
    """Four sets of N bit-vectors of dimension D.

    Attributes:
        n (int): Vectors per set.

        d (int): Dimension.

        vectors (tuple): Four tuples of N vectors, each a tuple of D ints.
    """

    n = None
    d = None
    vectors = None

    def __init__(self, vectors):
        vectors = tuple(tuple(tuple(int(bit) for bit in v) for v in group)
                        for group in vectors)
        if len(vectors) != 4:
            raise frechetrans.errors.PreconditionError(
                'expected 4 vector sets, got %d' % (len(vectors),))
        n = len(vectors[0])
        if n < 1:
            raise frechetrans.errors.PreconditionError('empty vector set')
        d = len(vectors[0][0])
        if d < 1:
            raise frechetrans.errors.PreconditionError('zero dimension')
        for group in vectors:
            if len(group) != n:
                raise frechetrans.errors.PreconditionError(
                    'vector sets differ in size')
            for vector in group:
                if len(vector) != d:
                    raise frechetrans.errors.PreconditionError(
                        'vectors differ in dimension')
                if any(bit not in (0, 1) for bit in vector):
                    raise frechetrans.errors.PreconditionError(
                        'vector entries must be 0 or 1: %r' % (vector,))
        self.n = n
        self.d = d
        self.vectors = vectors

    def __eq__(self, other):
        return isinstance(other, OVInstance) and self.vectors == other.vectors

    def __hash__(self):
        return hash(self.vectors)

    def __str__(self):
        return 'OVInstance: n=%d, d=%d' % (self.n, self.d)

    def __repr__(self):
        return 'OVInstance(vectors=%r)' % (self.vectors,)

    def has_zero(self, j):
        """Returns True if some vector of some set is 0 in dimension j."""
        return any(v[j] == 0 for group in self.vectors for v in group)


class ReductionConstants(object):
    """Constants of the reduction for N vectors per set.

    Attributes:
        n (int): Vectors per set.

        epsilon (float): Grid step 0.001 / N^4.

        eta (float): Gadget offset 3 N^2 epsilon.

        delta (float): Threshold 2 + epsilon / 4.

        spacing (float): Horizontal shift between dimensions.
    """

    n = None
    epsilon = None
    eta = None
    delta = None
    spacing = SPACING

    def __init__(self, n):
        if n < 1:
            raise frechetrans.errors.PreconditionError(
                'N must be positive, got %r' % (n,))
        self.n = n
        self.epsilon = 0.001 / n ** 4
        self.eta = 3 * n * n * self.epsilon
        self.delta = 2 + self.epsilon / 4

    def __str__(self):
        return 'ReductionConstants: n=%d, epsilon=%r, eta=%r, delta=%r' \
            % (self.n, self.epsilon, self.eta, self.delta)

    def __repr__(self):
        return 'ReductionConstants(n=%r)' % (self.n,)

    @property
    def shift(self):
        """float: N^2 epsilon, the offset of the primed gadgets."""
        return self.n * self.n * self.epsilon


def equality_gadget(variant, ind, side, constants):
    """One side of an equality gadget.

    Args:
        variant (str): 'F', "F'", 'G' or "G'".

        ind (int): Index of the vector in its set, 0..N-1.

        side (str): PI_SIDE or SIGMA_SIDE.

        constants (ReductionConstants): Instance constants.

    Returns:
        Curve: Two points.
    """
    if variant not in VARIANTS:
        raise frechetrans.errors.PreconditionError(
            'unknown gadget variant: %r' % (variant,))
    if side not in (PI_SIDE, SIGMA_SIDE):
        raise frechetrans.errors.PreconditionError(
            'unknown side: %r' % (side,))
    if not 0 <= ind < constants.n:
        raise frechetrans.errors.PreconditionError(
            'vector index %r outside 0..%d' % (ind, constants.n - 1))
    eps, eta = constants.epsilon, constants.eta
    if side == PI_SIDE:
        a = eps * ind
        if variant in ('F', "F'"):
            points = [(1 + a, -1 - eta), (-1 + a, 1 + eta)]
        else:
            points = [(-1 - eta, 1 + a), (1 + eta, -1 + a)]
    else:
        a = eps * ind * constants.n
        if variant in ('F', "F'"):
            points = [(-1 - a, -1 - eta), (1 - a, 1 + eta)]
        else:
            points = [(-1 - eta, -1 - a), (1 + eta, 1 - a)]
    shift = constants.shift
    if variant == "F'":
        points = [(x + shift, y) for x, y in points]
    elif variant == "G'":
        points = [(x, y + shift) for x, y in points]
    return frechetrans.geometry.Curve(points)


def translation_gadget(constants):
    """Prefix curves pinning the translation near the epsilon grid.

    Args:
        constants (ReductionConstants): Instance constants.

    Returns:
        tuple: (pi part of 1 point, sigma part of 4 points), Curve objects.
    """
    a = 2 - (constants.n * constants.n - 1) * constants.epsilon
    pi_part = frechetrans.geometry.Curve([(0.0, 0.0)])
    sigma_part = frechetrans.geometry.Curve(
        [(a, 0.0), (0.0, a), (-2.0, 0.0), (0.0, -2.0)])
    return pi_part, sigma_part


def _boxes(constants, diagonal):
    low = (-1 - 2 * constants.eta, -1 + 2 * constants.eta)
    high = (1 - 2 * constants.eta, 1 + 2 * constants.eta)
    if diagonal:
        pairs = [(low, low), (high, high)]
    else:
        pairs = [(low, high), (high, low)]
    return shapely.geometry.MultiPolygon(
        [shapely.geometry.box(x[0], y[0], x[1], y[1]) for x, y in pairs])


def diagonal_region(constants):
    """Boxes around (-1, -1) and (1, 1) holding every sigma gadget point.

    Returns:
        shapely.geometry.MultiPolygon: Two closed squares of side 4 eta.
    """
    return _boxes(constants, True)


def anti_diagonal_region(constants):
    """Boxes around (-1, 1) and (1, -1) holding every pi gadget point.

    Returns:
        shapely.geometry.MultiPolygon: Two closed squares of side 4 eta.
    """
    return _boxes(constants, False)


def _check_parts(parts, region, name):
    if not parts:
        raise frechetrans.errors.PreconditionError(
            'OR gadget needs at least one %s curve' % (name,))
    for part in parts:
        for point in part:
            if not region.covers(point.to_shapely()):
                raise frechetrans.errors.PreconditionError(
                    '%s curve point %s outside its boxes' % (name, point))


def or_gadget(pi_parts, sigma_parts, constants):
    """OR over gadget pairs: the result is within delta iff some pi part is
    within delta of some sigma part.

    Args:
        pi_parts (sequence): Anti-diagonal curves.

        sigma_parts (sequence): Diagonal curves.

        constants (ReductionConstants): Instance constants, for the boxes.

    Returns:
        tuple: (pi_or, sigma_or) Curve objects.

    Raises:
        frechetrans.errors.PreconditionError: Empty sequence or a curve
            outside its boxes.
    """
    _check_parts(pi_parts, anti_diagonal_region(constants), 'anti-diagonal')
    _check_parts(sigma_parts, diagonal_region(constants), 'diagonal')
    pi_points = []
    for part in pi_parts:
        pi_points.extend([S1, R1])
        pi_points.extend(part.array.tolist())
        pi_points.extend([R1_PRIME, T1])
    sigma_points = [S2, S2_STAR]
    for part in sigma_parts:
        sigma_points.append(R2)
        sigma_points.extend(part.array.tolist())
        sigma_points.append(R2_PRIME)
    sigma_points.extend([T2_STAR, T2])
    return frechetrans.geometry.Curve(pi_points), \
        frechetrans.geometry.Curve(sigma_points)


def dimension_parts(ov, j, constants):
    """Gadget curves of dimension j, type-major and index-minor.

    Returns:
        tuple: (pi parts, sigma parts), lists of Curve objects.
    """
    v1, v2, v3, v4 = ov.vectors
    gadget = equality_gadget
    pi_parts = [gadget('F', i, PI_SIDE, constants)
                for i, v in enumerate(v1) if v[j] == 0]
    pi_parts += [gadget("F'", i, PI_SIDE, constants) for i in range(ov.n)]
    pi_parts += [gadget('G', i, PI_SIDE, constants)
                 for i, v in enumerate(v3) if v[j] == 0]
    pi_parts += [gadget("G'", i, PI_SIDE, constants) for i in range(ov.n)]
    sigma_parts = [gadget('F', i, SIGMA_SIDE, constants)
                   for i in range(ov.n)]
    sigma_parts += [gadget("F'", i, SIGMA_SIDE, constants)
                    for i, v in enumerate(v2) if v[j] == 0]
    sigma_parts += [gadget('G', i, SIGMA_SIDE, constants)
                    for i in range(ov.n)]
    sigma_parts += [gadget("G'", i, SIGMA_SIDE, constants)
                    for i, v in enumerate(v4) if v[j] == 0]
    return pi_parts, sigma_parts


def generate_instance(ov, shuffle=None):
    """Curves whose translation distance is at most delta iff the 4-OV
    instance has a solution.

    Args:
        ov (OVInstance): Source instance.

    Kwargs:
        shuffle (random.Random): Permute the parts inside every OR gadget.

    Returns:
        tuple: (pi, sigma, delta).
    """
    constants = ReductionConstants(ov.n)
    if not all(ov.has_zero(j) for j in range(ov.d)):
        LOGGER.info('%s: a dimension has no zero, trivial NO pair', ov)
        return frechetrans.geometry.Curve(TRIVIAL_NO_PI), \
            frechetrans.geometry.Curve(TRIVIAL_NO_SIGMA), constants.delta
    pi, sigma = translation_gadget(constants)
    for j in range(ov.d):
        pi_parts, sigma_parts = dimension_parts(ov, j, constants)
        if shuffle is not None:
            shuffle.shuffle(pi_parts)
            shuffle.shuffle(sigma_parts)
        pi_or, sigma_or = or_gadget(pi_parts, sigma_parts, constants)
        offset = frechetrans.geometry.Point([constants.spacing * (j + 1),
                                             0.0])
        pi = pi + frechetrans.geometry.translate_curve(pi_or, offset)
        sigma = sigma + frechetrans.geometry.translate_curve(sigma_or, offset)
    LOGGER.debug('%s: |pi|=%d, |sigma|=%d', ov, len(pi), len(sigma))
    return pi, sigma, constants.delta


def _orthogonal(ov, combo):
    return all(any(ov.vectors[s][i][j] == 0 for s, i in enumerate(combo))
               for j in range(ov.d))


def solve_4ov_bruteforce(ov):
    """Search all N^4 quadruples.

    Args:
        ov (OVInstance): Instance to solve.

    Returns:
        tuple: (found, indices) with indices a 4-tuple of vector indices, or
        None when not found.
    """
    for combo in itertools.product(range(ov.n), repeat=4):
        if _orthogonal(ov, combo):
            return True, combo
    return False, None


def canonical_translation(ov, indices):
    """Translation selecting the given quadruple.

    Args:
        ov (OVInstance): Instance, for N.

        indices (tuple): Vector indices (i1, i2, i3, i4).

    Returns:
        Point: ((i1 + i2 N) epsilon, (i3 + i4 N) epsilon).
    """
    constants = ReductionConstants(ov.n)
    i1, i2, i3, i4 = indices
    return frechetrans.geometry.Point(
        [(i1 + i2 * ov.n) * constants.epsilon,
         (i3 + i4 * ov.n) * constants.epsilon])


def translation_range(constants):
    """Square every feasible translation lies in.

    Returns:
        shapely.geometry.Polygon: [-eps/4, (N^2 - 3/4) eps]^2.
    """
    low = -constants.epsilon / 4
    high = (constants.n * constants.n - 0.75) * constants.epsilon
    return shapely.geometry.box(low, low, high, high)


def reduction_report(ov, engine=None, tol=1e-12):
    """Generate the curves of an instance and check the decision against
    brute-force 4-OV.

    Args:
        ov (OVInstance): Instance, small enough for the solver.

    Kwargs:
        engine (str): Decision engine.

        tol (float): Absolute tolerance on squared distances.

    Returns:
        ReductionReport: Outcome of the checks.
    """
    pi, sigma, delta = generate_instance(ov)
    expected, indices = solve_4ov_bruteforce(ov)
    decision = frechetrans.solver.decide_translation(pi, sigma, delta, tol,
                                                     engine)
    witness_ok = None
    if expected:
        tau = canonical_translation(ov, indices)
        matrix = frechetrans.frechet.free_space_matrix(
            pi, frechetrans.geometry.translate_curve(sigma, tau), delta, tol)
        witness_ok = frechetrans.frechet.monotone_path_exists(matrix)
    report = frechetrans.result.ReductionReport(
        expected=expected, decided=bool(decision), witness_ok=witness_ok,
        delta=delta, pi_length=len(pi), sigma_length=len(sigma))
    LOGGER.info('%s: %s', ov, report)
    return report


def verify_reduction(ov, engine=None, tol=1e-12):
    """Returns True if the decision on the generated curves matches
    brute-force 4-OV (and the canonical witness works on YES instances)."""
    return reduction_report(ov, engine, tol).verified
