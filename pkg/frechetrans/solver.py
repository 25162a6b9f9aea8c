"""Discrete Frechet distance under translation."""
import bisect
import itertools
import logging

import numpy
from scipy.spatial.distance import pdist

import frechetrans.arrangement
import frechetrans.errors
import frechetrans.frechet
import frechetrans.geometry
import frechetrans.offline
import frechetrans.result
import frechetrans.settings

LOGGER = logging.getLogger(__name__)


def _tolerance(tol):
    return frechetrans.settings.TOLERANCE if tol is None else tol


def _check_curves(pi, sigma, delta):
    if not len(pi) or not len(sigma):
        raise frechetrans.errors.PreconditionError('empty curve')
    if delta < 0:
        raise frechetrans.errors.PreconditionError(
            'negative delta: %r' % (delta,))


def endpoint_lens(pi, sigma, delta, tol=None):
    """Difference points that can share a translation with both endpoint
    pairs.

    Any feasible translation lies within delta of pi_1 - sigma_1 and of
    pi_n - sigma_m, so a difference point farther than 2 delta from either
    never joins the free space.

    Args:
        pi (Curve): Row curve.

        sigma (Curve): Column curve.

        delta (float): Distance threshold.

    Kwargs:
        tol (float): Absolute tolerance on squared distances.

    Returns:
        list: Retained Point objects, lexicographic; empty when the endpoint
        disks are disjoint.
    """
    tol = _tolerance(tol)
    first = pi[0] - sigma[0]
    last = pi[len(pi) - 1] - sigma[len(sigma) - 1]
    reach = 4 * (delta * delta + tol)
    if (first.x - last.x) ** 2 + (first.y - last.y) ** 2 > reach:
        return []
    kept = []
    for q in frechetrans.geometry.difference_points(pi, sigma):
        if (q.x - first.x) ** 2 + (q.y - first.y) ** 2 <= reach and \
                (q.x - last.x) ** 2 + (q.y - last.y) ** 2 <= reach:
            kept.append(q)
    return kept


def translation_arrangement(pi, sigma, delta, tol=None, prune=None):
    """Arrangement of radius-delta disks around the difference points the
    decision walks.

    Args:
        pi (Curve): First curve.

        sigma (Curve): Second curve.

        delta (float): Disk radius, >= 0; 0 gives the point arrangement.

    Kwargs:
        tol (float): Absolute tolerance on squared distances.

        prune (bool): Restrict centers to endpoint_lens; defaults to
            settings.PRUNE.

    Returns:
        DiskArrangement: The arrangement, None when pruning leaves no center.

    Raises:
        frechetrans.errors.PreconditionError: Empty curve or negative delta.
    """
    tol = _tolerance(tol)
    if prune is None:
        prune = frechetrans.settings.PRUNE
    _check_curves(pi, sigma, delta)
    if prune:
        centers = endpoint_lens(pi, sigma, delta, tol)
        if not centers:
            return None
    else:
        centers = frechetrans.geometry.difference_points(pi, sigma)
    if delta == 0:
        return frechetrans.arrangement.point_arrangement(centers)
    return frechetrans.arrangement.build_arrangement_graph(centers, delta, tol)


def _decide_chunked(pi, sigma, delta, arrangement, walk, tol):
    m0, updates, checkpoints = frechetrans.arrangement.update_sequence(
        pi, sigma, delta, arrangement, walk, tol)
    for prefix, answer in enumerate(
            frechetrans.offline.iter_offline_answers(m0, updates), 1):
        if answer:
            # the first checkpoint at or after a true prefix holds a superset
            step = bisect.bisect_left(checkpoints, prefix)
            return frechetrans.result.Decision(
                found=True, delta=delta,
                witness=arrangement.nodes[walk[step]], prefix=prefix)
    return frechetrans.result.Decision(found=False, delta=delta)


def _decide_naive(pi, sigma, delta, arrangement, walk, tol):
    seen = set()
    for node in walk:
        if node in seen:
            continue
        seen.add(node)
        tau = arrangement.nodes[node]
        matrix = frechetrans.arrangement.matrix_at(pi, sigma, delta, tau, tol)
        if frechetrans.frechet.monotone_path_exists(matrix):
            return frechetrans.result.Decision(found=True, delta=delta,
                                               witness=tau)
    return frechetrans.result.Decision(found=False, delta=delta)


def decide_translation(pi, sigma, delta, tol=None, engine=None, prune=None):
    """Decide whether some translation of sigma brings it within discrete
    Frechet distance delta of pi.

    Args:
        pi (Curve): First curve.

        sigma (Curve): Second curve, the one being translated.

        delta (float): Distance threshold, >= 0.

    Kwargs:
        tol (float): Absolute tolerance on squared distances.

        engine (str): 'chunked' answers the walk's update stream with offline
            grid reachability, 'naive' searches every walk node; defaults to
            settings.ENGINE.

        prune (bool): Keep only difference points near both endpoint pairs;
            defaults to settings.PRUNE.

    Returns:
        Decision: Truthy iff a translation exists, with a witness.

    Raises:
        frechetrans.errors.PreconditionError: Empty curve or negative delta.
    """
    tol = _tolerance(tol)
    engine = engine or frechetrans.settings.ENGINE
    if engine not in frechetrans.settings.ENGINES:
        raise frechetrans.errors.PreconditionError(
            'unknown engine: %r' % (engine,))
    arrangement = translation_arrangement(pi, sigma, delta, tol, prune)
    if arrangement is None:
        LOGGER.info('decide delta=%r: endpoint disks are disjoint', delta)
        return frechetrans.result.Decision(found=False, delta=delta)
    walk = frechetrans.arrangement.euler_walk(arrangement)
    LOGGER.debug('decide delta=%r: %d centers, %d nodes, walk of %d',
                 delta, len(arrangement.centers), len(arrangement.nodes),
                 len(walk))
    if engine == 'chunked':
        decision = _decide_chunked(pi, sigma, delta, arrangement, walk, tol)
    else:
        decision = _decide_naive(pi, sigma, delta, arrangement, walk, tol)
    LOGGER.info('decide delta=%r: %s', delta, decision)
    return decision


def critical_values(pi, sigma, tol=None):
    """Candidate values of the distance under translation.

    The optimum is 0, half the distance between two difference points, or
    the circumradius of three non-collinear difference points.

    Args:
        pi (Curve): First curve.

        sigma (Curve): Second curve.

    Kwargs:
        tol (float): Values closer than tol are merged.

    Returns:
        list: Ascending floats, starting near 0.
    """
    tol = _tolerance(tol)
    points = numpy.array([[q.x, q.y] for q in
                          frechetrans.geometry.difference_points(pi, sigma)])
    values = [0.0]
    if len(points) > 1:
        values.extend(pdist(points) / 2.0)
    if len(points) > 2:
        triples = numpy.array(list(itertools.combinations(
            range(len(points)), 3)))
        a, b, c = (points[triples[:, i]] for i in range(3))
        ab = numpy.hypot(*(b - a).T)
        bc = numpy.hypot(*(c - b).T)
        ca = numpy.hypot(*(a - c).T)
        cross = numpy.abs((b - a)[:, 0] * (c - a)[:, 1] -
                          (b - a)[:, 1] * (c - a)[:, 0])
        proper = cross > 1e-12 * numpy.maximum(ab * ca, 1e-300)
        values.extend(ab[proper] * bc[proper] * ca[proper] /
                      (2.0 * cross[proper]))
    # a cluster spans at most tol from its smallest member and is
    # represented by its largest one
    merged = []
    anchor = None
    for value in sorted(values):
        if merged and value - anchor <= tol:
            merged[-1] = float(value)
        else:
            anchor = value
            merged.append(float(value))
    return merged


def compute_translation_distance(pi, sigma, tol=None, engine=None,
                                 prune=None):
    """Discrete Frechet distance under translation by binary search over
    the critical values.

    Args:
        pi (Curve): First curve.

        sigma (Curve): Second curve.

    Kwargs:
        tol (float): Absolute tolerance.

        engine (str): Decision engine, see decide_translation.

        prune (bool): Endpoint pruning, see decide_translation.

    Returns:
        TranslationResult: The distance and an optimal translation.
    """
    values = critical_values(pi, sigma, tol)
    lo, hi = 0, len(values) - 1
    best = None
    while lo < hi:
        mid = (lo + hi) // 2
        decision = decide_translation(pi, sigma, values[mid], tol, engine,
                                      prune)
        if decision:
            hi = mid
            best = decision
        else:
            lo = mid + 1
    if best is None or best.delta != values[lo]:
        best = decide_translation(pi, sigma, values[lo], tol, engine, prune)
    if not best:
        raise frechetrans.errors.Error(
            'no critical value admits a translation')
    LOGGER.info('translation distance %r at %s', values[lo], best.witness)
    return frechetrans.result.TranslationResult(
        value=values[lo], witness=best.witness, prefix=best.prefix)


def _candidates(pi, sigma, delta, tol):
    centers = frechetrans.geometry.difference_points(pi, sigma)
    coords = numpy.array([[c.x, c.y] for c in centers], dtype=float)
    candidates = list(centers)
    if delta > 0:
        for _, _, found in frechetrans.arrangement._intersections(
                coords, delta, tol):  # pylint: disable=W0212
            candidates.extend(frechetrans.geometry.Point(p) for p in found)
    return candidates


def decide_bruteforce(pi, sigma, delta, tol=None):
    """Reference decision testing every center and circle intersection.

    Args:
        pi (Curve): First curve.

        sigma (Curve): Second curve.

        delta (float): Distance threshold, >= 0.

    Kwargs:
        tol (float): Absolute tolerance on squared distances.

    Returns:
        Decision: Truthy iff a translation exists.
    """
    tol = _tolerance(tol)
    _check_curves(pi, sigma, delta)
    for tau in _candidates(pi, sigma, delta, tol):
        matrix = frechetrans.frechet.free_space_matrix(
            pi, frechetrans.geometry.translate_curve(sigma, tau), delta, tol)
        if frechetrans.frechet.monotone_path_exists(matrix):
            return frechetrans.result.Decision(found=True, delta=delta,
                                               witness=tau)
    return frechetrans.result.Decision(found=False, delta=delta)


def value_bruteforce(pi, sigma, tol=None):
    """Smallest critical value accepted by decide_bruteforce.

    Returns:
        TranslationResult: Distance and witness; prefix is None.
    """
    for value in critical_values(pi, sigma, tol):
        decision = decide_bruteforce(pi, sigma, value, tol)
        if decision:
            return frechetrans.result.TranslationResult(
                value=value, witness=decision.witness)
    raise frechetrans.errors.Error('no critical value admits a translation')
