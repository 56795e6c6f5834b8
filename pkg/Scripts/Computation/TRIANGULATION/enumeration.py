# -*- coding: utf-8 -*-
"""
Copyright (c) 2024 Paris Brain Institute. All rights reserved.

Created on October 2026

@author: Cassandra Dumas

"""

# Modules
# -------
import logging
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from itertools import combinations

from joblib import Parallel, delayed

from LATTICE.polygon import LatticePoint, LatticePolygon, cross
from tools.errors import InputError, ResourceCapError
from tools.utils import load_config

logger = logging.getLogger(__name__)


# Classes
# -------
@dataclass(frozen=True)
class Triangulation:
    """
    Fine triangulation of the lattice points of a polygon.

    Attributes:
        points (tuple): LatticePoints of P, in the order indices refer to.
        triangles (tuple): Sorted index triples, in sorted order.
    """
    points: tuple
    triangles: tuple

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(LatticePoint(int(p[0]), int(p[1])) for p in self.points))
        object.__setattr__(self, "triangles", tuple(sorted(tuple(sorted(int(i) for i in t)) for t in self.triangles)))

    @cached_property
    def polygon(self):
        return LatticePolygon(self.points)

    @cached_property
    def index(self):
        return {p: i for i, p in enumerate(self.points)}

    def edge_set(self):
        return {tuple(sorted(pair)) for t in self.triangles for pair in combinations(t, 2)}

    def neighbours(self, i):
        return sorted({j for t in self.triangles if i in t for j in t if j != i})

    def to_json(self):
        return {"points": [[p.x, p.y] for p in self.points], "triangles": [list(t) for t in self.triangles]}


class _PointConfiguration:
    """Lattice points of a polygon with the lookup tables the searches share."""

    def __init__(self, polygon, required=()):
        self.polygon = polygon
        self.points = polygon.lattice_points()
        self.index = {p: i for i, p in enumerate(self.points)}
        n = len(self.points)

        boundary = polygon.boundary_points()
        self.boundary_edges = {(self.index[boundary[k]], self.index[boundary[(k + 1) % len(boundary)]])
                               for k in range(len(boundary))}

        # apices[u, v]: points r making (u, v, r) a counter-clockwise unimodular triangle
        self.apices = {}
        for u in range(n):
            for v in range(n):
                if u != v:
                    found = [r for r in range(n) if cross(self.points[u], self.points[v], self.points[r]) == 1]
                    if found:
                        self.apices[u, v] = found

        segments = {tuple(sorted((u, v))) for u, v in self.apices}
        self.crossers = {s: set() for s in segments}
        for s, t in combinations(segments, 2):
            if _properly_cross(self.points, s, t):
                self.crossers[s].add(t)
                self.crossers[t].add(s)

        self.forbidden = set()
        for a, b in required:
            for s in segments:
                if _segments_cross(self.points[s[0]], self.points[s[1]], a, b):
                    self.forbidden.add(s)

    @property
    def start_edge(self):
        return min(self.boundary_edges)

    def candidates(self, u, v, placed_edges):
        for r in self.apices.get((u, v), ()):
            new = (tuple(sorted((v, r))), tuple(sorted((r, u))))
            if any(e in self.forbidden or self.crossers[e] & placed_edges for e in new):
                continue
            yield r

    def place(self, open_edges, placed_edges, u, v, r):
        """State after adding the counter-clockwise triangle (u, v, r) on the open edge (u, v)."""
        open_edges = set(open_edges)
        open_edges.discard((u, v))
        for a, b in ((v, r), (r, u)):
            if (a, b) in open_edges:
                open_edges.discard((a, b))
            elif (a, b) not in self.boundary_edges:
                open_edges.add((b, a))
        placed_edges = placed_edges | {tuple(sorted(p)) for p in ((u, v), (v, r), (r, u))}
        return frozenset(open_edges), placed_edges


# Functions
# ---------
def _properly_cross(points, s, t):
    if set(s) & set(t):
        return False
    return _segments_cross(points[s[0]], points[s[1]], points[t[0]], points[t[1]])


def _segments_cross(p, q, a, b):
    """Whether the segments pq and ab meet at a single point interior to both."""
    d1, d2 = cross(p, q, a), cross(p, q, b)
    d3, d4 = cross(a, b, p), cross(a, b, q)
    return d1 * d2 < 0 and d3 * d4 < 0


def _explore(config, open_edges, placed_edges, triangles, limit, first_only=False):
    found = []
    stack = [(open_edges, placed_edges, triangles)]
    while stack:
        open_edges, placed_edges, triangles = stack.pop()
        if not open_edges:
            found.append(triangles)
            if first_only:
                break
            if len(found) > limit:
                raise ResourceCapError("max_triangulations", limit, len(found))
            continue
        u, v = min(open_edges)
        for r in reversed(list(config.candidates(u, v, placed_edges))):
            state = config.place(open_edges, placed_edges, u, v, r)
            stack.append((*state, triangles + ((u, v, r),)))
    return found


def _check_points(polygon, max_points):
    count = len(polygon.lattice_points())
    if count > max_points:
        raise ResourceCapError("max_points", max_points, count)


def _settings(max_points, max_triangulations, n_jobs):
    config = load_config()
    return (config["LIMITS"]["max_points"] if max_points is None else max_points,
            config["LIMITS"]["max_triangulations"] if max_triangulations is None else max_triangulations,
            config["PARALLEL"]["n_jobs"] if n_jobs is None else n_jobs)


def enumerate_unimodular_triangulations(polygon, max_points=None, max_triangulations=None, n_jobs=None):
    """
    Every fine unimodular triangulation of a polygon, exactly once.

    Triangles are grown from the smallest open edge of the partial
    triangulation; the subtrees of the first triangle are explored in
    parallel and the result is sorted, so the order does not depend on the
    schedule.

    Parameters:
        polygon (LatticePolygon): Polygon.
        max_points (int): Refuse polygons with more lattice points.
        max_triangulations (int): Abort once more triangulations are found.
        n_jobs (int): Number of joblib workers.

    Returns:
        list: Triangulations in canonical order.
    """
    max_points, max_triangulations, n_jobs = _settings(max_points, max_triangulations, n_jobs)
    _check_points(polygon, max_points)
    config = _PointConfiguration(polygon)

    u, v = config.start_edge
    branches = [config.place(frozenset({(u, v)}), frozenset(), u, v, r) + (((u, v, r),),)
                for r in config.candidates(u, v, frozenset())]
    results = Parallel(n_jobs=n_jobs)(
        delayed(_explore)(config, open_edges, placed, triangles, max_triangulations)
        for open_edges, placed, triangles in branches)

    found = [t for branch in results for t in branch]
    if len(found) > max_triangulations:
        raise ResourceCapError("max_triangulations", max_triangulations, len(found))
    triangulations = sorted((Triangulation(config.points, t) for t in found), key=lambda t: t.triangles)
    logger.info("%s: %d unimodular triangulations", polygon, len(triangulations))
    return triangulations


def count_unimodular_triangulations(polygon, **kwargs):
    return len(enumerate_unimodular_triangulations(polygon, **kwargs))


def refine_to_unimodular(polygon, edges=()):
    """
    Complete a partial subdivision to a fine unimodular triangulation.

    Parameters:
        polygon (LatticePolygon): Polygon to triangulate.
        edges (iterable): Lattice segments (pairs of points) that must be
            unions of edges of the result.

    Returns:
        Triangulation: The first completion in search order.
    """
    edges = [(LatticePoint(*a), LatticePoint(*b)) for a, b in edges]
    for (a, b), (c, d) in combinations(edges, 2):
        if _segments_cross(a, b, c, d):
            raise InputError(f"required edges {a}-{b} and {c}-{d} cross")
    for a, b in edges:
        if not (polygon.contains(a) and polygon.contains(b)):
            raise InputError(f"required edge {a}-{b} leaves {polygon}")

    config = _PointConfiguration(polygon, required=edges)
    u, v = config.start_edge
    found = _explore(config, frozenset({(u, v)}), frozenset(), (), limit=1, first_only=True)
    if not found:
        raise InputError(f"no unimodular triangulation of {polygon} contains {edges}")
    return Triangulation(config.points, found[0])


def triangle_determinant(triangulation, triangle):
    i, j, k = triangle
    return cross(triangulation.points[i], triangulation.points[j], triangulation.points[k])


def edges(triangulation):
    """
    Split the edges of a triangulation into interior and boundary edges.

    Returns:
        tuple: (interior, boundary) where interior maps each sorted index pair
        to its two incident triangles and boundary is a sorted list of pairs.
    """
    incidence = {}
    for t in triangulation.triangles:
        for pair in combinations(t, 2):
            incidence.setdefault(pair, []).append(t)
    interior = {e: tuple(ts) for e, ts in sorted(incidence.items()) if len(ts) == 2}
    boundary = sorted(e for e, ts in incidence.items() if len(ts) == 1)
    if any(len(ts) > 2 for ts in incidence.values()):
        raise InputError("an edge is shared by more than two triangles")
    return interior, boundary


def is_unimodular(triangulation):
    return all(abs(triangle_determinant(triangulation, t)) == 1 for t in triangulation.triangles)


def validate_triangulation(triangulation):
    """
    Check that a triangulation is a fine unimodular triangulation of the hull of its points.
    """
    polygon = triangulation.polygon
    if sorted(triangulation.points) != polygon.lattice_points():
        raise InputError("points must be exactly the lattice points of their convex hull")
    n = len(triangulation.points)
    if any(not 0 <= i < n for t in triangulation.triangles for i in t):
        raise InputError("triangle index out of range")
    if not is_unimodular(triangulation):
        raise InputError("every triangle must have area 1/2")
    if len(triangulation.triangles) != 2 * polygon.area():
        raise InputError("triangles do not cover the polygon exactly once")
    used = {i for t in triangulation.triangles for i in t}
    if len(used) != n:
        raise InputError("triangulation is not fine")
    _, boundary = edges(triangulation)
    for i, j in boundary:
        p, q = triangulation.points[i], triangulation.points[j]
        midpoint = (Fraction(p.x + q.x, 2), Fraction(p.y + q.y, 2))
        if polygon.contains(midpoint, strict=True):
            raise InputError(f"edge {p}-{q} is used once but lies inside the polygon")
    return triangulation


def triangulation_from_json(data):
    if not isinstance(data, dict) or "points" not in data or "triangles" not in data:
        raise InputError("triangulation JSON needs 'points' and 'triangles'")
    try:
        triangulation = Triangulation(tuple(tuple(p) for p in data["points"]),
                                      tuple(tuple(t) for t in data["triangles"]))
    except (TypeError, ValueError) as error:
        raise InputError(f"malformed triangulation JSON: {error}")
    if any(len(t) != 3 for t in triangulation.triangles):
        raise InputError("triangles must be index triples")
    return validate_triangulation(triangulation)


def triangulation_to_json(triangulation):
    return triangulation.to_json()


def transformed(triangulation, transform):
    """Image of a triangulation under a UnimodularMap, with points re-sorted."""
    images = [transform.apply(p) for p in triangulation.points]
    order = sorted(range(len(images)), key=lambda i: images[i])
    position = {old: new for new, old in enumerate(order)}
    return Triangulation(tuple(images[i] for i in order),
                         tuple(tuple(position[i] for i in t) for t in triangulation.triangles))


def from_point_triangles(points, triangles):
    """Triangulation of the given points, with triangles listed as point triples."""
    points = sorted(points)
    index = {p: i for i, p in enumerate(points)}
    return Triangulation(tuple(points), tuple(tuple(index[p] for p in t) for t in triangles))


def unimodular_flips(triangulation):
    """
    All triangulations one flip away.

    The interior edge pq with triangles (p, q, r) and (q, p, s) is replaced by
    rs when the quadrilateral p, s, q, r is strictly convex.
    """
    interior, _ = edges(triangulation)
    points = triangulation.points
    flips = []
    for (p, q), (first, second) in interior.items():
        r = next(i for i in first if i not in (p, q))
        s = next(i for i in second if i not in (p, q))
        if cross(points[r], points[s], points[p]) * cross(points[r], points[s], points[q]) >= 0:
            continue
        new = [t for t in triangulation.triangles if t not in (first, second)]
        new += [(p, r, s), (q, r, s)]
        flipped = Triangulation(points, tuple(new))
        if is_unimodular(flipped):
            flips.append(flipped)
    return flips


def euler_characteristic(triangulation):
    """V - E + F, equal to 1 for a triangulated disc."""
    interior, boundary = edges(triangulation)
    return len(triangulation.points) - len(interior) - len(boundary) + len(triangulation.triangles)
