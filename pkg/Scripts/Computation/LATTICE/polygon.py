# -*- coding: utf-8 -*-
"""
Copyright (c) 2024 Paris Brain Institute. All rights reserved.

Created on October 2026

@author: Cassandra Dumas

"""

# Modules
# -------
import json
import logging
import numbers
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from math import gcd, lcm
from typing import NamedTuple

import numpy as np

from tools.errors import InputError

logger = logging.getLogger(__name__)


# Classes
# -------
class LatticePoint(NamedTuple):
    x: int
    y: int


def cross(o, a, b):
    """Twice the signed area of the triangle (o, a, b)."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points):
    """
    Monotone chain hull.

    Parameters:
        points (iterable): Points with integer or rational coordinates.

    Returns:
        list: Extreme points, counter-clockwise, starting from the
        lexicographically smallest one. Collinear boundary points are dropped.
    """
    pts = sorted(set((p[0], p[1]) for p in points))
    if len(pts) <= 2:
        return pts

    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def edge_inequality(u, v):
    """
    Primitive half-plane a*x + b*y <= c holding the left side of the
    directed lattice edge u -> v.
    """
    dx, dy = v[0] - u[0], v[1] - u[1]
    g = gcd(dx, dy)
    a, b = dy // g, -dx // g
    return a, b, a * u[0] + b * u[1]


@dataclass(frozen=True)
class LatticePolygon:
    """
    Convex lattice polygon.

    Built from any list of integer points: the constructor keeps the extreme
    points, counter-clockwise from the lexicographically smallest, and rejects
    input that does not span a two-dimensional region.
    """
    vertices: tuple

    def __post_init__(self):
        try:
            pts = [(int(p[0]), int(p[1])) for p in self.vertices]
            if any(p[0] != q[0] or p[1] != q[1] for p, q in zip(pts, self.vertices)):
                raise ValueError
        except (TypeError, ValueError, IndexError):
            raise InputError(f"polygon vertices must be integer pairs, got {self.vertices!r}")
        hull = convex_hull(pts)
        if len(hull) < 3:
            raise InputError(f"points {pts} do not span a two-dimensional polygon")
        object.__setattr__(self, "vertices", tuple(LatticePoint(*p) for p in hull))

    def __repr__(self):
        return "conv(" + ",".join(f"({p.x},{p.y})" for p in self.vertices) + ")"

    def edges(self):
        """Directed boundary edges, counter-clockwise."""
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def area(self):
        """Exact area (shoelace formula)."""
        twice = sum(u.x * v.y - v.x * u.y for u, v in self.edges())
        return Fraction(twice, 2)

    @cached_property
    def inequalities(self):
        return np.array([edge_inequality(u, v) for u, v in self.edges()], dtype=np.int64)

    def _scan(self, strict):
        xs = [p.x for p in self.vertices]
        ys = [p.y for p in self.vertices]
        gx, gy = np.meshgrid(np.arange(min(xs), max(xs) + 1),
                             np.arange(min(ys), max(ys) + 1), indexing="ij")
        grid = np.stack([gx.ravel(), gy.ravel()], axis=1)
        values = grid @ self.inequalities[:, :2].T
        bound = self.inequalities[:, 2]
        mask = np.all(values < bound, axis=1) if strict else np.all(values <= bound, axis=1)
        return [LatticePoint(int(x), int(y)) for x, y in grid[mask]]

    @cached_property
    def _lattice_points(self):
        return tuple(self._scan(strict=False))

    @cached_property
    def _interior_points(self):
        return tuple(self._scan(strict=True))

    def lattice_points(self):
        """All lattice points of the closed polygon, lexicographic order."""
        return list(self._lattice_points)

    def interior_points(self):
        """Lattice points in the open polygon, lexicographic order."""
        return list(self._interior_points)

    def boundary_points(self):
        """Lattice points of the boundary, walked counter-clockwise from the first vertex."""
        walk = []
        for u, v in self.edges():
            g = gcd(v.x - u.x, v.y - u.y)
            sx, sy = (v.x - u.x) // g, (v.y - u.y) // g
            walk.extend(LatticePoint(u.x + t * sx, u.y + t * sy) for t in range(g))
        return walk

    def contains(self, point, strict=False):
        """Whether a point with integer or rational coordinates lies in the polygon."""
        for a, b, c in self.inequalities.tolist():
            value = a * point[0] + b * point[1]
            if value > c or (strict and value == c):
                return False
        return True

    def to_json(self):
        return {"vertices": [[p.x, p.y] for p in self.vertices]}


@dataclass(frozen=True)
class RationalPolygon:
    """Convex polygon with rational vertices, counter-clockwise."""
    vertices: tuple

    def __post_init__(self):
        hull = convex_hull((Fraction(p[0]), Fraction(p[1])) for p in self.vertices)
        object.__setattr__(self, "vertices", tuple(hull))

    def is_lattice(self):
        return all(c.denominator == 1 for p in self.vertices for c in p)

    def to_lattice(self):
        """The same polygon as a LatticePolygon; fails if a vertex is not integral."""
        if not self.is_lattice():
            raise InputError(f"{self} has non-integral vertices")
        return LatticePolygon(tuple((int(x), int(y)) for x, y in self.vertices))

    def __repr__(self):
        return "conv(" + ",".join(f"({x},{y})" for x, y in self.vertices) + ")"


@dataclass(frozen=True)
class Segment:
    start: tuple
    end: tuple

    def __post_init__(self):
        for coordinate in (*self.start, *self.end):
            if not isinstance(coordinate, numbers.Rational):
                raise InputError(f"segment coordinates must be rational, got {coordinate!r}")
        if tuple(self.start) == tuple(self.end):
            raise InputError("segment endpoints must be distinct")


@dataclass(frozen=True)
class InteriorHull:
    """
    Convex hull of the interior lattice points, tagged by its dimension.

    Attributes:
        kind (str): "empty", "point", "segment" or "polygon".
        vertices (tuple): Extreme points of the hull.
    """
    kind: str
    vertices: tuple

    @property
    def dimension(self):
        return {"empty": -1, "point": 0, "segment": 1, "polygon": 2}[self.kind]

    @property
    def polygon(self):
        if self.kind != "polygon":
            raise InputError(f"interior hull is a {self.kind}, not a polygon")
        return LatticePolygon(self.vertices)


# Functions
# ---------
def lattice_points(polygon):
    return polygon.lattice_points()


def genus(polygon):
    """
    Number of interior lattice points.

    Parameters:
        polygon (LatticePolygon): Polygon.

    Returns:
        int: Genus, checked against Pick's theorem.
    """
    g = len(polygon.interior_points())
    assert polygon.area() == g + Fraction(boundary_point_count(polygon), 2) - 1
    return g


def boundary_point_count(polygon):
    return sum(gcd(v.x - u.x, v.y - u.y) for u, v in polygon.edges())


def lattice_length(segment):
    """
    Lattice length of a segment with rational endpoints.

    Parameters:
        segment (Segment or pair of points): Segment to measure.

    Returns:
        Fraction: Number of lattice points minus one for lattice segments,
        extended to rational segments by scaling.
    """
    if not isinstance(segment, Segment):
        segment = Segment(tuple(segment[0]), tuple(segment[1]))
    delta = [Fraction(b) - Fraction(a) for a, b in zip(segment.start, segment.end)]
    denominator = lcm(*(d.denominator for d in delta))
    scaled = [int(d * denominator) for d in delta]
    return Fraction(reduce(gcd, scaled), denominator)


def interior_hull(polygon):
    """
    Convex hull of the interior lattice points of a polygon.

    Parameters:
        polygon (LatticePolygon): Polygon.

    Returns:
        InteriorHull: Tagged hull (empty, point, segment or polygon).
    """
    points = polygon.interior_points()
    if not points:
        return InteriorHull("empty", ())
    hull = convex_hull(points)
    kind = {1: "point", 2: "segment"}.get(len(hull), "polygon")
    return InteriorHull(kind, tuple(LatticePoint(*p) for p in hull))


def is_hyperelliptic(polygon):
    """Whether all interior lattice points are collinear (genus at least 1)."""
    hull = interior_hull(polygon)
    if hull.kind == "empty":
        raise InputError(f"{polygon} has genus 0; hyperellipticity is undefined")
    return hull.dimension <= 1


def relaxed_polygon(polygon):
    """
    Move every edge of a polygon outwards by one lattice unit.

    Parameters:
        polygon (LatticePolygon): Two-dimensional polygon.

    Returns:
        RationalPolygon: Intersection of the relaxed half-planes.
    """
    if not isinstance(polygon, LatticePolygon):
        raise InputError(f"relaxation needs a two-dimensional polygon, got {polygon!r}")
    planes = [(a, b, c + 1) for a, b, c in polygon.inequalities.tolist()]

    corners = []
    for k, (a1, b1, c1) in enumerate(planes):
        for a2, b2, c2 in planes[k + 1:]:
            det = a1 * b2 - a2 * b1
            if det == 0:
                continue
            point = (Fraction(c1 * b2 - c2 * b1, det), Fraction(a1 * c2 - a2 * c1, det))
            if all(a * point[0] + b * point[1] <= c for a, b, c in planes):
                corners.append(point)
    return RationalPolygon(tuple(corners))


def is_maximal(polygon):
    """
    Whether a non-hyperelliptic polygon equals the relaxation of its interior polygon.
    """
    hull = interior_hull(polygon)
    if hull.kind != "polygon":
        raise InputError(f"{polygon} is hyperelliptic; maximality is only defined here for non-hyperelliptic polygons")
    return relaxed_polygon(hull.polygon).vertices == polygon.vertices


def lattice_width(polygon):
    """
    Lattice width and a primitive direction achieving it.

    Directions are searched through the integer values they take on two
    independent edge vectors, which bounds them by the width along the axes.
    """
    def width(a, b):
        values = [a * p.x + b * p.y for p in polygon.vertices]
        return max(values) - min(values)

    best = min((width(1, 0), (1, 0)), (width(0, 1), (0, 1)))
    u, v, w = polygon.vertices[:3]
    d1, d2 = (v.x - u.x, v.y - u.y), (w.x - u.x, w.y - u.y)
    det = d1[0] * d2[1] - d1[1] * d2[0]
    bound = best[0]
    for s1 in range(-bound, bound + 1):
        for s2 in range(-bound, bound + 1):
            # (a, b) . d1 = s1 and (a, b) . d2 = s2
            a_num = s1 * d2[1] - s2 * d1[1]
            b_num = s2 * d1[0] - s1 * d2[0]
            if a_num % det or b_num % det:
                continue
            a, b = a_num // det, b_num // det
            if (a, b) == (0, 0) or gcd(a, b) != 1:
                continue
            candidate = (width(a, b), (a, b) if (a, b) > (-a, -b) else (-a, -b))
            best = min(best, candidate)
    return best


def parse_polygon(text):
    """
    Parse the polygon literal "x1,y1 x2,y2 ... xn,yn".

    Parameters:
        text (str): Whitespace-separated integer pairs.

    Returns:
        LatticePolygon: Convex hull of the listed points.
    """
    points = []
    for token in text.split():
        parts = token.split(",")
        if len(parts) != 2:
            raise InputError(f"malformed point {token!r} in polygon literal {text!r}")
        try:
            points.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise InputError(f"non-integer coordinate in {token!r}")
    if len(points) < 3:
        raise InputError(f"polygon literal {text!r} needs at least three points")
    return LatticePolygon(tuple(points))


def polygon_from_json(data):
    """Polygon from {"vertices": [[x, y], ...]}, a bare list of pairs, or a JSON string."""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as error:
            raise InputError(f"invalid polygon JSON: {error}")
    if isinstance(data, dict):
        if "vertices" not in data:
            raise InputError("polygon JSON needs a 'vertices' field")
        data = data["vertices"]
    if not isinstance(data, list) or any(not isinstance(p, (list, tuple)) or len(p) != 2 for p in data):
        raise InputError("polygon vertices must be a list of [x, y] pairs")
    return LatticePolygon(tuple(tuple(p) for p in data))


def polygon_to_json(polygon):
    return polygon.to_json()
