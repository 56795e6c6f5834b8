# -*- coding: utf-8 -*-
"""
Copyright (c) 2024 Paris Brain Institute. All rights reserved.

Created on October 2026

@author: Cassandra Dumas

"""

# Modules
# -------
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import numpy as np

from TRIANGULATION.enumeration import edges
from TRIANGULATION.regularity import is_regular
from tools.errors import NotRegularError

logger = logging.getLogger(__name__)


# Classes
# -------
@dataclass(frozen=True)
class CurveEdge:
    """
    Bounded edge of the dual curve.

    Attributes:
        dual (tuple): Interior triangulation edge (sorted index pair).
        triangles (tuple): The two triangles whose vertices it joins.
        direction (tuple): Primitive direction, perpendicular to the dual edge.
        length (np.ndarray): Integer functional on the heights giving its lattice length.
    """
    dual: tuple
    triangles: tuple
    direction: tuple
    length: np.ndarray


@dataclass(frozen=True)
class CurveRay:
    dual: tuple
    triangle: tuple
    direction: tuple


@dataclass
class TropicalCurveModel:
    """
    Tropical curve dual to a regular unimodular triangulation, symbolic in the heights.

    Attributes:
        triangulation (Triangulation): Dual subdivision.
        vertices (dict): Triangle -> 2 x n integer matrix; the vertex is the
            matrix applied to the height vector.
        edges (list): Bounded CurveEdges.
        rays (list): Unbounded CurveRays, one per boundary edge.
        witness (HeightFunction): Heights inducing the triangulation.
    """
    triangulation: object
    vertices: dict
    edges: list
    rays: list = field(default_factory=list)
    witness: object = None

    def vertex_position(self, heights):
        values = heights.values if hasattr(heights, "values") else heights
        result = {}
        for triangle, matrix in self.vertices.items():
            result[triangle] = tuple(sum((int(c) * Fraction(v) for c, v in zip(row, values) if c), Fraction(0))
                                     for row in matrix)
        return result

    def edge_lengths(self, heights):
        values = heights.values if hasattr(heights, "values") else heights
        return [sum((int(c) * Fraction(v) for c, v in zip(e.length, values) if c), Fraction(0)) for e in self.edges]


# Functions
# ---------
def vertex_matrix(triangulation, triangle):
    """
    Symbolic position of the vertex dual to a unimodular triangle.

    The vertex X solves c_p + p.X = c_q + q.X = c_r + r.X, i.e.
    M X = (c_p - c_q, c_p - c_r) with M = [q - p; r - p] of determinant +-1.
    """
    p, q, r = triangle
    P, Q, R = (triangulation.points[i] for i in triangle)
    m00, m01 = Q.x - P.x, Q.y - P.y
    m10, m11 = R.x - P.x, R.y - P.y
    det = m00 * m11 - m01 * m10
    inverse = np.array([[m11, -m01], [-m10, m00]], dtype=np.int64) * det

    n = len(triangulation.points)
    rhs = np.zeros((2, n), dtype=np.int64)
    rhs[0, p] += 1
    rhs[0, q] -= 1
    rhs[1, p] += 1
    rhs[1, r] -= 1
    return inverse @ rhs


def dual_curve(triangulation, witness=None):
    """
    Dual tropical curve of a regular unimodular triangulation (min convention).

    Parameters:
        triangulation (Triangulation): Fine unimodular triangulation.
        witness (HeightFunction): Heights inducing it; computed when omitted.

    Returns:
        TropicalCurveModel: Vertices and edge lengths as functionals of the heights.
    """
    if witness is None:
        regular, witness = is_regular(triangulation)
        if not regular:
            raise NotRegularError("the dual curve needs a regular triangulation")

    vertices = {t: vertex_matrix(triangulation, t) for t in triangulation.triangles}
    interior, boundary = edges(triangulation)
    points = triangulation.points

    bounded = []
    for (p, q), (first, second) in interior.items():
        dx, dy = points[q].x - points[p].x, points[q].y - points[p].y
        v = np.array([-dy, dx], dtype=np.int64)
        difference = vertices[second] - vertices[first]
        length = (v @ difference) // int(v @ v)
        s = next(i for i in second if i not in (p, q))
        if length[s] < 0:
            length = -length
            first, second = second, first
        bounded.append(CurveEdge((p, q), (first, second), (int(-dy), int(dx)), length))

    rays = []
    for p, q in boundary:
        triangle = next(t for t in triangulation.triangles if p in t and q in t)
        r = next(i for i in triangle if i not in (p, q))
        dx, dy = points[q].x - points[p].x, points[q].y - points[p].y
        g = gcd(dx, dy)
        normal = (-dy // g, dx // g)
        # outward: away from the third vertex
        if normal[0] * (points[r].x - points[p].x) + normal[1] * (points[r].y - points[p].y) > 0:
            normal = (-normal[0], -normal[1])
        rays.append(CurveRay((p, q), triangle, normal))

    logger.debug("dual curve: %d vertices, %d bounded edges, %d rays", len(vertices), len(bounded), len(rays))
    return TropicalCurveModel(triangulation, vertices, bounded, rays, witness)
