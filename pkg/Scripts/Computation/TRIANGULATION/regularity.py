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
from fractions import Fraction
from itertools import combinations

import numpy as np

from TRIANGULATION.enumeration import Triangulation, edges, validate_triangulation
from TRIANGULATION.simplex import SimplexTableau
from tools.errors import InputError

logger = logging.getLogger(__name__)


# Classes
# -------
@dataclass(frozen=True)
class HeightFunction:
    """Rational height on each lattice point, in the point order of a triangulation."""
    points: tuple
    values: tuple

    def __post_init__(self):
        if len(self.points) != len(self.values):
            raise InputError("one height per lattice point is required")
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))

    def scaled(self, factor):
        return HeightFunction(self.points, tuple(Fraction(factor) * v for v in self.values))


@dataclass(frozen=True)
class SecondaryCone:
    """
    Fold inequalities of a triangulation: F . omega > 0 for every interior edge.

    Attributes:
        edges (tuple): Interior edges (sorted index pairs), one per row.
        inequalities (np.ndarray): Integer matrix, one primitive functional per row.
    """
    edges: tuple
    inequalities: np.ndarray

    def evaluate(self, heights):
        values = heights.values if isinstance(heights, HeightFunction) else tuple(Fraction(v) for v in heights)
        return [sum((int(c) * v for c, v in zip(row, values) if c), Fraction(0)) for row in self.inequalities]

    def contains(self, heights, strict=True):
        values = self.evaluate(heights)
        return all(v > 0 for v in values) if strict else all(v >= 0 for v in values)


# Functions
# ---------
def fold_functional(triangulation, edge, first, second):
    """
    Integer functional that is positive exactly when the lift folds upwards across an edge.

    With apices r and s on both sides of pq, unimodularity gives
    s + r = a*p + b*q with a + b = 2, and the lower hull condition reads
    omega(s) + omega(r) - a*omega(p) - b*omega(q) > 0.
    """
    p, q = edge
    r = next(i for i in first if i not in edge)
    s = next(i for i in second if i not in edge)
    P, Q, R, S = (triangulation.points[i] for i in (p, q, r, s))
    dx, dy = Q.x - P.x, Q.y - P.y
    rx, ry = S.x + R.x - 2 * P.x, S.y + R.y - 2 * P.y
    b = rx // dx if dx else ry // dy
    a = 2 - b

    row = np.zeros(len(triangulation.points), dtype=np.int64)
    row[s] += 1
    row[r] += 1
    row[p] -= a
    row[q] -= b
    return row


def secondary_cone(triangulation):
    """
    Secondary cone of a unimodular triangulation.

    Parameters:
        triangulation (Triangulation): Fine unimodular triangulation.

    Returns:
        SecondaryCone: One fold inequality per interior edge.
    """
    interior, _ = edges(triangulation)
    rows = [fold_functional(triangulation, e, *ts) for e, ts in interior.items()]
    matrix = np.array(rows, dtype=np.int64).reshape(len(rows), len(triangulation.points))
    return SecondaryCone(tuple(interior), matrix)


def is_regular(triangulation):
    """
    Decide regularity by an exact linear program.

    With w = omega + 1, maximise t subject to F.w >= t for every fold
    functional F, 0 <= w <= 2 and t <= 1. Fold functionals vanish on
    constants, so the origin is feasible and the triangulation is regular
    exactly when the optimum is positive.

    Parameters:
        triangulation (Triangulation): Fine unimodular triangulation.

    Returns:
        tuple: (bool, HeightFunction or None), the witness satisfying every
        fold inequality strictly.
    """
    cone = secondary_cone(triangulation)
    n = len(triangulation.points)
    if len(cone.edges) == 0:
        return True, HeightFunction(triangulation.points, (0,) * n)

    A, b = [], []
    for row in cone.inequalities.tolist():
        A.append([-v for v in row] + [1])
        b.append(0)
    for i in range(n):
        A.append([1 if j == i else 0 for j in range(n)] + [0])
        b.append(2)
    A.append([0] * n + [1])
    b.append(1)
    c = [0] * n + [1]

    status, optimum, solution = SimplexTableau(A, b, c).solve()
    if status != "optimal" or optimum <= 0:
        logger.debug("triangulation with %d triangles is not regular", len(triangulation.triangles))
        return False, None
    witness = HeightFunction(triangulation.points, tuple(w - 1 for w in solution[:n]))
    return True, witness


def induced_triangulation(points, heights):
    """
    Regular subdivision induced by lifting the points to the given heights.

    Parameters:
        points (sequence): Lattice points of a polygon.
        heights (sequence): One rational per point.

    Returns:
        Triangulation: Lower faces of the lift, when they form a fine
        unimodular triangulation.
    """
    points = tuple(points)
    heights = [Fraction(h) for h in heights]
    faces = []
    for i, j, k in combinations(range(len(points)), 3):
        (x1, y1), (x2, y2), (x3, y3) = points[i], points[j], points[k]
        det = (x2 - x1) * (y3 - y1) - (x3 - x1) * (y2 - y1)
        if det == 0:
            continue
        h1, h2, h3 = heights[i], heights[j], heights[k]
        a = ((h2 - h1) * (y3 - y1) - (h3 - h1) * (y2 - y1)) / det
        b = ((x2 - x1) * (h3 - h1) - (x3 - x1) * (h2 - h1)) / det
        if all(heights[l] > h1 + a * (points[l][0] - x1) + b * (points[l][1] - y1)
               for l in range(len(points)) if l not in (i, j, k)):
            faces.append((i, j, k))
    try:
        return validate_triangulation(Triangulation(points, tuple(faces)))
    except InputError:
        raise InputError("heights are not generic: the induced subdivision is not a fine unimodular triangulation")
