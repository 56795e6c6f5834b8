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
from math import gcd

from LATTICE.polygon import LatticePoint, LatticePolygon
from tools.errors import InputError

logger = logging.getLogger(__name__)


# Classes
# -------
@dataclass(frozen=True)
class UnimodularMap:
    """
    Affine map x -> matrix . x + translation with an integer matrix of determinant +-1.

    Attributes:
        matrix (tuple): ((a, b), (c, d)).
        translation (tuple): (tx, ty).
    """
    matrix: tuple
    translation: tuple = (0, 0)

    def __post_init__(self):
        (a, b), (c, d) = self.matrix
        matrix = ((int(a), int(b)), (int(c), int(d)))
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "translation", (int(self.translation[0]), int(self.translation[1])))
        if self.determinant not in (1, -1):
            raise InputError(f"matrix {matrix} is not unimodular")

    @property
    def determinant(self):
        (a, b), (c, d) = self.matrix
        return a * d - b * c

    @classmethod
    def identity(cls):
        return cls(((1, 0), (0, 1)))

    @classmethod
    def translation_by(cls, tx, ty):
        return cls(((1, 0), (0, 1)), (tx, ty))

    def linear(self, vector):
        (a, b), (c, d) = self.matrix
        return (a * vector[0] + b * vector[1], c * vector[0] + d * vector[1])

    def apply(self, point):
        x, y = self.linear(point)
        return LatticePoint(x + self.translation[0], y + self.translation[1])

    def compose(self, other):
        """The map self o other (other applied first)."""
        (a, b), (c, d) = self.matrix
        (e, f), (g, h) = other.matrix
        matrix = ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))
        tx, ty = self.linear(other.translation)
        return UnimodularMap(matrix, (tx + self.translation[0], ty + self.translation[1]))

    def inverse(self):
        (a, b), (c, d) = self.matrix
        det = self.determinant
        matrix = ((det * d, -det * b), (-det * c, det * a))
        inverse_linear = UnimodularMap(matrix)
        tx, ty = inverse_linear.linear(self.translation)
        return UnimodularMap(matrix, (-tx, -ty))

    def to_json(self):
        return {"matrix": [list(row) for row in self.matrix], "translation": list(self.translation)}


# Functions
# ---------
def apply_unimodular(polygon, transform):
    """
    Image of a polygon under a unimodular map.

    Parameters:
        polygon (LatticePolygon): Polygon.
        transform (UnimodularMap): Map to apply.

    Returns:
        LatticePolygon: Image polygon.
    """
    return LatticePolygon(tuple(transform.apply(p) for p in polygon.vertices))


def _extended_gcd(a, b):
    if b == 0:
        return (1 if a >= 0 else -1), 0
    s, t = _extended_gcd(b, a % b)
    return t, s - (a // b) * t


def _align_map(vertex, following, preceding):
    """
    The unique map sending vertex to the origin, the primitive edge towards
    `following` to (1, 0) and the edge towards `preceding` to (p, q) with
    0 <= p < q.
    """
    ex, ey = following[0] - vertex[0], following[1] - vertex[1]
    g = gcd(ex, ey)
    ex, ey = ex // g, ey // g
    s, t = _extended_gcd(ex, ey)
    align = UnimodularMap(((s, t), (-ey, ex)))

    p, q = align.linear((preceding[0] - vertex[0], preceding[1] - vertex[1]))
    if q < 0:
        align = UnimodularMap(((1, 0), (0, -1))).compose(align)
        q = -q
    align = UnimodularMap(((1, -(p // q)), (0, 1))).compose(align)

    image = align.linear(vertex)
    return UnimodularMap(align.matrix, (-image[0], -image[1]))


def normal_form_with_map(polygon):
    """
    Canonical representative of the unimodular class of a polygon.

    Every (vertex, orientation) pair fixes one aligning map; the image with
    the smallest vertex tuple is the normal form.

    Parameters:
        polygon (LatticePolygon): Polygon.

    Returns:
        tuple: (LatticePolygon, UnimodularMap) with map(polygon) == normal form.
    """
    vertices = polygon.vertices
    n = len(vertices)
    best = None
    for i in range(n):
        for step in (1, -1):
            transform = _align_map(vertices[i], vertices[(i + step) % n], vertices[(i - step) % n])
            image = apply_unimodular(polygon, transform)
            if best is None or image.vertices < best[0].vertices:
                best = (image, transform)
    return best


def normal_form(polygon):
    return normal_form_with_map(polygon)[0]


def are_equivalent(first, second):
    return normal_form(first) == normal_form(second)


def equivalence_map(first, second):
    """
    A unimodular map sending `first` onto `second`, or None when they are inequivalent.
    """
    form_first, map_first = normal_form_with_map(first)
    form_second, map_second = normal_form_with_map(second)
    if form_first != form_second:
        return None
    return map_second.inverse().compose(map_first)
