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

from LATTICE.polygon import cross, genus, interior_hull, is_hyperelliptic
from tools.errors import InputError

logger = logging.getLogger(__name__)


# Classes
# -------
@dataclass
class TypeClassification:
    """
    Types of the lattice points on the boundary of the interior polygon.

    Attributes:
        types (dict): Point -> 1, 2 or 3.
        targets (dict): Point -> boundary points of P it is joined to by radial edges.
    """
    types: dict
    targets: dict = field(default_factory=dict)

    @property
    def b1(self):
        return sum(1 for t in self.types.values() if t == 1)

    @property
    def b2(self):
        return sum(1 for t in self.types.values() if t == 2)

    @property
    def b3(self):
        return sum(1 for t in self.types.values() if t == 3)

    def to_json(self):
        return {"b1": self.b1, "b2": self.b2, "b3": self.b3,
                "types": [[p.x, p.y, t] for p, t in sorted(self.types.items())]}


# Functions
# ---------
def collinear(points):
    points = list(points)
    if len(points) <= 2:
        return True
    o = points[0]
    a = next((p for p in points[1:] if p != o), None)
    return a is None or all(cross(o, a, p) == 0 for p in points)


def point_type(targets):
    if len(targets) == 1:
        return 1
    return 2 if collinear(targets) else 3


def visible(cycle, k, point):
    """Whether the segment from cycle[k] to point avoids the interior of the polygon bounded by cycle."""
    c = cycle[k]
    following, preceding = cycle[(k + 1) % len(cycle)], cycle[k - 1]
    inward = cross(c, following, point) > 0 and cross(c, point, preceding) > 0
    return not inward


def _interior_cycle(polygon):
    if is_hyperelliptic(polygon):
        raise InputError(f"{polygon} is hyperelliptic; use the hyperelliptic formula")
    return interior_hull(polygon).polygon.boundary_points()


def radial_edges(triangulation):
    """
    Edges joining the boundary of the interior polygon to the boundary of P
    without entering the interior polygon.

    Parameters:
        triangulation (Triangulation): Triangulation of a non-hyperelliptic polygon.

    Returns:
        list: Pairs (interior-boundary point, boundary point), sorted.
    """
    polygon = triangulation.polygon
    cycle = _interior_cycle(polygon)
    boundary = set(polygon.boundary_points())
    index = triangulation.index

    radial = []
    for k, c in enumerate(cycle):
        for j in triangulation.neighbours(index[c]):
            b = triangulation.points[j]
            if b in boundary and visible(cycle, k, b):
                radial.append((c, b))
    return sorted(radial)


def classify_types(triangulation):
    """
    Type 1, 2 or 3 of every lattice point on the boundary of the interior polygon.

    Parameters:
        triangulation (Triangulation): Triangulation of a non-hyperelliptic polygon.

    Returns:
        TypeClassification: Types and radial targets.
    """
    cycle = _interior_cycle(triangulation.polygon)
    targets = {c: [] for c in cycle}
    for c, b in radial_edges(triangulation):
        targets[c].append(b)
    missing = [c for c, found in targets.items() if not found]
    if missing:
        raise InputError(f"points {missing} have no radial edge")
    types = {c: point_type(found) for c, found in targets.items()}
    return TypeClassification(types, {c: tuple(found) for c, found in targets.items()})


def dim_formula(triangulation):
    """
    Moduli dimension of a triangulation of a non-hyperelliptic polygon, g - 3 + b2 + 2 b3.
    """
    classification = classify_types(triangulation)
    g = genus(triangulation.polygon)
    return g - 3 + classification.b2 + 2 * classification.b3
