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

from LATTICE.equivalence import normal_form
from LATTICE.polygon import (LatticePolygon, boundary_point_count, genus, interior_hull, is_hyperelliptic,
                             relaxed_polygon)
from MODULI.koelman import HyperellipticForm, koelman_template
from MODULI.maximal import is_interior_trapezoid, trapezoid
from tools.errors import InputError

logger = logging.getLogger(__name__)


# Classes
# -------
@dataclass(frozen=True)
class RangeBounds:
    """
    Smallest and largest moduli dimension of non-hyperelliptic polygons of genus g.
    """
    g: int
    lower: int
    upper: int

    def to_json(self):
        return {"genus": self.g, "lower": self.lower, "upper": self.upper}


@dataclass(frozen=True)
class ThreePointTriangle:
    """conv((0,0), (0,1), (2g+1, b)), a genus g triangle with three boundary points."""
    b: int
    polygon: LatticePolygon
    hyperelliptic: bool


@dataclass(frozen=True)
class TrapezoidFamily:
    """
    Trapezoid T_{a,b} and its relaxation.

    Attributes:
        trapezoid (LatticePolygon): conv((0,0), (0,1), (b,0), (a,1)).
        relaxation (LatticePolygon or RationalPolygon): Edges moved out by one.
        interior (bool): Whether the relaxation is a lattice polygon with interior polygon T_{a,b}.
    """
    trapezoid: LatticePolygon
    relaxation: object
    interior: bool


# Functions
# ---------
def bounds(g):
    """Range [l(g), u(g)] of moduli dimensions of non-hyperelliptic genus g polygons."""
    if g < 3:
        raise InputError(f"non-hyperelliptic polygons have genus >= 3, got {g}")
    lower = g + 1 if g in (4, 7) else g
    upper = 2 * g if g == 3 else 2 * g + 2 if g == 7 else 2 * g + 1
    return RangeBounds(g, lower, upper)


def _check(polygon, g, hyperelliptic=False):
    if genus(polygon) != g or is_hyperelliptic(polygon) != hyperelliptic:
        raise InputError(f"generated {polygon} does not have genus {g} and hyperelliptic={hyperelliptic}")
    return polygon


def dim_g_triangle(g):
    """
    Non-hyperelliptic triangle of genus g with exactly three boundary points.

    Parameters:
        g (int): Genus, at least 3 and not 4 or 7.

    Returns:
        LatticePolygon: Triangle of moduli dimension g.
    """
    if g < 3:
        raise InputError(f"non-hyperelliptic polygons have genus >= 3, got {g}")
    if g in (4, 7):
        raise InputError(f"no non-hyperelliptic triangle of genus {g} has three boundary points")
    if g % 3 == 0:
        k = g // 3
        polygon = LatticePolygon(((1, 0), (0, 3), (2 * k + 1, 1)))
    elif g % 3 == 2:
        k = (g - 2) // 3
        polygon = LatticePolygon(((0, 0), (1, 3), (2 * k + 2, 1)))
    else:
        polygon = None
        for b in range(4, (2 * g + 1) // 2 + 1):
            if gcd(b, 2 * g + 1) != 1 or gcd(b - 1, 2 * g + 1) != 1:
                continue
            candidate = LatticePolygon(((0, 0), (0, 1), (2 * g + 1, b)))
            if not is_hyperelliptic(candidate):
                polygon = candidate
                break
        if polygon is None:
            raise InputError(f"no admissible third vertex found for genus {g}")
    if boundary_point_count(polygon) != 3:
        raise InputError(f"generated {polygon} has {boundary_point_count(polygon)} boundary points")
    return _check(polygon, g)


def three_boundary_point_triangles(g):
    """
    Every genus g triangle with exactly three boundary points, up to equivalence.

    Such a triangle is equivalent to conv((0,0), (0,1), (2g+1, b)) with b and
    b - 1 both coprime to 2g + 1.

    Returns:
        list: ThreePointTriangle per equivalence class, smallest b first.
    """
    if g < 1:
        raise InputError(f"genus must be positive, got {g}")
    found, seen = [], set()
    for b in range(0, 2 * g + 1):
        if gcd(b, 2 * g + 1) != 1 or gcd(b - 1, 2 * g + 1) != 1:
            continue
        polygon = LatticePolygon(((0, 0), (0, 1), (2 * g + 1, b)))
        key = normal_form(polygon)
        if key in seen:
            continue
        seen.add(key)
        found.append(ThreePointTriangle(b, polygon, is_hyperelliptic(polygon)))
    logger.debug("genus %d: third vertices %s", g, [t.b for t in found])
    return found


def _chain_ends(g):
    h = g // 2
    if g % 2 == 0:
        return (LatticePolygon(((0, 0), (0, 3), (h + 1, 0), (h + 1, 3))),
                LatticePolygon(((1, 0), (0, 3), (h + 1, 1), (h + 1, 2))))
    return (LatticePolygon(((0, 0), (0, 3), (h + 3, 0), (h, 3))),
            LatticePolygon(((1, 0), (0, 3), (h + 2, 1), (h + 1, 2))))


def interpolation_chain(g):
    """
    Polygons from the top of the genus g range down to dimension g + 1, one lattice point apart.

    The first polygon is a 3-high rectangle (even g) or trapezoid (odd g), the
    last one is Q. Each step drops the lexicographically smallest vertex that
    keeps the interior points and still contains Q, backtracking on dead ends.

    Parameters:
        g (int): Genus, at least 3.

    Returns:
        list: LatticePolygons, consecutive ones differing by one lattice point.
    """
    if g < 3:
        raise InputError(f"the interpolation chain starts at genus 3, got {g}")
    first, last = _chain_ends(g)
    interior = first.interior_points()
    target = set(last.lattice_points())
    if last.interior_points() != interior or not target <= set(first.lattice_points()):
        raise InputError(f"chain ends for genus {g} are inconsistent")

    def descend(polygon):
        points = set(polygon.lattice_points())
        if points == target:
            return [polygon]
        for vertex in sorted(polygon.vertices):
            if vertex in target:
                continue
            smaller = LatticePolygon(tuple(points - {vertex}))
            if smaller.interior_points() != interior:
                continue
            rest = descend(smaller)
            if rest is not None:
                return [polygon] + rest
        return None

    chain = descend(first)
    if chain is None:
        raise InputError(f"no removal order joins {first} to {last}")
    logger.debug("genus %d: interpolation chain of %d polygons", g, len(chain))
    return chain


def koelman_generate(cls, params, g):
    """
    Koelman template polygon.

    Parameters:
        cls (str): "1", "2a", "2b", "3a" or "3b".
        params (dict): Parameters i and, where the class uses them, j and k.
        g (int): Genus.

    Returns:
        LatticePolygon: Template, validated.
    """
    return _check(koelman_template(HyperellipticForm(cls, **params), g), g, hyperelliptic=True)


def trapezoid_family(a, b):
    """
    Trapezoid T_{a,b} and its relaxation.

    Parameters:
        a (int): Top length.
        b (int): Bottom length.

    Returns:
        TrapezoidFamily: The trapezoid, its relaxation and whether T_{a,b} is
        the interior polygon of that relaxation.
    """
    inner = trapezoid(a, b)
    relaxation = relaxed_polygon(inner)
    interior = False
    if relaxation.is_lattice():
        relaxation = relaxation.to_lattice()
        hull = interior_hull(relaxation)
        interior = hull.kind == "polygon" and hull.polygon == inner
    if interior != is_interior_trapezoid(a, b):
        logger.warning("T_%d,%d: relaxation check and a >= b/2 - 1 disagree", a, b)
    return TrapezoidFamily(inner, relaxation, interior)
