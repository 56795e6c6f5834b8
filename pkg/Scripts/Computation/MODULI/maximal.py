# -*- coding: utf-8 -*-
"""
Copyright (c) 2024 Paris Brain Institute. All rights reserved.

Created on October 2026

@author: Cassandra Dumas

"""

# Modules
# -------
import logging
from math import ceil

from LATTICE.polygon import LatticePolygon, genus, interior_hull, relaxed_polygon
from tools.errors import InputError

logger = logging.getLogger(__name__)


# Functions
# ---------
def trapezoid(a, b):
    """T_{a,b} = conv((0,0), (0,1), (b,0), (a,1)) for 0 <= a <= b, b >= 1."""
    if not (0 <= a <= b and b >= 1):
        raise InputError(f"trapezoid parameters need 0 <= a <= b and b >= 1, got a={a}, b={b}")
    return LatticePolygon(((0, 0), (0, 1), (b, 0), (a, 1)))


def is_interior_trapezoid(a, b):
    """Whether the relaxation of T_{a,b} is a lattice polygon with interior polygon T_{a,b}."""
    return 2 * a >= b - 2


def maximal_trapezoid_dim(a, b):
    """
    Moduli dimension of the maximal polygon whose interior polygon is T_{a,b}.

    The relaxation has genus g = a + b + 2 and its dimension is
    min(2g + 1, g + 2a + 4).

    Parameters:
        a (int): Top length, at least 1.
        b (int): Bottom length, a <= b <= 2a + 2.

    Returns:
        int: Dimension of the relaxed polygon.
    """
    if a < 1:
        raise InputError(f"the trapezoid family starts at a = 1, got a={a}")
    if not is_interior_trapezoid(a, b):
        raise InputError(f"T_{a},{b} is not an interior polygon: a >= b/2 - 1 is required")
    inner = trapezoid(a, b)
    relaxation = relaxed_polygon(inner).to_lattice()
    hull = interior_hull(relaxation)
    if hull.kind != "polygon" or hull.polygon != inner:
        raise InputError(f"the relaxation of T_{a},{b} does not have T_{a},{b} as interior polygon")
    g = genus(relaxation)
    return min(2 * g + 1, g + 2 * a + 4)


def achievable_dims_maximal_g1zero(g):
    """
    Dimensions of maximal polygons of genus g whose interior polygon is a trapezoid T_{a,b}.

    Parameters:
        g (int): Genus, at least 7.

    Returns:
        set: Values of maximal_trapezoid_dim over ceil((g - 4) / 3) <= a <= (g - 2) / 2, b = g - 2 - a.
    """
    if g < 7:
        raise InputError(f"the trapezoid description of maximal polygons holds for g >= 7, got {g}")
    dims = {maximal_trapezoid_dim(a, g - 2 - a) for a in range(max(1, ceil((g - 4) / 3)), (g - 2) // 2 + 1)}
    logger.debug("genus %d: maximal trapezoid dimensions %s", g, sorted(dims))
    return dims
