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
from functools import lru_cache
from itertools import islice

from LATTICE.equivalence import apply_unimodular
from LATTICE.polygon import LatticePoint
from MODULI.classification import collinear
from TRIANGULATION.enumeration import from_point_triangles, transformed, validate_triangulation
from TRIANGULATION.regularity import is_regular
from TROPICAL.chain import koelman_position_map, koelman_triangulation, placed_genus
from tools.errors import InputError
from tools.utils import load_config

logger = logging.getLogger(__name__)


# Classes
# -------
@dataclass(frozen=True)
class HyperellipticSearch:
    """
    Best triangulation found by the strip search.

    Attributes:
        dimension (int): 2g - 1 - b_e - b_m of the witness.
        witness (Triangulation): Triangulation of the input polygon (original coordinates).
        regular (bool): Whether the witness is regular.
        candidates (int): Optimal strip triangulations examined for regularity.
    """
    dimension: int
    witness: object
    regular: bool
    candidates: int


# Functions
# ---------
def outer_neighbours(placed, i, g):
    """Neighbours of (i, 1) that are not interior points of the placed triangulation."""
    index = placed.index
    found = []
    for j in placed.neighbours(index[LatticePoint(i, 1)]):
        p = placed.points[j]
        if p.y != 1 or not 1 <= p.x <= g:
            found.append(p)
    return found


def boundary_counts(triangulation):
    """
    End and middle counts of a hyperelliptic triangulation.

    Parameters:
        triangulation (Triangulation): Unimodular triangulation of a hyperelliptic polygon.

    Returns:
        tuple: (b_e, b_m). b_e counts the end interior points joined to the
        next interior point whose other neighbours are all collinear; b_m
        counts the middle interior points with exactly two such neighbours.
    """
    placed = koelman_triangulation(triangulation)
    g = placed_genus(placed)
    edge_set = placed.edge_set()
    index = placed.index

    def joined(a, b):
        return tuple(sorted((index[LatticePoint(a, 1)], index[LatticePoint(b, 1)]))) in edge_set

    b_e = 0
    for end, following in ((1, 2), (g, g - 1)):
        if joined(end, following) and collinear(outer_neighbours(placed, end, g)):
            b_e += 1
    b_m = sum(1 for i in range(2, g) if len(outer_neighbours(placed, i, g)) == 2)
    return b_e, b_m


def dim_formula_hyperelliptic(triangulation):
    """
    Moduli dimension of a triangulation of a hyperelliptic polygon, 2g - 1 - b_e - b_m.
    """
    b_e, b_m = boundary_counts(triangulation)
    g = len(triangulation.polygon.interior_points())
    return 2 * g - 1 - b_e - b_m


def _rows(polygon):
    rows = {0: [], 1: [], 2: []}
    for p in polygon.lattice_points():
        rows[p.y].append(p.x)
    return rows[0], rows[1], rows[2]


def _strip_triangles(rows, choices, g):
    bottom, middle, top = rows
    triangles = []
    lo, lo2 = 0, 0
    for j, (hi, hi2) in enumerate(choices):
        r = LatticePoint(middle[j], 1)
        triangles += [(LatticePoint(bottom[k], 0), LatticePoint(bottom[k + 1], 0), r) for k in range(lo, hi)]
        triangles += [(LatticePoint(top[k], 2), LatticePoint(top[k + 1], 2), r) for k in range(lo2, hi2)]
        if j + 1 < len(middle):
            following = LatticePoint(middle[j + 1], 1)
            triangles.append((r, following, LatticePoint(bottom[hi], 0)))
            triangles.append((r, following, LatticePoint(top[hi2], 2)))
        lo, lo2 = hi, hi2
    if middle[0] != 0:
        triangles.append((LatticePoint(bottom[0], 0), LatticePoint(top[0], 2), LatticePoint(1, 1)))
    if middle[-1] != g + 1:
        triangles.append((LatticePoint(bottom[-1], 0), LatticePoint(top[-1], 2), LatticePoint(g, 1)))
    return triangles


def hyperelliptic_search(polygon, witness_attempts=None):
    """
    Maximise 2g - 1 - b_e - b_m over triangulations containing the interior segment.

    In Koelman position such a triangulation is a zig-zag in each of the
    strips 0 <= y <= 1 and 1 <= y <= 2, plus the single triangle forced at an
    end without a boundary point on y = 1. Every point on y = 1 is assigned a
    run of neighbours on each of the two outer rows; consecutive runs share
    their last and first points. The runs are chosen by dynamic programming.

    Parameters:
        polygon (LatticePolygon): Hyperelliptic polygon of genus >= 2.
        witness_attempts (int): Optimal triangulations tested for regularity.

    Returns:
        HyperellipticSearch: Dimension and witness.
    """
    if witness_attempts is None:
        witness_attempts = load_config()["SEARCH"]["witness_attempts"]
    transform = koelman_position_map(polygon)
    placed = apply_unimodular(polygon, transform)
    g = len(placed.interior_points())
    bottom, middle, top = rows = _rows(placed)
    n = len(middle)

    def penalty(j, lo, hi, lo2, hi2):
        x = middle[j]
        if not 1 <= x <= g:
            return 0
        targets = [LatticePoint(bottom[k], 0) for k in range(lo, hi + 1)]
        targets += [LatticePoint(top[k], 2) for k in range(lo2, hi2 + 1)]
        if x == 1 and middle[0] == 0:
            targets.append(LatticePoint(0, 1))
        if x == g and middle[-1] == g + 1:
            targets.append(LatticePoint(g + 1, 1))
        if x in (1, g):
            return int(collinear(targets))
        return int(len(targets) == 2)

    def options(j, lo, lo2):
        if j == n - 1:
            return [(len(bottom) - 1, len(top) - 1)]
        return [(hi, hi2) for hi in range(lo, len(bottom)) for hi2 in range(lo2, len(top))]

    @lru_cache(maxsize=None)
    def best(j, lo, lo2):
        if j == n:
            return 0
        return min(penalty(j, lo, hi, lo2, hi2) + best(j + 1, hi, hi2) for hi, hi2 in options(j, lo, lo2))

    def optimal(j, lo, lo2):
        if j == n:
            yield []
            return
        for hi, hi2 in options(j, lo, lo2):
            if penalty(j, lo, hi, lo2, hi2) + best(j + 1, hi, hi2) == best(j, lo, lo2):
                for rest in optimal(j + 1, hi, hi2):
                    yield [(hi, hi2)] + rest

    lowest = best(0, 0, 0)
    dimension = 2 * g - 1 - lowest
    inverse = transform.inverse()

    first, examined = None, 0
    for choices in islice(optimal(0, 0, 0), max(witness_attempts, 1)):
        examined += 1
        triangles = _strip_triangles(rows, choices, g)
        candidate = validate_triangulation(from_point_triangles(placed.lattice_points(), triangles))
        candidate = transformed(candidate, inverse)
        if first is None:
            first = candidate
        if is_regular(candidate)[0]:
            logger.debug("%s: regular strip witness after %d candidates", polygon, examined)
            return HyperellipticSearch(dimension, candidate, True, examined)
    if first is None:
        raise InputError(f"no strip triangulation of {polygon}")
    logger.warning("%s: none of %d optimal strip triangulations is regular", polygon, examined)
    return HyperellipticSearch(dimension, first, False, examined)
