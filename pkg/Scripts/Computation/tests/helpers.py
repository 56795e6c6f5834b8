# -*- coding: utf-8 -*-
"""
Copyright (c) 2024 Paris Brain Institute. All rights reserved.

Created on October 2026

@author: Cassandra Dumas

"""

# Modules
# -------
from fractions import Fraction

import numpy as np

from LATTICE.equivalence import UnimodularMap
from LATTICE.polygon import LatticePolygon
from TRIANGULATION.enumeration import (enumerate_unimodular_triangulations, refine_to_unimodular,
                                       unimodular_flips)
from TRIANGULATION.regularity import HeightFunction, is_regular, secondary_cone
from tools.errors import InputError

# Variables
# ---------
GENERATORS = [UnimodularMap(((1, 1), (0, 1))), UnimodularMap(((1, 0), (1, 1))),
              UnimodularMap(((0, 1), (1, 0))), UnimodularMap(((1, -1), (0, 1))),
              UnimodularMap(((-1, 0), (0, 1)))]

FOUR_SIMPLEX = LatticePolygon(((0, 0), (4, 0), (0, 4)))
INNER_TRIANGLE = ((1, 1), (2, 1), (1, 2))
ALL_TYPE_THREE = {(1, 1): [(0, 2), (0, 1), (0, 0), (1, 0), (2, 0)],
                  (2, 1): [(2, 0), (3, 0), (4, 0), (3, 1), (2, 2)],
                  (1, 2): [(2, 2), (1, 3), (0, 4), (0, 3), (0, 2)]}
ONE_TYPE_TWO = {(1, 1): [(0, 0), (1, 0), (2, 0)],
                (2, 1): [(2, 0), (3, 0), (4, 0), (3, 1), (2, 2)],
                (1, 2): [(2, 2), (1, 3), (0, 4), (0, 3), (0, 2), (0, 1), (0, 0)]}

# Hyperelliptic polygons already in Koelman position
GENUS_TWO_STRIP = LatticePolygon(((0, 0), (4, 0), (1, 2), (0, 2)))
GENUS_TWO_TRIANGLE = LatticePolygon(((0, 0), (5, 0), (0, 2)))
GENUS_THREE_CLASS_TWO = LatticePolygon(((0, 0), (2, 0), (4, 1), (2, 2), (1, 2)))
GENUS_FOUR_NARROW = LatticePolygon(((0, 0), (1, 0), (5, 1), (1, 2)))
GENUS_FOUR_CLASS_TWO = LatticePolygon(((0, 0), (2, 0), (5, 1), (2, 2), (1, 2)))


# Functions
# ---------
def random_polygon(rng, size=4, count=6):
    """Hull of random points in a box; redrawn until two-dimensional."""
    while True:
        points = rng.integers(0, size + 1, size=(count, 2)).tolist()
        try:
            return LatticePolygon(tuple(map(tuple, points)))
        except InputError:
            continue


def random_unimodular_map(rng, length=4):
    transform = UnimodularMap.translation_by(*rng.integers(-3, 4, size=2).tolist())
    for index in rng.integers(0, len(GENERATORS), size=length):
        transform = GENERATORS[int(index)].compose(transform)
    return transform


def seeded(seed=0):
    return np.random.default_rng(seed)


def fan_triangulation(polygon, inner, radial):
    """
    Triangulation containing the given interior-hull edges and radial fans.

    Parameters:
        polygon (LatticePolygon): Polygon.
        inner (sequence): Vertices of the interior hull, in cyclic order.
        radial (dict): Interior-hull vertex -> boundary points it is joined to.
    """
    required = [(inner[k], inner[(k + 1) % len(inner)]) for k in range(len(inner))]
    required += [(c, b) for c, targets in radial.items() for b in targets]
    return refine_to_unimodular(polygon, required)


def regular_triangulations(polygon, step=1):
    """Every step-th regular triangulation of a polygon, in canonical order."""
    found = enumerate_unimodular_triangulations(polygon)[::step]
    return [t for t in found if is_regular(t)[0]]


def interior_samples(triangulation, rng, count=20):
    """Height functions strictly inside the secondary cone of a regular triangulation."""
    regular, witness = is_regular(triangulation)
    if not regular:
        raise ValueError("triangulation is not regular")
    cone = secondary_cone(triangulation)
    samples = []
    while len(samples) < count:
        noise = rng.integers(-5, 6, size=len(triangulation.points)).tolist()
        scale = Fraction(1, 100)
        while True:
            heights = HeightFunction(triangulation.points,
                                     tuple(w + scale * r for w, r in zip(witness.values, noise)))
            if cone.contains(heights):
                break
            scale /= 2
        samples.append(heights)
    return samples


def random_regular_triangulation(rng, size=4, flips=5):
    """A regular triangulation of a random polygon of genus >= 2, or None."""
    polygon = random_polygon(rng, size=size)
    if len(polygon.interior_points()) < 2:
        return None
    triangulation = refine_to_unimodular(polygon)
    for _ in range(flips):
        options = unimodular_flips(triangulation)
        if not options:
            break
        triangulation = options[int(rng.integers(0, len(options)))]
    return triangulation if is_regular(triangulation)[0] else None
