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

import sympy

from LATTICE.equivalence import UnimodularMap, _extended_gcd
from LATTICE.polygon import LatticePoint, is_hyperelliptic
from TRIANGULATION.enumeration import from_point_triangles, transformed
from TRIANGULATION.regularity import is_regular
from TROPICAL.curve import dual_curve
from TROPICAL.skeleton import skeletonize
from tools.errors import InputError, NotRegularError

logger = logging.getLogger(__name__)


# Classes
# -------
@dataclass(frozen=True)
class EndForm:
    """
    Shape of one end of a hyperelliptic triangulation.

    Attributes:
        shape (str): "A" or "B".
        k (int): Offset of the top corner for shape B, None for shape A.
        m (int): Number of boundary points joined to the end interior point.
    """
    shape: str
    k: object
    m: int

    def __str__(self):
        return f"A({self.m})" if self.shape == "A" else f"B_{self.k}({self.m})"


@dataclass
class ConstraintSystem:
    """
    Linear constraints on the edge lengths of a chain skeleton.

    Equalities read sum(coef * label) == 0, inequalities sum(coef * label) >= 0.
    Every label is also implicitly positive.
    """
    genus: int
    labels: list
    equalities: list = field(default_factory=list)
    inequalities: list = field(default_factory=list)
    ends: tuple = ()

    def add_equality(self, terms):
        terms = {k: v for k, v in terms.items() if v}
        if terms:
            self.equalities.append(terms)

    def add_inequality(self, terms):
        terms = {k: v for k, v in terms.items() if v}
        if terms:
            self.inequalities.append(terms)

    def holds(self, values):
        """Whether a label -> length assignment satisfies every constraint."""
        def total(terms):
            return sum((c * Fraction(values[k]) for k, c in terms.items()), Fraction(0))
        return (all(Fraction(values[k]) > 0 for k in self.labels)
                and all(total(t) == 0 for t in self.equalities)
                and all(total(t) >= 0 for t in self.inequalities))

    def equality_matrix(self):
        column = {label: j for j, label in enumerate(self.labels)}
        rows = [[0] * len(self.labels) for _ in self.equalities]
        for row, terms in zip(rows, self.equalities):
            for label, c in terms.items():
                row[column[label]] += c
        return sympy.Matrix(len(rows), len(self.labels), [v for row in rows for v in row])

    def to_json(self):
        return {"genus": self.genus, "labels": list(self.labels),
                "ends": [str(e) for e in self.ends],
                "equalities": self.equalities, "inequalities": self.inequalities,
                "dimension": constraint_dimension(self)}


# Functions
# ---------
def koelman_position_map(polygon):
    """
    Unimodular map placing a hyperelliptic polygon with interior points
    (1, 1), ..., (g, 1) inside the strip 0 <= y <= 2.

    Parameters:
        polygon (LatticePolygon): Hyperelliptic polygon of genus >= 2.

    Returns:
        UnimodularMap: The placing map.
    """
    interior = polygon.interior_points()
    if len(interior) < 2:
        raise InputError(f"{polygon} has genus {len(interior)}; at least 2 is required")
    if not is_hyperelliptic(polygon):
        raise InputError(f"{polygon} is not hyperelliptic")

    p1, p2 = interior[0], interior[1]
    dx, dy = p2[0] - p1[0], p2[1] - p1[1]
    s, t = _extended_gcd(dx, dy)
    if s * dx + t * dy < 0:
        s, t = -s, -t
    align = UnimodularMap(((s, t), (-dy, dx)))
    x, y = align.linear(p1)
    transform = UnimodularMap(align.matrix, (1 - x, 1 - y))

    ys = [transform.apply(v).y for v in polygon.vertices]
    if (min(ys), max(ys)) != (0, 2):
        raise InputError(f"{polygon} does not fit the strip 0 <= y <= 2 around its interior line")
    return transform


def koelman_triangulation(triangulation):
    """Image of a triangulation of a hyperelliptic polygon in Koelman position."""
    return transformed(triangulation, koelman_position_map(triangulation.polygon))


def placed_genus(triangulation):
    g = len(triangulation.polygon.interior_points())
    expected = [LatticePoint(i, 1) for i in range(1, g + 1)]
    if triangulation.polygon.interior_points() != expected:
        raise InputError("triangulation is not in Koelman position")
    return g


def pare(triangulation):
    """
    Remove the triangles that do not meet the interior segment.

    A triangle with no interior vertex whose slice at y = 1 misses the open
    segment from (1, 1) to (g, 1) only contributes trees to the dual curve.

    Parameters:
        triangulation (Triangulation): Triangulation in Koelman position.

    Returns:
        Triangulation: Triangulation of the pared polygon P'.
    """
    g = placed_genus(triangulation)
    points = triangulation.points
    interior = {LatticePoint(i, 1) for i in range(1, g + 1)}

    kept = []
    for t in triangulation.triangles:
        corners = [points[i] for i in t]
        if interior & set(corners):
            kept.append(corners)
            continue
        xs = []
        for a in range(3):
            p, q = corners[a], corners[(a + 1) % 3]
            if p.y == 1:
                xs.append(Fraction(p.x))
            if (p.y - 1) * (q.y - 1) < 0:
                xs.append(p.x + Fraction(q.x - p.x) * Fraction(1 - p.y, q.y - p.y))
        if xs and max(xs) > 1 and min(xs) < g:
            kept.append(corners)

    used = sorted({p for corners in kept for p in corners})
    pared = from_point_triangles(used, kept)
    if sorted(pared.polygon.lattice_points()) != used or len(kept) != 2 * pared.polygon.area():
        raise InputError("pared triangles do not triangulate a convex polygon")
    logger.debug("pared %d of %d triangles", len(triangulation.triangles) - len(kept), len(triangulation.triangles))
    return pared


def _left_end(pared):
    points = set(pared.points)
    one = pared.index[LatticePoint(1, 1)]
    m = sum(1 for j in pared.neighbours(one) if pared.points[j].y != 1 or pared.points[j].x < 1)
    x0 = min(p.x for p in points if p.y == 0)
    x2 = min(p.x for p in points if p.y == 2)
    if LatticePoint(0, 1) in points:
        if m < 3:
            raise InputError(f"shape B end with only {m} boundary neighbours")
        return EndForm("B", x0 + x2, m)
    if x0 + x2 != 1:
        raise InputError("unrecognised end shape; the polygon is not in Koelman position")
    if m < 2:
        raise InputError(f"shape A end with only {m} boundary neighbours")
    return EndForm("A", None, m)


def _reflected(pared, g):
    return transformed(pared, UnimodularMap(((-1, 0), (0, 1)), (g + 1, 0)))


def end_form(triangulation, side="left"):
    """
    Form A(m) or B_k(m) of one end of a triangulation in Koelman position.

    Parameters:
        triangulation (Triangulation): Triangulation in Koelman position.
        side (str): "left" for the end at (1, 1), "right" for the end at (g, 1).

    Returns:
        EndForm: Shape, offset and boundary degree of the end point.
    """
    pared = pare(triangulation)
    if side == "right":
        pared = _reflected(pared, placed_genus(triangulation))
    elif side != "left":
        raise InputError(f"side must be 'left' or 'right', got {side!r}")
    return _left_end(pared)


def _join_label(edge_set, index, i):
    a, b = index.get(LatticePoint(i, 1)), index.get(LatticePoint(i + 1, 1))
    return f"h_{i},{i + 1}" if tuple(sorted((a, b))) in edge_set else f"b_{i},{i + 1}"


def _row_extent(pared, i, row):
    point = pared.index[LatticePoint(i, 1)]
    xs = [pared.points[j].x for j in pared.neighbours(point) if pared.points[j].y == row]
    return min(xs), max(xs)


def _end_constraint(system, form, end, join):
    if not join.startswith("h"):
        return
    if form.shape == "A" and form.m == 2:
        system.add_equality({end: 1, join: -2})
    elif form.shape == "B" and form.k == 0 and form.m == 3:
        system.add_equality({end: 1, join: -1})
    elif (form.shape == "B" and form.k == 0 and form.m == 4) or (form.shape == "B" and form.k == 1 and form.m == 3):
        system.add_inequality({end: 1, join: -1})
        system.add_inequality({join: 2, end: -1})
    else:
        system.add_inequality({end: 1, join: -1})


def hyperelliptic_length_constraints(triangulation):
    """
    Constraints on the chain skeleton of a hyperelliptic triangulation.

    Labels: e and f for the end cycles, u_i and l_i for the upper and lower
    arcs of the middle cycles, h_i,i+1 for the edge shared by consecutive
    cycles or b_i,i+1 for the bridge joining them.

    Parameters:
        triangulation (Triangulation): Unimodular triangulation of a hyperelliptic polygon.

    Returns:
        ConstraintSystem: Equalities and inequalities on the labels.
    """
    triangulation = koelman_triangulation(triangulation)
    pared = pare(triangulation)
    g = placed_genus(triangulation)
    edge_set = pared.edge_set()

    joins = [_join_label(edge_set, pared.index, i) for i in range(1, g)]
    middle = [label for i in range(2, g) for label in (f"u_{i}", f"l_{i}")]
    system = ConstraintSystem(g, ["e", "f"] + middle + joins)

    for i in range(2, g):
        system.add_equality({f"u_{i}": 1, f"l_{i}": -1})
        sw, se = _row_extent(pared, i, 0)
        nw, ne = _row_extent(pared, i, 2)
        left, right = joins[i - 2], joins[i - 1]
        # h_{i,i+1} - h_{i-1,i} lies in [(2i - NE - SE) u, (2i - NW - SW) u]; bridges contribute 0
        difference = {}
        if right.startswith("h"):
            difference[right] = difference.get(right, 0) + 1
        if left.startswith("h"):
            difference[left] = difference.get(left, 0) - 1
        low, high = 2 * i - ne - se, 2 * i - nw - sw
        if low == high:
            system.add_equality({**difference, f"u_{i}": difference.get(f"u_{i}", 0) - low})
        else:
            system.add_inequality({**difference, f"u_{i}": -low})
            system.add_inequality({**{k: -v for k, v in difference.items()}, f"u_{i}": high})

    left_form = _left_end(pared)
    right_form = _left_end(_reflected(pared, g))
    system.ends = (left_form, right_form)
    _end_constraint(system, left_form, "e", joins[0])
    _end_constraint(system, right_form, "f", joins[-1])
    logger.debug("chain constraints for genus %d: ends %s, %s", g, left_form, right_form)
    return system


def constraint_dimension(system):
    """Dimension of the length cone: number of labels minus the rank of the equalities."""
    if not system.equalities:
        return len(system.labels)
    return len(system.labels) - int(system.equality_matrix().rank())


def chain_labels(triangulation):
    """
    Match the skeleton edges of a hyperelliptic triangulation with chain labels.

    Parameters:
        triangulation (Triangulation): Regular triangulation of a hyperelliptic polygon.

    Returns:
        tuple: (placed triangulation, skeleton, dict label -> skeleton edge).
    """
    placed = koelman_triangulation(triangulation)
    regular, witness = is_regular(placed)
    if not regular:
        raise NotRegularError("chain labels need a regular triangulation")
    skeleton = skeletonize(dual_curve(placed, witness))
    g = skeleton.genus
    points = placed.points

    labels = {}
    for edge in skeleton.edge_list():
        members = skeleton.graph.edges[edge]["members"]
        ends = [(points[p], points[q]) for p, q in members]
        joins = [(a, b) for a, b in ends if a.y == b.y == 1 and 1 <= min(a.x, b.x) and max(a.x, b.x) <= g]
        if joins:
            a, b = joins[0]
            label = f"h_{min(a.x, b.x)},{max(a.x, b.x)}"
        else:
            touched = {p for a, b in ends for p in (a, b) if p.y == 1 and 1 <= p.x <= g}
            if not touched:
                label = None
            else:
                i = min(p.x for p in touched)
                other = {p.y for a, b in ends for p in (a, b) if p.y != 1}
                if i == 1:
                    label = "e"
                elif i == g:
                    label = "f"
                else:
                    label = f"u_{i}" if other == {2} else f"l_{i}"
        if label is None:
            xs = sorted({p.x for a, b in ends for p in (a, b)})
            # a bridge crosses y = 1 strictly between two consecutive interior points
            crossings = [Fraction(a.x + b.x, 2) for a, b in ends if a.y + b.y == 2 and a.y != 1]
            i = int(min(crossings)) if crossings else xs[0]
            label = f"b_{i},{i + 1}"
        labels[label] = edge
    return placed, skeleton, labels
