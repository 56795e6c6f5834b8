# -*- coding: utf-8 -*-
"""
Copyright (c) 2024 Paris Brain Institute. All rights reserved.

Created on October 2026

@author: Cassandra Dumas

"""

# Modules
# -------
import unittest
from fractions import Fraction
from unittest import mock

import sympy

from LATTICE.polygon import LatticePolygon, genus
from TRIANGULATION.enumeration import Triangulation, enumerate_unimodular_triangulations
from TRIANGULATION.regularity import HeightFunction, is_regular
from TROPICAL.chain import (chain_labels, constraint_dimension, end_form, hyperelliptic_length_constraints,
                            koelman_position_map, koelman_triangulation, pare)
from TROPICAL.curve import dual_curve
from TROPICAL.skeleton import moduli_dim_oracle, sample_metric_graph, skeleton_to_json, skeletonize
from tests.helpers import (ALL_TYPE_THREE, FOUR_SIMPLEX, GENUS_FOUR_CLASS_TWO, GENUS_FOUR_NARROW,
                           GENUS_THREE_CLASS_TWO, GENUS_TWO_STRIP, GENUS_TWO_TRIANGLE, INNER_TRIANGLE,
                           ONE_TYPE_TWO, fan_triangulation, interior_samples, random_regular_triangulation,
                           regular_triangulations, seeded)
from tools.errors import InputError, NotRegularError

# Variables
# ---------
UNIT_SQUARE_POINTS = ((0, 0), (0, 1), (1, 0), (1, 1))
HYPERELLIPTIC_CORPUS = [GENUS_TWO_STRIP, GENUS_TWO_TRIANGLE, GENUS_THREE_CLASS_TWO, GENUS_FOUR_NARROW,
                        GENUS_FOUR_CLASS_TWO]


# Classes
# -------
class TestDualCurve(unittest.TestCase):

    def test_single_triangle(self):
        triangle = Triangulation(((0, 0), (0, 1), (1, 0)), ((0, 1, 2),))
        curve = dual_curve(triangle)
        self.assertEqual(len(curve.vertices), 1)
        self.assertEqual(curve.edges, [])
        self.assertEqual(len(curve.rays), 3)
        position = curve.vertex_position(HeightFunction(triangle.points, (0, 0, 0)))
        self.assertEqual(position[(0, 1, 2)], (0, 0))

    def test_unit_square_length(self):
        # diagonal (0,1)-(1,0); heights 0, 0, 0, 1 on (0,0), (0,1), (1,0), (1,1)
        square = Triangulation(UNIT_SQUARE_POINTS, ((0, 1, 2), (1, 2, 3)))
        heights = HeightFunction(square.points, (0, 0, 0, 1))
        curve = dual_curve(square, heights)
        self.assertEqual(curve.edge_lengths(heights), [Fraction(1)])

        positions = curve.vertex_position(heights)
        self.assertEqual(positions[(0, 1, 2)], (0, 0))
        self.assertEqual(positions[(1, 2, 3)], (-1, -1))
        self.assertEqual(curve.edges[0].direction, (1, 1))

    def test_non_regular_rejected(self):
        square = Triangulation(UNIT_SQUARE_POINTS, ((0, 1, 2), (1, 2, 3)))
        with mock.patch("TROPICAL.curve.is_regular", return_value=(False, None)):
            with self.assertRaises(NotRegularError):
                dual_curve(square)

    def test_lengths_positive_at_witness(self):
        for triangulation in regular_triangulations(LatticePolygon(((0, 0), (3, 0), (0, 3))), step=7):
            _, witness = is_regular(triangulation)
            curve = dual_curve(triangulation, witness)
            self.assertTrue(all(v > 0 for v in curve.edge_lengths(witness)))
            for edge in curve.edges:
                p, q = (triangulation.points[i] for i in edge.dual)
                self.assertEqual(edge.direction[0] * (q.x - p.x) + edge.direction[1] * (q.y - p.y), 0)


class TestSkeleton(unittest.TestCase):

    def test_complete_graph_on_four_nodes(self):
        triangulation = fan_triangulation(FOUR_SIMPLEX, INNER_TRIANGLE, ALL_TYPE_THREE)
        skeleton = skeletonize(dual_curve(triangulation))
        graph = skeleton.graph
        self.assertEqual((graph.number_of_nodes(), graph.number_of_edges()), (4, 6))
        self.assertTrue(skeleton.is_trivalent())
        self.assertFalse(any(u == v for u, v in graph.edges()))
        self.assertEqual(len({tuple(sorted((u, v))) for u, v in graph.edges()}), 6)

    def test_betti_number_is_genus(self):
        for polygon in HYPERELLIPTIC_CORPUS + [LatticePolygon(((1, 0), (0, 3), (3, 1)))]:
            for triangulation in regular_triangulations(polygon, step=5):
                skeleton = skeletonize(dual_curve(triangulation))
                self.assertEqual(skeleton.betti_number(), genus(polygon))
                self.assertLessEqual(skeleton.graph.number_of_edges(), 3 * genus(polygon) - 3)
                self.assertTrue(all(d >= 3 for _, d in skeleton.graph.degree()))

    def test_betti_number_random(self):
        rng = seeded(3)
        checked = 0
        for _ in range(100):
            triangulation = random_regular_triangulation(rng)
            if triangulation is None:
                continue
            skeleton = skeletonize(dual_curve(triangulation))
            self.assertEqual(skeleton.betti_number(), genus(triangulation.polygon))
            checked += 1
        self.assertGreater(checked, 0)

    def test_low_genus_rejected(self):
        square = Triangulation(UNIT_SQUARE_POINTS, ((0, 1, 2), (1, 2, 3)))
        with self.assertRaises(InputError):
            skeletonize(dual_curve(square))

    def test_json(self):
        triangulation = fan_triangulation(FOUR_SIMPLEX, INNER_TRIANGLE, ALL_TYPE_THREE)
        skeleton = skeletonize(dual_curve(triangulation))
        _, witness = is_regular(triangulation)
        data = skeleton_to_json(skeleton, sample_metric_graph(triangulation, witness))
        self.assertEqual((data["nodes"], len(data["edges"]), data["genus"]), (4, 6, 3))
        self.assertEqual(len(data["lengths"]), 6)


class TestOracle(unittest.TestCase):

    def test_worked_examples(self):
        self.assertEqual(moduli_dim_oracle(fan_triangulation(FOUR_SIMPLEX, INNER_TRIANGLE, ALL_TYPE_THREE)), 6)
        self.assertEqual(moduli_dim_oracle(fan_triangulation(FOUR_SIMPLEX, INNER_TRIANGLE, ONE_TYPE_TWO)), 5)

    def test_bounds(self):
        for polygon in HYPERELLIPTIC_CORPUS:
            g = genus(polygon)
            for triangulation in regular_triangulations(polygon, step=3):
                self.assertLessEqual(moduli_dim_oracle(triangulation), 2 * g - 1)

    def test_non_regular_rejected(self):
        triangulation = fan_triangulation(FOUR_SIMPLEX, INNER_TRIANGLE, ALL_TYPE_THREE)
        with mock.patch("TROPICAL.skeleton.is_regular", return_value=(False, None)):
            with self.assertRaises(NotRegularError):
                moduli_dim_oracle(triangulation)


class TestSampling(unittest.TestCase):

    def test_positive_and_linear(self):
        triangulation = fan_triangulation(FOUR_SIMPLEX, INNER_TRIANGLE, ONE_TYPE_TWO)
        for heights in interior_samples(triangulation, seeded(5), count=100):
            lengths = sample_metric_graph(triangulation, heights)
            self.assertTrue(all(v > 0 for v in lengths.values()))
            doubled = sample_metric_graph(triangulation, heights.scaled(2))
            self.assertEqual(doubled, {e: 2 * v for e, v in lengths.items()})

    def test_sample_rank_matches_oracle(self):
        triangulation = fan_triangulation(FOUR_SIMPLEX, INNER_TRIANGLE, ALL_TYPE_THREE)
        samples = [sample_metric_graph(triangulation, h) for h in interior_samples(triangulation, seeded(7), 40)]
        matrix = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for _, v in sorted(s.items())]
                               for s in samples])
        self.assertEqual(matrix.rank(), moduli_dim_oracle(triangulation))

    def test_outside_cone_rejected(self):
        triangulation = fan_triangulation(FOUR_SIMPLEX, INNER_TRIANGLE, ALL_TYPE_THREE)
        with self.assertRaises(InputError):
            sample_metric_graph(triangulation, [0] * len(triangulation.points))


class TestChain(unittest.TestCase):

    def test_koelman_position(self):
        for polygon in HYPERELLIPTIC_CORPUS:
            transform = koelman_position_map(polygon)
            self.assertEqual(transform.apply((1, 1)), (1, 1))
        tilted = LatticePolygon(((0, 0), (2, 2), (1, 3), (-1, 1)))
        placed = [koelman_position_map(tilted).apply(p) for p in tilted.interior_points()]
        self.assertEqual(sorted(placed), [(1, 1), (2, 1)])
        with self.assertRaises(InputError):
            koelman_position_map(FOUR_SIMPLEX)

    def test_end_forms(self):
        for triangulation in enumerate_unimodular_triangulations(GENUS_TWO_TRIANGLE):
            left = end_form(triangulation, "left")
            if left.shape == "B":
                self.assertEqual(left.k, 0)
                self.assertGreaterEqual(left.m, 3)
            self.assertEqual(end_form(triangulation, "right").shape, "A")

        shapes = set()
        for triangulation in enumerate_unimodular_triangulations(GENUS_THREE_CLASS_TWO):
            left = end_form(triangulation, "left")
            self.assertEqual(left.shape, "A")
            one = triangulation.index[(1, 1)]
            boundary = [j for j in triangulation.neighbours(one) if triangulation.points[j].y != 1]
            self.assertEqual(left.m, len(boundary))
            shapes.add(str(left))
            self.assertEqual(end_form(triangulation, "right").shape, "B")
        self.assertIn("A(2)", shapes)

    def test_paring_keeps_interior_star(self):
        for triangulation in enumerate_unimodular_triangulations(GENUS_TWO_TRIANGLE)[::4]:
            pared = pare(triangulation)
            self.assertEqual(pared.polygon.interior_points(), [(1, 1), (2, 1)])
            for point in ((1, 1), (2, 1)):
                before = {triangulation.points[j] for j in triangulation.neighbours(triangulation.index[point])}
                after = {pared.points[j] for j in pared.neighbours(pared.index[point])}
                self.assertEqual(before, after)

    def test_genus_two_labels(self):
        triangulation = enumerate_unimodular_triangulations(GENUS_TWO_STRIP)[0]
        system = hyperelliptic_length_constraints(triangulation)
        self.assertEqual(system.labels[:2], ["e", "f"])
        self.assertEqual(len(system.labels), 3)
        self.assertTrue(all(set(t) <= {"e", "f", "h_1,2", "b_1,2"} for t in system.equalities + system.inequalities))

    def test_constraints_hold_at_samples(self):
        rng = seeded(13)
        checked = 0
        for polygon in HYPERELLIPTIC_CORPUS:
            for triangulation in regular_triangulations(polygon, step=4):
                system = hyperelliptic_length_constraints(triangulation)
                placed, _, labels = chain_labels(triangulation)
                self.assertEqual(sorted(labels), sorted(system.labels))
                for heights in interior_samples(placed, rng, count=5):
                    lengths = sample_metric_graph(placed, heights)
                    values = {label: lengths[edge] for label, edge in labels.items()}
                    self.assertTrue(system.holds(values))
                    for i in range(2, system.genus):
                        self.assertEqual(values[f"u_{i}"], values[f"l_{i}"])
                    checked += 1
        self.assertGreaterEqual(checked, 100)

    def test_dimension_matches_oracle(self):
        genera = set()
        for polygon in HYPERELLIPTIC_CORPUS:
            for triangulation in regular_triangulations(polygon, step=2):
                system = hyperelliptic_length_constraints(triangulation)
                self.assertEqual(constraint_dimension(system), moduli_dim_oracle(triangulation))
                genera.add(system.genus)
        self.assertEqual(genera, {2, 3, 4})

    def test_invariant_under_placement(self):
        triangulation = enumerate_unimodular_triangulations(GENUS_THREE_CLASS_TWO)[0]
        placed = koelman_triangulation(triangulation)
        self.assertEqual(placed, triangulation)
        with self.assertRaises(InputError):
            hyperelliptic_length_constraints(fan_triangulation(FOUR_SIMPLEX, INNER_TRIANGLE, ALL_TYPE_THREE))


if __name__ == "__main__":
    unittest.main()
