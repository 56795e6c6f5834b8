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

import networkx as nx
import numpy as np
import sympy

from LATTICE.polygon import genus
from TRIANGULATION.regularity import HeightFunction, is_regular, secondary_cone
from TROPICAL.curve import dual_curve
from tools.errors import InputError, NotRegularError

logger = logging.getLogger(__name__)


# Classes
# -------
@dataclass
class Skeleton:
    """
    Metric multigraph left after removing rays and leaves and smoothing 2-valent nodes.

    Attributes:
        graph (nx.MultiGraph): Nodes are triangles of the dual triangulation.
            Every edge carries "kappa", the integer functional on the heights
            giving its length, and "members", the interior triangulation edges
            whose curve edges were concatenated into it.
        genus (int): Genus of the polygon.
    """
    graph: nx.MultiGraph
    genus: int

    @property
    def kappa(self):
        return {(u, v, k): d["kappa"] for u, v, k, d in self.graph.edges(keys=True, data=True)}

    def edge_list(self):
        return sorted(self.graph.edges(keys=True), key=lambda e: (min(e[0], e[1]), max(e[0], e[1]), e[2]))

    def functional_matrix(self):
        n = len(self.graph.graph["points"])
        rows = [self.graph.edges[e]["kappa"] for e in self.edge_list()]
        return np.array(rows, dtype=np.int64).reshape(len(rows), n)

    def betti_number(self):
        return self.graph.number_of_edges() - self.graph.number_of_nodes() + nx.number_connected_components(self.graph)

    def is_trivalent(self):
        return all(d == 3 for _, d in self.graph.degree())


# Functions
# ---------
def _prune_leaves(graph):
    leaves = [n for n, d in graph.degree() if d <= 1]
    while leaves:
        for node in leaves:
            logger.debug("pruning leaf node: %s", node)
            graph.remove_node(node)
        leaves = [n for n, d in graph.degree() if d <= 1]


def _smooth(graph):
    while True:
        node = next((n for n, d in graph.degree() if d == 2 and not graph.has_edge(n, n)), None)
        if node is None:
            return
        (_, u, a), (_, w, b) = graph.edges(node, data=True)
        logger.debug("smoothing node %s between %s and %s", node, u, w)
        graph.remove_node(node)
        graph.add_edge(u, w, kappa=a["kappa"] + b["kappa"], members=a["members"] + b["members"])


def skeletonize(curve):
    """
    Skeleton of a tropical curve.

    Rays are never added; leaves are removed to a fixpoint and then
    2-valent nodes are smoothed, adding the length functionals of the two
    edges they join.

    Parameters:
        curve (TropicalCurveModel): Dual curve of a regular triangulation.

    Returns:
        Skeleton: Minimal skeleton, its Betti number equal to the genus.
    """
    triangulation = curve.triangulation
    g = genus(triangulation.polygon)
    if g <= 1:
        raise InputError(f"skeletons are only defined here for genus >= 2, got {g}")

    graph = nx.MultiGraph(points=triangulation.points)
    graph.add_nodes_from(curve.vertices)
    for edge in curve.edges:
        graph.add_edge(*edge.triangles, kappa=np.array(edge.length, dtype=np.int64), members=[edge.dual])

    _prune_leaves(graph)
    _smooth(graph)

    skeleton = Skeleton(graph, g)
    if skeleton.betti_number() != g:
        raise InputError(f"skeleton has Betti number {skeleton.betti_number()}, expected {g}")
    logger.debug("skeleton: %d nodes, %d edges", graph.number_of_nodes(), graph.number_of_edges())
    return skeleton


def _regular_skeleton(triangulation):
    regular, witness = is_regular(triangulation)
    if not regular:
        raise NotRegularError("the moduli dimension is computed for regular triangulations only")
    return skeletonize(dual_curve(triangulation, witness)), witness


def moduli_dim_oracle(triangulation):
    """
    Dimension of the cone of skeleton edge lengths realised by a triangulation.

    The secondary cone of a regular triangulation is full-dimensional, so the
    dimension of its image is the rank of the stacked length functionals.

    Parameters:
        triangulation (Triangulation): Regular fine unimodular triangulation.

    Returns:
        int: Exact rank over the rationals.
    """
    skeleton, _ = _regular_skeleton(triangulation)
    matrix = skeleton.functional_matrix()
    rank = sympy.Matrix(matrix.tolist()).rank()
    logger.debug("oracle rank %d from %d skeleton edges", rank, matrix.shape[0])
    return int(rank)


def sample_metric_graph(triangulation, heights):
    """
    Edge lengths of the skeleton of the curve induced by a height function.

    Parameters:
        triangulation (Triangulation): Regular fine unimodular triangulation.
        heights (HeightFunction or sequence): Point strictly inside the secondary cone.

    Returns:
        dict: Skeleton edge (u, v, key) -> positive Fraction.
    """
    if not isinstance(heights, HeightFunction):
        heights = HeightFunction(triangulation.points, tuple(heights))
    if not secondary_cone(triangulation).contains(heights, strict=True):
        raise InputError("heights must lie strictly inside the secondary cone")
    skeleton = skeletonize(dual_curve(triangulation, heights))
    return {e: sum((int(c) * v for c, v in zip(skeleton.graph.edges[e]["kappa"], heights.values) if c), Fraction(0))
            for e in skeleton.edge_list()}


def skeleton_to_json(skeleton, lengths=None):
    nodes = sorted(skeleton.graph.nodes())
    position = {n: i for i, n in enumerate(nodes)}
    data = {"nodes": len(nodes),
            "edges": [[position[u], position[v]] for u, v, _ in skeleton.edge_list()],
            "genus": skeleton.genus}
    if lengths is not None:
        data["lengths"] = [str(lengths[e]) for e in skeleton.edge_list()]
    return data
