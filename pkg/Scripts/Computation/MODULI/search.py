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
from functools import partial

from joblib import Parallel, delayed

from LATTICE.polygon import cross, genus, interior_hull, is_hyperelliptic
from MODULI.classification import classify_types, dim_formula, point_type, visible
from MODULI.hyperelliptic import dim_formula_hyperelliptic, hyperelliptic_search
from MODULI.koelman import dim_hyperelliptic_closed_form, koelman_classify
from TRIANGULATION.enumeration import (enumerate_unimodular_triangulations, from_point_triangles,
                                       refine_to_unimodular, validate_triangulation)
from TRIANGULATION.regularity import is_regular
from TROPICAL.skeleton import moduli_dim_oracle
from tools.errors import InputError, NotRegularError, OracleDisagreementError, ResourceCapError
from tools.utils import load_config

logger = logging.getLogger(__name__)

# Variables
# ---------
METHODS = ("formula", "oracle", "auto", "closed-form")


# Classes
# -------
@dataclass
class AnnulusFilling:
    """
    Triangles between the boundary of P and the boundary of the interior polygon.

    Attributes:
        triangles (tuple): Point triples, every edge from the inner to the outer boundary radial.
        targets (dict): Inner boundary point -> outer boundary points it is joined to.
        score (int): b2 + 2 b3 of the filling.
    """
    triangles: tuple
    targets: dict
    score: int


@dataclass
class ModuliReport:
    """
    Moduli dimension of a polygon with the triangulation realising it.

    Attributes:
        polygon (LatticePolygon): Input polygon.
        dimension (int): Maximum over its fine unimodular triangulations.
        witness (Triangulation): Maximising triangulation, None for closed forms.
        method (str): "formula", "oracle", "auto" or "closed-form".
        notes (list): Confirmation status and caveats.
    """
    polygon: object
    dimension: int
    witness: object = None
    method: str = "formula"
    notes: list = field(default_factory=list)

    def to_json(self):
        return {"polygon": [[p.x, p.y] for p in self.polygon.vertices],
                "dimension": self.dimension,
                "method": self.method,
                "witness": None if self.witness is None else self.witness.to_json(),
                "notes": list(self.notes)}


# Functions
# ---------
def _score(targets):
    return {1: 0, 2: 1, 3: 2}[point_type(targets)]


def annulus_fillings(polygon, minimum_score=0):
    """
    Triangulations of the region between the boundary of P and of its interior polygon.

    Only unimodular triangles with one edge on either boundary and the
    opposite vertex on the other are used, so every edge between the two
    boundaries is radial. A filling is a cyclic merge of the two boundary
    walks; the triangle on the first boundary edge of P fixes the start.

    Parameters:
        polygon (LatticePolygon): Non-hyperelliptic polygon.
        minimum_score (int): Only fillings with b2 + 2 b3 at least this value are produced.

    Yields:
        AnnulusFilling: Each filling once.
    """
    if is_hyperelliptic(polygon):
        raise InputError(f"{polygon} is hyperelliptic; its interior hull is not a polygon")
    inner = interior_hull(polygon).polygon.boundary_points()
    outer = polygon.boundary_points()
    m, n = len(outer), len(inner)

    def extend(j, i, start, run, first_run, finished, score, triangles):
        if score + 2 * (n - len(finished)) < minimum_score:
            return
        c = (start + i) % n
        if j == m and i == n:
            merged = list(dict.fromkeys(first_run + run))
            total = score + _score(merged)
            if total >= minimum_score:
                targets = dict(finished)
                targets[inner[start]] = tuple(merged)
                yield AnnulusFilling(tuple(triangles), targets, total)
            return
        if j < m:
            b, following = outer[j % m], outer[(j + 1) % m]
            if cross(b, following, inner[c]) == 1 and visible(inner, c, following):
                yield from extend(j + 1, i, start, run + [following], first_run, finished, score,
                                  triangles + [(b, following, inner[c])])
        if i < n:
            b, following = outer[j % m], (c + 1) % n
            if cross(inner[c], inner[following], b) == -1 and visible(inner, following, b):
                if i == 0:
                    first, done, gained = run, finished, 0
                else:
                    first, done, gained = first_run, {**finished, inner[c]: tuple(run)}, _score(run)
                yield from extend(j, i + 1, start, [b], first, done, score + gained,
                                  triangles + [(inner[c], inner[following], b)])

    for start in range(n):
        if cross(outer[0], outer[1 % m], inner[start]) != 1:
            continue
        if not (visible(inner, start, outer[0]) and visible(inner, start, outer[1 % m])):
            continue
        yield from extend(1, 0, start, [outer[0], outer[1 % m]], [], {}, 0,
                          [(outer[0], outer[1 % m], inner[start])])


def complete_filling(polygon, filling):
    """
    Fine unimodular triangulation of P extending an annulus filling.

    The interior polygon is triangulated on its own and glued along its boundary.
    """
    inside = refine_to_unimodular(interior_hull(polygon).polygon)
    triangles = list(filling.triangles) + [tuple(inside.points[i] for i in t) for t in inside.triangles]
    return validate_triangulation(from_point_triangles(polygon.lattice_points(), triangles))


def _annulus_search(polygon, g, witness_attempts):
    n = len(interior_hull(polygon).polygon.boundary_points())
    for threshold in range(2 * n, -1, -1):
        first, examined = None, 0
        for filling in annulus_fillings(polygon, threshold):
            try:
                candidate = complete_filling(polygon, filling)
            except InputError as error:
                logger.debug("discarding filling: %s", error)
                continue
            examined += 1
            if first is None:
                first = candidate
            if is_regular(candidate)[0]:
                logger.debug("%s: regular witness with b2 + 2 b3 = %d after %d fillings", polygon, threshold, examined)
                return g - 3 + threshold, candidate, True
            if examined >= witness_attempts:
                break
        if first is not None:
            return g - 3 + threshold, first, False
    raise InputError(f"no filling of the annulus of {polygon} was found")


def contains_interior_boundary(triangulation):
    """Whether every boundary edge of the interior polygon is an edge of the triangulation."""
    cycle = interior_hull(triangulation.polygon).polygon.boundary_points()
    edge_set = triangulation.edge_set()
    index = triangulation.index
    return all(tuple(sorted((index[cycle[k]], index[cycle[(k + 1) % len(cycle)]]))) in edge_set
               for k in range(len(cycle)))


def formula_value(triangulation, hyperelliptic=None):
    """
    Formula dimension of one triangulation, None when the counting rules do not apply.
    """
    if hyperelliptic is None:
        hyperelliptic = is_hyperelliptic(triangulation.polygon)
    if hyperelliptic:
        return dim_formula_hyperelliptic(triangulation)
    if not contains_interior_boundary(triangulation):
        return None
    try:
        return dim_formula(triangulation)
    except InputError:
        return None


def _oracle_value(triangulation):
    regular, _ = is_regular(triangulation)
    return moduli_dim_oracle(triangulation) if regular else None


def _first_regular(triangulations):
    return next((t for t in triangulations if is_regular(t)[0]), None)


def _exhaustive(polygon, evaluate, strict, max_points, max_triangulations, n_jobs):
    try:
        triangulations = enumerate_unimodular_triangulations(polygon, max_points=max_points,
                                                             max_triangulations=max_triangulations, n_jobs=n_jobs)
    except ResourceCapError as error:
        if strict:
            raise
        logger.info("%s: skipping exhaustive search, %s", polygon, error)
        return None, error
    values = Parallel(n_jobs=n_jobs)(delayed(evaluate)(t) for t in triangulations)
    scored = [(v, t) for v, t in zip(values, triangulations) if v is not None]
    return scored, len(triangulations)


def dim_polygon(polygon, method="formula", confirm=None, max_points=None, max_triangulations=None, n_jobs=None,
                witness_attempts=None):
    """
    Moduli dimension of a lattice polygon.

    The formula search finds a maximising triangulation directly: zig-zag
    strips for hyperelliptic polygons, radial annulus fillings otherwise.
    Within the resource caps every fine unimodular triangulation is then
    evaluated to confirm the maximum.

    Parameters:
        polygon (LatticePolygon): Polygon of genus >= 2.
        method (str): "formula", "oracle" (rank of the skeleton length map),
            "auto" (formula checked by the oracle on the witness) or
            "closed-form" (Koelman class, hyperelliptic polygons only).
        confirm (bool): Exhaustive confirmation; the configured default when
            None, in which case exceeding a cap only adds a note.
        max_points (int): Point cap of the exhaustive search.
        max_triangulations (int): Triangulation cap of the exhaustive search.
        n_jobs (int): joblib workers.
        witness_attempts (int): Maximising candidates tested for regularity.

    Returns:
        ModuliReport: Dimension, witness and notes.
    """
    if method not in METHODS:
        raise InputError(f"unknown method {method!r}; expected one of {METHODS}")
    g = genus(polygon)
    if g <= 1:
        raise InputError(f"{polygon} has genus {g}; the moduli dimension is computed for genus >= 2")
    config = load_config()
    strict = confirm is True
    if confirm is None:
        confirm = config["SEARCH"]["confirm_exhaustively"]
    if witness_attempts is None:
        witness_attempts = config["SEARCH"]["witness_attempts"]
    if n_jobs is None:
        n_jobs = config["PARALLEL"]["n_jobs"]
    hyperelliptic = is_hyperelliptic(polygon)

    if method == "closed-form":
        if not hyperelliptic:
            raise InputError(f"{polygon} is not hyperelliptic; closed forms exist only for Koelman classes")
        form, _ = koelman_classify(polygon)
        return ModuliReport(polygon, dim_hyperelliptic_closed_form(form, g), None, method, [str(form)])

    if hyperelliptic:
        found = hyperelliptic_search(polygon, witness_attempts)
        dimension, witness, regular = found.dimension, found.witness, found.regular
    else:
        dimension, witness, regular = _annulus_search(polygon, g, witness_attempts)
    report = ModuliReport(polygon, dimension, witness, method)

    if method == "oracle":
        if confirm:
            scored, total = _exhaustive(polygon, _oracle_value, strict, max_points, max_triangulations, n_jobs)
            if scored:
                best = max(v for v, _ in scored)
                report.dimension = best
                report.witness = next(t for v, t in scored if v == best)
                report.notes.append(f"maximum rank over {len(scored)} regular triangulations of {total}")
                return report
            if scored is None:
                report.notes.append(f"not exhaustively confirmed: {total}")
            else:
                report.notes.append(f"no regular triangulation among {total}")
        if not regular:
            raise NotRegularError(f"no regular maximising triangulation of {polygon} was found for the oracle")
        report.dimension = moduli_dim_oracle(witness)
        report.notes.append("oracle evaluated on the formula witness")
        return report

    if confirm:
        scored, total = _exhaustive(polygon, partial(formula_value, hyperelliptic=hyperelliptic), strict,
                                    max_points, max_triangulations, n_jobs)
        if scored is None:
            report.notes.append(f"not exhaustively confirmed: {total}")
        else:
            best = max(v for v, _ in scored)
            if best > report.dimension:
                logger.warning("%s: exhaustive maximum %d exceeds the direct search value %d",
                               polygon, best, report.dimension)
                maximisers = [t for v, t in scored if v == best]
                report.dimension = best
                report.witness = _first_regular(maximisers) or maximisers[0]
                regular = is_regular(report.witness)[0]
            report.notes.append(f"exhaustively confirmed over {total} triangulations")
    else:
        report.notes.append("not exhaustively confirmed")

    if not regular:
        report.notes.append("witness is not regular")
    if method == "auto":
        if regular:
            oracle = moduli_dim_oracle(report.witness)
            if oracle != report.dimension:
                raise OracleDisagreementError(report.dimension, oracle, report.witness)
            report.notes.append("oracle agrees on the witness")
        else:
            report.notes.append("oracle skipped on a non-regular witness")
    logger.info("%s: dimension %d (%s)", polygon, report.dimension, method)
    return report


def dim_triangulation(triangulation):
    """
    Formula and oracle dimensions of a single triangulation.

    Returns:
        dict: genus, hyperelliptic flag, regular flag, formula value, oracle
        value (None when not regular) and, for non-hyperelliptic polygons,
        the type counts.
    """
    polygon = triangulation.polygon
    g = genus(polygon)
    if g <= 1:
        raise InputError(f"{polygon} has genus {g}; the moduli dimension is computed for genus >= 2")
    hyperelliptic = is_hyperelliptic(polygon)
    regular, _ = is_regular(triangulation)
    result = {"genus": g, "hyperelliptic": hyperelliptic, "regular": regular}
    if hyperelliptic:
        result["formula"] = dim_formula_hyperelliptic(triangulation)
    else:
        classification = classify_types(triangulation)
        result.update(classification.to_json())
        result["formula"] = dim_formula(triangulation)
    result["oracle"] = moduli_dim_oracle(triangulation) if regular else None
    if regular and result["oracle"] != result["formula"]:
        raise OracleDisagreementError(result["formula"], result["oracle"], triangulation)
    return result
