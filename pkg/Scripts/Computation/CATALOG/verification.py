# -*- coding: utf-8 -*-
"""
Copyright (c) 2024 Paris Brain Institute. All rights reserved.

Created on October 2026

@author: Cassandra Dumas

"""

# Modules
# -------
import logging
import os
from dataclasses import dataclass, field

from joblib import Parallel, delayed

from CATALOG.families import bounds, dim_g_triangle, interpolation_chain
from LATTICE.polygon import polygon_to_json
from MODULI.koelman import dim_hyperelliptic_closed_form, koelman_forms, koelman_template
from MODULI.search import dim_polygon
from tools.data_manager import save_jsonl
from tools.utils import load_config

logger = logging.getLogger(__name__)


# Classes
# -------
@dataclass
class RangeReport:
    """
    Dimensions reached by the constructive families of one genus.

    Attributes:
        genus (int): Genus.
        lower (int): Expected smallest dimension.
        upper (int): Expected largest dimension.
        achieved (list): Dimensions reached, sorted.
        missing (list): Dimensions of [lower, upper] not reached.
        witnesses (dict): Dimension -> (family, polygon) reaching it.
        notes (list): Caveats.
    """
    genus: int
    lower: int
    upper: int
    achieved: list = field(default_factory=list)
    missing: list = field(default_factory=list)
    witnesses: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def to_json(self):
        return {"genus": self.genus, "lower": self.lower, "upper": self.upper,
                "achieved": list(self.achieved), "missing": list(self.missing),
                "witnesses": {str(d): {"family": family, "polygon": polygon_to_json(polygon)["vertices"]}
                              for d, (family, polygon) in sorted(self.witnesses.items())},
                "notes": list(self.notes)}


# Functions
# ---------
def _family_polygons(g):
    polygons = []
    if g not in (4, 7):
        polygons.append(("triangle", dim_g_triangle(g)))
    polygons.extend(("chain", polygon) for polygon in interpolation_chain(g))
    return polygons


def _dimension(polygon, confirm, cap):
    return dim_polygon(polygon, confirm=confirm, max_points=cap, n_jobs=1).dimension


def verify_range(g, cap=None, confirm=False, n_jobs=None):
    """
    Check that the constructive families reach every dimension in [l(g), u(g)].

    Parameters:
        g (int): Genus, at least 3.
        cap (int): Point cap for exhaustive confirmation.
        confirm (bool): Confirm each dimension over all triangulations.
        n_jobs (int): joblib workers, one polygon per task.

    Returns:
        RangeReport: Achieved and missing dimensions with witnesses.
    """
    expected = bounds(g)
    if n_jobs is None:
        n_jobs = load_config()["PARALLEL"]["n_jobs"]
    polygons = _family_polygons(g)
    dimensions = Parallel(n_jobs=n_jobs)(delayed(_dimension)(polygon, confirm, cap) for _, polygon in polygons)

    report = RangeReport(g, expected.lower, expected.upper)
    for (family, polygon), dimension in zip(polygons, dimensions):
        logger.debug("genus %d: %s %s has dimension %d", g, family, polygon, dimension)
        report.witnesses.setdefault(dimension, (family, polygon))
    report.achieved = sorted(report.witnesses)
    report.missing = [d for d in range(expected.lower, expected.upper + 1) if d not in report.witnesses]
    outside = [d for d in report.achieved if not expected.lower <= d <= expected.upper]
    if outside:
        logger.warning("genus %d: dimensions %s fall outside [%d, %d]", g, outside, expected.lower, expected.upper)
        report.notes.append(f"dimensions outside the expected range: {outside}")
    if g == 4:
        report.notes.append("every genus 4 triangle with three boundary points is hyperelliptic")
    if g == 7:
        report.notes.append("dimension 16 is reached by a polygon outside these families")
    if report.missing:
        logger.info("genus %d: missing dimensions %s", g, report.missing)
    return report


def atlas(genera, out=None, cap=None, confirm=False, n_jobs=None):
    """
    Witness polygons per genus and dimension.

    Parameters:
        genera (iterable): Genera to cover.
        out (str): Directory for atlas.jsonl; the configured atlas path when
            "default", nothing written when None.
        cap (int): Point cap for exhaustive confirmation.
        confirm (bool): Confirm each dimension over all triangulations.
        n_jobs (int): joblib workers.

    Returns:
        list: Records {"genus", "dimension", "polygon", "family"}.
    """
    records = []
    for g in genera:
        if g >= 3:
            report = verify_range(g, cap=cap, confirm=confirm, n_jobs=n_jobs)
            for dimension, (family, polygon) in sorted(report.witnesses.items()):
                records.append({"genus": g, "dimension": dimension,
                                "polygon": polygon_to_json(polygon)["vertices"], "family": family})
        seen = set()
        for form in koelman_forms(g):
            dimension = dim_hyperelliptic_closed_form(form, g)
            if dimension in seen:
                continue
            seen.add(dimension)
            polygon = koelman_template(form, g)
            records.append({"genus": g, "dimension": dimension,
                            "polygon": polygon_to_json(polygon)["vertices"], "family": str(form)})
    if out is not None:
        path = load_config()["PATH"]["atlas"] if out == "default" else out
        save_jsonl(records, path, "atlas.jsonl")
        logger.info("atlas of %d records written to %s", len(records), os.path.join(path, "atlas.jsonl"))
    return records
