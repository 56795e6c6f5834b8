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

import pandas as pd

from LATTICE.equivalence import equivalence_map, normal_form
from LATTICE.polygon import LatticePoint, LatticePolygon, is_hyperelliptic
from tools.errors import InputError

logger = logging.getLogger(__name__)

# Variables
# ---------
CLASSES = ("1", "2a", "2b", "3a", "3b")
LABELS = {"1": "Class 1", "2a": "Class 2(a)", "2b": "Class 2(b)", "3a": "Class 3(a)", "3b": "Class 3(b)"}


# Classes
# -------
@dataclass(frozen=True)
class HyperellipticForm:
    """
    Koelman class and parameters of a hyperelliptic polygon.

    Attributes:
        cls (str): One of "1", "2a", "2b", "3a", "3b".
        i (int): Length parameter of the bottom row.
        j (int): Length parameter of the top row (classes 2 and 3).
        k (int): Offset of the top row (class 3).
    """
    cls: str
    i: int
    j: int = None
    k: int = None

    def __post_init__(self):
        if self.cls not in CLASSES:
            raise InputError(f"unknown Koelman class {self.cls!r}; expected one of {CLASSES}")
        if self.cls != "1" and self.j is None:
            raise InputError(f"class {self.cls} needs the parameter j")
        if self.cls.startswith("3") and self.k is None:
            raise InputError(f"class {self.cls} needs the parameter k")

    def __str__(self):
        text = f"{LABELS[self.cls]} i={self.i}"
        if self.j is not None:
            text += f" j={self.j}"
        if self.k is not None:
            text += f" k={self.k}"
        return text

    def in_range(self, g):
        i, j, k = self.i, self.j, self.k
        if self.cls == "1":
            return g <= i <= 2 * g
        if self.cls == "2a":
            return 0 <= i <= g and 0 <= j <= i
        if self.cls == "2b":
            return g < i <= 2 * g + 1 and 0 <= j <= 2 * g - i + 1
        if not 0 <= k <= g + 1:
            return False
        if self.cls == "3a":
            return 0 <= i <= g + 1 - k and 0 <= j <= i
        return g + 1 - k < i <= 2 * g + 2 - 2 * k and 0 <= j <= 2 * g - i - 2 * k + 1

    def to_json(self):
        return {"class": self.cls, "i": self.i, "j": self.j, "k": self.k, "label": str(self)}


# Functions
# ---------
def koelman_template(form, g):
    """
    Template polygon of a Koelman class, interior points (1, 1), ..., (g, 1).

    Parameters:
        form (HyperellipticForm): Class and parameters.
        g (int): Genus, at least 2.

    Returns:
        LatticePolygon: Validated template.
    """
    if g < 2:
        raise InputError(f"Koelman classes start at genus 2, got {g}")
    if not form.in_range(g):
        raise InputError(f"{form} is out of range for genus {g}")
    i, j, k = form.i, form.j, form.k
    if form.cls == "1":
        vertices = ((0, 0), (i, 0), (2 * g + 1 - i, 2), (1, 2))
    elif form.cls.startswith("2"):
        vertices = ((0, 0), (i, 0), (g + 1, 1), (1 + j, 2), (1, 2))
    else:
        vertices = ((0, 0), (i, 0), (g + 1, 1), (k + j, 2), (k, 2), (0, 1))

    polygon = LatticePolygon(vertices)
    expected = [LatticePoint(x, 1) for x in range(1, g + 1)]
    if polygon.interior_points() != expected or not is_hyperelliptic(polygon):
        raise InputError(f"{form} does not give a genus {g} polygon with interior points (1,1)..({g},1)")
    return polygon


def _candidate_forms(g):
    for i in range(g, 2 * g + 1):
        yield HyperellipticForm("1", i)
    for i in range(0, 2 * g + 2):
        for j in range(0, 2 * g + 2):
            yield HyperellipticForm("2a" if i <= g else "2b", i, j)
    for k in range(0, g + 2):
        for i in range(0, 2 * g + 3 - 2 * k):
            for j in range(0, 2 * g + 2):
                yield HyperellipticForm("3a" if i <= g + 1 - k else "3b", i, j, k)


def koelman_forms(g):
    """
    Every valid class and parameter choice for genus g, in class order.

    Forms whose template fails validation are skipped with a warning.
    """
    forms = []
    for form in _candidate_forms(g):
        if not form.in_range(g):
            continue
        try:
            koelman_template(form, g)
        except InputError as error:
            logger.warning("skipping %s: %s", form, error)
            continue
        forms.append(form)
    return forms


@lru_cache(maxsize=None)
def _normal_forms(g):
    table = {}
    for form in koelman_forms(g):
        key = normal_form(koelman_template(form, g))
        if key in table:
            logger.debug("%s and %s give equivalent templates", table[key], form)
            continue
        table[key] = form
    return table


def koelman_classify(polygon):
    """
    Koelman class of a hyperelliptic polygon.

    Parameters:
        polygon (LatticePolygon): Hyperelliptic polygon of genus >= 2.

    Returns:
        tuple: (HyperellipticForm, UnimodularMap sending the polygon onto its template).
    """
    g = len(polygon.interior_points())
    if g < 2:
        raise InputError(f"{polygon} has genus {g}; Koelman classes start at genus 2")
    if not is_hyperelliptic(polygon):
        raise InputError(f"{polygon} is not hyperelliptic")
    form = _normal_forms(g).get(normal_form(polygon))
    if form is None:
        raise InputError(f"{polygon} matches no Koelman template of genus {g}")
    return form, equivalence_map(polygon, koelman_template(form, g))


def dim_hyperelliptic_closed_form(form, g):
    """
    Moduli dimension of every polygon in a Koelman class.

    Parameters:
        form (HyperellipticForm): Class and parameters.
        g (int): Genus.

    Returns:
        int: Dimension between g and 2g - 1.
    """
    if not form.in_range(g):
        raise InputError(f"{form} is out of range for genus {g}")
    top = 2 * g - 1
    if form.cls in ("1", "2b"):
        return top
    if form.cls == "2a" or (form.cls == "3a" and form.k == 0):
        return min(g + form.i + form.j, top)
    return min(g + form.i + form.j + 1, top)


def hyperelliptic_table(g):
    """
    Closed-form dimensions of all Koelman classes of genus g.

    Returns:
        pd.DataFrame: One row per form with columns form, class, i, j, k,
        dimension and polygon.
    """
    rows = []
    for form in koelman_forms(g):
        rows.append({"form": str(form), "class": LABELS[form.cls], "i": form.i, "j": form.j, "k": form.k,
                     "dimension": dim_hyperelliptic_closed_form(form, g),
                     "polygon": repr(koelman_template(form, g))})
    table = pd.DataFrame(rows, columns=["form", "class", "i", "j", "k", "dimension", "polygon"])
    logger.info("genus %d: %d Koelman forms", g, len(table))
    return table
