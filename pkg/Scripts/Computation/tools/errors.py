# -*- coding: utf-8 -*-
"""
Copyright (c) 2024 Paris Brain Institute. All rights reserved.

Created on October 2026

@author: Cassandra Dumas

"""

# Classes
# -------
class TropModuliError(Exception):
    """Base class of every error raised by the analysis packages."""


class InputError(TropModuliError, ValueError):
    """Malformed input or an operation called outside its preconditions."""


class ResourceCapError(TropModuliError):
    """
    A search would exceed a configured limit.

    Parameters:
        limit_name (str): Name of the exceeded limit (e.g. "max_points").
        limit (int): Configured value of the limit.
        value (int): Value that was requested or reached.
    """

    def __init__(self, limit_name, limit, value):
        self.limit_name = limit_name
        self.limit = limit
        self.value = value
        super().__init__(f"{limit_name} exceeded: {value} > {limit}")


class NotRegularError(TropModuliError):
    """A regular triangulation was required."""


class OracleDisagreementError(TropModuliError):
    """
    The counting formula and the rank oracle returned different dimensions.

    Parameters:
        formula (int): Dimension given by the counting formula.
        oracle (int): Dimension given by the rank of the skeleton length map.
        witness (Triangulation): Triangulation on which both were evaluated.
    """

    def __init__(self, formula, oracle, witness=None):
        self.formula = formula
        self.oracle = oracle
        self.witness = witness
        super().__init__(f"formula gives {formula} but oracle gives {oracle}")
