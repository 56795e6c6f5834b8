# -*- coding: utf-8 -*-
"""
Copyright (c) 2024 Paris Brain Institute. All rights reserved.

Created on October 2026

@author: Cassandra Dumas

"""

# Modules
# -------
import logging
from fractions import Fraction

logger = logging.getLogger(__name__)


# Classes
# -------
class SimplexTableau:
    """
    Exact primal simplex for  max c.x  subject to  A.x <= b, x >= 0, with b >= 0.

    The slack basis is feasible from the start, so no first phase is needed.
    Bland's rule keeps the pivoting finite on degenerate problems.

    Parameters:
        A (list): m rows of n rationals.
        b (list): m non-negative rationals.
        c (list): n rationals.
    """

    def __init__(self, A, b, c):
        self.m = len(A)
        self.n = len(c)
        if any(Fraction(v) < 0 for v in b):
            raise ValueError("the slack basis needs b >= 0")
        self.A = [[Fraction(v) for v in row] for row in A]
        self.b = [Fraction(v) for v in b]
        self.c = [Fraction(v) for v in c]
        self.value = Fraction(0)
        self.nb_vars = list(range(self.n))
        self.b_vars = list(range(self.n, self.n + self.m))
        self.pivots = 0

    def pivot(self, i, j):
        piv = self.A[i][j]
        delta = self.c[j] / piv
        for l in range(self.n):
            self.c[l] -= delta * self.A[i][l]
        self.c[j] = -delta
        self.value += delta * self.b[i]

        row = self.A[i]
        for l in range(self.n):
            row[l] = 1 / piv if l == j else row[l] / piv
        self.b[i] /= piv

        for k in range(self.m):
            if k == i:
                continue
            f = self.A[k][j]
            if f == 0:
                continue
            other = self.A[k]
            for l in range(self.n):
                other[l] = -f / piv if l == j else other[l] - f * row[l]
            self.b[k] -= f * self.b[i]

        self.nb_vars[j], self.b_vars[i] = self.b_vars[i], self.nb_vars[j]
        self.pivots += 1

    def bland_primal_step(self):
        try:
            _, j = min((self.nb_vars[j], j) for j in range(self.n) if self.c[j] > 0)
        except ValueError:
            return "optimal"
        try:
            _, _, i = min((self.b[i] / self.A[i][j], self.b_vars[i], i)
                          for i in range(self.m) if self.A[i][j] > 0)
        except ValueError:
            return "unbounded"
        self.pivot(i, j)
        return "go_on"

    def solve(self):
        """
        Run the primal simplex to completion.

        Returns:
            tuple: (status, optimum, solution) where status is "optimal" or
            "unbounded" and solution lists the n original variables.
        """
        while True:
            status = self.bland_primal_step()
            if status != "go_on":
                break
        logger.debug("simplex %s after %d pivots", status, self.pivots)

        solution = [Fraction(0)] * self.n
        for i, var in enumerate(self.b_vars):
            if var < self.n:
                solution[var] = self.b[i]
        return status, self.value, solution
