# -*- coding: utf-8 -*-
"""
Copyright (c) 2024 Paris Brain Institute. All rights reserved.

Created on October 2026

@author: Cassandra Dumas

"""

# Modules
# -------
import io
import json
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from unittest import mock

import pandas as pd

from main import commands, run
from LATTICE.polygon import LatticePolygon
from MODULI.search import dim_polygon
from tools.errors import OracleDisagreementError

# Variables
# ---------
THREE_POINT_TRIANGLE = "1,0 0,3 3,1"
GENUS_TWO_STRIP = "0,0 4,0 1,2 0,2"


# Functions
# ---------
def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = run(list(argv))
    return code, out.getvalue(), err.getvalue()


# Classes
# -------
class TestCommands(unittest.TestCase):

    def test_every_verb_has_a_handler(self):
        self.assertEqual(set(commands), {"genus", "classify", "dim", "triangulations", "dim-triangulation",
                                         "constraints", "verify-range", "hyperelliptic-table", "atlas"})

    def test_dim(self):
        code, out, _ = invoke("dim", THREE_POINT_TRIANGLE)
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[0], "dimension: 3")

    def test_dim_json(self):
        code, out, _ = invoke("dim", THREE_POINT_TRIANGLE, "--method", "auto", "--json")
        self.assertEqual(code, 0)
        document = json.loads(out)
        self.assertEqual(document["dimension"], 3)
        self.assertEqual(document["polygon"], [[0, 3], [1, 0], [3, 1]])
        self.assertIn("oracle agrees on the witness", document["notes"])

    def test_genus_and_classify(self):
        code, out, _ = invoke("genus", "0,0 4,0 0,4", "--json")
        self.assertEqual(code, 0)
        document = json.loads(out)
        self.assertEqual((document["genus"], document["boundary_points"]), (3, 12))
        self.assertFalse(document["hyperelliptic"])

        code, out, _ = invoke("classify", GENUS_TWO_STRIP, "--json")
        self.assertEqual(code, 0)
        document = json.loads(out)
        self.assertTrue(document["hyperelliptic"])
        self.assertIn(document["koelman"]["class"], ("1", "2a", "2b", "3a", "3b"))

        code, out, _ = invoke("classify", "0,0 4,0 0,4")
        self.assertEqual(code, 0)
        self.assertIn("maximal", out)
        self.assertIn("True", out)

    def test_triangulations(self):
        code, out, _ = invoke("triangulations", "0,0 2,0 0,2", "--count")
        self.assertEqual((code, out.strip()), (0, "triangulations: 4"))
        code, out, _ = invoke("triangulations", "0,0 2,0 0,2", "--list", "--regular-only", "--json")
        document = json.loads(out)
        self.assertEqual(document["count"], len(document["triangulations"]))
        self.assertTrue(all(sorted(t) == ["points", "triangles"] for t in document["triangulations"]))
        code, out, _ = invoke("triangulations", "0,0 2,0 0,2", "--json")
        self.assertEqual(json.loads(out)["count"], 4)
        self.assertEqual(json.loads(out)["polygon"], [[0, 0], [2, 0], [0, 2]])

    def test_dim_triangulation(self):
        witness = dim_polygon(LatticePolygon(((1, 0), (0, 3), (3, 1))), confirm=False).witness
        with tempfile.TemporaryDirectory() as directory:
            file_path = os.path.join(directory, "triangulation.json")
            with open(file_path, "w") as openfile:
                json.dump(witness.to_json(), openfile)
            code, out, _ = invoke("dim-triangulation", file_path, "--json")
        self.assertEqual(code, 0)
        document = json.loads(out)
        self.assertEqual(document["formula"], 3)
        self.assertEqual(document["euler_characteristic"], 1)

    def test_constraints(self):
        code, out, _ = invoke("constraints", GENUS_TWO_STRIP, "--json")
        self.assertEqual(code, 0)
        expected = dim_polygon(LatticePolygon(((0, 0), (4, 0), (1, 2), (0, 2))), confirm=False).dimension
        self.assertEqual(json.loads(out)["dimension"], expected)

    def test_verify_range(self):
        code, out, _ = invoke("verify-range", "3", "--json")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["achieved"], [3, 4, 5, 6])

    def test_hyperelliptic_table(self):
        code, out, _ = invoke("hyperelliptic-table", "3")
        self.assertEqual(code, 0)
        self.assertIn("Class 2(a) i=2 j=1 dim=5", out.splitlines())

    def test_atlas_lines(self):
        code, out, _ = invoke("atlas", "2", "--json")
        self.assertEqual(code, 0)
        records = [json.loads(line) for line in out.splitlines()]
        self.assertEqual({r["dimension"] for r in records}, {2, 3})

    def test_out_files(self):
        with tempfile.TemporaryDirectory() as directory:
            table_path = os.path.join(directory, "table.csv")
            self.assertEqual(invoke("hyperelliptic-table", "3", "--out", table_path)[0], 0)
            table = pd.read_csv(table_path)
            self.assertIn("dimension", table.columns)

            report_path = os.path.join(directory, "dim.json")
            self.assertEqual(invoke("dim", THREE_POINT_TRIANGLE, "--out", report_path)[0], 0)
            with open(report_path) as openfile:
                self.assertEqual(json.load(openfile)["dimension"], 3)

            html_path = os.path.join(directory, "table.html")
            self.assertEqual(invoke("hyperelliptic-table", "3", "--out", html_path)[0], 0)
            with open(html_path) as openfile:
                self.assertIn("<table", openfile.read())

            self.assertEqual(invoke("dim", THREE_POINT_TRIANGLE, "--out", os.path.join(directory, "x.txt"))[0], 2)


class TestExitCodes(unittest.TestCase):

    def test_input_errors(self):
        code, _, err = invoke("dim", "1,0 0,a 3,1")
        self.assertEqual(code, 2)
        self.assertIn("error:", err)
        self.assertEqual(invoke("dim", "0,0 1,0 0,1")[0], 2)
        self.assertEqual(invoke("verify-range", "2")[0], 2)

    def test_malformed_json_file(self):
        with tempfile.TemporaryDirectory() as directory:
            file_path = os.path.join(directory, "broken.json")
            with open(file_path, "w") as openfile:
                openfile.write("{\"points\": [[0, 0], ")
            code, _, err = invoke("constraints", file_path)
            self.assertEqual(code, 2)
            self.assertIn("not valid JSON", err)
            self.assertEqual(invoke("dim-triangulation", file_path)[0], 2)
            self.assertEqual(invoke("dim", file_path)[0], 2)

    def test_bad_thread_variable(self):
        with mock.patch.dict(os.environ, {"TROPMODULI_THREADS": "many"}):
            code, _, err = invoke("dim", THREE_POINT_TRIANGLE)
        self.assertEqual(code, 2)
        self.assertIn("TROPMODULI_THREADS", err)

    def test_usage_errors(self):
        self.assertEqual(invoke("unknown")[0], 2)
        self.assertEqual(invoke("dim")[0], 2)
        self.assertEqual(invoke("dim", THREE_POINT_TRIANGLE, "--method", "guess")[0], 2)

    def test_cap(self):
        code, _, err = invoke("triangulations", "0,0 3,0 0,3 3,3", "--max-points", "10")
        self.assertEqual(code, 3)
        self.assertIn("max_points exceeded: 16 > 10", err)

    def test_disagreement(self):
        with mock.patch("MODULI.search.dim_polygon", side_effect=OracleDisagreementError(5, 6, None)):
            code, _, err = invoke("dim", THREE_POINT_TRIANGLE, "--method", "auto")
        self.assertEqual(code, 4)
        self.assertEqual(json.loads(err.splitlines()[-1]), {"formula": 5, "oracle": 6, "witness": None})


if __name__ == "__main__":
    unittest.main()
