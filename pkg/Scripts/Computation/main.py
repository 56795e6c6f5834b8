# -*- coding: utf-8 -*-
"""
Copyright (c) 2024 Paris Brain Institute. All rights reserved.

Created on June 2024

@author: Cassandra Dumas

"""

# Modules
# -------
import argparse
import json
import logging
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.realpath(__file__)))

from tools.errors import InputError, OracleDisagreementError, ResourceCapError, TropModuliError
from tools.reporting import generate_html_report, text_summary, text_table
from tools.utils import setup_logging

logger = logging.getLogger(__name__)


# Functions
# ---------
def _polygon_summary(polygon):
    from LATTICE.polygon import polygon_to_json

    return polygon_to_json(polygon)["vertices"]


def genus_command(args):
    from LATTICE.polygon import boundary_point_count, genus, interior_hull, is_hyperelliptic
    from tools.data_manager import load_polygon

    polygon = load_polygon(args.polygon)
    data = {"polygon": _polygon_summary(polygon), "genus": genus(polygon),
            "boundary_points": boundary_point_count(polygon), "area": str(polygon.area()),
            "interior_hull": interior_hull(polygon).kind,
            "hyperelliptic": is_hyperelliptic(polygon) if genus(polygon) else None}
    return data, text_summary({k: v for k, v in data.items() if k != "polygon"}), None


def classify_command(args):
    from LATTICE.polygon import genus, interior_hull, is_hyperelliptic, is_maximal, lattice_width
    from MODULI.koelman import dim_hyperelliptic_closed_form, koelman_classify
    from tools.data_manager import load_polygon

    polygon = load_polygon(args.polygon)
    g = genus(polygon)
    width, direction = lattice_width(polygon)
    data = {"polygon": _polygon_summary(polygon), "genus": g, "interior_hull": interior_hull(polygon).kind,
            "lattice_width": width, "width_direction": list(direction)}
    if g >= 2 and is_hyperelliptic(polygon):
        form, _ = koelman_classify(polygon)
        data.update({"hyperelliptic": True, "koelman": form.to_json(),
                     "dimension": dim_hyperelliptic_closed_form(form, g)})
        text = {"genus": g, "hyperelliptic": True, "class": str(form), "dimension": data["dimension"]}
    elif interior_hull(polygon).kind == "polygon":
        data.update({"hyperelliptic": False, "maximal": is_maximal(polygon)})
        text = {"genus": g, "hyperelliptic": False, "maximal": data["maximal"]}
    else:
        data["hyperelliptic"] = is_hyperelliptic(polygon) if g else None
        text = {"genus": g, "hyperelliptic": data["hyperelliptic"], "interior": data["interior_hull"]}
    return data, text_summary(text), None


def dim_command(args):
    from MODULI.search import dim_polygon
    from tools.data_manager import load_polygon

    report = dim_polygon(load_polygon(args.polygon), method=args.method, confirm=args.confirm,
                         max_points=args.max_points, max_triangulations=args.max_triangulations,
                         n_jobs=args.n_jobs)
    lines = [f"dimension: {report.dimension}", f"method: {report.method}"]
    lines += [f"note: {note}" for note in report.notes]
    return report.to_json(), "\n".join(lines), None


def triangulations_command(args):
    from TRIANGULATION.enumeration import (count_unimodular_triangulations, enumerate_unimodular_triangulations,
                                           triangulation_to_json)
    from TRIANGULATION.regularity import is_regular
    from tools.data_manager import load_polygon

    polygon = load_polygon(args.polygon)
    caps = {"max_points": args.max_points, "max_triangulations": args.max_triangulations, "n_jobs": args.n_jobs}
    data = {"polygon": _polygon_summary(polygon), "regular_only": args.regular_only}
    if not (args.list or args.regular_only):
        data["count"] = count_unimodular_triangulations(polygon, **caps)
        return data, f"triangulations: {data['count']}", None
    found = enumerate_unimodular_triangulations(polygon, **caps)
    if args.regular_only:
        found = [t for t in found if is_regular(t)[0]]
    data["count"] = len(found)
    if not args.list:
        return data, f"triangulations: {len(found)}", None
    data["triangulations"] = [triangulation_to_json(t) for t in found]
    rows = [{"index": n, "triangles": " ".join(str(tuple(tri)) for tri in t.triangles)}
            for n, t in enumerate(found)]
    return data, f"triangulations: {len(found)}\n" + (text_table(rows) if rows else ""), rows


def dim_triangulation_command(args):
    from MODULI.search import dim_triangulation
    from TRIANGULATION.enumeration import euler_characteristic
    from tools.data_manager import load_triangulation

    triangulation = load_triangulation(args.triangulation)
    result = dim_triangulation(triangulation)
    result["euler_characteristic"] = euler_characteristic(triangulation)
    return result, text_summary(result), None


def constraints_command(args):
    from MODULI.hyperelliptic import hyperelliptic_search
    from TRIANGULATION.enumeration import triangulation_to_json
    from TROPICAL.chain import hyperelliptic_length_constraints
    from tools.data_manager import load_polygon, load_triangulation, read_json

    source = args.source
    content = read_json(source) if source.endswith(".json") and os.path.isfile(source) else None
    if isinstance(content, dict) and "triangles" in content:
        triangulation = load_triangulation(source)
    else:
        triangulation = hyperelliptic_search(load_polygon(source)).witness
    system = hyperelliptic_length_constraints(triangulation)
    data = system.to_json()
    data["triangulation"] = triangulation_to_json(triangulation)

    def render(terms, relation):
        left = " + ".join(f"{c}*{label}" for label, c in terms.items())
        return f"{left} {relation} 0"

    lines = [f"labels: {', '.join(system.labels)}", f"ends: {', '.join(str(e) for e in system.ends)}"]
    lines += [render(terms, "==") for terms in system.equalities]
    lines += [render(terms, ">=") for terms in system.inequalities]
    lines.append(f"dimension: {data['dimension']}")
    return data, "\n".join(lines), None


def verify_range_command(args):
    from CATALOG.verification import verify_range

    report = verify_range(args.genus, cap=args.max_points, confirm=bool(args.confirm), n_jobs=args.n_jobs)
    rows = [{"dimension": d, "family": family, "polygon": repr(polygon)}
            for d, (family, polygon) in sorted(report.witnesses.items())]
    summary = {"genus": report.genus, "range": f"[{report.lower}, {report.upper}]",
               "achieved": report.achieved, "missing": report.missing}
    text = text_summary(summary)
    if report.notes:
        text += "\n" + "\n".join(f"note: {note}" for note in report.notes)
    return report.to_json(), text + "\n" + text_table(rows), rows


def hyperelliptic_table_command(args):
    from MODULI.koelman import hyperelliptic_table

    table = hyperelliptic_table(args.genus)
    text = "\n".join(f"{row.form} dim={row.dimension}" for row in table.itertuples(index=False))
    records = json.loads(table.to_json(orient="records"))
    return {"genus": args.genus, "forms": records}, text, table


def atlas_command(args):
    from CATALOG.verification import atlas

    records = atlas(args.genera, cap=args.max_points, confirm=bool(args.confirm), n_jobs=args.n_jobs)
    return records, "\n".join(json.dumps(record) for record in records), records


# Variables
# ---------

# Dictionary containing the available commands, their descriptions and handlers
commands = {
    "genus": ("Genus, boundary count and interior hull of a polygon", genus_command),
    "classify": ("Hyperelliptic status, Koelman class or maximality", classify_command),
    "dim": ("Moduli dimension of a polygon", dim_command),
    "triangulations": ("Count or list fine unimodular triangulations", triangulations_command),
    "dim-triangulation": ("Formula and oracle dimension of one triangulation", dim_triangulation_command),
    "constraints": ("Chain length constraints of a hyperelliptic triangulation", constraints_command),
    "verify-range": ("Dimensions reached by the constructive families of a genus", verify_range_command),
    "hyperelliptic-table": ("Closed-form dimensions of every Koelman class", hyperelliptic_table_command),
    "atlas": ("Witness polygons per genus and dimension, as JSON lines", atlas_command),
    }


def build_parser():
    """
    Argument parser with one sub-command per entry of `commands`.

    Returns:
        argparse.ArgumentParser: Parser; shared flags are accepted after the verb.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", help="also save the result (.json, .jsonl, .csv or .html)")
    common.add_argument("--max-points", type=int, default=None, help="point cap of exhaustive searches")
    common.add_argument("--max-triangulations", type=int, default=None, help="triangulation cap")
    common.add_argument("--n-jobs", type=int, default=None, help="joblib workers")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging")

    parser = argparse.ArgumentParser(prog="tropmoduli",
                                     description="Moduli dimensions of tropical plane curves")
    verbs = parser.add_subparsers(dest="verb", metavar="verb")
    verbs.required = True
    parsers = {verb: verbs.add_parser(verb, help=description, parents=[common])
               for verb, (description, _) in commands.items()}

    for verb in ("genus", "classify", "dim", "triangulations"):
        parsers[verb].add_argument("polygon", help='"x,y x,y ..." literal or JSON file')
    parsers["dim"].add_argument("--method", default="formula", choices=("formula", "oracle", "auto", "closed-form"))
    for verb in ("dim", "verify-range", "atlas"):
        confirm = parsers[verb].add_mutually_exclusive_group()
        confirm.add_argument("--confirm", dest="confirm", action="store_const", const=True, default=None,
                             help="confirm over every triangulation, failing on a cap")
        confirm.add_argument("--no-confirm", dest="confirm", action="store_const", const=False,
                             help="skip the exhaustive confirmation")
    listing = parsers["triangulations"].add_mutually_exclusive_group()
    listing.add_argument("--count", action="store_true", help="print the number only (default)")
    listing.add_argument("--list", action="store_true", help="print every triangulation")
    parsers["triangulations"].add_argument("--regular-only", action="store_true", help="keep regular ones")
    parsers["dim-triangulation"].add_argument("triangulation", help="JSON file with points and triangles")
    parsers["constraints"].add_argument("source", help="polygon literal, polygon file or triangulation file")
    for verb in ("verify-range", "hyperelliptic-table"):
        parsers[verb].add_argument("genus", type=int)
    parsers["atlas"].add_argument("genera", type=int, nargs="+")
    return parser


def _save(verb, data, table, file_path):
    from tools.data_manager import save_output

    extension = os.path.splitext(file_path)[1].lower()
    if extension == ".csv" and table is not None:
        data = json.loads(table.to_json(orient="records")) if hasattr(table, "to_json") else table
    html = None
    if extension == ".html":
        summary = data if isinstance(data, dict) else {"records": len(data)}
        summary = {k: v for k, v in summary.items() if not isinstance(v, (dict, list)) or k == "achieved"}
        frame = None
        if table is not None:
            import pandas as pd
            frame = pd.DataFrame(table)
        html = generate_html_report(verb, summary, frame)
    save_output(data, file_path, html)


def run(argv=None):
    """
    Parse the arguments, run one verb and print its result.

    Parameters:
        argv (list): Arguments without the program name; sys.argv when None.

    Returns:
        int: 0 on success, 2 on input errors, 3 when a cap is exceeded,
        4 when formula and oracle disagree, 1 on any other failure.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return error.code if isinstance(error.code, int) else 2
    setup_logging(args.verbose)
    _, handler = commands[args.verb]
    logger.debug("running %s", args.verb)
    try:
        data, text, table = handler(args)
        if args.out:
            _save(args.verb, data, table, args.out)
    except InputError as error:
        print(f"error: {error}", file=sys.stderr)
        return 2
    except ResourceCapError as error:
        print(f"error: {error}", file=sys.stderr)
        return 3
    except OracleDisagreementError as error:
        print(f"error: {error}", file=sys.stderr)
        dump = {"formula": error.formula, "oracle": error.oracle,
                "witness": None if error.witness is None else error.witness.to_json()}
        print(json.dumps(dump), file=sys.stderr)
        return 4
    except TropModuliError as error:
        print(f"error: {error}", file=sys.stderr)
        return 1

    if not args.json:
        print(text)
    elif args.verb == "atlas":
        print("\n".join(json.dumps(record) for record in data))
    else:
        print(json.dumps(data))
    return 0


def main():
    """
    Entry point of the command line.
    """
    sys.exit(run())


####### MAIN #######
# ------------------
if __name__ == '__main__':
    main()
