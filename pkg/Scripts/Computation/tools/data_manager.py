# -*- coding: utf-8 -*-
"""
Copyright (c) 2024 Paris Brain Institute. All rights reserved.

Created on June 2024

@author: Cassandra Dumas

"""

# Modules
# -------
import json
import logging
import os

import pandas as pd

from LATTICE.polygon import parse_polygon, polygon_from_json
from TRIANGULATION.enumeration import triangulation_from_json
from tools.errors import InputError
from tools.utils import create_directory, load_paths

logger = logging.getLogger(__name__)


# Functions
# ---------
def read_json(file_path):
    """
    Read a JSON input file.

    Parameters:
        file_path (str): Path to the file.

    Returns:
        dict or list: Content of the file.
    """
    try:
        return load_paths(file_path)
    except json.JSONDecodeError as error:
        raise InputError(f"{file_path} is not valid JSON: {error}")
    except OSError as error:
        raise InputError(f"cannot read {file_path}: {error}")


def load_polygon(source):
    """
    Load a polygon from a literal or from a JSON file.

    Parameters:
        source (str): "x1,y1 x2,y2 ..." or the path to a JSON file holding
            {"vertices": [[x, y], ...]} or a bare list of pairs.

    Returns:
        LatticePolygon: The polygon.
    """
    if os.path.isfile(source):
        return polygon_from_json(read_json(source))
    return parse_polygon(source)


def load_triangulation(file_path):
    """
    Load a triangulation from a JSON file.

    Parameters:
        file_path (str): File holding {"points": [[x, y], ...], "triangles": [[i, j, k], ...]}.

    Returns:
        Triangulation: Validated fine unimodular triangulation.
    """
    if not os.path.isfile(file_path):
        raise InputError(f"no triangulation file at {file_path}")
    return triangulation_from_json(read_json(file_path))


def save_json(data, path, filename):
    """
    Save a JSON document.

    Parameters:
        data (dict): Serialisable document.
        path (str): Directory to save the file.
        filename (str): Name of the file.
    """
    create_directory(path)
    with open(os.path.join(path, filename), "w") as openfile:
        json.dump(data, openfile, indent=2)


def save_jsonl(records, path, filename):
    """
    Save records as JSON lines, one document per line.

    Parameters:
        records (iterable): Serialisable documents.
        path (str): Directory to save the file.
        filename (str): Name of the file.
    """
    create_directory(path)
    with open(os.path.join(path, filename), "w") as openfile:
        for record in records:
            openfile.write(json.dumps(record) + "\n")


def save_csv(table, path, filename):
    """
    Save a table as CSV.

    Parameters:
        table (pd.DataFrame or list): DataFrame or list of flat dicts.
        path (str): Directory to save the file.
        filename (str): Name of the file.
    """
    create_directory(path)
    pd.DataFrame(table).to_csv(os.path.join(path, filename), index=False)


def save_html(html, path, filename):
    """
    Save an HTML page.

    Parameters:
        html (str): Page content.
        path (str): Directory to save the file.
        filename (str): Name of the file.
    """
    create_directory(path)
    with open(os.path.join(path, filename), "w") as openfile:
        openfile.write(html)


def save_output(data, file_path, html=None):
    """
    Save a command result, the format chosen by the file extension.

    Parameters:
        data (dict or list): Result document, or records for .jsonl and .csv.
        file_path (str): Target ending in .json, .jsonl, .csv or .html.
        html (str): Page content for .html targets.
    """
    path, filename = os.path.split(file_path)
    extension = os.path.splitext(filename)[1].lower()
    if extension == ".json":
        save_json(data, path, filename)
    elif extension == ".jsonl":
        save_jsonl(data if isinstance(data, list) else [data], path, filename)
    elif extension == ".csv":
        save_csv(data if isinstance(data, list) else [data], path, filename)
    elif extension == ".html":
        if html is None:
            raise InputError("this command has no HTML rendering")
        save_html(html, path, filename)
    else:
        raise InputError(f"unsupported output format {extension!r}; use .json, .jsonl, .csv or .html")
    logger.info("saved %s", file_path)
