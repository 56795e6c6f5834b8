# -*- coding: utf-8 -*-
"""
Copyright (c) 2024 Paris Brain Institute. All rights reserved.

Created on June 2024

@author: Cassandra Dumas

"""

# Modules
# -------
import os
import json
import logging
from functools import lru_cache

from tools.errors import InputError

# Variables
# ---------
DEFAULT_CONFIG = os.path.join(os.path.dirname(os.path.realpath(__file__)), "TropModuli.json")
THREADS_VARIABLE = "TROPMODULI_THREADS"


# Functions
# ---------
def load_paths(file_path):
    """

    Parameters
    ----------
    file_path : str
        Path to a JSON file.

    Returns
    -------
    dict
        Content of the file.

    """
    with open(file_path, 'r') as openfile:
        return json.load(openfile)


@lru_cache(maxsize=None)
def _load_default_config():
    return load_paths(DEFAULT_CONFIG)


def load_config(file_path=None):
    """
    Load the computation settings, applying the environment overrides.

    Parameters
    ----------
    file_path : str, optional
        Alternative configuration file. The file next to this module is used
        when omitted.

    Returns
    -------
    dict
        Sections LIMITS, PARALLEL, SEARCH and PATH.

    """
    config = load_paths(file_path) if file_path else json.loads(json.dumps(_load_default_config()))

    threads = os.environ.get(THREADS_VARIABLE)
    if threads:
        try:
            config["PARALLEL"]["n_jobs"] = int(threads)
        except ValueError:
            raise InputError(f"{THREADS_VARIABLE} must be an integer, got {threads!r}")
    return config


def setup_logging(verbose=False):
    """
    Configure the root logger once for command line runs.

    Parameters
    ----------
    verbose : bool
        Debug level when True, warnings only otherwise.

    """
    level = logging.DEBUG if verbose else logging.WARNING
    logging.basicConfig(level=level,
                        format="%(asctime)s %(name)s %(levelname)s: %(message)s")
    logging.getLogger().setLevel(level)


def create_directory(path):
    """
    

    Parameters
    ----------
    path : str
        Path to create if not existing.

    Returns
    -------
    None.

    """
    if path and not os.path.exists(path):
        os.makedirs(path)
