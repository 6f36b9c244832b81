"""Toric systems on weak del Pezzo surfaces.

Core types come straight from the compiled extension. Reports are returned as
plain dicts with the same layout the command-line tool prints with --format json.
"""

import json
import math

from . import _core
from ._core import (
    DivisorClass,
    InternalError,
    Lattice,
    MissingGolden,
    Surface,
    ToricSystem,
    augment,
    augment_blowup,
    blow_down,
    canonical_form,
    catalog_names,
    default_data_dir,
    enumerate_r_classes,
    euler_char,
    euler_char_pair,
    generates_picard,
    intersect,
    is_numerically_lo,
    lattice,
    matches_strong_family,
    square,
    surface,
    table_ids,
    toric_system_from_json,
)

__all__ = [
    "DivisorClass", "InternalError", "Lattice", "MissingGolden", "Surface", "ToricSystem",
    "augment", "augment_blowup", "blow_down", "canonical_form", "catalog_names",
    "default_data_dir", "e_invariant", "enumerate_r_classes", "euler_char", "euler_char_pair",
    "exceptionality", "generate_admissible", "generates_picard", "intersect", "is_admissible",
    "is_numerically_lo", "lattice", "load_system", "matches_strong_family", "pseudoheight",
    "reduce", "square", "surface", "table_ids", "verify_table",
]


def e_invariant(x, d):
    """0, 1 or 2, or math.inf when no cohomology group of O(D) is nonzero."""
    value = json.loads(x.e_invariant(d))
    return math.inf if value == "infinity" else value


def exceptionality(x, ts, fast=False):
    return json.loads(_core.exceptionality(x, ts, fast))


def pseudoheight(x, ts, p_min=1):
    return json.loads(_core.pseudoheight(x, ts, p_min))


def reduce(x, d):
    return json.loads(_core.reduce(x, d))


def is_admissible(seq, allow_p2_base=True):
    return _core.is_admissible(list(seq), allow_p2_base)


def generate_admissible(n, lo, hi=None, allow_p2_base=True):
    return [tuple(s) for s in _core.generate_admissible(n, lo, hi, allow_p2_base)]


def verify_table(table_id, data_dir=None):
    return json.loads(_core.verify_table(table_id, data_dir or default_data_dir()))


def load_system(path):
    with open(path, encoding="utf-8") as f:
        return toric_system_from_json(f.read())
