"""Local Gromov-Witten and BPS invariants of snc del Pezzo surfaces."""

import json
from fractions import Fraction

from ._core import (
    ChowClass,
    DomainError,
    ParseError,
    Variety,
    ch_to_chern,
    chern_to_ch,
    emit_setup,
    engine_version,
    example_names,
    hirzebruch,
    point,
    product,
    projective_bundle,
    projective_space,
)
from . import _core

__all__ = [
    "ChowClass", "DomainError", "ParseError", "Variety", "ch_to_chern", "chern_to_ch",
    "classify", "emit_setup", "engine_version", "evaluate_setup", "example", "example_names",
    "hirzebruch", "local_gw_genus0", "point", "product", "projective_bundle", "projective_space",
]


def classify(rank, n_max=8, b_max=8):
    return json.loads(_core.classify_json(rank, n_max, b_max))


def example(name, show_intermediates=False):
    return json.loads(_core.example_json(name, show_intermediates))


def evaluate_setup(text, show_intermediates=False):
    return json.loads(_core.evaluate_setup_json(text, show_intermediates))


def local_gw_genus0(name):
    return Fraction(_core.local_gw_genus0(name))
