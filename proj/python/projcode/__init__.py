"""Projective linear codes over small finite fields.

Matrices are lists of rows of field-element encodings (integers 0..q-1;
for q = p^m an element is the integer whose base-p digits are its
polynomial coefficients, lowest degree first).
"""

import json

from . import _core
from ._core import (
    GuardError,
    NotCoveredError,
    bracket,
    canonical_form,
    common_projective_neighbors,
    construction_pair,
    fixture,
    gaussian_binomial,
    grassmann_geodesic_count,
    intersect_dim,
    is_projective,
    is_simplex_code,
    is_simplex_vector,
    profile,
    rank,
    simplex_generator,
)

__version__ = _core.__version__


def build_graph(n, k, q, predicate="projective"):
    """Graph of k-subspaces of F_q^n passing `predicate`, as
    {"params", "vertices", "edges"}."""
    return json.loads(_core.build_graph_json(n, k, q, predicate))


def verify(claim, *params, seed=1, variant="standard", fixture="", trials=0, dim_u=0):
    """Run a named check; returns the list of report dicts."""
    return json.loads(
        _core.verify_json(claim, list(params), seed, variant, fixture, trials, dim_u)
    )


__all__ = [
    "GuardError",
    "NotCoveredError",
    "bracket",
    "build_graph",
    "canonical_form",
    "common_projective_neighbors",
    "construction_pair",
    "fixture",
    "gaussian_binomial",
    "grassmann_geodesic_count",
    "intersect_dim",
    "is_projective",
    "is_simplex_code",
    "is_simplex_vector",
    "profile",
    "rank",
    "simplex_generator",
    "verify",
]
