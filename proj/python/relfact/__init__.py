"""Exact K-terminal reliability by boundary-cut factorization.

Graphs and decompositions are plain dicts (or JSON strings) in the same
shape the command-line tool reads. Probabilities come back as Fractions.
"""

import json
from fractions import Fraction

from . import _core
from ._core import (
    DecompositionError,
    EnumerationBoundError,
    GraphError,
    ParseError,
    PartitionError,
    RelfactError,
    join,
    meet,
    partitions,
)

__all__ = [
    "reliability",
    "factorize",
    "connectivity_matrix",
    "partitions",
    "join",
    "meet",
    "reliability_polynomial",
    "partition_function",
    "RelfactError",
    "ParseError",
    "GraphError",
    "PartitionError",
    "DecompositionError",
    "EnumerationBoundError",
]


def _text(document):
    return document if isinstance(document, str) else json.dumps(document)


def reliability(document, route="auto", jobs=1):
    """Exact reliability of a graph or decomposition."""
    return Fraction(_core.reliability(_text(document), route, jobs))


def factorize(document, order="canonical", jobs=1):
    """Factorized reliability plus the per-state side reliabilities."""
    raw = json.loads(_core.factorize(_text(document), order, jobs))
    return {
        "reliability": Fraction(raw["reliability"]),
        "n": raw["n"],
        "order": raw["order"],
        "side1": dict(zip(raw["order"], map(Fraction, raw["side1"]))),
        "side2": dict(zip(raw["order"], map(Fraction, raw["side2"]))),
        "warnings": raw["warnings"],
    }


def connectivity_matrix(n, order="canonical"):
    """A, its inverse and factors, determinant and invariant factors for n."""
    raw = json.loads(_core.connectivity_matrix(n, order))
    for key in ("A_inv", "C"):
        raw[key] = [[Fraction(x) for x in row] for row in raw[key]]
    raw["det"] = int(raw["det"])
    raw["invariant_factors"] = [int(x) for x in raw["invariant_factors"]]
    return raw


def reliability_polynomial(document):
    """Counts C_i of K-pathsets with i operative edges."""
    return [int(c) for c in _core.reliability_polynomial(_text(document))]


def partition_function(document):
    """Random cluster weights {k: w_k}."""
    return {k: Fraction(w) for k, w in _core.partition_function(_text(document)).items()}
