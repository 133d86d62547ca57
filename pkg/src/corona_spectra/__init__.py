"""Exact characteristic polynomials and coronals of digraph corona products."""
from .algebra import Matrix, Polynomial, RationalFunction, charpoly, coronal, numeric_roots
from .corona import (
    ClosedFormOutcome,
    CoronaKind,
    SpectrumDescription,
    arc_corona,
    arc_corona_charpoly,
    arc_corona_charpoly_closed,
    kron_schur_charpoly,
    strong_connectivity_predictions,
    vertex_corona,
    vertex_corona_charpoly,
    vertex_corona_spectrum_outregular,
)
from .digraph import Digraph, make_family, matrix_of
from .io import parse_digraph, serialize_digraph, to_dot

__version__ = "0.1.0"

__all__ = [
    "ClosedFormOutcome",
    "CoronaKind",
    "Digraph",
    "Matrix",
    "Polynomial",
    "RationalFunction",
    "SpectrumDescription",
    "arc_corona",
    "arc_corona_charpoly",
    "arc_corona_charpoly_closed",
    "charpoly",
    "coronal",
    "kron_schur_charpoly",
    "make_family",
    "matrix_of",
    "numeric_roots",
    "parse_digraph",
    "serialize_digraph",
    "strong_connectivity_predictions",
    "to_dot",
    "vertex_corona",
    "vertex_corona_charpoly",
    "vertex_corona_spectrum_outregular",
]
