"""
gridbond grid model: grid graphs, canonical names and symmetries.
"""

from .grid_model import (
    EdgeKind, Vertex, Edge, GridSpec, GridGraph, build_grid,
    parse_edges, parse_vertices
)
from .symmetry import SymmetryMap, symmetries, edge_permutations

__all__ = [
    "EdgeKind",
    "Vertex",
    "Edge",
    "GridSpec",
    "GridGraph",
    "build_grid",
    "parse_edges",
    "parse_vertices",
    "SymmetryMap",
    "symmetries",
    "edge_permutations",
]
