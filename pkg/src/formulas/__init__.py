"""
gridbond closed forms: formula values, explicit constructions and witness
edge sets for grids with at most four rows.
"""

from .closed_forms import FormulaKind, FormulaValue, gamma_t_formula, bondage_formula
from .constructions import (
    ConstructionId, ConstructionParams, construct, construction_graph, construction_edges
)
from .witnesses import WitnessSource, WitnessRecord, witness_edges, witness_record

__all__ = [
    "FormulaKind",
    "FormulaValue",
    "gamma_t_formula",
    "bondage_formula",
    "ConstructionId",
    "ConstructionParams",
    "construct",
    "construction_graph",
    "construction_edges",
    "WitnessSource",
    "WitnessRecord",
    "witness_edges",
    "witness_record",
]
