"""From-first-principles diagram-algebra oracle for cell-blocks.

Everything here is exact linear algebra over the diagram basis and is meant
for small ``n`` only (``n <= 3`` by default).
"""

from __future__ import annotations

from .algebra import AlgebraElement, PartitionAlgebra, e_idempotent
from .cellmodules import CellModule, HalfDiagramBasis, MatrixRep, cell_module_rep, gram_rank, half_diagram_basis
from .center import center_basis, central_character_vector, central_characters, oracle_cell_blocks
from .diagrams import SetPartitionDiagram, all_diagrams, compose, diagram_mult, generators
from .fields import Field, PrimeField, QuadraticExtensionField, RationalField, make_field
from .jucys_murphy import JucysMurphy, jm_element
from .morita import morita_check, morita_report
from .specht import SpechtModule, specht_rep

__all__ = [
    "AlgebraElement",
    "CellModule",
    "Field",
    "HalfDiagramBasis",
    "JucysMurphy",
    "MatrixRep",
    "PartitionAlgebra",
    "PrimeField",
    "QuadraticExtensionField",
    "RationalField",
    "SetPartitionDiagram",
    "SpechtModule",
    "all_diagrams",
    "cell_module_rep",
    "center_basis",
    "central_character_vector",
    "central_characters",
    "compose",
    "diagram_mult",
    "e_idempotent",
    "generators",
    "gram_rank",
    "half_diagram_basis",
    "jm_element",
    "make_field",
    "morita_check",
    "morita_report",
    "oracle_cell_blocks",
    "specht_rep",
]
