"""Exact Lie algebra models: matrix and Chevalley bases, sl2-triples, the
involution test and centralizer computations."""

from .chevalley import cartan_element, chevalley_algebra, root_vector
from .matrix_models import classical_algebra, from_matrix, jordan_type, nilpotent_from_partition, to_matrix
from .model import LieModel, LieModelError
from .oracle import (
    CentralizerData,
    OracleResult,
    cayley,
    cayley_inverse,
    centralizer_of_centralizer,
    decompose,
    is_cayley_triple,
    is_magical_oracle,
    sigma_e,
    triple_centralizer,
)
from .scalars import QI, I
from .structure import StructureReport, verify_structure
from .triples import Sl2Triple, jm_complete, red_root_triple, triple_from_diagram, triple_from_partition

__all__ = [
    "CentralizerData", "I", "LieModel", "LieModelError", "OracleResult", "QI", "Sl2Triple", "StructureReport",
    "cartan_element", "cayley", "cayley_inverse", "centralizer_of_centralizer", "chevalley_algebra",
    "classical_algebra", "decompose", "from_matrix", "is_cayley_triple", "is_magical_oracle", "jm_complete",
    "jordan_type", "nilpotent_from_partition", "red_root_triple", "root_vector", "sigma_e", "to_matrix",
    "triple_centralizer", "triple_from_diagram", "triple_from_partition", "verify_structure",
]
