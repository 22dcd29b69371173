from src.gmatrix.blocks import (
    Block,
    BlockKind,
    BlockStructure,
    centralizer_of_identity_component,
    cross_block_degrees,
    expected_centralizer_dim,
    identity_component_blocks,
)
from src.gmatrix.grading import (
    FineFactor,
    GradedAlgebra,
    elementary_grading,
    epsilon_grading,
    is_trivial_grading,
    mixed_grading,
    mixed_grading_report,
    verify_basis,
    verify_grading_law,
)
from src.gmatrix.linalg import Subspace
from src.gmatrix.matrix import Matrix

__all__ = [
    "Block",
    "BlockKind",
    "BlockStructure",
    "FineFactor",
    "GradedAlgebra",
    "Matrix",
    "Subspace",
    "centralizer_of_identity_component",
    "cross_block_degrees",
    "elementary_grading",
    "epsilon_grading",
    "expected_centralizer_dim",
    "identity_component_blocks",
    "is_trivial_grading",
    "mixed_grading",
    "mixed_grading_report",
    "verify_basis",
    "verify_grading_law",
]
