from src.antiauto.fine_solver import FineSolution, fine_antiauto_solve
from src.antiauto.hk import HKDecomposition, LieJordanReport, hk_split, lie_jordan_check
from src.antiauto.involution import (
    Antiauto,
    GradedMapReport,
    InvolutionKind,
    classify,
    is_graded_map,
)
from src.antiauto.structure import (
    BlockRecord,
    BlockRecordKind,
    SKind,
    StructureReport,
    extract_structure,
    s_matrix,
)

__all__ = [
    "Antiauto",
    "BlockRecord",
    "BlockRecordKind",
    "FineSolution",
    "GradedMapReport",
    "HKDecomposition",
    "InvolutionKind",
    "LieJordanReport",
    "SKind",
    "StructureReport",
    "classify",
    "extract_structure",
    "fine_antiauto_solve",
    "hk_split",
    "is_graded_map",
    "lie_jordan_check",
    "s_matrix",
]
