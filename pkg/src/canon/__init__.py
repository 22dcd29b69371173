from src.canon.builder import (
    HKSpanningSets,
    assemble_canonical,
    build_canonical,
    congruence,
    hk_spanning_sets,
    normalizing_congruence,
)
from src.canon.census import (
    CensusRecord,
    default_fine_factors,
    enumerate_canonical,
    iterate_candidates,
    verify_spec,
)
from src.canon.fine_cases import FineCase, fine_m2_case
from src.canon.patterns import (
    BlockPattern,
    PatternAgreement,
    PatternKind,
    block_pattern_check,
    compare_with_involution,
    symplectic_block_phi,
    transpose_block_phi,
)
from src.canon.spec import (
    InvolutionSpec,
    PairedBlock,
    SimpleBlock,
    SpecVerdict,
    block_signs,
    spec_blocks,
    validate_spec,
)

__all__ = [
    "BlockPattern",
    "CensusRecord",
    "FineCase",
    "HKSpanningSets",
    "InvolutionSpec",
    "PairedBlock",
    "PatternAgreement",
    "PatternKind",
    "SimpleBlock",
    "SpecVerdict",
    "assemble_canonical",
    "block_signs",
    "block_pattern_check",
    "build_canonical",
    "compare_with_involution",
    "congruence",
    "default_fine_factors",
    "enumerate_canonical",
    "fine_m2_case",
    "hk_spanning_sets",
    "iterate_candidates",
    "normalizing_congruence",
    "spec_blocks",
    "symplectic_block_phi",
    "transpose_block_phi",
    "validate_spec",
    "verify_spec",
]
