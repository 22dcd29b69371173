"""
Exception types shared across the packages.

Each error also derives from the builtin that matches its meaning, so callers can
catch either the specific type or plain ValueError.
"""
from __future__ import annotations


class GradedInvolutionError(Exception):
    """Base class for all library errors."""


class FieldMismatchError(GradedInvolutionError, ValueError):
    pass


class GroupMismatchError(GradedInvolutionError, ValueError):
    pass


class NotASubgroupError(GradedInvolutionError, ValueError):
    pass


class SingularMatrixError(GradedInvolutionError, ValueError):
    pass


class DimensionError(GradedInvolutionError, ValueError):
    pass


class MissingRootOfUnityError(GradedInvolutionError, ValueError):
    pass


class NotInvolutiveError(GradedInvolutionError, ValueError):
    pass


class NotSeparableError(GradedInvolutionError, ValueError):
    def __init__(self, block: int, rank: int):
        super().__init__(f"block {block} is not tensor-separable (slice rank {rank} > 1)")
        self.block = block
        self.rank = rank


class DegreeError(GradedInvolutionError, ValueError):
    pass


class NotASquareError(GradedInvolutionError, ValueError):
    pass


class SpecValidationError(GradedInvolutionError, ValueError):
    def __init__(self, diagnostics: list[str]):
        first = diagnostics[0] if diagnostics else "invalid spec"
        super().__init__(f"involution spec rejected: {first}")
        self.diagnostics = list(diagnostics)
