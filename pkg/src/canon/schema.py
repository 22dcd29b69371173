"""
JSON input models for involution specs.

Example spec file (the 6x6 example with one simple and one paired block):

    {"group": {"invariant_factors": [2, 2, 2]},
     "simple_blocks": [{"p": 1, "g": [0, 0, 0], "t": [0, 0, 0]}],
     "paired_blocks": [{"p": 1, "g1": [1, 0, 0], "g2": [1, 0, 0], "t": [0, 0, 0]}],
     "fine_factors": [{"a": [0, 1, 0], "b": [0, 0, 1]}],
     "omega": 1}
"""
from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

from src.antiauto.structure import SKind
from src.canon.spec import InvolutionSpec, PairedBlock, SimpleBlock
from src.gmatrix.grading import FineFactor
from src.gmatrix.schema import GradingModel, GroupModel, MatrixModel


class SimpleBlockModel(BaseModel):
    p: int = Field(ge=1)
    g: list[int]
    t: list[int]
    s_kind: Literal["Identity", "SymplecticSwap"] = "Identity"


class PairedBlockModel(BaseModel):
    p: int = Field(ge=1)
    g1: list[int]
    g2: list[int]
    t: list[int]
    s_kind: Literal["Swap", "SkewSwap"] = "Swap"


class SpecFineFactorModel(BaseModel):
    a: list[int]
    b: list[int]


class InvolutionSpecModel(BaseModel):
    group: GroupModel
    simple_blocks: list[SimpleBlockModel] = Field(default_factory=list)
    paired_blocks: list[PairedBlockModel] = Field(default_factory=list)
    fine_factors: list[SpecFineFactorModel] = Field(default_factory=list)
    omega: Literal[1, -1] = 1

    def to_domain(self) -> InvolutionSpec:
        G = self.group.to_domain()
        return InvolutionSpec(
            group=G,
            simple_blocks=tuple(
                SimpleBlock(b.p, G(b.g), G(b.t), SKind(b.s_kind)) for b in self.simple_blocks
            ),
            paired_blocks=tuple(
                PairedBlock(b.p, G(b.g1), G(b.g2), G(b.t), SKind(b.s_kind))
                for b in self.paired_blocks
            ),
            fine_factors=tuple(FineFactor(G(f.a), G(f.b)) for f in self.fine_factors),
            omega=self.omega,
        )


class CheckInputModel(BaseModel):
    """A grading together with the matrix Phi of an antiautomorphism."""

    grading: GradingModel
    phi: MatrixModel


__all__ = [
    "CheckInputModel",
    "InvolutionSpecModel",
    "PairedBlockModel",
    "SimpleBlockModel",
    "SpecFineFactorModel",
]
