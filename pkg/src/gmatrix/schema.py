"""
JSON input models for groups, gradings and matrices.

Example grading file:

    {"group": {"invariant_factors": [2, 2, 2]},
     "tuple": [[0, 0, 0], [1, 0, 0]],
     "fine_factors": [{"a": [0, 1, 0], "b": [0, 0, 1]}]}
"""
from __future__ import annotations

from fractions import Fraction
from typing import Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.abgroup.group import AbelianGroup
from src.field.cyclotomic import CyclotomicField, make_field
from src.gmatrix.grading import FineFactor, GradedAlgebra, elementary_grading, mixed_grading
from src.gmatrix.matrix import Matrix

Scalar = Union[int, str]
Entry = Union[Scalar, list[Scalar]]


class GroupModel(BaseModel):
    invariant_factors: list[int] = Field(default_factory=list)

    @field_validator("invariant_factors")
    @classmethod
    def _positive(cls, v: list[int]) -> list[int]:
        if any(m < 1 for m in v):
            raise ValueError("invariant factors must be >= 1")
        return v

    def to_domain(self) -> AbelianGroup:
        return AbelianGroup(tuple(self.invariant_factors))


class FineFactorModel(BaseModel):
    a: list[int]
    b: list[int]
    order: int = Field(default=2, ge=2)

    def to_domain(self, group: AbelianGroup) -> FineFactor:
        return FineFactor(group(self.a), group(self.b), self.order)


class GradingModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    group: GroupModel
    tau: list[list[int]] = Field(alias="tuple", min_length=1)
    fine_factors: list[FineFactorModel] = Field(default_factory=list)
    field: int | None = Field(default=None, ge=1)

    def to_domain(self, max_n: int | None = None) -> GradedAlgebra:
        group = self.group.to_domain()
        tau = [group(g) for g in self.tau]
        fld = make_field(self.field) if self.field else None
        if not self.fine_factors:
            return elementary_grading(group, tau, field=fld, max_n=max_n)
        factors = [f.to_domain(group) for f in self.fine_factors]
        return mixed_grading(group, tau, factors, field=fld, max_n=max_n)


class MatrixModel(BaseModel):
    """Entries are "p/q" strings or integers, or coefficient vectors over Q(zeta_N)."""

    field: int = Field(default=1, ge=1)
    rows: list[list[Entry]] = Field(min_length=1)

    @field_validator("rows")
    @classmethod
    def _rectangular(cls, rows: list[list[Entry]]) -> list[list[Entry]]:
        if not rows[0] or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("matrix rows must be nonempty and of equal length")
        for r in rows:
            for v in r:
                for c in v if isinstance(v, list) else [v]:
                    try:
                        Fraction(str(c))
                    except ZeroDivisionError:
                        raise ValueError(f"zero denominator in entry {c!r}") from None
        return rows

    def to_domain(self, field: CyclotomicField | None = None) -> Matrix:
        return Matrix.from_json({"field": self.field, "rows": self.rows}, field=field)
