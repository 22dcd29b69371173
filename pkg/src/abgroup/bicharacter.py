"""
Bicharacter tables on the support T of a fine grading: X_t X_u = alpha(t, u) X_{tu}.
"""
from __future__ import annotations

from typing import Mapping

from src.abgroup.group import GroupElement
from src.field.cyclotomic import CyclotomicField, FieldElement


class Bicharacter:
    __slots__ = ("field", "_table", "_support")

    def __init__(
        self,
        field: CyclotomicField,
        table: Mapping[tuple[GroupElement, GroupElement], FieldElement],
    ):
        self.field = field
        self._table = dict(table)
        self._support = frozenset(t for t, _ in self._table)

    @property
    def support(self) -> frozenset[GroupElement]:
        return self._support

    def __call__(self, t: GroupElement, u: GroupElement) -> FieldElement:
        return self._table[(t, u)]

    def commutation(self, t: GroupElement, u: GroupElement) -> FieldElement:
        """beta(t, u) = alpha(t, u) / alpha(u, t), so X_t X_u = beta(t, u) X_u X_t."""
        return self(t, u) / self(u, t)

    def is_multiplicative(self) -> bool:
        T = sorted(self._support)
        for t in T:
            for u in T:
                for v in T:
                    if self(t, u * v) != self(t, u) * self(t, v):
                        return False
                    if self(t * u, v) != self(t, v) * self(u, v):
                        return False
        return True

    def items(self):
        return sorted(self._table.items(), key=lambda kv: (kv[0][0].residues, kv[0][1].residues))

    def to_json(self) -> list[dict]:
        return [
            {"t": t.to_json(), "u": u.to_json(), "alpha": value.to_json()}
            for (t, u), value in self.items()
        ]
