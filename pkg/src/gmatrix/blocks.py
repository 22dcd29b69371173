"""
Block structure of the identity component R_e of a mixed grading.

Positions of the elementary tuple with equal group entry form one block; when the
elementary support meets the fine support only in e, R_e is the direct sum of
M_{p_i} (x) I_d over those blocks. Paired blocks (two components exchanged by an
involution) are produced from involution specs, not from the grading alone.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from src.abgroup.group import GroupElement
from src.common.errors import DimensionError
from src.field.cyclotomic import CyclotomicField
from src.gmatrix import linalg
from src.gmatrix.grading import GradedAlgebra
from src.gmatrix.matrix import Matrix


class BlockKind(str, Enum):
    SIMPLE = "simple"
    PAIRED = "paired"


@dataclass(frozen=True)
class Block:
    kind: BlockKind
    size: int  # p_i
    positions: tuple[int, ...]  # elementary tuple positions, in order
    entries: tuple[GroupElement, ...]  # (g,) for simple, (g', g'') for paired

    @property
    def first_half(self) -> tuple[int, ...]:
        return self.positions[: self.size] if self.kind is BlockKind.PAIRED else self.positions

    @property
    def second_half(self) -> tuple[int, ...]:
        if self.kind is not BlockKind.PAIRED:
            return ()
        return self.positions[self.size:]

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "size": self.size,
            "positions": list(self.positions),
            "entries": [g.to_json() for g in self.entries],
        }


def position_projector(
    field: CyclotomicField, m: int, positions: tuple[int, ...], d: int = 1
) -> Matrix:
    """diag(1 on positions) (x) I_d."""
    inside = set(positions)
    elem = Matrix.diag(field, [1 if i in inside else 0 for i in range(m)])
    return elem.kron(Matrix.identity(field, d))


@dataclass(frozen=True)
class BlockStructure:
    blocks: tuple[Block, ...]
    m: int  # elementary size
    d: int  # fine factor size

    def __post_init__(self):
        covered = sorted(p for b in self.blocks for p in b.positions)
        if covered != list(range(self.m)):
            raise DimensionError(f"blocks cover positions {covered}, expected 0..{self.m - 1}")

    @property
    def n(self) -> int:
        return self.m * self.d

    def idempotents(self, field: CyclotomicField) -> list[Matrix]:
        """e_i (x) I_d per block; orthogonal and summing to I_n."""
        return [position_projector(field, self.m, b.positions, self.d) for b in self.blocks]

    def half_idempotents(self, field: CyclotomicField, index: int) -> tuple[Matrix, Matrix]:
        """(e'_i, e''_i) for a paired block."""
        b = self.blocks[index]
        if b.kind is not BlockKind.PAIRED:
            raise ValueError(f"block {index} is not paired")
        return (
            position_projector(field, self.m, b.first_half, self.d),
            position_projector(field, self.m, b.second_half, self.d),
        )

    def to_json(self) -> dict:
        return {"m": self.m, "d": self.d, "blocks": [b.to_json() for b in self.blocks]}


def identity_component_blocks(alg: GradedAlgebra) -> BlockStructure:
    """Group tuple positions by equal entry, blocks in order of first occurrence."""
    order: list[GroupElement] = []
    positions: dict[GroupElement, list[int]] = {}
    for i, g in enumerate(alg.tau):
        if g not in positions:
            order.append(g)
            positions[g] = []
        positions[g].append(i)
    blocks = tuple(
        Block(BlockKind.SIMPLE, len(positions[g]), tuple(positions[g]), (g,)) for g in order
    )
    return BlockStructure(blocks, alg.m, alg.d)


def cross_block_degrees(
    alg: GradedAlgebra, blocks: BlockStructure, i: int, j: int
) -> frozenset[GroupElement]:
    """Degrees occurring in e_i R e_j."""
    rows = set(blocks.blocks[i].positions)
    cols = set(blocks.blocks[j].positions)
    return frozenset(b.degree for b in alg.basis if b.row in rows and b.col in cols)


def centralizer_of_identity_component(alg: GradedAlgebra) -> list[Matrix]:
    """Basis of {X : XB = BX for all B in R_e}, by solving the commutation system."""
    n = alg.n
    field = alg.field
    rows: list[linalg.SparseVec] = []
    for elem in alg.component_basis(alg.group.identity):
        B = elem.matrix
        nz = B.nonzero_entries()
        # (XB - BX)_{rc} = sum_k X_{rk} B_{kc} - sum_k B_{rk} X_{kc}
        eqs: dict[tuple[int, int], linalg.SparseVec] = {}
        for (k, c), v in nz:
            for r in range(n):
                eq = eqs.setdefault((r, c), {})
                idx = r * n + k
                eq[idx] = eq.get(idx, field.zero) + v
        for (r, k), v in nz:
            for c in range(n):
                eq = eqs.setdefault((r, c), {})
                idx = k * n + c
                eq[idx] = eq.get(idx, field.zero) - v
        for eq in eqs.values():
            cleaned = {k: v for k, v in eq.items() if v}
            if cleaned:
                rows.append(cleaned)
    return [Matrix.from_vec(field, n, n, v) for v in linalg.nullspace(rows, n * n, field)]


def expected_centralizer_dim(alg: GradedAlgebra) -> int:
    """One central idempotent per block, times the full fine algebra."""
    return len(identity_component_blocks(alg).blocks) * alg.d ** 2
