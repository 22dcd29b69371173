"""
Block-wise structure of a graded antiautomorphism of a mixed grading.

Each block slice (e_i (x) I) Phi (e_i (x) I) is separated as W_i (x) Q_i by
reshaping it into a (block size)^2 x d^2 coefficient matrix of rank one. Q_i is
matched to a fine basis matrix X_{t_i} when possible, and W_i is split into a
normalized S_i times the central scalar Y_i of the block.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from enum import Enum

from src.abgroup.group import GroupElement
from src.antiauto.involution import Antiauto, is_order_two_on_identity_component
from src.common.errors import DimensionError, NotInvolutiveError, NotSeparableError
from src.common.log import get_logger
from src.field.cyclotomic import CyclotomicField, FieldElement
from src.gmatrix import linalg
from src.gmatrix.blocks import Block, BlockKind, BlockStructure
from src.gmatrix.grading import GradedAlgebra
from src.gmatrix.matrix import Matrix

logger = get_logger(__name__)


class BlockRecordKind(str, Enum):
    TRANSPOSE_SIMPLE = "transpose_simple"
    SYMPLECTIC_SIMPLE = "symplectic_simple"
    PAIR_SWAP = "pair_swap"


class SKind(str, Enum):
    IDENTITY = "Identity"
    SYMPLECTIC_SWAP = "SymplecticSwap"
    SWAP = "Swap"
    SKEW_SWAP = "SkewSwap"
    GENERAL = "General"


def s_matrix(field: CyclotomicField, kind: SKind, p: int) -> Matrix:
    """The normalized block matrix S for a block of size p (paired: two halves of size p)."""
    if kind is SKind.IDENTITY:
        return Matrix.identity(field, p)
    if kind is SKind.SYMPLECTIC_SWAP:
        if p % 2:
            raise DimensionError(f"symplectic block needs even size, got {p}")
        h = p // 2
        eye, zero = Matrix.identity(field, h), Matrix.zeros(field, h)
        return Matrix.from_blocks([[zero, eye], [-eye, zero]])
    eye, zero = Matrix.identity(field, p), Matrix.zeros(field, p)
    if kind is SKind.SWAP:
        return Matrix.from_blocks([[zero, eye], [eye, zero]])
    if kind is SKind.SKEW_SWAP:
        return Matrix.from_blocks([[zero, eye], [-eye, zero]])
    raise ValueError(f"no normalized matrix for {kind}")


@dataclass
class BlockRecord:
    index: int
    kind: BlockRecordKind
    s_kind: SKind
    S: Matrix
    Y: FieldElement  # central scalar, Phi_i = S_i Y_i (x) Q_i
    Q: Matrix
    t: GroupElement | None
    q_sign: int | None  # Q^t^{-1} Q = q_sign * I
    positions: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "kind": self.kind.value,
            "s_kind": self.s_kind.value,
            "S": self.S.to_json()["rows"],
            "Y": self.Y.to_json(),
            "Q": self.Q.to_json()["rows"],
            "t": self.t.to_json() if self.t is not None else None,
            "q_sign": self.q_sign,
            "positions": list(self.positions),
        }


@dataclass
class StructureReport:
    m: int
    d: int
    field: CyclotomicField
    blocks: list[BlockRecord] = dc_field(default_factory=list)
    residual_ok: bool = False  # Phi vanishes outside the block slices

    @property
    def ll4_flags(self) -> list[int | None]:
        return [b.q_sign for b in self.blocks]

    @property
    def q_signs_ok(self) -> bool:
        return all(s in (1, -1) for s in self.ll4_flags)

    def reassemble(self) -> Matrix:
        """Sum over blocks of (S_i Y_i embedded at the block positions) (x) Q_i."""
        total = Matrix.zeros(self.field, self.m * self.d)
        for b in self.blocks:
            W = b.S.scale(b.Y)
            entries = {
                (b.positions[i], b.positions[j]): v for (i, j), v in W.nonzero_entries()
            }
            elem = Matrix.from_sparse(self.field, self.m, self.m, entries)
            total = total + elem.kron(b.Q)
        return total

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "d": self.d,
            "residual_ok": self.residual_ok,
            "q_signs_ok": self.q_signs_ok,
            "blocks": [b.to_json() for b in self.blocks],
        }


def _slice(phi: Matrix, positions: tuple[int, ...], d: int) -> Matrix:
    idx = [p * d + f for p in positions for f in range(d)]
    return phi.submatrix(idx, idx)


def separate(slice_: Matrix, size: int, d: int, block: int) -> tuple[Matrix, Matrix]:
    """Write slice_ = U (x) V with U of size `size` and V of size d; rank > 1 raises."""
    rows: list[linalg.SparseVec] = []
    for r in range(size):
        for s in range(size):
            vec = {}
            for p in range(d):
                for q in range(d):
                    v = slice_[r * d + p, s * d + q]
                    if v:
                        vec[p * d + q] = v
            rows.append(vec)
    rank = linalg.rank(rows)
    if rank != 1:
        raise NotSeparableError(block, rank)
    pivot = next(r for r in rows if r)
    key = min(pivot)
    field = slice_.field
    V = Matrix.from_vec(field, d, d, pivot)
    u = {i: row[key] / pivot[key] for i, row in enumerate(rows) if row}
    U = Matrix.from_vec(field, size, size, u)
    return U, V


def _match_fine(alg: GradedAlgebra, V: Matrix) -> tuple[Matrix, FieldElement, GroupElement | None]:
    """V = c * Q with Q = X_t when V is proportional to a fine basis matrix."""
    for mono in alg.fine_monomials:
        c = V.ratio_to(mono.matrix)
        if c is not None:
            return mono.matrix, c, mono.degree
    lead = V.first_nonzero()
    return V.scale(lead.inverse()), lead, None


def _transpose_sign(Q: Matrix) -> int | None:
    c = (Q.inverse().T @ Q).is_scalar()
    if c is not None and c == 1:
        return 1
    if c is not None and c == -1:
        return -1
    return None


def _split_simple(field, U: Matrix, p: int) -> tuple[SKind, Matrix, FieldElement]:
    c = U.is_scalar()
    if c is not None and c:
        return SKind.IDENTITY, Matrix.identity(field, p), c
    if p % 2 == 0:
        J = s_matrix(field, SKind.SYMPLECTIC_SWAP, p)
        c = U.ratio_to(J)
        if c is not None and c:
            return SKind.SYMPLECTIC_SWAP, J, c
    return SKind.GENERAL, U, field.one


def _split_paired(field, W: Matrix, p: int) -> tuple[SKind, Matrix, FieldElement]:
    for kind in (SKind.SWAP, SKind.SKEW_SWAP):
        S = s_matrix(field, kind, p)
        c = W.ratio_to(S)
        if c is not None and c:
            return kind, S, c
    return SKind.GENERAL, W, field.one


def extract_structure(
    alg: GradedAlgebra, aa: Antiauto, blocks: BlockStructure
) -> StructureReport:
    if alg.n != aa.n or blocks.n != alg.n or blocks.d != alg.d:
        raise DimensionError("algebra, antiautomorphism and block structure disagree in size")
    if not is_order_two_on_identity_component(alg, aa):
        raise NotInvolutiveError("the map does not have order two on the identity component")
    field = alg.field
    phi = aa.phi
    report = StructureReport(blocks.m, blocks.d, field)
    for index, block in enumerate(blocks.blocks):
        record = _extract_block(alg, phi, block, index)
        logger.debug("block %d: %s t=%s Y=%s", index, record.s_kind.value, record.t, record.Y)
        report.blocks.append(record)
    report.residual_ok = report.reassemble() == phi
    return report


def _extract_block(alg: GradedAlgebra, phi: Matrix, block: Block, index: int) -> BlockRecord:
    field = alg.field
    size = len(block.positions)
    U, V = separate(_slice(phi, block.positions, alg.d), size, alg.d, index)
    Q, c, t = _match_fine(alg, V)
    U = U.scale(c)
    if block.kind is BlockKind.SIMPLE:
        s_kind, S, y = _split_simple(field, U, size)
        if S.is_symmetric():
            kind = BlockRecordKind.TRANSPOSE_SIMPLE
        else:
            kind = BlockRecordKind.SYMPLECTIC_SIMPLE
    else:
        s_kind, S, y = _split_paired(field, U, block.size)
        kind = BlockRecordKind.PAIR_SWAP
    return BlockRecord(index, kind, s_kind, S, y, Q, t, _transpose_sign(Q), block.positions)
