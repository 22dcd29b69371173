import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from src.abgroup import AbelianGroup
from src.antiauto import BlockRecordKind, SKind, classify, extract_structure, s_matrix
from src.antiauto.structure import separate
from src.common.errors import DimensionError, NotInvolutiveError, NotSeparableError
from src.field import make_field
from src.gmatrix import (
    Block,
    BlockKind,
    BlockStructure,
    FineFactor,
    Matrix,
    identity_component_blocks,
    mixed_grading,
)

G = AbelianGroup((2, 2, 2))
E, C = G(0, 0, 0), G(1, 0, 0)
A, B = G(0, 1, 0), G(0, 0, 1)


@pytest.fixture
def six():
    alg = mixed_grading(G, (E, C, C), [FineFactor(A, B)])
    blocks = BlockStructure(
        (
            Block(BlockKind.SIMPLE, 1, (0,), (E,)),
            Block(BlockKind.PAIRED, 1, (1, 2), (C, C)),
        ),
        m=3,
        d=2,
    )
    return alg, blocks


def test_s_matrices():
    QQ = make_field(1)
    assert s_matrix(QQ, SKind.SWAP, 1) == Matrix.from_rows(QQ, [[0, 1], [1, 0]])
    assert s_matrix(QQ, SKind.SKEW_SWAP, 1) == Matrix.from_rows(QQ, [[0, 1], [-1, 0]])
    assert s_matrix(QQ, SKind.SYMPLECTIC_SWAP, 2) == s_matrix(QQ, SKind.SKEW_SWAP, 1)
    with pytest.raises(DimensionError):
        s_matrix(QQ, SKind.SYMPLECTIC_SWAP, 3)


def test_extracts_identity_and_swap_blocks(six):
    alg, blocks = six
    F = alg.field
    W = Matrix.from_rows(F, [[1, 0, 0], [0, 0, 1], [0, 1, 0]])
    aa = classify(W.kron(Matrix.identity(F, 2)))
    report = extract_structure(alg, aa, blocks)
    assert report.residual_ok and report.q_signs_ok
    simple, paired = report.blocks
    assert simple.kind is BlockRecordKind.TRANSPOSE_SIMPLE
    assert simple.s_kind is SKind.IDENTITY and simple.t == E and simple.Y == 1
    assert paired.kind is BlockRecordKind.PAIR_SWAP
    assert paired.s_kind is SKind.SWAP and paired.t == E


def test_central_scalars_and_fine_parts(six):
    alg, blocks = six
    F = alg.field
    xa = alg.fine_matrix(A)
    phi = Matrix.from_rows(F, [[3, 0, 0], [0, 0, 0], [0, 0, 0]]).kron(xa)
    phi = phi + Matrix.from_rows(F, [[0, 0, 0], [0, 0, 2], [0, 2, 0]]).kron(xa)
    report = extract_structure(alg, classify(phi), blocks)
    assert [b.t for b in report.blocks] == [A, A]
    assert [b.Y for b in report.blocks] == [3, 2]
    assert report.reassemble() == phi


def test_skew_fine_part_is_flagged(six):
    alg, blocks = six
    F = alg.field
    xab = alg.fine_matrix(A * B)
    W = Matrix.from_rows(F, [[1, 0, 0], [0, 0, 1], [0, -1, 0]])
    report = extract_structure(alg, classify(W.kron(xab)), blocks)
    assert report.ll4_flags == [-1, -1]
    assert report.blocks[1].s_kind is SKind.SKEW_SWAP


def test_blocks_from_grading_only():
    alg = mixed_grading(G, (E, C), [FineFactor(A, B)])
    blocks = identity_component_blocks(alg)
    phi = Matrix.identity(alg.field, 2).kron(alg.fine_matrix(B))
    report = extract_structure(alg, classify(phi), blocks)
    assert [b.t for b in report.blocks] == [B, B]
    assert all(b.s_kind is SKind.IDENTITY for b in report.blocks)


def test_separate_rejects_entangled_slices():
    QQ = make_field(1)
    # E11 (x) E11 + E22 (x) E22 has slice rank 2
    M = Matrix.diag(QQ, [1, 0, 0, 1])
    with pytest.raises(NotSeparableError):
        separate(M, 2, 2, block=0)


def test_requires_order_two_on_identity_component(six):
    alg, blocks = six
    F = alg.field
    W = Matrix.from_rows(F, [[1, 0, 0], [0, 1, 1], [0, 0, 1]])
    with pytest.raises(NotInvolutiveError):
        extract_structure(alg, classify(W.kron(Matrix.identity(F, 2))), blocks)
