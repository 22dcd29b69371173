import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from src.abgroup import AbelianGroup
from src.antiauto import InvolutionKind, SKind, classify, is_graded_map
from src.canon import (
    InvolutionSpec,
    PairedBlock,
    SimpleBlock,
    assemble_canonical,
    build_canonical,
    congruence,
    fine_m2_case,
    hk_spanning_sets,
    normalizing_congruence,
    spec_blocks,
)
from src.canon.builder import rational_sqrt
from src.common.errors import (
    DegreeError,
    DimensionError,
    NotASquareError,
    SingularMatrixError,
    SpecValidationError,
)
from src.field import make_field
from src.gmatrix import FineFactor, Matrix

G = AbelianGroup((2, 2, 2))
E, C = G(0, 0, 0), G(1, 0, 0)
A, B = G(0, 1, 0), G(0, 0, 1)
FINE = (FineFactor(A, B),)

V4 = AbelianGroup((2, 2))


def six_by_six() -> InvolutionSpec:
    return InvolutionSpec(G, (SimpleBlock(1, E, E),), (PairedBlock(1, C, C, E),), FINE)


def fine_symplectic() -> InvolutionSpec:
    return InvolutionSpec(
        V4, (SimpleBlock(1, V4(0, 0), V4(1, 1)),), (), (FineFactor(V4(1, 0), V4(0, 1)),), -1
    )


def test_six_by_six_phi():
    alg, aa = build_canonical(six_by_six())
    F = alg.field
    W = Matrix.from_rows(F, [[1, 0, 0], [0, 0, 1], [0, 1, 0]])
    assert aa.phi == W.kron(Matrix.identity(F, 2))
    assert aa.kind is InvolutionKind.TRANSPOSE
    assert is_graded_map(alg, aa).ok


def test_single_trivial_block_gives_identity():
    spec = InvolutionSpec(V4, (SimpleBlock(2, V4(0, 0), V4(0, 0)),))
    alg, aa = build_canonical(spec)
    assert aa.phi == Matrix.identity(alg.field, 2)
    assert aa.kind is InvolutionKind.TRANSPOSE


def test_two_simple_blocks_on_x_a():
    spec = InvolutionSpec(G, (SimpleBlock(1, E, A), SimpleBlock(1, C, A)), (), FINE)
    alg, aa = build_canonical(spec)
    assert aa.phi == Matrix.diag(alg.field, [-1, 1, -1, 1])
    assert is_graded_map(alg, aa).ok


def test_fine_symplectic_matches_case_one():
    alg, aa = build_canonical(fine_symplectic())
    assert aa.kind is InvolutionKind.SYMPLECTIC
    assert aa.phi == Matrix.from_rows(alg.field, [[0, -1], [1, 0]])
    case = fine_m2_case(1)
    assert aa.phi == case.aa.phi.scale(-1)


def test_symplectic_swap_block():
    spec = InvolutionSpec(V4, (SimpleBlock(2, V4(0, 0), V4(0, 0), SKind.SYMPLECTIC_SWAP),),
                          omega=-1)
    _, aa = build_canonical(spec)
    assert aa.kind is InvolutionKind.SYMPLECTIC


def test_build_rejects_invalid_but_assemble_does_not():
    spec = InvolutionSpec(G, (SimpleBlock(1, E, E), SimpleBlock(1, C, A)), (), FINE)
    with pytest.raises(SpecValidationError):
        build_canonical(spec)
    alg, aa = assemble_canonical(spec)
    assert not is_graded_map(alg, aa).ok


def test_congruence_by_identity_and_scalar():
    alg, aa = build_canonical(six_by_six())
    F = alg.field
    same = congruence(aa, Matrix.identity(F, 6), alg)
    assert same.phi == aa.phi
    half = congruence(aa, Matrix.identity(F, 6).scale(Fraction(1, 2)), alg)
    assert half.phi == aa.phi.scale(Fraction(1, 4))
    assert half.kind is aa.kind


def test_congruence_input_errors():
    alg, aa = build_canonical(six_by_six())
    F = alg.field
    with pytest.raises(DimensionError):
        congruence(aa, Matrix.identity(F, 4), alg)
    with pytest.raises(SingularMatrixError):
        congruence(aa, Matrix.zeros(F, 6), alg)
    with pytest.raises(DegreeError):
        congruence(aa, Matrix.identity(F, 3).kron(alg.fine_matrix(A)), alg)


def test_normalizing_congruence_rescales_blocks():
    spec = six_by_six()
    alg, aa = build_canonical(spec)
    F = alg.field
    # paired part multiplied by 4
    W = Matrix.from_rows(F, [[1, 0, 0], [0, 0, 4], [0, 4, 0]])
    scaled = classify(W.kron(Matrix.identity(F, 2)))
    P, normalized = normalizing_congruence(alg, scaled, spec_blocks(spec))
    half = Fraction(1, 2)
    assert P == Matrix.diag(F, [1, 1, half, half, half, half])
    assert normalized.phi == aa.phi


def test_normalizing_congruence_needs_rational_squares():
    spec = six_by_six()
    alg, _ = build_canonical(spec)
    F = alg.field
    W = Matrix.from_rows(F, [[1, 0, 0], [0, 0, 2], [0, 2, 0]])
    with pytest.raises(NotASquareError):
        normalizing_congruence(alg, classify(W.kron(Matrix.identity(F, 2))), spec_blocks(spec))


def test_normalizing_congruence_accepts_negated_phi():
    spec = six_by_six()
    alg, aa = build_canonical(spec)
    F = alg.field
    W = Matrix.from_rows(F, [[-1, 0, 0], [0, 0, -4], [0, -4, 0]])
    scaled = classify(W.kron(Matrix.identity(F, 2)))
    P, normalized = normalizing_congruence(alg, scaled, spec_blocks(spec))
    half = Fraction(1, 2)
    assert P == Matrix.diag(F, [1, 1, half, half, half, half])
    assert normalized.phi == aa.phi


def test_normalizing_congruence_rejects_mixed_signs():
    spec = six_by_six()
    alg, _ = build_canonical(spec)
    F = alg.field
    W = Matrix.from_rows(F, [[1, 0, 0], [0, 0, -1], [0, -1, 0]])
    with pytest.raises(NotASquareError):
        normalizing_congruence(alg, classify(W.kron(Matrix.identity(F, 2))), spec_blocks(spec))


def test_rational_sqrt():
    QQ = make_field(1)
    assert rational_sqrt(QQ(Fraction(9, 4))) == Fraction(3, 2)
    with pytest.raises(NotASquareError):
        rational_sqrt(QQ(-1))


def test_spanning_sets_six_by_six():
    sets = hk_spanning_sets(six_by_six())
    assert sets.dim_h == 21 and sets.dim_k == 15
    assert sets.matches_hk_split
    assert sets.homogeneous
    assert sets.replaced_form_agrees


def test_spanning_sets_with_skew_fine_part():
    sets = hk_spanning_sets(fine_symplectic())
    assert sets.dim_h == 1 and sets.dim_k == 3
    assert sets.matches_hk_split
    # X_ab^{-1} = -X_ab, so the replaced form exchanges H and K
    assert not sets.replaced_form_agrees
