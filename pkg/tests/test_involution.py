import sys
from pathlib import Path
import random

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from src.abgroup import AbelianGroup
from src.antiauto import InvolutionKind, classify, is_graded_map
from src.common.errors import DimensionError, SingularMatrixError
from src.field import make_field
from src.gmatrix import Matrix, elementary_grading, epsilon_grading

QQ = make_field(1)


def test_classify_by_symmetry_of_phi():
    assert classify(Matrix.identity(QQ, 3)).kind is InvolutionKind.TRANSPOSE
    J = Matrix.from_rows(QQ, [[0, 1], [-1, 0]])
    aa = classify(J)
    assert aa.kind is InvolutionKind.SYMPLECTIC and aa.omega == -1
    aa = classify(Matrix.from_rows(QQ, [[1, 1], [0, 1]]))
    assert aa.kind is InvolutionKind.NON_INVOLUTIVE
    assert aa.omega is None and not aa.is_involution()


def test_classify_rejects_singular_and_rectangular():
    with pytest.raises(SingularMatrixError):
        classify(Matrix.from_rows(QQ, [[1, 1], [1, 1]]))
    with pytest.raises(DimensionError):
        classify(Matrix.zeros(QQ, 2, 3))


def test_involution_is_an_antiautomorphism_of_order_two():
    phi = Matrix.from_rows(QQ, [[2, 1, 0], [1, 0, 0], [0, 0, 5]])
    aa = classify(phi)
    X = Matrix.from_rows(QQ, [[1, 2, 3], [0, 1, 4], [5, 6, 0]])
    Y = Matrix.from_rows(QQ, [[0, 1, 0], [1, 1, 1], [2, 0, 1]])
    assert aa(X @ Y) == aa(Y) @ aa(X)
    assert aa(aa(X)) == X


def test_phi_scalar_multiple_gives_the_same_map():
    phi = Matrix.from_rows(QQ, [[0, 1], [1, 0]])
    X = Matrix.from_rows(QQ, [[1, 2], [3, 4]])
    assert classify(phi)(X) == classify(phi.scale(7))(X)


def test_transpose_preserves_an_elementary_z2_grading():
    G = AbelianGroup((2,))
    alg = elementary_grading(G, (G(0), G(1), G(1)))
    assert is_graded_map(alg, classify(Matrix.identity(QQ, 3))).ok


def test_transpose_does_not_preserve_an_elementary_z3_grading():
    G = AbelianGroup((3,))
    alg = elementary_grading(G, (G(0), G(1)))
    report = is_graded_map(alg, classify(Matrix.identity(QQ, 2)))
    assert not report.ok
    assert report.degree == G(1)
    assert report.image_degrees == [G(2)]
    # swapping the two positions reverses degrees back
    assert is_graded_map(alg, classify(Matrix.from_rows(QQ, [[0, 1], [1, 0]]))).ok


def test_graded_check_size_mismatch():
    alg = epsilon_grading(2)
    with pytest.raises(DimensionError):
        is_graded_map(alg, classify(Matrix.identity(alg.field, 3)))


@pytest.mark.parametrize(
    "rows",
    [
        [[2, 1, 0, 0], [1, 0, 0, 0], [0, 0, 5, 0], [0, 0, 0, -1]],
        [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]],
    ],
)
def test_apply_twice_is_identity_on_random_matrices(rows):
    aa = classify(Matrix.from_rows(QQ, rows))
    assert aa.is_involution()
    rng = random.Random(5)
    for _ in range(100):
        X = Matrix.from_rows(QQ, [[rng.randint(-4, 4) for _ in range(4)] for _ in range(4)])
        assert aa.apply(aa.apply(X)) == X
