import sys
from fractions import Fraction
from pathlib import Path
import random

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from src.common.errors import DimensionError, FieldMismatchError, SingularMatrixError
from src.field import make_field
from src.gmatrix import Matrix, Subspace
from src.gmatrix.schema import MatrixModel

QQ = make_field(1)


def _random_rows(rng, rows, cols, rank=None):
    """Integer matrix; with rank given, a product of rows x rank and rank x cols factors."""
    if rank is None:
        return [[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)]
    left = [[rng.randint(-3, 3) for _ in range(rank)] for _ in range(rows)]
    right = [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rank)]
    return [[sum(left[i][k] * right[k][j] for k in range(rank)) for j in range(cols)]
            for i in range(rows)]


@pytest.mark.parametrize("seed", range(6))
def test_rank_and_nullspace_agree_with_sympy(seed):
    sympy = pytest.importorskip("sympy")
    rng = random.Random(seed)
    rows = _random_rows(rng, 5, 6, rank=rng.randint(1, 4))
    A = Matrix.from_rows(QQ, rows)
    ref = sympy.Matrix(rows)
    assert A.rank() == ref.rank()
    kernel = A.nullspace()
    assert len(kernel) == len(ref.nullspace())
    for vec in kernel:
        x = [vec.get(j, QQ.zero) for j in range(A.cols)]
        assert all(sum((a * b for a, b in zip(row, x)), QQ.zero) == 0 for row in A.to_lists())


@pytest.mark.parametrize("seed", range(4))
def test_inverse_agrees_with_sympy(seed):
    sympy = pytest.importorskip("sympy")
    rng = random.Random(100 + seed)
    rows = _random_rows(rng, 4, 4)
    ref = sympy.Matrix(rows)
    if ref.det() == 0:
        pytest.skip("random matrix happened to be singular")
    inv = Matrix.from_rows(QQ, rows).inverse()
    expected = ref.inv()
    for i in range(4):
        for j in range(4):
            e = expected[i, j]
            assert inv[i, j] == Fraction(int(e.p), int(e.q))


def test_singular_inverse_raises():
    with pytest.raises(SingularMatrixError):
        Matrix.from_rows(QQ, [[1, 2], [2, 4]]).inverse()


def test_products_kron_and_transpose():
    A = Matrix.from_rows(QQ, [[1, 2], [3, 4]])
    B = Matrix.from_rows(QQ, [[0, 1], [1, 0]])
    assert A @ B == Matrix.from_rows(QQ, [[2, 1], [4, 3]])
    assert (A @ B).T == B.T @ A.T
    K = A.kron(B)
    assert K.shape == (4, 4)
    assert K[0, 1] == 1 and K[2, 1] == 3 and K[3, 0] == 3 and K[2, 3] == 4
    with pytest.raises(DimensionError):
        A @ Matrix.identity(QQ, 3)


def test_cyclotomic_entries():
    F = make_field(3)
    w = F.zeta
    D = Matrix.diag(F, [w, w ** 2, 1])
    assert D ** 3 == Matrix.identity(F, 3)
    assert D.inverse() == Matrix.diag(F, [w ** 2, w, 1])
    with pytest.raises(FieldMismatchError):
        D + Matrix.identity(QQ, 3)


def test_predicates_and_ratio():
    J = Matrix.from_rows(QQ, [[0, 1], [-1, 0]])
    assert J.is_skew_symmetric() and not J.is_symmetric()
    assert (J @ J).is_scalar() == -1
    assert J.scale(3).ratio_to(J) == 3
    assert J.ratio_to(Matrix.identity(QQ, 2)) is None


def test_solve():
    A = Matrix.from_rows(QQ, [[1, 1], [1, -1]])
    x = A.solve([QQ(3), QQ(1)])
    assert x == [2, 1]
    assert Matrix.from_rows(QQ, [[1, 1], [1, 1]]).solve([QQ(1), QQ(2)]) is None


def test_subspace_membership():
    space = Subspace(QQ, 3, [{0: QQ(1), 1: QQ(1)}, {1: QQ(1), 2: QQ(1)}])
    assert space.dim == 2
    assert space.contains({0: QQ(1), 2: QQ(-1)})
    assert not space.contains({0: QQ(1)})
    assert not space.add({0: QQ(2), 1: QQ(4), 2: QQ(2)})


def test_matrix_json_round_trip_via_model():
    F = make_field(4)
    M = Matrix.from_rows(F, [[F.zeta, 1], ["1/2", 0]])
    model = MatrixModel.model_validate(M.to_json())
    assert model.to_domain() == M


def test_matrix_model_rejects_ragged_rows():
    with pytest.raises(ValueError):
        MatrixModel.model_validate({"rows": [[1, 2], [3]]})
