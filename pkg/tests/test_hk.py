import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from src.antiauto import classify, hk_split, lie_jordan_check
from src.canon.patterns import symplectic_block_phi
from src.common.errors import DimensionError, NotInvolutiveError
from src.field import make_field
from src.gmatrix import Matrix, epsilon_grading

QQ = make_field(1)


def test_plain_transpose_on_m3():
    hk = hk_split(3, classify(Matrix.identity(QQ, 3)))
    assert hk.dim_h == 6
    assert hk.dim_k == 3
    assert all(x.is_symmetric() for x in hk.h_basis)
    assert all(x.is_skew_symmetric() for x in hk.k_basis)


def test_symplectic_on_m4():
    aa = classify(symplectic_block_phi(QQ, 2))
    hk = hk_split(4, aa)
    assert hk.dim_k == 10
    assert hk.dim_h == 6
    for x in hk.k_basis:
        assert aa(x) == -x
    for x in hk.h_basis:
        assert aa(x) == x


def test_lie_and_jordan_closure():
    aa = classify(symplectic_block_phi(QQ, 2))
    report = lie_jordan_check(hk_split(4, aa))
    assert report.ok
    assert report.offending is None
    # unit-basis generators carry no degree
    assert not report.homogeneous


def test_graded_split_keeps_degrees():
    alg = epsilon_grading(2)
    aa = classify(Matrix.from_rows(alg.field, [[0, 1], [-1, 0]]))
    hk = hk_split(alg, aa)
    assert hk.dim_h == 1 and hk.dim_k == 3
    assert hk.is_homogeneous()
    assert hk.h_degrees == [alg.group.identity]
    assert lie_jordan_check(hk).ok


def test_non_involution_is_rejected():
    aa = classify(Matrix.from_rows(QQ, [[1, 1], [0, 1]]))
    with pytest.raises(NotInvolutiveError):
        hk_split(2, aa)


def test_size_must_match():
    with pytest.raises(DimensionError):
        hk_split(3, classify(Matrix.identity(QQ, 2)))


def test_json_shape():
    hk = hk_split(2, classify(Matrix.identity(QQ, 2)))
    payload = hk.to_json()
    assert payload["dim_h"] == 3 and payload["dim_k"] == 1
    assert payload["k"][0]["degree"] is None
