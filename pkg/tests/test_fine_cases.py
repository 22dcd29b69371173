import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from src.antiauto import InvolutionKind
from src.canon import fine_m2_case


@pytest.mark.parametrize(
    "case_id,kind,dim_k",
    [
        (1, InvolutionKind.SYMPLECTIC, 3),
        (2, InvolutionKind.TRANSPOSE, 1),
        (3, InvolutionKind.TRANSPOSE, 1),
        (4, InvolutionKind.TRANSPOSE, 1),
    ],
)
def test_fine_m2_cases(case_id, kind, dim_k):
    case = fine_m2_case(case_id)
    assert case.ok
    assert case.aa.kind is kind
    assert case.graded and case.spans_match
    assert case.hk.dim_k == dim_k
    assert case.hk.dim_h == 4 - dim_k


def test_case_json():
    payload = fine_m2_case(4).to_json()
    assert payload["K"] == ["X_b"]
    assert payload["H"] == ["X_e", "X_a", "X_ab"]
    assert payload["ok"] is True


def test_unknown_case():
    with pytest.raises(ValueError):
        fine_m2_case(5)
