"""
The four graded involutions of M_2 with its fine Z_2 x Z_2 grading.
"""
from __future__ import annotations

from dataclasses import dataclass

from src.antiauto.hk import HKDecomposition, hk_split
from src.antiauto.involution import Antiauto, InvolutionKind, classify, is_graded_map
from src.gmatrix.grading import GradedAlgebra, epsilon_grading
from src.gmatrix.linalg import Subspace
from src.gmatrix.matrix import Matrix

# case -> (Phi rows, expected kind, labels spanning K, labels spanning H)
_CASES: dict[int, tuple[list[list[int]], InvolutionKind, tuple[str, ...], tuple[str, ...]]] = {
    1: ([[0, 1], [-1, 0]], InvolutionKind.SYMPLECTIC, ("X_a", "X_b", "X_ab"), ("X_e",)),
    2: ([[0, 1], [1, 0]], InvolutionKind.TRANSPOSE, ("X_a",), ("X_e", "X_b", "X_ab")),
    3: ([[1, 0], [0, 1]], InvolutionKind.TRANSPOSE, ("X_ab",), ("X_e", "X_a", "X_b")),
    4: ([[1, 0], [0, -1]], InvolutionKind.TRANSPOSE, ("X_b",), ("X_e", "X_a", "X_ab")),
}


@dataclass
class FineCase:
    case_id: int
    alg: GradedAlgebra
    aa: Antiauto
    expected_kind: InvolutionKind
    k_labels: tuple[str, ...]
    h_labels: tuple[str, ...]
    hk: HKDecomposition
    graded: bool
    spans_match: bool

    @property
    def ok(self) -> bool:
        return self.graded and self.spans_match and self.aa.kind is self.expected_kind

    def to_json(self) -> dict:
        return {
            "case": self.case_id,
            "phi": self.aa.phi.to_json(),
            "kind": self.aa.kind.value,
            "expected_kind": self.expected_kind.value,
            "graded": self.graded,
            "K": list(self.k_labels),
            "H": list(self.h_labels),
            "dim_k": self.hk.dim_k,
            "dim_h": self.hk.dim_h,
            "spans_match": self.spans_match,
            "ok": self.ok,
        }


def _span_of_labels(alg: GradedAlgebra, labels: tuple[str, ...]) -> Subspace:
    by_label = {mono.label: mono.matrix for mono in alg.fine_monomials}
    return Subspace(alg.field, alg.n ** 2, (by_label[x].vec() for x in labels))


def fine_m2_case(case_id: int) -> FineCase:
    if case_id not in _CASES:
        raise ValueError(f"case must be one of 1..4, got {case_id}")
    rows, kind, k_labels, h_labels = _CASES[case_id]
    alg = epsilon_grading(2)
    aa = classify(Matrix.from_rows(alg.field, rows))
    graded = is_graded_map(alg, aa).ok
    hk = hk_split(alg, aa)
    spans_match = hk.k_space().equals(_span_of_labels(alg, k_labels)) and hk.h_space().equals(
        _span_of_labels(alg, h_labels)
    )
    return FineCase(case_id, alg, aa, kind, k_labels, h_labels, hk, graded, spans_match)


__all__ = ["FineCase", "fine_m2_case"]
