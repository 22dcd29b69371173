"""
Direct linear solve for graded antiautomorphisms of the fine epsilon-grading.

For each pair (alpha, gamma) of n-th roots of unity the conditions
X_a^t Phi = alpha Phi X_a and X_b^t Phi = gamma Phi X_b are linear in the n^2
entries of Phi. Nondegenerate solutions whose map preserves every component are
kept, normalized so the first nonzero entry (row-major) is 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from src.abgroup.group import GroupElement
from src.antiauto.involution import classify, is_graded_map
from src.common.log import get_logger
from src.field.cyclotomic import CyclotomicField, FieldElement
from src.gmatrix import linalg
from src.gmatrix.grading import GradedAlgebra, epsilon_grading, pauli_pair
from src.gmatrix.matrix import Matrix

logger = get_logger(__name__)


@dataclass(frozen=True)
class FineSolution:
    phi: Matrix
    alpha: FieldElement
    gamma: FieldElement
    degree: GroupElement | None  # t with Phi proportional to X_t, when there is one
    label: str | None

    def to_json(self) -> dict:
        return {
            "phi": self.phi.to_json(),
            "alpha": self.alpha.to_json(),
            "gamma": self.gamma.to_json(),
            "degree": self.degree.to_json() if self.degree is not None else None,
            "label": self.label,
        }


def twisted_commutation_rows(L: Matrix, R: Matrix, c: FieldElement) -> list[linalg.SparseVec]:
    """Equations of L Phi - c Phi R = 0 in the row-major entries of Phi."""
    n = L.rows
    field = L.field
    eqs: dict[tuple[int, int], dict[int, FieldElement]] = {}
    # (L Phi)_{rs} = sum_k L_{rk} Phi_{ks}
    for (r, k), v in L.nonzero_entries():
        for s in range(n):
            eq = eqs.setdefault((r, s), {})
            idx = k * n + s
            eq[idx] = eq.get(idx, field.zero) + v
    # (Phi R)_{rs} = sum_k Phi_{rk} R_{ks}
    for (k, s), v in R.nonzero_entries():
        for r in range(n):
            eq = eqs.setdefault((r, s), {})
            idx = r * n + k
            eq[idx] = eq.get(idx, field.zero) - c * v
    rows = []
    for eq in eqs.values():
        cleaned = {k: v for k, v in eq.items() if v}
        if cleaned:
            rows.append(cleaned)
    return rows


def _normalize(phi: Matrix) -> Matrix:
    lead = phi.first_nonzero()
    return phi.scale(lead.inverse())


def _match_fine(alg: GradedAlgebra, phi: Matrix) -> tuple[GroupElement | None, str | None]:
    for mono in alg.fine_monomials:
        if phi.ratio_to(mono.matrix) is not None:
            return mono.degree, mono.label
    return None, None


def fine_antiauto_solve(n: int, field: CyclotomicField | None = None) -> list[FineSolution]:
    alg = epsilon_grading(n, field=field)
    field = alg.field
    xa, xb = pauli_pair(field, n)
    roots = [field.root_of_unity(n, k) for k in range(n)]
    found: dict[Matrix, FineSolution] = {}
    for alpha, gamma in product(roots, repeat=2):
        rows = twisted_commutation_rows(xa.T, xa, alpha)
        rows += twisted_commutation_rows(xb.T, xb, gamma)
        kernel = linalg.nullspace(rows, n * n, field)
        logger.debug("alpha=%s gamma=%s: kernel dimension %d", alpha, gamma, len(kernel))
        for vec in kernel:
            phi = Matrix.from_vec(field, n, n, vec)
            if not phi.is_invertible():
                continue
            if not is_graded_map(alg, classify(phi)).ok:
                continue
            phi = _normalize(phi)
            if phi not in found:
                degree, label = _match_fine(alg, phi)
                found[phi] = FineSolution(phi, alpha, gamma, degree, label)

    def order_key(sol: FineSolution):
        deg = sol.degree.residues if sol.degree is not None else ()
        return (sol.degree is None, deg, sorted(sol.phi.vec()))

    return sorted(found.values(), key=order_key)
