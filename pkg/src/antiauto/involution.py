"""
Antiautomorphisms of M_n(F), always of the form X -> Phi^{-1} X^t Phi.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from enum import Enum

from src.abgroup.group import GroupElement
from src.common.errors import DimensionError
from src.common.log import get_logger
from src.gmatrix.grading import GradedAlgebra
from src.gmatrix.matrix import Matrix

logger = get_logger(__name__)


class InvolutionKind(str, Enum):
    TRANSPOSE = "transpose"
    SYMPLECTIC = "symplectic"
    NON_INVOLUTIVE = "non_involutive"


@dataclass(frozen=True)
class Antiauto:
    phi: Matrix
    kind: InvolutionKind
    omega: int | None  # Phi^t = omega * Phi when involutive
    phi_inv: Matrix = dc_field(repr=False, compare=False)

    @property
    def n(self) -> int:
        return self.phi.rows

    @property
    def field(self):
        return self.phi.field

    def is_involution(self) -> bool:
        return self.kind is not InvolutionKind.NON_INVOLUTIVE

    def apply(self, X: Matrix) -> Matrix:
        if X.shape != self.phi.shape:
            raise DimensionError(f"cannot apply a {self.n}x{self.n} antiautomorphism to {X.shape}")
        return self.phi_inv @ X.T @ self.phi

    __call__ = apply

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "omega": self.omega, "phi": self.phi.to_json()}


def classify(phi: Matrix) -> Antiauto:
    """
    Transpose when Phi is symmetric, symplectic when skew-symmetric, else
    non-involutive. Phi^t^{-1} Phi is scalar exactly when the map has order two,
    and the scalar is then +1 or -1.
    """
    if not phi.is_square():
        raise DimensionError(f"Phi must be square, got {phi.shape}")
    # raises SingularMatrixError
    phi_inv = phi.inverse()
    c = (phi_inv.T @ phi).is_scalar()
    if c is not None and c == 1:
        return Antiauto(phi, InvolutionKind.TRANSPOSE, 1, phi_inv)
    if c is not None and c == -1:
        return Antiauto(phi, InvolutionKind.SYMPLECTIC, -1, phi_inv)
    return Antiauto(phi, InvolutionKind.NON_INVOLUTIVE, None, phi_inv)


@dataclass
class GradedMapReport:
    ok: bool
    degree: GroupElement | None = None  # degree of the first offending basis element
    label: str | None = None
    image_degrees: list[GroupElement] = dc_field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "graded": self.ok,
            "offending_degree": self.degree.to_json() if self.degree is not None else None,
            "offending_element": self.label,
            "image_degrees": [g.to_json() for g in self.image_degrees],
        }


def is_graded_map(alg: GradedAlgebra, aa: Antiauto) -> GradedMapReport:
    """(R_g)* = R_g for every g, checked on the homogeneous basis."""
    if alg.n != aa.n:
        raise DimensionError(f"algebra has n={alg.n}, antiautomorphism has n={aa.n}")
    for b in alg.basis:
        image = aa.apply(b.matrix)
        found = sorted({alg.basis[i].degree for i in alg.coordinates(image)})
        if found != [b.degree]:
            logger.debug("%s of degree %s maps onto degrees %s", b.label, b.degree, found)
            return GradedMapReport(False, b.degree, b.label, found)
    return GradedMapReport(True)


def is_order_two_on(aa: Antiauto, elements: list[Matrix]) -> bool:
    return all(aa.apply(aa.apply(x)) == x for x in elements)


def is_order_two_on_identity_component(alg: GradedAlgebra, aa: Antiauto) -> bool:
    return is_order_two_on(aa, [b.matrix for b in alg.component_basis(alg.group.identity)])
