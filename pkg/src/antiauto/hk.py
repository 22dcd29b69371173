"""
Symmetric (H) and skew-symmetric (K) elements of an involution, and the Jordan /
Lie closure checks on them.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from src.abgroup.group import GroupElement
from src.antiauto.involution import Antiauto, is_graded_map
from src.common.errors import DimensionError, NotInvolutiveError
from src.gmatrix.grading import GradedAlgebra
from src.gmatrix.linalg import Subspace
from src.gmatrix.matrix import Matrix

HALF = Fraction(1, 2)


@dataclass
class HKDecomposition:
    n: int
    h_basis: list[Matrix]
    k_basis: list[Matrix]
    h_degrees: list[GroupElement | None] = dc_field(default_factory=list)
    k_degrees: list[GroupElement | None] = dc_field(default_factory=list)

    @property
    def dim_h(self) -> int:
        return len(self.h_basis)

    @property
    def dim_k(self) -> int:
        return len(self.k_basis)

    def h_space(self) -> Subspace:
        return _span(self.h_basis, self.n)

    def k_space(self) -> Subspace:
        return _span(self.k_basis, self.n)

    def is_homogeneous(self) -> bool:
        return all(g is not None for g in self.h_degrees + self.k_degrees)

    def to_json(self, symbolic: bool = False) -> dict:
        def render(m: Matrix):
            return m.symbolic() if symbolic else m.to_json()["rows"]

        def entries(mats, degrees):
            return [
                {"degree": g.to_json() if g is not None else None, "matrix": render(m)}
                for m, g in zip(mats, degrees)
            ]

        return {
            "n": self.n,
            "dim_h": self.dim_h,
            "dim_k": self.dim_k,
            "h": entries(self.h_basis, self.h_degrees),
            "k": entries(self.k_basis, self.k_degrees),
        }


def _span(mats: list[Matrix], n: int) -> Subspace:
    field_ = mats[0].field if mats else None
    return Subspace(field_, n * n, (m.vec() for m in mats))


def _unit_basis(aa: Antiauto) -> list[tuple[Matrix, None]]:
    n = aa.n
    return [(Matrix.unit(aa.field, n, i, j), None) for i in range(n) for j in range(n)]


def hk_split(alg: GradedAlgebra | int, aa: Antiauto) -> HKDecomposition:
    """
    H = span{(A + A*)/2} and K = span{(A - A*)/2} over a basis A of M_n. With a graded
    algebra whose components * preserves, each kept generator is homogeneous.
    """
    if not aa.is_involution():
        raise NotInvolutiveError("H/K decomposition needs an involution")
    if isinstance(alg, int):
        if alg != aa.n:
            raise DimensionError(f"size {alg} does not match the {aa.n}x{aa.n} involution")
        source = _unit_basis(aa)
        graded = False
    else:
        if alg.n != aa.n:
            raise DimensionError(f"algebra has n={alg.n}, involution has n={aa.n}")
        graded = is_graded_map(alg, aa).ok
        source = [(b.matrix, b.degree if graded else None) for b in alg.basis]

    n = aa.n
    h_space = Subspace(aa.field, n * n)
    k_space = Subspace(aa.field, n * n)
    h_basis, k_basis, h_deg, k_deg = [], [], [], []
    for A, g in source:
        image = aa.apply(A)
        for target, basis, degs, gen in (
            (h_space, h_basis, h_deg, (A + image).scale(HALF)),
            (k_space, k_basis, k_deg, (A - image).scale(HALF)),
        ):
            if not gen.is_zero() and target.add(gen.vec()):
                basis.append(gen)
                degs.append(g)
    return HKDecomposition(n, h_basis, k_basis, h_deg, k_deg)


@dataclass
class LieJordanReport:
    lie_closed: bool
    jordan_closed: bool
    direct_sum: bool
    homogeneous: bool
    offending: str | None = None

    @property
    def ok(self) -> bool:
        return self.lie_closed and self.jordan_closed and self.direct_sum

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "lie_closed": self.lie_closed,
            "jordan_closed": self.jordan_closed,
            "direct_sum": self.direct_sum,
            "homogeneous": self.homogeneous,
            "offending": self.offending,
        }


def _first_escape(basis: list[Matrix], space: Subspace, sign: int, diagonal: bool):
    """First pair (i, j) whose product xy + sign*yx leaves the space."""
    for i, x in enumerate(basis):
        for j in range(i if diagonal else i + 1, len(basis)):
            y = basis[j]
            other = y @ x
            value = x @ y + other if sign > 0 else x @ y - other
            if not space.contains(value.vec()):
                return i, j
    return None


def lie_jordan_check(hk: HKDecomposition) -> LieJordanReport:
    """[K, K] in K, H o H in H, and H + K = M_n with H and K meeting in 0."""
    lie_bad = _first_escape(hk.k_basis, hk.k_space(), -1, diagonal=False)
    jordan_bad = _first_escape(hk.h_basis, hk.h_space(), 1, diagonal=True)
    offending = None
    if lie_bad:
        offending = "[k%d, k%d] is not in K" % lie_bad
    elif jordan_bad:
        offending = "h%d o h%d is not in H" % jordan_bad
    both = _span(hk.h_basis + hk.k_basis, hk.n)
    direct_sum = both.dim == hk.n ** 2 == hk.dim_h + hk.dim_k
    return LieJordanReport(
        lie_bad is None, jordan_bad is None, direct_sum, hk.is_homogeneous(), offending
    )
