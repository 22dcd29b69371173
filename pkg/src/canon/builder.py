"""
Builds the canonical involution Phi = sum_i S_i (x) X_{t_i} of a spec, its H/K
spanning sets, and congruence transformations Phi -> P^t Phi P.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import isqrt

from src.abgroup.group import GroupElement
from src.antiauto.hk import hk_split
from src.antiauto.involution import Antiauto, classify, is_graded_map
from src.antiauto.structure import extract_structure, s_matrix
from src.canon.spec import InvolutionSpec, require_valid, spec_blocks
from src.common.errors import DegreeError, DimensionError, NotASquareError, SingularMatrixError
from src.common.log import get_logger
from src.field.cyclotomic import CyclotomicField, FieldElement
from src.gmatrix.blocks import BlockStructure
from src.gmatrix.grading import GradedAlgebra, mixed_grading
from src.gmatrix.linalg import Subspace
from src.gmatrix.matrix import Matrix

logger = get_logger(__name__)


def _embed(field: CyclotomicField, m: int, positions: tuple[int, ...], W: Matrix) -> Matrix:
    entries = {(positions[i], positions[j]): v for (i, j), v in W.nonzero_entries()}
    return Matrix.from_sparse(field, m, m, entries)


def assemble_canonical(
    spec: InvolutionSpec,
    field: CyclotomicField | None = None,
    max_n: int | None = None,
) -> tuple[GradedAlgebra, Antiauto]:
    """Grading and Phi of a spec, without validating it first."""
    alg = mixed_grading(
        spec.group,
        spec.elementary_tuple(),
        spec.fine_factors,
        field=field,
        theorem3=True,
        max_n=max_n,
    )
    structure = spec_blocks(spec)
    phi = Matrix.zeros(alg.field, alg.n)
    for b, block in zip(spec.blocks, structure.blocks):
        S = s_matrix(alg.field, b.s_kind, b.p)
        phi = phi + _embed(alg.field, alg.m, block.positions, S).kron(alg.fine_matrix(b.t))
    return alg, classify(phi)


def build_canonical(
    spec: InvolutionSpec,
    field: CyclotomicField | None = None,
    max_n: int | None = None,
) -> tuple[GradedAlgebra, Antiauto]:
    # raises SpecValidationError
    require_valid(spec, max_n=max_n)
    alg, aa = assemble_canonical(spec, field=field, max_n=max_n)
    logger.debug("built %s: n=%d kind=%s", spec, alg.n, aa.kind.value)
    return alg, aa


@dataclass
class HKSpanningSets:
    h_generators: list[Matrix]
    k_generators: list[Matrix]
    h_degrees: list[GroupElement] = dc_field(default_factory=list)
    k_degrees: list[GroupElement] = dc_field(default_factory=list)
    matches_hk_split: bool = False
    replaced_form_agrees: bool = False
    homogeneous: bool = False

    @property
    def dim_h(self) -> int:
        return len(self.h_generators)

    @property
    def dim_k(self) -> int:
        return len(self.k_generators)

    def to_json(self, symbolic: bool = False) -> dict:
        def render(m: Matrix):
            return m.symbolic() if symbolic else m.to_json()["rows"]

        return {
            "dim_h": self.dim_h,
            "dim_k": self.dim_k,
            "matches_hk_split": self.matches_hk_split,
            "replaced_form_agrees": self.replaced_form_agrees,
            "homogeneous": self.homogeneous,
            "h": [
                {"degree": g.to_json(), "matrix": render(x)}
                for x, g in zip(self.h_generators, self.h_degrees)
            ],
            "k": [
                {"degree": g.to_json(), "matrix": render(x)}
                for x, g in zip(self.k_generators, self.k_degrees)
            ],
        }


def hk_spanning_sets(spec: InvolutionSpec, max_n: int | None = None) -> HKSpanningSets:
    """
    Generators A + A* and A - A* for A = e_i U e_j (x) X_u, with
    A* = e_j S_j^{-1} U^t S_i e_i (x) X_{t_j}^{-1} X_u^t X_{t_i}.

    Also records whether the same generators computed with S_j and X_{t_j} in
    place of their inverses span the same H and K.
    """
    require_valid(spec, max_n=max_n)
    alg, aa = assemble_canonical(spec, max_n=max_n)
    field = alg.field
    m, n = alg.m, alg.n
    structure = spec_blocks(spec)

    S_full = Matrix.zeros(field, m)
    S_inv_full = Matrix.zeros(field, m)
    block_of: dict[int, int] = {}
    for idx, (b, block) in enumerate(zip(spec.blocks, structure.blocks)):
        S = s_matrix(field, b.s_kind, b.p)
        S_full = S_full + _embed(field, m, block.positions, S)
        S_inv_full = S_inv_full + _embed(field, m, block.positions, S.inverse())
        for p in block.positions:
            block_of[p] = idx
    X_t = [alg.fine_matrix(b.t) for b in spec.blocks]
    X_t_inv = [x.inverse() for x in X_t]

    h_space, k_space = Subspace(field, n * n), Subspace(field, n * n)
    h_alt, k_alt = Subspace(field, n * n), Subspace(field, n * n)
    out = HKSpanningSets([], [])
    for i in range(m):
        for j in range(m):
            U_t = Matrix.unit(field, m, j, i)
            left = S_inv_full @ U_t @ S_full
            left_alt = S_full @ U_t @ S_full
            bi, bj = block_of[i], block_of[j]
            U = Matrix.unit(field, m, i, j)
            base_degree = alg.tau[i].inverse() * alg.tau[j]
            for mono in alg.fine_monomials:
                A = U.kron(mono.matrix)
                star = left.kron(X_t_inv[bj] @ mono.matrix.T @ X_t[bi])
                star_alt = left_alt.kron(X_t[bj] @ mono.matrix.T @ X_t[bi])
                degree = base_degree * mono.degree
                for gen, space, gens, degs in (
                    (A + star, h_space, out.h_generators, out.h_degrees),
                    (A - star, k_space, out.k_generators, out.k_degrees),
                ):
                    if not gen.is_zero() and space.add(gen.vec()):
                        gens.append(gen)
                        degs.append(degree)
                for gen, space in ((A + star_alt, h_alt), (A - star_alt, k_alt)):
                    if not gen.is_zero():
                        space.add(gen.vec())

    hk = hk_split(alg, aa)
    out.matches_hk_split = h_space.equals(hk.h_space()) and k_space.equals(hk.k_space())
    out.replaced_form_agrees = h_alt.equals(h_space) and k_alt.equals(k_space)
    out.homogeneous = all(
        alg.degree_of(x) == g
        for x, g in zip(
            out.h_generators + out.k_generators, out.h_degrees + out.k_degrees
        )
    )
    if not out.replaced_form_agrees:
        logger.info("%s: replaced-form generators span different H/K", spec)
    return out


def congruence(aa: Antiauto, P: Matrix, alg: GradedAlgebra) -> Antiauto:
    """The antiautomorphism of P^t Phi P; P must be invertible and of degree e."""
    if P.shape != aa.phi.shape:
        raise DimensionError(f"P is {P.rows}x{P.cols}, Phi is {aa.n}x{aa.n}")
    if not P.is_invertible():
        raise SingularMatrixError("congruence matrix P is singular")
    degrees = sorted(alg.homogeneous_projection(P))
    if degrees != [alg.group.identity]:
        raise DegreeError(
            f"P must be homogeneous of degree e, found degrees {[str(g) for g in degrees]}"
        )
    result = classify(P.T @ aa.phi @ P)
    if is_graded_map(alg, aa).ok != is_graded_map(alg, result).ok:
        raise DegreeError("congruence by a degree-e matrix changed gradedness")
    return result


def rational_sqrt(y: FieldElement) -> Fraction:
    if not y.is_rational():
        raise NotASquareError(f"{y} is not rational")
    f = y.to_fraction()
    if f <= 0:
        raise NotASquareError(f"{f} is not a positive rational")
    num, den = isqrt(f.numerator), isqrt(f.denominator)
    if num * num != f.numerator or den * den != f.denominator:
        raise NotASquareError(f"{f} is not the square of a rational")
    return Fraction(num, den)


def normalizing_congruence(
    alg: GradedAlgebra, aa: Antiauto, blocks: BlockStructure
) -> tuple[Matrix, Antiauto]:
    """
    P = sum_i (1 / sqrt(Y_i)) e_i, which rescales every extracted block scalar to 1.

    Phi and -Phi define the same involution, so when the first block scalar is a
    negative rational Phi is negated first. Raises NotASquareError when some Y_i is
    still not the square of a rational.
    """
    report = extract_structure(alg, aa, blocks)
    scalars = [record.Y for record in report.blocks]
    if scalars and scalars[0].is_rational() and scalars[0].to_fraction() < 0:
        logger.debug("negating Phi: first block scalar is %s", scalars[0])
        aa = classify(aa.phi.scale(-1))
        scalars = [-y for y in scalars]
    field = alg.field
    P = Matrix.zeros(field, alg.n)
    for y, e in zip(scalars, blocks.idempotents(field)):
        P = P + e.scale(1 / rational_sqrt(y))
    return P, congruence(aa, P, alg)


__all__ = [
    "HKSpanningSets",
    "assemble_canonical",
    "build_canonical",
    "congruence",
    "hk_spanning_sets",
    "normalizing_congruence",
    "rational_sqrt",
]
