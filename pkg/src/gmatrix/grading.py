"""
Group gradings on full matrix algebras M_n(F).

Every grading built here has the tensor shape M_m (elementary, from a tuple tau)
times M_{n_1} x ... x M_{n_k} (fine epsilon-gradings), with homogeneous basis

    E_ij (x) X_t,   deg = g_i^{-1} g_j t,

where X_t runs over monomials in the generalized Pauli matrices of the fine
factors. Pure elementary and pure fine gradings are the degenerate cases k = 0
and m = 1. Coordinates in this basis are exact traces: the X_t are pairwise
trace-orthogonal, so the coefficient of E_ij (x) X_t in X is tr(X_t^{-1} X_ij)/d.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from itertools import product
from math import lcm, prod
from typing import Iterable, Sequence, Union

from src.abgroup.bicharacter import Bicharacter
from src.abgroup.group import AbelianGroup, GroupElement, subgroup_generated
from src.common.config import settings
from src.common.errors import (
    DegreeError,
    DimensionError,
    GroupMismatchError,
)
from src.common.log import get_logger
from src.field.cyclotomic import CyclotomicField, FieldElement, make_field
from src.gmatrix import linalg
from src.gmatrix.matrix import Matrix

logger = get_logger(__name__)


@dataclass(frozen=True)
class FineFactor:
    """Generators (a, b) of one fine epsilon-graded factor M_order inside G."""

    a: GroupElement
    b: GroupElement
    order: int = 2

    def to_json(self) -> dict:
        return {"a": self.a.to_json(), "b": self.b.to_json(), "order": self.order}


# construction tags


@dataclass(frozen=True)
class Elementary:
    tau: tuple[GroupElement, ...]


@dataclass(frozen=True)
class FineEpsilon:
    order: int
    a: GroupElement
    b: GroupElement


@dataclass(frozen=True)
class Mixed:
    tau: tuple[GroupElement, ...]
    factors: tuple[FineFactor, ...]


Construction = Union[Elementary, FineEpsilon, Mixed]


@dataclass(frozen=True)
class BasisElement:
    matrix: Matrix
    degree: GroupElement
    label: str
    row: int  # elementary indices of E_ij
    col: int
    fine: int  # index into GradedAlgebra.fine_monomials


@dataclass(frozen=True)
class FineMonomial:
    exponents: tuple[tuple[int, int], ...]  # (i_j, j_j) per factor
    matrix: Matrix
    inverse: Matrix
    degree: GroupElement
    label: str


def pauli_pair(field: CyclotomicField, n: int) -> tuple[Matrix, Matrix]:
    """
    X_a = diag(eps^{n-1}, ..., eps, 1) and the cyclic shift X_b with
    X_a X_b X_a^{-1} = eps X_b and X_a^n = X_b^n = I.
    """
    eps = field.root_of_unity(n)
    xa = Matrix.diag(field, [eps ** (n - 1 - i) for i in range(n)])
    xb = Matrix.from_sparse(field, n, n, {(i, (i + 1) % n): field.one for i in range(n)})
    return xa, xb


def _monomial_label(exponents: tuple[tuple[int, int], ...]) -> str:
    parts = []
    single = len(exponents) == 1
    for j, (p, q) in enumerate(exponents, start=1):
        tag = "" if single else str(j)
        for sym, e in (("a", p), ("b", q)):
            if e == 0:
                continue
            parts.append(f"{sym}{tag}" + (f"^{e}" if e > 1 else ""))
    return "X_" + ("".join(parts) if parts else "e")


class GradedAlgebra:
    """M_n(F) with a homogeneous basis and degree map."""

    def __init__(
        self,
        group: AbelianGroup,
        tau: Sequence[GroupElement],
        factors: Sequence[FineFactor],
        field: CyclotomicField,
        construction: Construction,
    ):
        self.group = group
        self.field = field
        self.tau = tuple(tau)
        self.factors = tuple(factors)
        self.construction = construction
        self.m = len(self.tau)
        self.d = prod(f.order for f in self.factors)
        self.n = self.m * self.d
        self.fine_monomials = self._build_fine()
        self.basis = self._build_basis()
        self._fine_by_degree: dict[GroupElement, int] | None = None

    # construction -------------------------------------------------------

    def _build_fine(self) -> tuple[FineMonomial, ...]:
        one = Matrix.identity(self.field, 1)
        per_factor = []
        for f in self.factors:
            xa, xb = pauli_pair(self.field, f.order)
            xa_inv, xb_inv = xa ** -1, xb ** -1
            options = []
            for i, j in product(range(f.order), repeat=2):
                mat = (xa ** i) @ (xb ** j)
                inv = (xb_inv ** j) @ (xa_inv ** i)
                options.append(((i, j), mat, inv, (f.a ** i) * (f.b ** j)))
            per_factor.append(options)
        monomials = []
        for combo in product(*per_factor):
            mat, inv, deg = one, one, self.group.identity
            for _, x, xi, g in combo:
                mat = mat.kron(x)
                inv = inv.kron(xi)
                deg = deg * g
            exps = tuple(c[0] for c in combo)
            monomials.append(FineMonomial(exps, mat, inv, deg, _monomial_label(exps)))
        return tuple(monomials)

    def _build_basis(self) -> tuple[BasisElement, ...]:
        out = []
        single_block = self.m == 1
        for i, j in product(range(self.m), repeat=2):
            g = self.tau[i].inverse() * self.tau[j]
            unit = Matrix.unit(self.field, self.m, i, j)
            for k, mono in enumerate(self.fine_monomials):
                if single_block:
                    label = mono.label
                elif not self.factors:
                    label = f"E{i + 1}{j + 1}"
                else:
                    label = f"E{i + 1}{j + 1}*{mono.label}"
                out.append(
                    BasisElement(unit.kron(mono.matrix), g * mono.degree, label, i, j, k)
                )
        return tuple(out)

    # degrees ------------------------------------------------------------

    @cached_property
    def degrees(self) -> tuple[GroupElement, ...]:
        return tuple(b.degree for b in self.basis)

    def support(self) -> frozenset[GroupElement]:
        return frozenset(self.degrees)

    def component_basis(self, g: GroupElement) -> list[BasisElement]:
        return [b for b in self.basis if b.degree == g]

    def component_dim(self, g: GroupElement) -> int:
        return sum(1 for x in self.degrees if x == g)

    @cached_property
    def fine_support(self) -> frozenset[GroupElement]:
        return frozenset(m.degree for m in self.fine_monomials)

    @cached_property
    def elementary_support(self) -> frozenset[GroupElement]:
        return frozenset(gi.inverse() * gj for gi in self.tau for gj in self.tau)

    def _fine_index(self, t: GroupElement) -> int:
        if self._fine_by_degree is None:
            table: dict[GroupElement, int] = {}
            for k, mono in enumerate(self.fine_monomials):
                if mono.degree in table:
                    raise DegreeError(f"fine degree {mono.degree} is carried by two monomials")
                table[mono.degree] = k
            self._fine_by_degree = table
        try:
            return self._fine_by_degree[t]
        except KeyError:
            raise DegreeError(f"{t} is not in the fine support") from None

    def fine_matrix(self, t: GroupElement) -> Matrix:
        """X_t, the fine basis matrix of degree t (size d)."""
        return self.fine_monomials[self._fine_index(t)].matrix

    @cached_property
    def bicharacter(self) -> Bicharacter:
        """alpha on the fine support: X_t X_u = alpha(t, u) X_{tu}."""
        table = {}
        for s in self.fine_monomials:
            for u in self.fine_monomials:
                prod_tu = s.matrix @ u.matrix
                target = self.fine_matrix(s.degree * u.degree)
                ratio = prod_tu.ratio_to(target)
                if ratio is None:
                    raise DegreeError(f"X_{s.degree} X_{u.degree} is not a multiple of X_tu")
                table[(s.degree, u.degree)] = ratio
        return Bicharacter(self.field, table)

    def transpose_sign(self, t: GroupElement) -> FieldElement:
        """The scalar c with transpose(X_t) = c X_t; defined when t has order <= 2."""
        x = self.fine_matrix(t)
        c = x.T.ratio_to(x)
        if c is None:
            raise DegreeError(f"transpose of X_{t} is not a multiple of X_{t}")
        return c

    # coordinates --------------------------------------------------------

    def _check_matrix(self, X: Matrix) -> None:
        if X.shape != (self.n, self.n):
            raise DimensionError(f"expected {self.n}x{self.n} matrix, got {X.rows}x{X.cols}")
        X._same_field(self.field)

    def coordinates(self, X: Matrix) -> dict[int, FieldElement]:
        """Sparse coefficients of X in the homogeneous basis, keyed by basis index."""
        self._check_matrix(X)
        d = self.d
        nf = len(self.fine_monomials)
        inv_d = self.field.one / d
        blocks: dict[tuple[int, int], dict[tuple[int, int], FieldElement]] = {}
        for (r, c), v in X.nonzero_entries():
            blocks.setdefault((r // d, c // d), {})[(r % d, c % d)] = v
        coords: dict[int, FieldElement] = {}
        for (i, j), entries in blocks.items():
            base = (i * self.m + j) * nf
            for k, mono in enumerate(self.fine_monomials):
                # tr(X_t^{-1} B) = sum over (p, q) of inv[q][p] * B[p][q]
                total = self.field.zero
                for (p, q), v in entries.items():
                    w = mono.inverse[q, p]
                    if w:
                        total = total + w * v
                if total:
                    coords[base + k] = total * inv_d
        return coords

    def homogeneous_projection(self, X: Matrix) -> dict[GroupElement, Matrix]:
        """Components of X by degree; only nonzero components are returned."""
        acc: dict[GroupElement, dict[tuple[int, int], FieldElement]] = {}
        for idx, c in self.coordinates(X).items():
            b = self.basis[idx]
            slot = acc.setdefault(b.degree, {})
            for (r, s), v in b.matrix.nonzero_entries():
                cur = slot.get((r, s))
                slot[(r, s)] = c * v if cur is None else cur + c * v
        out = {}
        for g in sorted(acc):
            entries = {k: v for k, v in acc[g].items() if v}
            if entries:
                out[g] = Matrix.from_sparse(self.field, self.n, self.n, entries)
        return out

    def degree_of(self, X: Matrix) -> GroupElement | None:
        """The degree of a nonzero homogeneous X, else None."""
        degs = {self.basis[i].degree for i in self.coordinates(X)}
        return next(iter(degs)) if len(degs) == 1 else None

    def is_homogeneous(self, X: Matrix) -> bool:
        return X.is_zero() or self.degree_of(X) is not None

    def from_coordinates(self, coords: dict[int, FieldElement]) -> Matrix:
        entries: dict[tuple[int, int], FieldElement] = {}
        for idx, c in coords.items():
            for (r, s), v in self.basis[idx].matrix.nonzero_entries():
                cur = entries.get((r, s))
                entries[(r, s)] = c * v if cur is None else cur + c * v
        return Matrix.from_sparse(
            self.field, self.n, self.n, {k: v for k, v in entries.items() if v}
        )

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "tuple": [g.to_json() for g in self.tau],
            "fine_factors": [f.to_json() for f in self.factors],
            "field": self.field.order,
            "n": self.n,
        }

    def __repr__(self) -> str:
        kind = type(self.construction).__name__
        return f"GradedAlgebra({kind}, n={self.n}, G={self.group})"


# constructors ----------------------------------------------------------


def _check_members(group: AbelianGroup, elements: Iterable[GroupElement]) -> None:
    for g in elements:
        if not isinstance(g, GroupElement) or g.group != group:
            raise GroupMismatchError(f"{g} is not an element of {group}")


def _check_size(n: int, max_n: int | None) -> None:
    bound = settings.MAX_N if max_n is None else max_n
    if n > bound:
        raise DimensionError(f"matrix size {n} exceeds the configured bound {bound}")


def elementary_grading(
    group: AbelianGroup,
    tau: Sequence[GroupElement],
    field: CyclotomicField | None = None,
    max_n: int | None = None,
) -> GradedAlgebra:
    """deg E_ij = g_i^{-1} g_j for the tuple tau = (g_1, ..., g_n)."""
    tau = tuple(tau)
    if not tau:
        raise DimensionError("elementary grading needs a nonempty tuple")
    _check_members(group, tau)
    _check_size(len(tau), max_n)
    return GradedAlgebra(group, tau, (), field or make_field(1), Elementary(tau))


def epsilon_grading(
    n: int,
    field: CyclotomicField | None = None,
    group: AbelianGroup | None = None,
    a: GroupElement | None = None,
    b: GroupElement | None = None,
) -> GradedAlgebra:
    """
    The fine Z_n x Z_n grading of M_n by X_a^i X_b^j. By default G = Z_n x Z_n with
    a = (1, 0) and b = (0, 1); a different G may be supplied with a, b inside it.
    """
    if n < 2:
        raise DimensionError(f"epsilon grading needs n >= 2, got {n}")
    field = field or make_field(n)
    # raises MissingRootOfUnityError
    field.root_of_unity(n)
    if group is None:
        group = AbelianGroup((n, n))
        a, b = group(1, 0), group(0, 1)
    elif a is None or b is None:
        raise ValueError("a and b must be given together with a custom group")
    _check_members(group, (a, b))
    if not (a ** n).is_identity() or not (b ** n).is_identity():
        raise DegreeError(f"a and b must satisfy a^{n} = b^{n} = e")
    factor = FineFactor(a, b, n)
    return GradedAlgebra(group, (group.identity,), (factor,), field, FineEpsilon(n, a, b))


def mixed_grading(
    group: AbelianGroup,
    tau: Sequence[GroupElement],
    factors: Sequence[FineFactor],
    field: CyclotomicField | None = None,
    theorem3: bool = False,
    max_n: int | None = None,
) -> GradedAlgebra:
    """
    Tensor product of the elementary grading by tau with one epsilon-graded M_{n_j}
    per fine factor. With theorem3=True every factor must be M_2 with a_j, b_j of
    order <= 2.
    """
    tau = tuple(tau)
    factors = tuple(factors)
    if not tau:
        raise DimensionError("mixed grading needs a nonempty tuple")
    _check_members(group, tau)
    for f in factors:
        _check_members(group, (f.a, f.b))
        if f.order < 2:
            raise DimensionError(f"fine factor order must be >= 2, got {f.order}")
        if not (f.a ** f.order).is_identity() or not (f.b ** f.order).is_identity():
            raise DegreeError(f"fine factor ({f.a}, {f.b}) violates a^{f.order} = b^{f.order} = e")
        if theorem3 and (f.order != 2 or f.a.order() > 2 or f.b.order() > 2):
            raise DegreeError(f"fine factor ({f.a}, {f.b}) is not of order-2 shape")
    n = len(tau) * prod(f.order for f in factors)
    _check_size(n, max_n)
    if field is None:
        field = make_field(lcm(1, *(f.order for f in factors)))
    for f in factors:
        field.root_of_unity(f.order)
    logger.debug("mixed grading n=%d over %r with %d fine factor(s)", n, field, len(factors))
    return GradedAlgebra(group, tau, factors, field, Mixed(tau, factors))


# reports ---------------------------------------------------------------


@dataclass
class MixedGradingReport:
    t_is_direct_product: bool
    support_meets_t_trivially: bool
    theorem3_shape: bool
    elementary_support: list[GroupElement] = dc_field(default_factory=list)
    fine_support: list[GroupElement] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.t_is_direct_product and self.support_meets_t_trivially

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "t_is_direct_product": self.t_is_direct_product,
            "support_meets_t_trivially": self.support_meets_t_trivially,
            "theorem3_shape": self.theorem3_shape,
            "elementary_support": [g.to_json() for g in self.elementary_support],
            "fine_support": [g.to_json() for g in self.fine_support],
        }


def mixed_grading_report(alg: GradedAlgebra) -> MixedGradingReport:
    gens = [g for f in alg.factors for g in (f.a, f.b)]
    T = subgroup_generated(alg.group, gens)
    expected = prod(f.order ** 2 for f in alg.factors)
    S = alg.elementary_support
    return MixedGradingReport(
        t_is_direct_product=len(T) == expected,
        support_meets_t_trivially=S & T == {alg.group.identity},
        theorem3_shape=all(
            f.order == 2 and f.a.order() <= 2 and f.b.order() <= 2 for f in alg.factors
        ),
        elementary_support=sorted(S),
        fine_support=sorted(T),
    )


def verify_basis(alg: GradedAlgebra) -> bool:
    """The n^2 basis matrices are linearly independent."""
    return linalg.rank(b.matrix.vec() for b in alg.basis) == alg.n ** 2


@dataclass
class GradingLawReport:
    ok: bool
    offending: tuple[str, str] | None = None
    expected_degree: GroupElement | None = None
    found_degrees: list[GroupElement] = dc_field(default_factory=list)


def verify_grading_law(alg: GradedAlgebra) -> GradingLawReport:
    """A_g A_h lies in A_{gh}, checked on every pair of basis elements."""
    for x in alg.basis:
        for y in alg.basis:
            if x.col != y.row:
                continue  # E_ij E_kl = 0 unless j = k
            target = x.degree * y.degree
            found = sorted(alg.homogeneous_projection(x.matrix @ y.matrix))
            if any(g != target for g in found):
                return GradingLawReport(False, (x.label, y.label), target, found)
    return GradingLawReport(True)


def is_trivial_grading(alg: GradedAlgebra) -> bool:
    return alg.support() == {alg.group.identity}
