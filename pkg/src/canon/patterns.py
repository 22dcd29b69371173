"""
Canonical Phi for the pure elementary cases and the block patterns of their
symmetric and skew-symmetric elements.

Transpose case, Phi = diag(I_m, [[0, I_l], [I_l, 0]]), index ranges
I1 = 0..m-1, I2 = m..m+l-1, I3 = m+l..m+2l-1. With s = -1 (skew elements) or
s = +1 (symmetric elements) an element reads

    [[P,        S,   T      ],
     [s T^t,    A,   B      ],
     [s S^t,    C,   s A^t  ]]

with P^t = s P, B^t = s B, C^t = s C and S, T, A free.

Symplectic case, Phi = [[0, I_k], [-I_k, 0]]: skew elements are
[[A, B], [C, -A^t]] with B, C symmetric; symmetric elements are
[[A, B], [C, A^t]] with B, C skew.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from src.antiauto.hk import hk_split
from src.antiauto.involution import classify
from src.common.errors import DimensionError
from src.field.cyclotomic import CyclotomicField, FieldElement, make_field
from src.gmatrix.linalg import Subspace
from src.gmatrix.matrix import Matrix


class PatternKind(str, Enum):
    ORTHOGONAL_SKEW = "orthogonal_skew"
    ORTHOGONAL_SYMMETRIC = "orthogonal_symmetric"
    SYMPLECTIC_SKEW = "symplectic_skew"
    SYMPLECTIC_SYMMETRIC = "symplectic_symmetric"

    @property
    def orthogonal(self) -> bool:
        return self in (PatternKind.ORTHOGONAL_SKEW, PatternKind.ORTHOGONAL_SYMMETRIC)

    @property
    def sign(self) -> int:
        """-1 for the skew-symmetric elements of the involution, +1 for the symmetric ones."""
        skew = (PatternKind.ORTHOGONAL_SKEW, PatternKind.SYMPLECTIC_SKEW)
        return -1 if self in skew else 1


def transpose_block_phi(field: CyclotomicField, m: int, l: int) -> Matrix:
    if m < 0 or l < 0 or m + 2 * l < 1:
        raise DimensionError(f"need m + 2l >= 1 with m, l >= 0, got m={m}, l={l}")
    entries = {(i, i): field.one for i in range(m)}
    for i in range(l):
        entries[(m + i, m + l + i)] = field.one
        entries[(m + l + i, m + i)] = field.one
    n = m + 2 * l
    return Matrix.from_sparse(field, n, n, entries)


def symplectic_block_phi(field: CyclotomicField, k: int) -> Matrix:
    if k < 1:
        raise DimensionError(f"need k >= 1, got {k}")
    entries = {}
    for i in range(k):
        entries[(i, k + i)] = field.one
        entries[(k + i, i)] = -field.one
    return Matrix.from_sparse(field, 2 * k, 2 * k, entries)


Entries = dict[tuple[int, int], int]


def _linked(r1: int, c1: int, r2: int, c2: int, s: int) -> Entries:
    """E_{r1 c1} + s E_{r2 c2}; a single unit when both positions coincide."""
    if (r1, c1) == (r2, c2):
        return {(r1, c1): 1}
    return {(r1, c1): 1, (r2, c2): s}


def _sym_block(r0: int, c0: int, size: int, s: int) -> list[Entries]:
    """Basis of size x size blocks Z at offset (r0, c0) with Z^t = s Z."""
    out = []
    for i in range(size):
        for j in range(i if s > 0 else i + 1, size):
            out.append(_linked(r0 + i, c0 + j, r0 + j, c0 + i, s))
    return out


@dataclass(frozen=True)
class BlockPattern:
    kind: PatternKind
    m: int = 0  # orthogonal: identity block size
    l: int = 0  # orthogonal: swapped block size
    k: int = 0  # symplectic: half size

    def __post_init__(self):
        if self.kind.orthogonal:
            if self.m < 0 or self.l < 0 or self.m + 2 * self.l < 1:
                raise DimensionError(f"bad orthogonal pattern m={self.m}, l={self.l}")
        elif self.k < 1:
            raise DimensionError(f"bad symplectic pattern k={self.k}")

    @property
    def size(self) -> int:
        return self.m + 2 * self.l if self.kind.orthogonal else 2 * self.k

    @property
    def pattern_dim(self) -> int:
        m, l, k = self.m, self.l, self.k
        if self.kind is PatternKind.ORTHOGONAL_SKEW:
            return m * (m - 1) // 2 + 2 * m * l + l * l + l * (l - 1)
        if self.kind is PatternKind.ORTHOGONAL_SYMMETRIC:
            return m * (m + 1) // 2 + 2 * m * l + l * l + l * (l + 1)
        if self.kind is PatternKind.SYMPLECTIC_SKEW:
            return 2 * k * k + k
        return 2 * k * k - k

    def phi(self, field: CyclotomicField) -> Matrix:
        if self.kind.orthogonal:
            return transpose_block_phi(field, self.m, self.l)
        return symplectic_block_phi(field, self.k)

    def _free_parameters(self) -> list[Entries]:
        s = self.kind.sign
        if not self.kind.orthogonal:
            k = self.k
            # A and s A^t on the diagonal, off-diagonal blocks of the opposite symmetry
            out = [_linked(i, j, k + j, k + i, s) for i in range(k) for j in range(k)]
            out += _sym_block(0, k, k, -s)
            out += _sym_block(k, 0, k, -s)
            return out
        m, l = self.m, self.l
        i2, i3 = m, m + l
        out = _sym_block(0, 0, m, s)  # P
        out += [_linked(j, i2 + i, i3 + i, j, s) for j in range(m) for i in range(l)]  # S
        out += [_linked(j, i3 + i, i2 + i, j, s) for j in range(m) for i in range(l)]  # T
        out += [_linked(i2 + i, i2 + j, i3 + j, i3 + i, s) for i in range(l) for j in range(l)]
        out += _sym_block(i2, i3, l, s)  # B
        out += _sym_block(i3, i2, l, s)  # C
        return out

    def basis(self, field: CyclotomicField) -> list[Matrix]:
        n = self.size
        return [
            Matrix.from_sparse(field, n, n, {pos: field(v) for pos, v in e.items()})
            for e in self._free_parameters()
        ]

    def contains(self, X: Matrix) -> bool:
        return block_pattern_check(self, X)

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "m": self.m,
            "l": self.l,
            "k": self.k,
            "dim": self.pattern_dim,
        }


def _relations(pattern: BlockPattern) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Pairs (x, y) with X[x] = s X[y] that together define the pattern."""
    rel = []
    if pattern.kind.orthogonal:
        m, l = pattern.m, pattern.l
        i2, i3 = m, m + l
        for i in range(m):
            for j in range(m):
                rel.append(((i, j), (j, i)))  # P
        for i in range(l):
            for j in range(m):
                rel.append(((i2 + i, j), (j, i3 + i)))  # s T^t
                rel.append(((i3 + i, j), (j, i2 + i)))  # s S^t
            for j in range(l):
                rel.append(((i2 + i, i3 + j), (i2 + j, i3 + i)))  # B
                rel.append(((i3 + i, i2 + j), (i3 + j, i2 + i)))  # C
                rel.append(((i3 + i, i3 + j), (i2 + j, i2 + i)))  # s A^t
        return rel
    k = pattern.k
    for i in range(k):
        for j in range(k):
            rel.append(((k + i, k + j), (j, i)))
    return rel


def block_pattern_check(pattern: BlockPattern, X: Matrix) -> bool:
    """True iff X has the block shape and transpose constraints of the pattern."""
    if X.shape != (pattern.size, pattern.size):
        raise DimensionError(f"pattern has size {pattern.size}, matrix is {X.rows}x{X.cols}")
    s = pattern.kind.sign

    def scaled(v: FieldElement, sign: int) -> FieldElement:
        return v if sign > 0 else -v

    for x, y in _relations(pattern):
        if X[x] != scaled(X[y], s):
            return False
    if not pattern.kind.orthogonal:
        # off-diagonal blocks have the opposite symmetry
        k = pattern.k
        for i in range(k):
            for j in range(k):
                if X[(i, k + j)] != scaled(X[(j, k + i)], -s):
                    return False
                if X[(k + i, j)] != scaled(X[(k + j, i)], -s):
                    return False
    return True


@dataclass
class PatternAgreement:
    pattern: BlockPattern
    dim: int  # dimension of the involution's H or K
    equal: bool

    def to_json(self) -> dict:
        return {**self.pattern.to_json(), "computed_dim": self.dim, "equal": self.equal}


def compare_with_involution(
    pattern: BlockPattern, field: CyclotomicField | None = None
) -> PatternAgreement:
    """
    Mutual membership between the pattern and the matching half (K for skew
    patterns, H for symmetric ones) of the involution of pattern.phi.
    """
    field = field or make_field(1)
    n = pattern.size
    hk = hk_split(n, classify(pattern.phi(field)))
    computed = hk.k_basis if pattern.kind.sign < 0 else hk.h_basis
    space = Subspace(field, n * n, (x.vec() for x in computed))
    expected = Subspace(field, n * n, (x.vec() for x in pattern.basis(field)))
    equal = (
        all(block_pattern_check(pattern, x) for x in computed)
        and expected.is_subspace_of(space)
        and space.dim == pattern.pattern_dim
    )
    return PatternAgreement(pattern, space.dim, equal)


__all__ = [
    "BlockPattern",
    "PatternAgreement",
    "PatternKind",
    "block_pattern_check",
    "compare_with_involution",
    "symplectic_block_phi",
    "transpose_block_phi",
]
