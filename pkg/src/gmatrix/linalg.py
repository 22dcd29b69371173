"""
Exact Gauss-Jordan elimination over a cyclotomic field.

Vectors are sparse dicts {index: nonzero FieldElement}; all structured matrices in
this package are sparse, so elimination only touches nonzero entries.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from src.field.cyclotomic import CyclotomicField, FieldElement

SparseVec = dict[int, FieldElement]


def to_sparse(values: Sequence[FieldElement]) -> SparseVec:
    return {i: v for i, v in enumerate(values) if v}


def to_dense(vec: SparseVec, length: int, field: CyclotomicField) -> list[FieldElement]:
    zero = field.zero
    return [vec.get(i, zero) for i in range(length)]


def axpy(y: SparseVec, a: FieldElement, x: SparseVec) -> SparseVec:
    """y + a*x as a new sparse vector."""
    out = dict(y)
    for k, v in x.items():
        cur = out.get(k)
        new = a * v if cur is None else cur + a * v
        if new:
            out[k] = new
        elif cur is not None:
            del out[k]
    return out


def scale(x: SparseVec, a: FieldElement) -> SparseVec:
    if not a:
        return {}
    return {k: a * v for k, v in x.items()}


def rref(
    rows: Iterable[SparseVec], pivot_limit: int | None = None
) -> tuple[list[SparseVec], list[int]]:
    """
    Reduced row echelon form. Pivots are only chosen in columns < pivot_limit when
    given (used for augmented systems). Returns (pivot rows, pivot columns); rows
    left without a pivot are dropped.
    """
    work = [dict(r) for r in rows if r]
    if not work:
        return [], []
    columns = sorted(set().union(*work))
    pivots: list[int] = []
    r = 0
    for c in columns:
        if pivot_limit is not None and c >= pivot_limit:
            break
        for i in range(r, len(work)):
            if c in work[i]:
                break
        else:
            continue
        work[r], work[i] = work[i], work[r]
        lead = work[r][c]
        if lead != 1:
            work[r] = scale(work[r], lead.inverse())
        piv = work[r]
        for j in range(len(work)):
            if j != r and c in work[j]:
                work[j] = axpy(work[j], -work[j][c], piv)
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank(rows: Iterable[SparseVec]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Iterable[SparseVec], ncols: int, field: CyclotomicField) -> list[SparseVec]:
    """Basis of {x : A x = 0}, one vector per free column, in reduced echelon form."""
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    one = field.one
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        vec: SparseVec = {f: one}
        for row, p in zip(reduced, pivots):
            v = row.get(f)
            if v:
                vec[p] = -v
        basis.append(vec)
    return basis


class Subspace:
    """
    A subspace of F^dim kept in reduced row echelon form; supports incremental
    insertion and exact membership tests.
    """

    __slots__ = ("field", "dim_ambient", "_rows")

    def __init__(self, field: CyclotomicField, dim_ambient: int, vectors: Iterable[SparseVec] = ()):
        self.field = field
        self.dim_ambient = dim_ambient
        self._rows: dict[int, SparseVec] = {}
        for v in vectors:
            self.add(v)

    @property
    def dim(self) -> int:
        return len(self._rows)

    def reduce(self, vec: SparseVec) -> SparseVec:
        out = dict(vec)
        for p in sorted(k for k in vec if k in self._rows):
            c = out.get(p)
            if c:
                out = axpy(out, -c, self._rows[p])
        # entries created during reduction may hit later pivots
        hits = [k for k in out if k in self._rows]
        while hits:
            p = min(hits)
            out = axpy(out, -out[p], self._rows[p])
            hits = [k for k in out if k in self._rows]
        return out

    def add(self, vec: SparseVec) -> bool:
        """Insert vec; returns False when it was already in the span."""
        rem = self.reduce(vec)
        if not rem:
            return False
        p = min(rem)
        rem = scale(rem, rem[p].inverse())
        for q, row in list(self._rows.items()):
            c = row.get(p)
            if c:
                self._rows[q] = axpy(row, -c, rem)
        self._rows[p] = rem
        return True

    def contains(self, vec: SparseVec) -> bool:
        return not self.reduce(vec)

    __contains__ = contains

    def is_subspace_of(self, other: "Subspace") -> bool:
        return all(other.contains(row) for row in self._rows.values())

    def equals(self, other: "Subspace") -> bool:
        return self.dim == other.dim and self.is_subspace_of(other)

    def basis(self) -> list[SparseVec]:
        return [self._rows[p] for p in sorted(self._rows)]

    def pivots(self) -> list[int]:
        return sorted(self._rows)
