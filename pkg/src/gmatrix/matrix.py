"""
Dense exact matrices over a CyclotomicField.

Matrices are immutable. Products skip zero entries, which keeps the structured
matrices used throughout (matrix units, monomial Pauli-type matrices) cheap.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from src.common.errors import DimensionError, FieldMismatchError, SingularMatrixError
from src.field.cyclotomic import CyclotomicField, FieldElement
from src.gmatrix import linalg
from src.gmatrix.linalg import SparseVec


class Matrix:
    __slots__ = ("field", "rows", "cols", "_data", "_nz", "_hash")

    def __init__(self, field: CyclotomicField, data: Sequence[Sequence[FieldElement]]):
        if not data or not data[0]:
            raise DimensionError("matrices must have positive dimensions")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise DimensionError("ragged rows")
        self.field = field
        self.rows = len(data)
        self.cols = width
        self._data: tuple[tuple[FieldElement, ...], ...] = tuple(tuple(r) for r in data)
        self._nz: tuple[tuple[tuple[int, FieldElement], ...], ...] | None = None
        self._hash: int | None = None

    # constructors -------------------------------------------------------

    @classmethod
    def from_rows(cls, field: CyclotomicField, rows: Iterable[Iterable]) -> "Matrix":
        return cls(field, [[field(v) for v in row] for row in rows])

    @classmethod
    def zeros(cls, field: CyclotomicField, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        zero = field.zero
        return cls(field, [[zero] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field: CyclotomicField, n: int) -> "Matrix":
        return cls.diag(field, [field.one] * n)

    @classmethod
    def diag(cls, field: CyclotomicField, entries: Sequence) -> "Matrix":
        n = len(entries)
        zero = field.zero
        data = [[zero] * n for _ in range(n)]
        for i, v in enumerate(entries):
            data[i][i] = field(v)
        return cls(field, data)

    @classmethod
    def unit(
        cls, field: CyclotomicField, n: int, i: int, j: int, cols: int | None = None
    ) -> "Matrix":
        """The matrix unit E_ij (0-based indices)."""
        return cls.from_sparse(field, n, n if cols is None else cols, {(i, j): field.one})

    @classmethod
    def from_sparse(
        cls,
        field: CyclotomicField,
        rows: int,
        cols: int,
        entries: dict[tuple[int, int], FieldElement],
    ) -> "Matrix":
        zero = field.zero
        data = [[zero] * cols for _ in range(rows)]
        for (i, j), v in entries.items():
            data[i][j] = v
        return cls(field, data)

    @classmethod
    def from_vec(cls, field: CyclotomicField, rows: int, cols: int, vec: SparseVec) -> "Matrix":
        """Inverse of vec(): row-major index k maps to entry (k // cols, k % cols)."""
        return cls.from_sparse(field, rows, cols, {divmod(k, cols): v for k, v in vec.items()})

    @classmethod
    def block_diag(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        if not blocks:
            raise DimensionError("block_diag needs at least one block")
        field = blocks[0].field
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        entries: dict[tuple[int, int], FieldElement] = {}
        r = c = 0
        for b in blocks:
            b._same_field(field)
            for (i, j), v in b.nonzero_entries():
                entries[(r + i, c + j)] = v
            r += b.rows
            c += b.cols
        return cls.from_sparse(field, n, m, entries)

    @classmethod
    def from_blocks(cls, grid: Sequence[Sequence["Matrix"]]) -> "Matrix":
        """Assemble a block matrix; every block in a row shares its height."""
        field = grid[0][0].field
        entries: dict[tuple[int, int], FieldElement] = {}
        r = 0
        width = sum(b.cols for b in grid[0])
        for row in grid:
            if sum(b.cols for b in row) != width:
                raise DimensionError("block rows have different widths")
            c = 0
            for b in row:
                if b.rows != row[0].rows:
                    raise DimensionError("blocks in one row must share their height")
                b._same_field(field)
                for (i, j), v in b.nonzero_entries():
                    entries[(r + i, c + j)] = v
                c += b.cols
            r += row[0].rows
        return cls.from_sparse(field, r, width, entries)

    # access -------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def n(self) -> int:
        if self.rows != self.cols:
            raise DimensionError(f"{self.rows}x{self.cols} matrix is not square")
        return self.rows

    def __getitem__(self, ij: tuple[int, int]) -> FieldElement:
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple[FieldElement, ...]:
        return self._data[i]

    def to_lists(self) -> list[list[FieldElement]]:
        return [list(r) for r in self._data]

    def _nonzero_rows(self):
        if self._nz is None:
            self._nz = tuple(
                tuple((j, v) for j, v in enumerate(row) if v) for row in self._data
            )
        return self._nz

    def nonzero_entries(self) -> list[tuple[tuple[int, int], FieldElement]]:
        return [((i, j), v) for i, row in enumerate(self._nonzero_rows()) for j, v in row]

    def first_nonzero(self) -> FieldElement | None:
        for row in self._nonzero_rows():
            if row:
                return row[0][1]
        return None

    def is_zero(self) -> bool:
        return self.first_nonzero() is None

    def vec(self) -> SparseVec:
        """Row-major sparse vectorisation."""
        c = self.cols
        return {i * c + j: v for (i, j), v in self.nonzero_entries()}

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix(self.field, [[self._data[i][j] for j in cols] for i in rows])

    # arithmetic ---------------------------------------------------------

    def _same_field(self, field: CyclotomicField) -> None:
        if field != self.field:
            raise FieldMismatchError(f"matrix over {self.field!r} combined with {field!r}")

    def _same_shape(self, other: "Matrix") -> None:
        self._same_field(other.field)
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same_shape(other)
        return Matrix(
            self.field,
            [[x + y for x, y in zip(r, s)] for r, s in zip(self._data, other._data)],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same_shape(other)
        return Matrix(
            self.field,
            [[x - y for x, y in zip(r, s)] for r, s in zip(self._data, other._data)],
        )

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, [[-x for x in r] for r in self._data])

    def scale(self, c) -> "Matrix":
        c = self.field(c) if isinstance(c, (int, Fraction)) else c
        if isinstance(c, FieldElement):
            self._same_field(c.field)
        if c == 1:
            return self
        return Matrix(self.field, [[c * x for x in r] for r in self._data])

    def __mul__(self, c) -> "Matrix":
        if isinstance(c, Matrix):
            raise TypeError("use @ for matrix products")
        if not isinstance(c, (int, Fraction, FieldElement)):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same_field(other.field)
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        zero = self.field.zero
        right = other._nonzero_rows()
        out = []
        for row in self._nonzero_rows():
            acc: dict[int, FieldElement] = {}
            for k, a in row:
                for j, b in right[k]:
                    cur = acc.get(j)
                    acc[j] = a * b if cur is None else cur + a * b
            dense = [zero] * other.cols
            for j, v in acc.items():
                dense[j] = v
            out.append(dense)
        return Matrix(self.field, out)

    def __pow__(self, k: int) -> "Matrix":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = Matrix.identity(self.field, self.n)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product with self as the outer (left) factor."""
        self._same_field(other.field)
        entries = {}
        inner = other.nonzero_entries()
        for (i, j), a in self.nonzero_entries():
            for (k, l), b in inner:
                entries[(i * other.rows + k, j * other.cols + l)] = a * b
        return Matrix.from_sparse(
            self.field, self.rows * other.rows, self.cols * other.cols, entries
        )

    @property
    def T(self) -> "Matrix":
        return Matrix(self.field, list(zip(*self._data)))

    def trace(self) -> FieldElement:
        total = self.field.zero
        for i in range(self.n):
            total = total + self._data[i][i]
        return total

    # predicates ---------------------------------------------------------

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.T

    def is_skew_symmetric(self) -> bool:
        return self.is_square() and self == -self.T

    def is_scalar(self) -> FieldElement | None:
        """Return c when self = c*I, else None."""
        if not self.is_square():
            return None
        c = self._data[0][0]
        for i, row in enumerate(self._nonzero_rows()):
            if self._data[i][i] != c:
                return None
            if any(j != i for j, _ in row):
                return None
        return c

    def ratio_to(self, other: "Matrix") -> FieldElement | None:
        """The scalar c with self = c*other, or None when they are not proportional."""
        self._same_shape(other)
        pivot = None
        for (i, j), v in other.nonzero_entries():
            pivot = (i, j, v)
            break
        if pivot is None:
            return self.field.zero if self.is_zero() else None
        i, j, v = pivot
        c = self._data[i][j] / v
        return c if self == other.scale(c) else None

    # elimination --------------------------------------------------------

    def _sparse_rows(self) -> list[SparseVec]:
        return [dict(r) for r in self._nonzero_rows()]

    def rank(self) -> int:
        return linalg.rank(self._sparse_rows())

    def nullspace(self) -> list[SparseVec]:
        """Basis of the right kernel in reduced echelon form, as sparse column vectors."""
        return linalg.nullspace(self._sparse_rows(), self.cols, self.field)

    def inverse(self) -> "Matrix":
        n = self.n
        one = self.field.one
        augmented = []
        for i, row in enumerate(self._nonzero_rows()):
            vec = dict(row)
            vec[n + i] = one
            augmented.append(vec)
        reduced, pivots = linalg.rref(augmented, pivot_limit=n)
        if pivots != list(range(n)):
            raise SingularMatrixError(f"{n}x{n} matrix is singular (rank {len(pivots)})")
        entries = {}
        for i, row in enumerate(reduced):
            for k, v in row.items():
                if k >= n:
                    entries[(i, k - n)] = v
        return Matrix.from_sparse(self.field, n, n, entries)

    def is_invertible(self) -> bool:
        return self.is_square() and self.rank() == self.rows

    def solve(self, b: Sequence[FieldElement]) -> list[FieldElement] | None:
        """One solution x of self @ x = b, or None when the system is inconsistent."""
        if len(b) != self.rows:
            raise DimensionError(f"right-hand side has length {len(b)}, expected {self.rows}")
        c = self.cols
        augmented = []
        for row, rhs in zip(self._nonzero_rows(), b):
            vec = dict(row)
            if rhs:
                vec[c] = self.field(rhs)
            if vec:
                augmented.append(vec)
        reduced, pivots = linalg.rref(augmented)
        # a pivot in the rhs column means 0 = 1
        if c in pivots:
            return None
        x = [self.field.zero] * c
        for row, p in zip(reduced, pivots):
            x[p] = row.get(c, self.field.zero)
        return x

    # comparison / rendering --------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field.order, self._data))
        return self._hash

    def to_json(self) -> dict:
        return {
            "field": self.field.order,
            "rows": [[v.to_json() for v in r] for r in self._data],
        }

    @classmethod
    def from_json(cls, payload: dict, field: CyclotomicField | None = None) -> "Matrix":
        from src.field.cyclotomic import make_field

        field = field or make_field(int(payload["field"]))
        rows = []
        for r in payload["rows"]:
            rows.append([field.from_json(v) if isinstance(v, list) else field(v) for v in r])
        return cls(field, rows)

    def symbolic(self, var: str = "z") -> list[list[str]]:
        return [[v.symbolic(var) for v in r] for r in self._data]

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(v) for v in r) for r in self._data)
        return f"Matrix[{self.rows}x{self.cols} over {self.field!r}]({body})"
