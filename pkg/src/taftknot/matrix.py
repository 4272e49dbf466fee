"""Sparse matrices over the exact scalar rings.

Entries are stored in a dict keyed by ``(row, col)``; zeros are dropped.
The same class carries LaurentScalar and CycloScalar entries, so each
matrix remembers a ``zero`` of its ring for the places an entry must be
materialised.
"""

from __future__ import annotations

from typing import Callable, Iterable

__all__ = ["Matrix", "SingularMatrixError"]


class SingularMatrixError(ArithmeticError):
    pass


class Matrix:
    __slots__ = ("nrows", "ncols", "data", "zero")

    def __init__(self, nrows: int, ncols: int, data: dict, zero):
        self.nrows = nrows
        self.ncols = ncols
        self.data = {k: v for k, v in data.items() if v}
        self.zero = zero

    @classmethod
    def identity(cls, n: int, one) -> Matrix:
        return cls(n, n, {(i, i): one for i in range(n)}, one * 0)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], zero) -> Matrix:
        rows = [list(r) for r in rows]
        data = {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r)}
        return cls(len(rows), len(rows[0]) if rows else 0, data, zero)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, key: tuple[int, int]):
        return self.data.get(key, self.zero)

    def to_rows(self) -> list[list]:
        return [[self[i, j] for j in range(self.ncols)] for i in range(self.nrows)]

    def column(self, j: int) -> dict[int, object]:
        return {r: v for (r, c), v in self.data.items() if c == j}

    def map(self, fn: Callable, zero=None) -> Matrix:
        return Matrix(self.nrows, self.ncols, {k: fn(v) for k, v in self.data.items()},
                      self.zero if zero is None else zero)

    def transpose(self) -> Matrix:
        return Matrix(self.ncols, self.nrows, {(c, r): v for (r, c), v in self.data.items()}, self.zero)

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        out = dict(self.data)
        for k, v in other.data.items():
            out[k] = out[k] + v if k in out else v
        return Matrix(self.nrows, self.ncols, out, self.zero)

    def __neg__(self) -> Matrix:
        return Matrix(self.nrows, self.ncols, {k: -v for k, v in self.data.items()}, self.zero)

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def scale(self, s) -> Matrix:
        return Matrix(self.nrows, self.ncols, {k: s * v for k, v in self.data.items()}, self.zero)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        rows_of_other: dict[int, list] = {}
        for (r, c), v in other.data.items():
            rows_of_other.setdefault(r, []).append((c, v))
        out: dict = {}
        for (i, k), a in self.data.items():
            for j, b in rows_of_other.get(k, ()):
                key = (i, j)
                out[key] = out[key] + a * b if key in out else a * b
        return Matrix(self.nrows, other.ncols, out, self.zero)

    def kron(self, other: Matrix) -> Matrix:
        out = {}
        for (i, j), a in self.data.items():
            for (k, l), b in other.data.items():
                out[(i * other.nrows + k, j * other.ncols + l)] = a * b
        return Matrix(self.nrows * other.nrows, self.ncols * other.ncols, out, self.zero)

    def apply(self, vec: dict[int, object]) -> dict[int, object]:
        """Matrix times a sparse column vector ``{index: scalar}``."""
        out: dict = {}
        for (r, c), a in self.data.items():
            if c in vec:
                t = a * vec[c]
                out[r] = out[r] + t if r in out else t
        return {k: v for k, v in out.items() if v}

    def trace(self):
        total = self.zero
        for (r, c), v in self.data.items():
            if r == c:
                total = total + v
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash((self.shape, frozenset(self.data.items())))

    def is_identity(self) -> bool:
        if self.nrows != self.ncols or len(self.data) != self.nrows:
            return False
        return all(r == c and v == 1 for (r, c), v in self.data.items())

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols}, nnz={len(self.data)})"

    # -- exact inversion ----------------------------------------------------

    def blocks(self) -> list[tuple[list[int], list[int]]]:
        """Connected components of the row/column incidence graph."""
        parent = list(range(self.nrows + self.ncols))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for r, c in self.data:
            ra, rb = find(r), find(self.nrows + c)
            if ra != rb:
                parent[ra] = rb
        comps: dict[int, tuple[list, list]] = {}
        for r in range(self.nrows):
            comps.setdefault(find(r), ([], []))[0].append(r)
        for c in range(self.ncols):
            comps.setdefault(find(self.nrows + c), ([], []))[1].append(c)
        return list(comps.values())

    def inverse(self, divexact: Callable | None = None) -> Matrix:
        """Exact inverse by fraction-free Gauss-Jordan elimination.

        Works block by block; ``divexact(a, b)`` must return the exact
        quotient (it defaults to ``a.divexact(b)``).  The final pivot of each
        block has to divide the adjugate entries, otherwise the matrix is not
        invertible over the coefficient ring and ArithmeticError propagates.
        """
        if self.nrows != self.ncols:
            raise SingularMatrixError(f"non-square matrix {self.shape}")
        if divexact is None:
            divexact = lambda a, b: a.divexact(b)  # noqa: E731
        one = None
        for v in self.data.values():
            one = v * 0 + 1
            break
        if one is None:
            raise SingularMatrixError("zero matrix")
        out = {}
        for rows, cols in self.blocks():
            if len(rows) != len(cols):
                raise SingularMatrixError("matrix is singular (unbalanced block)")
            sub = [[self[r, c] for c in cols] for r in rows]
            inv = _gauss_jordan_inverse(sub, one, divexact)
            for i, c in enumerate(cols):
                for j, r in enumerate(rows):
                    if inv[i][j]:
                        out[(c, r)] = inv[i][j]
        return Matrix(self.ncols, self.nrows, out, self.zero)


def _gauss_jordan_inverse(a: list[list], one, divexact) -> list[list]:
    n = len(a)
    zero = one * 0
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(a)]
    prev = one
    for k in range(n):
        piv = next((i for i in range(k, n) if aug[i][k]), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        if piv != k:
            aug[k], aug[piv] = aug[piv], aug[k]
        pk = aug[k][k]
        for i in range(n):
            if i == k:
                continue
            f = aug[i][k]
            row_i, row_k = aug[i], aug[k]
            for j in range(2 * n):
                if j == k:
                    continue
                v = pk * row_i[j] - f * row_k[j]
                row_i[j] = divexact(v, prev) if v else zero
            row_i[k] = zero
        prev = pk
    # every diagonal entry now equals the determinant (up to row swaps)
    return [[divexact(aug[i][n + j], aug[i][i]) if aug[i][n + j] else zero for j in range(n)]
            for i in range(n)]
