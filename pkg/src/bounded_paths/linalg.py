"""Exact determinants and cofactors of matrices with polynomial entries.

Determinants use fraction-free (Bareiss) elimination over the integral domain
of :class:`~bounded_paths.ring.MPoly`.  Rows are kept sparse and rows that an
elimination step does not touch are rescaled lazily: a row last updated at
step ``s`` equals its stored value times ``p[k-1] / p[s]`` at step ``k``.
The band matrices of this package then cost roughly bandwidth squared per
step instead of a full trailing update.
"""

from __future__ import annotations

from typing import Callable, Hashable, Sequence

from .errors import IndexOutOfRange
from .ring import ONE, ZERO, MPoly, mp_exact_div

__all__ = [
    "PolyMatrix",
    "det",
    "det_expand",
    "cofactor",
    "cofactors_in_column",
    "solve_fraction_free",
]


class PolyMatrix:
    """Dense immutable grid of polynomials with optional row/column labels."""

    __slots__ = ("rows", "cols", "entries", "row_labels", "col_labels")

    def __init__(
        self,
        entries: Sequence[Sequence[MPoly | int]],
        cols: int | None = None,
        row_labels: Sequence[Hashable] | None = None,
        col_labels: Sequence[Hashable] | None = None,
    ):
        grid = tuple(tuple(MPoly.coerce(e) for e in row) for row in entries)
        self.rows = len(grid)
        self.cols = len(grid[0]) if grid else (cols or 0)
        if any(len(r) != self.cols for r in grid):
            raise ValueError("matrix rows must have equal length")
        self.entries = grid
        self.row_labels = _check_labels(row_labels, self.rows)
        self.col_labels = _check_labels(col_labels, self.cols)

    @classmethod
    def from_function(cls, rows: int, cols: int, f: Callable[[int, int], MPoly | int], **labels) -> "PolyMatrix":
        return cls([[f(i, j) for j in range(cols)] for i in range(rows)], cols=cols, **labels)

    @classmethod
    def identity(cls, n: int, labels: Sequence[Hashable] | None = None) -> "PolyMatrix":
        return cls.from_function(n, n, lambda i, j: 1 if i == j else 0, row_labels=labels, col_labels=labels)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> MPoly:
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.entries == other.entries and self.shape == other.shape

    def __hash__(self) -> int:
        return hash((self.shape, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(e) for e in row) for row in self.entries)
        return f"PolyMatrix({self.rows}x{self.cols}: [{body}])"

    def tolist(self) -> list[list[MPoly]]:
        return [list(r) for r in self.entries]

    def row_position(self, label: Hashable) -> int:
        if self.row_labels is None:
            raise KeyError("matrix has no row labels")
        return self.row_labels.index(label)

    def col_position(self, label: Hashable) -> int:
        if self.col_labels is None:
            raise KeyError("matrix has no column labels")
        return self.col_labels.index(label)

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
            row_labels=self.col_labels,
            col_labels=self.row_labels,
        )

    def map(self, f: Callable[[MPoly], MPoly]) -> "PolyMatrix":
        return PolyMatrix(
            [[f(e) for e in row] for row in self.entries],
            cols=self.cols,
            row_labels=self.row_labels,
            col_labels=self.col_labels,
        )

    def delete(self, row: int, col: int) -> "PolyMatrix":
        _check_index(row, self.rows, "row")
        _check_index(col, self.cols, "column")
        keep_r = [i for i in range(self.rows) if i != row]
        keep_c = [j for j in range(self.cols) if j != col]
        return PolyMatrix(
            [[self.entries[i][j] for j in keep_c] for i in keep_r],
            cols=len(keep_c),
            row_labels=None if self.row_labels is None else [self.row_labels[i] for i in keep_r],
            col_labels=None if self.col_labels is None else [self.col_labels[j] for j in keep_c],
        )

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix([[self.entries[i][j] for j in cols] for i in rows], cols=len(cols))

    def __matmul__(self, other):
        if isinstance(other, PolyMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            return PolyMatrix.from_function(
                self.rows,
                other.cols,
                lambda i, j: _dot(self.entries[i], [other.entries[k][j] for k in range(other.rows)]),
                row_labels=self.row_labels,
                col_labels=other.col_labels,
            )
        vec = list(other)
        if len(vec) != self.cols:
            raise ValueError("shape mismatch")
        return [_dot(row, vec) for row in self.entries]

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return PolyMatrix.from_function(
            self.rows,
            self.cols,
            lambda i, j: self.entries[i][j] - other.entries[i][j],
            row_labels=self.row_labels,
            col_labels=self.col_labels,
        )

    def scale(self, c: MPoly | int) -> "PolyMatrix":
        c = MPoly.coerce(c)
        return self.map(lambda e: e * c)


def _dot(row: Sequence[MPoly], vec: Sequence[MPoly]) -> MPoly:
    acc = ZERO
    for a, b in zip(row, vec):
        if a and b:
            acc = acc + a * b
    return acc


def _check_labels(labels, n):
    if labels is None:
        return None
    labels = tuple(labels)
    if len(labels) != n or len(set(labels)) != n:
        raise ValueError("labels must be unique and match the dimension")
    return labels


def _check_index(i: int, n: int, what: str) -> None:
    if not 0 <= i < n:
        raise IndexOutOfRange(f"{what} index {i} out of range for dimension {n}")


# -- elimination --------------------------------------------------------------


def _eliminate(grid, n: int):
    """Forward Bareiss elimination on the first ``n`` columns.

    Returns ``(sign, pivots, rows)`` with ``rows[i]`` holding row ``i`` as it
    stood when it served as pivot, or ``None`` when some column has no
    nonzero pivot (the leading ``n`` columns are singular).
    """
    rows = [{j: e for j, e in enumerate(r) if e} for r in grid]
    m = len(rows)
    stamp = [-1] * m
    piv = {-1: ONE}
    sign = 1

    def refresh(r: int, step: int) -> None:
        s = stamp[r]
        if s == step:
            return
        num, den = piv[step], piv[s]
        rows[r] = {j: mp_exact_div(e * num, den) for j, e in rows[r].items()}
        stamp[r] = step

    for k in range(n):
        best = None
        best_size = None
        for r in range(k, m):
            e = rows[r].get(k)
            if e is not None:
                size = (stamp[r] != k - 1, len(e), len(rows[r]))
                if best is None or size < best_size:
                    best, best_size = r, size
        if best is None:
            return None
        if best != k:
            rows[k], rows[best] = rows[best], rows[k]
            stamp[k], stamp[best] = stamp[best], stamp[k]
            sign = -sign
        refresh(k, k - 1)
        pivot_row = rows[k]
        pk = pivot_row[k]
        prev = piv[k - 1]
        tail = [(j, e) for j, e in pivot_row.items() if j > k]
        for r in range(k + 1, m):
            if k not in rows[r]:
                continue
            refresh(r, k - 1)
            row = rows[r]
            e = row.pop(k)
            new = {}
            for j, v in row.items():
                new[j] = v * pk
            for j, w in tail:
                new[j] = new.get(j, ZERO) - e * w
            rows[r] = {j: mp_exact_div(v, prev) for j, v in new.items() if v}
            stamp[r] = k
        piv[k] = pk
    return sign, piv, rows


def det(m: PolyMatrix) -> MPoly:
    """Exact determinant; the empty 0x0 matrix has determinant 1."""
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return ONE
    out = _eliminate(m.entries, n)
    if out is None:
        # a column with no pivot candidate: the matrix is singular
        return ZERO
    sign, piv, _ = out
    return piv[n - 1] if sign > 0 else -piv[n - 1]


def det_expand(m: PolyMatrix) -> MPoly:
    """Laplace expansion along the sparsest row; slow, used as a cross-check."""
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return ONE
    if n == 1:
        return m.entries[0][0]
    i = min(range(n), key=lambda r: (sum(1 for e in m.entries[r] if e), r))
    acc = ZERO
    for j, e in enumerate(m.entries[i]):
        if e:
            minor = det_expand(m.delete(i, j))
            acc = acc + (e * minor if (i + j) % 2 == 0 else -(e * minor))
    return acc


def cofactor(m: PolyMatrix, p: int, q: int) -> MPoly:
    """Signed minor ``(-1)**(p+q) * det(m without row p and column q)``.

    With this orientation ``inverse(m)[i][j] == cofactor(m, j, i) / det(m)``.
    """
    if not m.is_square():
        raise ValueError("cofactor of a non-square matrix")
    _check_index(p, m.rows, "row")
    _check_index(q, m.cols, "column")
    minor = det(m.delete(p, q))
    return minor if (p + q) % 2 == 0 else -minor


def solve_fraction_free(m: PolyMatrix, b: Sequence[MPoly | int]) -> tuple[MPoly, list[MPoly]] | None:
    """Solve ``m x = b`` by Cramer numerators.

    Returns ``(d, xs)`` with ``d = det(m)`` and ``m @ xs == d * b``, or None
    when ``m`` is singular.
    """
    n = m.rows
    if not m.is_square():
        raise ValueError("square matrix required")
    if len(b) != n:
        raise ValueError("right-hand side has the wrong length")
    if n == 0:
        return ONE, []
    grid = [list(row) + [MPoly.coerce(bi)] for row, bi in zip(m.entries, b)]
    out = _eliminate(grid, n)
    if out is None:
        return None
    sign, piv, rows = out
    d = piv[n - 1] if sign > 0 else -piv[n - 1]
    xs: list[MPoly] = [ZERO] * n
    for i in range(n - 1, -1, -1):
        row = rows[i]
        acc = d * row.get(n, ZERO)
        for j, e in row.items():
            if i < j < n and xs[j]:
                acc = acc - e * xs[j]
        xs[i] = mp_exact_div(acc, row[i])
    return d, xs


def cofactors_in_column(m: PolyMatrix, q: int) -> list[MPoly]:
    """``[cofactor(m, p, q) for p in range(n)]`` from a single elimination."""
    _check_index(q, m.cols, "column")
    n = m.rows
    e_q = [ONE if i == q else ZERO for i in range(n)]
    out = solve_fraction_free(m.transpose(), e_q)
    if out is None:
        return [cofactor(m, p, q) for p in range(n)]
    return out[1]
