"""Exact linear algebra over the Gaussian rationals Q(i).

Scalars are pairs of arbitrary-precision rationals (stdlib Fraction keeps
them in lowest terms with positive denominators), so every computation in
this package is exact and equality tests never need a tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import CodecError, ShapeError

__all__ = [
    "GaussRat",
    "Mat",
    "ZERO",
    "ONE",
    "I",
    "as_gauss",
    "gauss_to_json",
    "gauss_from_json",
    "mat_to_json",
    "mat_from_json",
    "kernel_basis",
    "kernel_and_pivots",
    "row_basis",
    "rank",
    "commutant_basis",
]


def _as_fraction(value: Fraction | int | str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


@dataclass(frozen=True, slots=True, order=True)
class GaussRat:
    """An element re + im*i of Q(i).

    The generated ordering compares (re, im) lexicographically.  It is a
    total order compatible with equality, used for deterministic sorting;
    it is of course not compatible with the field structure.
    """

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", _as_fraction(self.re))
        object.__setattr__(self, "im", _as_fraction(self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def conjugate(self) -> "GaussRat":
        return GaussRat(self.re, -self.im)

    def __neg__(self) -> "GaussRat":
        return GaussRat(-self.re, -self.im)

    def __add__(self, other: object) -> "GaussRat":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return GaussRat(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: object) -> "GaussRat":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return GaussRat(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: object) -> "GaussRat":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return GaussRat(o.re - self.re, o.im - self.im)

    def __mul__(self, other: object) -> "GaussRat":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return GaussRat(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def inverse(self) -> "GaussRat":
        norm = self.re * self.re + self.im * self.im
        if not norm:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussRat(self.re / norm, -self.im / norm)

    def __truediv__(self, other: object) -> "GaussRat":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> "GaussRat":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> "GaussRat":
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        out = ONE
        for _ in range(abs(exponent)):
            out = out * base
        return out

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        imag = "i" if abs(self.im) == 1 else f"{abs(self.im)}i"
        if not self.re:
            return imag if self.im > 0 else f"-{imag}"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{imag}"


def _coerce(value: object) -> GaussRat | None:
    if isinstance(value, GaussRat):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussRat(Fraction(value))
    return None


def as_gauss(value: object) -> GaussRat:
    """Coerce ints, Fractions, and 'p/q' strings to GaussRat. Floats are rejected."""
    if isinstance(value, GaussRat):
        return value
    if isinstance(value, (int, Fraction, str)):
        return GaussRat(_as_fraction(value))
    raise TypeError(f"cannot interpret {value!r} as an exact Gaussian rational")


ZERO = GaussRat()
ONE = GaussRat(1)
I = GaussRat(0, 1)


def _fraction_str(f: Fraction) -> str:
    # denominator is always written, so emission is canonical byte for byte
    return f"{f.numerator}/{f.denominator}"


def gauss_to_json(x: GaussRat) -> list[str]:
    """Serialize as a 2-element array of rational strings, e.g. ["1/2", "-3/1"]."""
    return [_fraction_str(x.re), _fraction_str(x.im)]


def gauss_from_json(data: object) -> GaussRat:
    if (
        not isinstance(data, (list, tuple))
        or len(data) != 2
        or not all(isinstance(part, str) for part in data)
    ):
        raise CodecError(f"expected a 2-element array of rational strings, got {data!r}")
    try:
        return GaussRat(Fraction(data[0]), Fraction(data[1]))
    except (ValueError, ZeroDivisionError) as exc:
        raise CodecError(f"bad rational in {data!r}: {exc}") from None


class Mat:
    """Dense immutable matrix over GaussRat.

    `cols` must be passed explicitly when `entries` has no rows, since the
    width cannot be inferred from an empty grid.
    """

    __slots__ = ("rows", "cols", "entries")

    rows: int
    cols: int
    entries: tuple[tuple[GaussRat, ...], ...]

    def __init__(self, entries: Iterable[Iterable[object]], *, cols: int | None = None):
        grid = tuple(tuple(as_gauss(x) for x in row) for row in entries)
        if grid:
            width = len(grid[0])
            if any(len(row) != width for row in grid):
                raise ShapeError("ragged rows in matrix literal")
            if cols is not None and cols != width:
                raise ShapeError(f"declared cols={cols} but rows have width {width}")
        else:
            if cols is None:
                cols = 0
            width = cols
        object.__setattr__(self, "rows", len(grid))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "entries", grid)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Mat is immutable")

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Mat":
        return cls([[ZERO] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls.diagonal([ONE] * n)

    @classmethod
    def diagonal(cls, values: Sequence[object]) -> "Mat":
        vals = [as_gauss(v) for v in values]
        n = len(vals)
        return cls(
            [[vals[i] if i == j else ZERO for j in range(n)] for i in range(n)], cols=n
        )

    @classmethod
    def block(cls, grid: Sequence[Sequence["Mat"]]) -> "Mat":
        if not grid or not grid[0]:
            raise ShapeError("block grid must be non-empty")
        heights = [row[0].rows for row in grid]
        widths = [blk.cols for blk in grid[0]]
        for i, row in enumerate(grid):
            if len(row) != len(widths):
                raise ShapeError("ragged block grid")
            for j, blk in enumerate(row):
                if blk.rows != heights[i] or blk.cols != widths[j]:
                    raise ShapeError(
                        f"block ({i},{j}) is {blk.rows}x{blk.cols}, "
                        f"expected {heights[i]}x{widths[j]}"
                    )
        out: list[list[GaussRat]] = []
        for i, row in enumerate(grid):
            for r in range(heights[i]):
                out.append([x for blk in row for x in blk.entries[r]])
        return cls(out, cols=sum(widths))

    @classmethod
    def block_diag(cls, blocks: Sequence["Mat"]) -> "Mat":
        grid = [
            [
                blk if i == j else cls.zero(blocks[i].rows, blocks[j].cols)
                for j in range(len(blocks))
            ]
            for i, blk in enumerate(blocks)
        ]
        return cls.block(grid)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, key: tuple[int, int]) -> GaussRat:
        i, j = key
        return self.entries[i][j]

    def row(self, i: int) -> tuple[GaussRat, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[GaussRat, ...]:
        return tuple(row[j] for row in self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.shape, self.entries))

    def __neg__(self) -> "Mat":
        return Mat([[-x for x in row] for row in self.entries], cols=self.cols)

    def __add__(self, other: "Mat") -> "Mat":
        if not isinstance(other, Mat):
            return NotImplemented
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return Mat(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
            cols=self.cols,
        )

    def __sub__(self, other: "Mat") -> "Mat":
        if not isinstance(other, Mat):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: object) -> "Mat":
        if isinstance(other, Mat):
            return self._matmul(other)
        scalar = _coerce(other)
        if scalar is None:
            return NotImplemented
        return self.scale(scalar)

    def __rmul__(self, other: object) -> "Mat":
        scalar = _coerce(other)
        if scalar is None:
            return NotImplemented
        return self.scale(scalar)

    def scale(self, scalar: object) -> "Mat":
        c = as_gauss(scalar)
        return Mat([[c * x for x in row] for row in self.entries], cols=self.cols)

    def _matmul(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        out = [[ZERO] * other.cols for _ in range(self.rows)]
        for i, arow in enumerate(self.entries):
            orow = out[i]
            for p, a in enumerate(arow):
                if not a:
                    continue
                # skipping zero operands matters: most matrices here are
                # diagonal or block sparse and suites multiply thousands
                for j, b in enumerate(other.entries[p]):
                    if b:
                        orow[j] = orow[j] + a * b
        return Mat(out, cols=other.cols)

    def apply(self, vector: Sequence[GaussRat]) -> tuple[GaussRat, ...]:
        """Matrix-vector product."""
        if len(vector) != self.cols:
            raise ShapeError(f"vector of length {len(vector)} against {self.shape}")
        out = []
        for row in self.entries:
            acc = ZERO
            for a, x in zip(row, vector):
                if a and x:
                    acc = acc + a * x
            out.append(acc)
        return tuple(out)

    def transpose(self) -> "Mat":
        return Mat(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def submatrix(self, row_idx: Iterable[int], col_idx: Iterable[int]) -> "Mat":
        cols = list(col_idx)
        return Mat(
            [[self.entries[i][j] for j in cols] for i in row_idx], cols=len(cols)
        )

    def is_zero(self) -> bool:
        return all(not x for row in self.entries for x in row)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_diagonal(self) -> bool:
        return self.is_square() and all(
            not x
            for i, row in enumerate(self.entries)
            for j, x in enumerate(row)
            if i != j
        )

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(str(x) for x in row) for row in self.entries
        )
        return f"Mat({self.rows}x{self.cols}: {body})"


def mat_to_json(m: Mat) -> list[list[list[str]]]:
    return [[gauss_to_json(x) for x in row] for row in m.entries]


def mat_from_json(data: object, *, rows: int, cols: int) -> Mat:
    if not isinstance(data, list) or len(data) != rows:
        raise CodecError(f"expected {rows} matrix rows, got {data!r}")
    grid = []
    for row in data:
        if not isinstance(row, list) or len(row) != cols:
            raise CodecError(f"expected a matrix row of width {cols}, got {row!r}")
        grid.append([gauss_from_json(x) for x in row])
    return Mat(grid, cols=cols)


def _echelon(
    rows: list[list[GaussRat]], ncols: int
) -> tuple[list[list[GaussRat]], list[int]]:
    """Fraction-free forward elimination in place; returns (rows, pivot columns).

    Bareiss-style condensation: rows are combined by cross multiplication and
    divided by the previous pivot, which keeps intermediate numerators small.
    The pivot for each column is the first row with a nonzero entry, so the
    result is deterministic.
    """
    m = len(rows)
    r = 0
    prev = ONE
    pivots: list[int] = []
    for c in range(ncols):
        pivot_row = None
        for i in range(r, m):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, m):
            fac = rows[i][c]
            if not fac:
                continue
            ri, rr = rows[i], rows[r]
            for j in range(c, ncols):
                ri[j] = (piv * ri[j] - fac * rr[j]) / prev
        pivots.append(c)
        prev = piv
        r += 1
        if r == m:
            break
    return rows, pivots


def kernel_and_pivots(
    mat: Mat,
) -> tuple[list[tuple[GaussRat, ...]], list[int]]:
    """Exact right null space basis plus the pivot columns of the elimination.

    One basis vector per free column, in column order; the basis is empty
    exactly when the matrix is injective.
    """
    rows = [list(r) for r in mat.entries]
    ech, pivots = _echelon(rows, mat.cols)
    pivot_set = set(pivots)
    basis = []
    for free_col in range(mat.cols):
        if free_col in pivot_set:
            continue
        x: list[GaussRat] = [ZERO] * mat.cols
        x[free_col] = ONE
        for idx in range(len(pivots) - 1, -1, -1):
            c = pivots[idx]
            row = ech[idx]
            acc = ZERO
            for j in range(c + 1, mat.cols):
                if row[j] and x[j]:
                    acc = acc + row[j] * x[j]
            x[c] = -acc / row[c]
        basis.append(tuple(x))
    return basis, pivots


def kernel_basis(mat: Mat) -> list[tuple[GaussRat, ...]]:
    return kernel_and_pivots(mat)[0]


def row_basis(mat: Mat) -> tuple[list[tuple[GaussRat, ...]], list[int]]:
    """Echelon basis of the row space plus the leading column of each basis row."""
    rows = [list(r) for r in mat.entries]
    ech, pivots = _echelon(rows, mat.cols)
    return [tuple(ech[i]) for i in range(len(pivots))], pivots


def rank(mat: Mat) -> int:
    rows = [list(r) for r in mat.entries]
    return len(_echelon(rows, mat.cols)[1])


def commutant_basis(gens: Sequence[Mat]) -> list[Mat]:
    """Basis of the algebra of matrices commuting with every generator.

    Diagonal generators are handled by constraint propagation (the commutator
    with diag(d) kills entry (i, j) unless d_i = d_j), so the linear system
    that reaches the elimination only carries the surviving unknowns.  The
    result always contains the identity direction.
    """
    mats = list(gens)
    if not mats:
        raise ShapeError("at least one generator is required")
    n = mats[0].rows
    for g in mats:
        if not (g.is_square() and g.rows == n):
            raise ShapeError("generators must be square matrices of equal size")
    if n == 0:
        return []

    free = [[True] * n for _ in range(n)]
    dense: list[Mat] = []
    for g in mats:
        if g.is_diagonal():
            d = [g[i, i] for i in range(n)]
            for i in range(n):
                for j in range(n):
                    if free[i][j] and d[i] != d[j]:
                        free[i][j] = False
        else:
            dense.append(g)

    positions = [(i, j) for i in range(n) for j in range(n) if free[i][j]]
    index = {pos: t for t, pos in enumerate(positions)}

    rows: list[list[GaussRat]] = []
    for g in dense:
        ge = g.entries
        for p in range(n):
            for q in range(n):
                coeffs: dict[int, GaussRat] = {}
                for j in range(n):
                    if free[p][j] and ge[j][q]:
                        t = index[(p, j)]
                        coeffs[t] = coeffs.get(t, ZERO) + ge[j][q]
                for i in range(n):
                    if free[i][q] and ge[p][i]:
                        t = index[(i, q)]
                        coeffs[t] = coeffs.get(t, ZERO) - ge[p][i]
                if any(coeffs.values()):
                    row = [ZERO] * len(positions)
                    for t, v in coeffs.items():
                        row[t] = v
                    rows.append(row)

    vectors = kernel_basis(Mat(rows, cols=len(positions)))
    out = []
    for v in vectors:
        grid = [[ZERO] * n for _ in range(n)]
        for t, (i, j) in enumerate(positions):
            grid[i][j] = v[t]
        out.append(Mat(grid, cols=n))
    return out
