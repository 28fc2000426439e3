"""Exact dense linear algebra over a FieldSpec.

Everything funnels through one canonical reduced row echelon form:
pivots are 1, pivot columns are cleared, pivot positions strictly
increase, zero rows are dropped.  Two subspaces are equal iff their
canonical bases are equal entry by entry, so subspace comparisons are
syntactic.

Vectors are tuples of Scalars.  Matrices are Mat objects (row major).
Sizes here are desk scale (dimension a few dozen), so the classical
O(n^3) algorithms are used without blocking tricks.
"""

from __future__ import annotations

from .errors import NoSolution, ShapeMismatch
from .scalars import FieldSpec, Scalar


# ---------------------------------------------------------------------------
# vector helpers
# ---------------------------------------------------------------------------

def zero_vec(field: FieldSpec, n: int) -> tuple:
    z = field.zero()
    return (z,) * n


def unit_vec(field: FieldSpec, n: int, i: int) -> tuple:
    z, o = field.zero(), field.one()
    return tuple(o if j == i else z for j in range(n))


def vec_add(a: tuple, b: tuple) -> tuple:
    if len(a) != len(b):
        raise ShapeMismatch(f"vector lengths {len(a)} vs {len(b)}")
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: tuple, b: tuple) -> tuple:
    if len(a) != len(b):
        raise ShapeMismatch(f"vector lengths {len(a)} vs {len(b)}")
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(c: Scalar, a: tuple) -> tuple:
    return tuple(c * x for x in a)


def vec_dot(a: tuple, b: tuple) -> Scalar:
    if len(a) != len(b):
        raise ShapeMismatch(f"vector lengths {len(a)} vs {len(b)}")
    acc = a[0].field.zero() if a else None
    for x, y in zip(a, b):
        acc = acc + x * y
    return acc


def vec_is_zero(a: tuple) -> bool:
    return all(x.is_zero() for x in a)


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

class Mat:
    """Dense matrix over one field; rows is a list of equal-length tuples."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: FieldSpec, rows, ncols: int | None = None):
        rows = [tuple(r) for r in rows]
        if rows:
            ncols = len(rows[0])
            for r in rows:
                if len(r) != ncols:
                    raise ShapeMismatch("ragged matrix rows")
        elif ncols is None:
            ncols = 0
        self.field = field
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def zero(cls, field: FieldSpec, nrows: int, ncols: int) -> "Mat":
        z = field.zero()
        return cls(field, [(z,) * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Mat":
        return cls(field, [unit_vec(field, n, i) for i in range(n)], n)

    @classmethod
    def from_columns(cls, field: FieldSpec, cols, nrows: int | None = None) -> "Mat":
        cols = [tuple(c) for c in cols]
        if cols:
            nrows = len(cols[0])
        elif nrows is None:
            nrows = 0
        return cls(field, [tuple(c[i] for c in cols) for i in range(nrows)], len(cols))

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "Mat":
        return Mat(self.field, [self.column(j) for j in range(self.ncols)], self.nrows)

    def __add__(self, other: "Mat") -> "Mat":
        self._like(other)
        return Mat(self.field,
                   [vec_add(a, b) for a, b in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other: "Mat") -> "Mat":
        self._like(other)
        return Mat(self.field,
                   [vec_sub(a, b) for a, b in zip(self.rows, other.rows)], self.ncols)

    def scale(self, c: Scalar) -> "Mat":
        return Mat(self.field, [vec_scale(c, r) for r in self.rows], self.ncols)

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.ncols != other.nrows:
            raise ShapeMismatch(f"matmul {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        ocols = other.columns()
        return Mat(self.field,
                   [tuple(vec_dot(r, c) for c in ocols) for r in self.rows], other.ncols)

    def apply(self, v: tuple) -> tuple:
        """Matrix times column vector."""
        if self.ncols != len(v):
            raise ShapeMismatch(f"apply {self.nrows}x{self.ncols} to length {len(v)}")
        return tuple(vec_dot(r, v) for r in self.rows)

    def __eq__(self, other):
        return (isinstance(other, Mat) and self.field == other.field
                and self.ncols == other.ncols and self.rows == other.rows)

    def __hash__(self):
        return hash((self.ncols, tuple(self.rows)))

    def is_zero(self) -> bool:
        return all(vec_is_zero(r) for r in self.rows)

    def trace(self) -> Scalar:
        if self.nrows != self.ncols:
            raise ShapeMismatch("trace of a non-square matrix")
        acc = self.field.zero()
        for i in range(self.nrows):
            acc = acc + self.rows[i][i]
        return acc

    def _like(self, other: "Mat"):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ShapeMismatch(
                f"{self.nrows}x{self.ncols} vs {other.nrows}x{other.ncols}")

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Mat({self.nrows}x{self.ncols}: {body})"


# ---------------------------------------------------------------------------
# canonical row reduction
# ---------------------------------------------------------------------------

def rref_rows(field: FieldSpec, rows) -> tuple[list[tuple], list[int]]:
    """Canonical RREF of a list of row vectors; returns (rows, pivot columns).

    Zero rows are dropped; remaining rows have leading 1 in strictly
    increasing pivot columns and pivot columns cleared elsewhere.
    """
    work = [list(r) for r in rows]
    ncols = len(work[0]) if work else 0
    pivots: list[int] = []
    out: list[list] = []
    row_idx = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(row_idx, len(work)):
            if not work[i][col].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[row_idx], work[pivot_row] = work[pivot_row], work[row_idx]
        inv = work[row_idx][col].inverse()
        work[row_idx] = [inv * x for x in work[row_idx]]
        for i in range(len(work)):
            if i != row_idx and not work[i][col].is_zero():
                c = work[i][col]
                work[i] = [x - c * y for x, y in zip(work[i], work[row_idx])]
        pivots.append(col)
        row_idx += 1
        if row_idx == len(work):
            break
    out = [tuple(r) for r in work[:row_idx]]
    return out, pivots


def rref(m: Mat) -> tuple[Mat, list[int]]:
    rows, pivots = rref_rows(m.field, m.rows)
    return Mat(m.field, rows, m.ncols), pivots


def kernel(m: Mat) -> "SubspaceBasis":
    """Canonical basis of the right null space {v : m @ v = 0}."""
    red, pivots = rref_rows(m.field, m.rows)
    n = m.ncols
    z, o = m.field.zero(), m.field.one()
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        v = [z] * n
        v[f] = o
        for r, p in zip(red, pivots):
            v[p] = -r[f]
        basis.append(tuple(v))
    return SubspaceBasis(m.field, n, basis)


def solve(m: Mat, b: tuple) -> tuple:
    """One exact solution of m @ x = b (free variables zero), or NoSolution."""
    if len(b) != m.nrows:
        raise ShapeMismatch(f"rhs length {len(b)} vs {m.nrows} rows")
    aug = [m.rows[i] + (b[i],) for i in range(m.nrows)]
    red, pivots = rref_rows(m.field, aug)
    n = m.ncols
    z = m.field.zero()
    x = [z] * n
    for r, p in zip(red, pivots):
        if p == n:
            raise NoSolution("inconsistent linear system")
        x[p] = r[n]
    return tuple(x)


def solve_columns(m: Mat, rhs: Mat) -> Mat:
    """Solve m @ X = rhs column by column."""
    cols = [solve(m, rhs.column(j)) for j in range(rhs.ncols)]
    return Mat.from_columns(m.field, cols, m.ncols)


# ---------------------------------------------------------------------------
# subspaces
# ---------------------------------------------------------------------------

class SubspaceBasis:
    """A subspace of k^n held as a canonical RREF basis (rows)."""

    __slots__ = ("field", "ambient", "rows")

    def __init__(self, field: FieldSpec, ambient: int, rows, *, canonical: bool = False):
        rows = [tuple(r) for r in rows]
        for r in rows:
            if len(r) != ambient:
                raise ShapeMismatch("basis vector length differs from ambient dimension")
        if not canonical:
            rows, _ = rref_rows(field, rows)
        self.field = field
        self.ambient = ambient
        self.rows = rows

    @classmethod
    def full(cls, field: FieldSpec, n: int) -> "SubspaceBasis":
        return cls(field, n, [unit_vec(field, n, i) for i in range(n)], canonical=True)

    @classmethod
    def zero(cls, field: FieldSpec, n: int) -> "SubspaceBasis":
        return cls(field, n, [], canonical=True)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __eq__(self, other):
        return (isinstance(other, SubspaceBasis) and self.field == other.field
                and self.ambient == other.ambient and self.rows == other.rows)

    def __hash__(self):
        return hash((self.ambient, tuple(self.rows)))

    def contains_vector(self, v: tuple) -> bool:
        if len(v) != self.ambient:
            raise ShapeMismatch("vector length differs from ambient dimension")
        merged, _ = rref_rows(self.field, self.rows + [v])
        return len(merged) == self.dim

    def coords_of(self, v: tuple) -> tuple:
        """Coefficients of v over the canonical basis rows, or NoSolution."""
        m = Mat.from_columns(self.field, self.rows, self.ambient)
        return solve(m, v)

    def contains(self, other: "SubspaceBasis") -> bool:
        return all(self.contains_vector(r) for r in other.rows)

    def sum(self, other: "SubspaceBasis") -> "SubspaceBasis":
        self._like(other)
        return SubspaceBasis(self.field, self.ambient, self.rows + other.rows)

    def intersect(self, other: "SubspaceBasis") -> "SubspaceBasis":
        self._like(other)
        return self.perp().sum(other.perp()).perp()

    def perp(self) -> "SubspaceBasis":
        """Annihilator under the standard dot pairing of k^n with itself.

        For a subspace of H in basis coordinates this returns the
        functionals in dual-basis coordinates that kill it, and the
        construction is its own inverse.
        """
        if not self.rows:
            return SubspaceBasis.full(self.field, self.ambient)
        ker = kernel(Mat(self.field, self.rows, self.ambient))
        return SubspaceBasis(self.field, self.ambient, ker.rows)

    def _like(self, other: "SubspaceBasis"):
        if self.field != other.field or self.ambient != other.ambient:
            raise ShapeMismatch("subspaces live in different ambient spaces")

    def __repr__(self):
        return f"SubspaceBasis(dim {self.dim} of k^{self.ambient})"
