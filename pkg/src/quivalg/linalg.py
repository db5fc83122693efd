"""Exact linear algebra over the rationals.

Everything in this module works with ``fractions.Fraction`` entries, so all
results are bit-exact and subspace equality is literal equality of the unique
reduced-row-echelon basis.  Vectors are plain tuples of Fractions; subspace
bases are stored as matrix *rows*.

Conventions fixed here and used by every other module:

* subspaces are always kept in RREF with the natural column order; this is
  the global tie-breaking rule wherever a basis has to be chosen;
* tensor bases are ordered lexicographically with the left factor major.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import DimensionMismatch, QuivalgError

Scalar = Fraction
Vec = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x) -> Fraction:
    """Coerce ints, strings like ``3/2`` and Fractions to a Fraction."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def vec(entries: Iterable) -> Vec:
    return tuple(frac(x) for x in entries)


def zero_vec(n: int) -> Vec:
    return (ZERO,) * n


def unit_vec(n: int, i: int) -> Vec:
    return tuple(ONE if j == i else ZERO for j in range(n))


def vec_add(x: Vec, y: Vec) -> Vec:
    return tuple(a + b for a, b in zip(x, y, strict=True))


def vec_sub(x: Vec, y: Vec) -> Vec:
    return tuple(a - b for a, b in zip(x, y, strict=True))


def vec_scale(c: Fraction, x: Vec) -> Vec:
    return tuple(c * a for a in x)


def is_zero_vec(x: Vec) -> bool:
    return all(a == 0 for a in x)


class Matrix:
    """Immutable dense matrix of Fractions, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[Sequence]):
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise DimensionMismatch(f"expected {rows}x{cols} entries")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(
            self, "entries", tuple(tuple(frac(x) for x in r) for r in entries)
        )

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [tuple(r) for r in rows]
        if cols is None:
            if not rows:
                raise QuivalgError("cannot infer column count of an empty matrix")
            cols = len(rows[0])
        return cls(len(rows), cols, rows)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols})"

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Vec:
        return self.entries[i]

    def col(self, j: int) -> Vec:
        return tuple(r[j] for r in self.entries)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(
            self.rows,
            self.cols,
            [vec_add(a, b) for a, b in zip(self.entries, other.entries)],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(
            self.rows,
            self.cols,
            [vec_sub(a, b) for a, b in zip(self.entries, other.entries)],
        )

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        cols = [other.col(j) for j in range(other.cols)]
        out = [
            [sum((a * b for a, b in zip(r, c)), ZERO) for c in cols]
            for r in self.entries
        ]
        return Matrix(self.rows, other.cols, out)

    def scale(self, c) -> "Matrix":
        c = frac(c)
        return Matrix(self.rows, self.cols, [vec_scale(c, r) for r in self.entries])

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, list(zip(*self.entries)) or [[]] * self.cols)

    def apply(self, v: Sequence) -> Vec:
        """Matrix times column vector; skips zero entries of the vector."""
        v = vec(v)
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} vs {self.cols} columns")
        out = [ZERO] * self.rows
        for j, c in enumerate(v):
            if c == 0:
                continue
            for i, row in enumerate(self.entries):
                e = row[j]
                if e != 0:
                    out[i] += c * e
        return tuple(out)

    def is_zero(self) -> bool:
        return all(is_zero_vec(r) for r in self.entries)

    def _same_shape(self, other: "Matrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch("matrix shapes differ")

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row-echelon form and the pivot column indices."""
        rows = [list(r) for r in self.entries]
        m, n = self.rows, self.cols
        pivots = []
        r = 0
        for c in range(n):
            pivot_row = next((i for i in range(r, m) if rows[i][c] != 0), None)
            if pivot_row is None:
                continue
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
            pv = rows[r][c]
            rows[r] = [x / pv for x in rows[r]]
            for i in range(m):
                if i != r and rows[i][c] != 0:
                    f = rows[i][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == m:
                break
        return Matrix(m, n, rows), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> list[Vec]:
        """Basis of {x : M x = 0} (column-vector kernel)."""
        red, pivots = self.rref()
        pivot_set = set(pivots)
        free = [j for j in range(self.cols) if j not in pivot_set]
        basis = []
        for f in free:
            x = [ZERO] * self.cols
            x[f] = ONE
            for i, p in enumerate(pivots):
                x[p] = -red.entries[i][f]
            basis.append(tuple(x))
        return basis

    def solve(self, b: Sequence) -> Vec | None:
        """One solution of M x = b, or None if inconsistent."""
        b = vec(b)
        if len(b) != self.rows:
            raise DimensionMismatch("right-hand side length mismatch")
        aug = Matrix(
            self.rows, self.cols + 1, [r + (val,) for r, val in zip(self.entries, b)]
        )
        red, pivots = aug.rref()
        if self.cols in pivots:
            return None
        x = [ZERO] * self.cols
        for i, p in enumerate(pivots):
            x[p] = red.entries[i][self.cols]
        return tuple(x)

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise DimensionMismatch("only square matrices invert")
        n = self.rows
        aug = Matrix(
            n, 2 * n,
            [r + tuple(ONE if j == i else ZERO for j in range(n))
             for i, r in enumerate(self.entries)],
        )
        red, pivots = aug.rref()
        if tuple(pivots) != tuple(range(n)):
            raise QuivalgError("matrix is singular")
        return Matrix(n, n, [r[n:] for r in red.entries])


def vstack(ms: Sequence[Matrix]) -> Matrix:
    cols = ms[0].cols
    rows = []
    for m in ms:
        if m.cols != cols:
            raise DimensionMismatch("vstack needs equal column counts")
        rows.extend(m.entries)
    return Matrix(len(rows), cols, rows)


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n held by its unique RREF row basis."""

    ambient_dim: int
    basis: Matrix

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(
            next(j for j in range(self.ambient_dim) if r[j] == 1)
            for r in self.basis.entries
        )

    def basis_rows(self) -> tuple[Vec, ...]:
        return self.basis.entries

    def contains_vector(self, v: Sequence) -> bool:
        return self.coordinates_of(v) is not None

    def coordinates_of(self, v: Sequence) -> Vec | None:
        """Coefficients of v over the RREF basis rows, or None if outside.

        Because the basis is in RREF the candidate coefficients can be read
        off the pivot columns; one reconstruction verifies membership.
        """
        v = vec(v)
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("ambient dimension mismatch")
        coeffs = tuple(v[p] for p in self.pivots)
        residual = list(v)
        for c, row in zip(coeffs, self.basis.entries):
            if c != 0:
                residual = [a - c * b for a, b in zip(residual, row)]
        if any(x != 0 for x in residual):
            return None
        return coeffs

    def __contains__(self, v) -> bool:
        return self.contains_vector(v)


def canonicalize(vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
    """The unique RREF-basis subspace spanning the given vectors."""
    rows = [vec(v) for v in vectors]
    for r in rows:
        if len(r) != ambient_dim:
            raise DimensionMismatch(
                f"vector of length {len(r)} in ambient dimension {ambient_dim}"
            )
    if not rows:
        return Subspace(ambient_dim, Matrix(0, ambient_dim, []))
    red, pivots = Matrix(len(rows), ambient_dim, rows).rref()
    return Subspace(ambient_dim, Matrix(len(pivots), ambient_dim, red.entries[: len(pivots)]))


def zero_subspace(ambient_dim: int) -> Subspace:
    return Subspace(ambient_dim, Matrix(0, ambient_dim, []))


def full_subspace(ambient_dim: int) -> Subspace:
    return Subspace(ambient_dim, Matrix.identity(ambient_dim))


def _check_same_ambient(u: Subspace, w: Subspace):
    if u.ambient_dim != w.ambient_dim:
        raise DimensionMismatch("subspaces live in different ambient spaces")


def subspace_sum(u: Subspace, w: Subspace) -> Subspace:
    _check_same_ambient(u, w)
    return canonicalize(u.basis_rows() + w.basis_rows(), u.ambient_dim)


def subspace_intersect(u: Subspace, w: Subspace) -> Subspace:
    """Intersection via the standard kernel construction.

    A vector lies in both spans iff it is a U-combination a and a
    W-combination b with a*U - b*W = 0, i.e. (a, b) is in the kernel of the
    transposed stacked basis matrix.
    """
    _check_same_ambient(u, w)
    if u.dim == 0 or w.dim == 0:
        return zero_subspace(u.ambient_dim)
    stacked = vstack([u.basis, w.basis.scale(-1)])
    kernel = stacked.transpose().nullspace()
    vectors = []
    for k in kernel:
        a = k[: u.dim]
        v = zero_vec(u.ambient_dim)
        for c, row in zip(a, u.basis_rows()):
            if c != 0:
                v = vec_add(v, vec_scale(c, row))
        vectors.append(v)
    return canonicalize(vectors, u.ambient_dim)


def subspace_contains(u: Subspace, w: Subspace) -> bool:
    """True iff w is contained in u."""
    _check_same_ambient(u, w)
    return all(u.contains_vector(r) for r in w.basis_rows())


def quotient_basis(u: Subspace, w: Subspace) -> list[Vec]:
    """Vectors of u completing a basis of w to a basis of u.

    Deterministic RREF-pivot completion: walk u's RREF rows in order and keep
    the ones independent of w and of the rows already kept.  Returns exactly
    dim(u) - dim(w) vectors.
    """
    _check_same_ambient(u, w)
    if not subspace_contains(u, w):
        raise QuivalgError("quotient_basis requires w to be a subspace of u")
    kept: list[Vec] = []
    span = w
    for row in u.basis_rows():
        if not span.contains_vector(row):
            kept.append(row)
            span = subspace_sum(span, canonicalize([row], u.ambient_dim))
    return kept


def _as_bilinear(mult, ambient_dim: int) -> Callable[[Vec, Vec], Vec]:
    """Accept either a callable (x, y) -> vec or a dense structure tensor."""
    if callable(mult):
        return mult

    tensor = [[vec(col) for col in row] for row in mult]
    if len(tensor) != ambient_dim or any(len(r) != ambient_dim for r in tensor):
        raise DimensionMismatch("structure tensor shape mismatch")

    def product(x: Vec, y: Vec) -> Vec:
        out = [ZERO] * ambient_dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                c = xi * yj
                for k, t in enumerate(tensor[i][j]):
                    if t != 0:
                        out[k] += c * t
        return tuple(out)

    return product


def bilinear_image(mult, u: Subspace, w: Subspace) -> Subspace:
    """Span of all products mult(x, y) over basis vectors of u and w."""
    _check_same_ambient(u, w)
    product = _as_bilinear(mult, u.ambient_dim)
    vectors = [
        product(x, y) for x in u.basis_rows() for y in w.basis_rows()
    ]
    return canonicalize(vectors, u.ambient_dim)


def dual_map(m: Matrix) -> Matrix:
    """Matrix of the dual operator in the dual bases (the transpose)."""
    return m.transpose()


def double_dual_naturality(m: Matrix) -> bool:
    """Check the naturality square of the evaluation map into the double dual.

    phi_U and phi_V are identity matrices in the double-dual coordinates
    induced by the chosen bases; the double dual of the operator is built by
    applying the dual-map construction twice.  Always true.
    """
    double_dual = dual_map(dual_map(m))
    phi_u = Matrix.identity(m.cols)
    phi_v = Matrix.identity(m.rows)
    return phi_v * m == double_dual * phi_u


def curry(m: Matrix, dims: tuple[int, int, int]) -> tuple[Matrix, ...]:
    """Hom(U (x) V, W) -> Hom(U, Hom(V, W)) in lexicographic tensor bases.

    The input has shape dimW x (dimU * dimV) with the tensor basis ordered
    left-factor major; the output assigns to each U-basis vector a
    dimW x dimV matrix.
    """
    du, dv, dw = dims
    if m.rows != dw or m.cols != du * dv:
        raise DimensionMismatch(
            f"expected {dw}x{du * dv} for dims {dims}, got {m.rows}x{m.cols}"
        )
    return tuple(
        Matrix(dw, dv, [[m.entries[r][i * dv + j] for j in range(dv)] for r in range(dw)])
        for i in range(du)
    )

def uncurry(mats: Sequence[Matrix], dims: tuple[int, int, int]) -> Matrix:
    du, dv, dw = dims
    if len(mats) != du or any(n.rows != dw or n.cols != dv for n in mats):
        raise DimensionMismatch(f"expected {du} matrices of shape {dw}x{dv}")
    return Matrix(
        dw, du * dv,
        [[mats[i].entries[r][j] for i in range(du) for j in range(dv)] for r in range(dw)],
    )


def curry_roundtrip(dims: tuple[int, int, int], m: Matrix) -> bool:
    """Curry then uncurry and compare entrywise.  Always the identity."""
    return uncurry(curry(m, dims), dims) == m
