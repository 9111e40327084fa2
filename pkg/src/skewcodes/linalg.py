"""Exact linear algebra over GF(q) and over the prime subfield.

Vectors are tuples of field elements acting as rows: v * M throughout,
matching the twisted-map convention used by the code constructions.
Additive maps on GF(q)^n that are only GF(p)-linear are handled by
flattening along the basis {w^j e_i}.
"""

from __future__ import annotations

import random

from .errors import FieldMismatchError, PreconditionError
from .fields import Field, FieldElem, field_create


class MatFq:
    """Dense matrix over a finite field, row-major."""

    __slots__ = ("rows", "cols", "entries", "field")

    def __init__(self, entries, field: Field, cols: int | None = None):
        rows = [tuple(field.elem(e) for e in row) for row in entries]
        if rows:
            cols = len(rows[0])
        elif cols is None:
            cols = 0
        for row in rows:
            if len(row) != cols:
                raise PreconditionError("ragged rows in matrix")
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", tuple(rows))
        object.__setattr__(self, "field", field)

    def __setattr__(self, *a):
        raise AttributeError("MatFq is immutable")

    @classmethod
    def identity(cls, n: int, field: Field) -> "MatFq":
        one, zero = field.one(), field.zero()
        return cls(
            [[one if i == j else zero for j in range(n)] for i in range(n)], field
        )

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field) -> "MatFq":
        zero = field.zero()
        return cls([[zero] * cols for _ in range(rows)], field, cols=cols)

    @classmethod
    def from_rows(cls, rows, field: Field) -> "MatFq":
        return cls([list(r) for r in rows], field)

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def col(self, j: int) -> tuple:
        return tuple(self.entries[i][j] for i in range(self.rows))

    def transpose(self) -> "MatFq":
        return MatFq(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            self.field,
        )

    def stack(self, other: "MatFq") -> "MatFq":
        if other.field != self.field or other.cols != self.cols:
            raise FieldMismatchError("matrices are not stackable")
        return MatFq(
            list(self.entries) + list(other.entries), self.field, cols=self.cols
        )

    def map_entries(self, func) -> "MatFq":
        return MatFq([[func(e) for e in row] for row in self.entries], self.field)

    def __mul__(self, other: "MatFq") -> "MatFq":
        if other.field != self.field or self.cols != other.rows:
            raise FieldMismatchError("incompatible matrix product")
        zero = self.field.zero()
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    a = self.entries[i][k]
                    if not a.is_zero():
                        acc = acc + a * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return MatFq(out, self.field)

    def __eq__(self, other):
        return (
            isinstance(other, MatFq)
            and other.field == self.field
            and other.entries == self.entries
        )

    def __hash__(self):
        return hash(
            (tuple(tuple(e.val for e in row) for row in self.entries), self.field)
        )

    def to_lists(self):
        return [[e.val for e in row] for row in self.entries]

    def to_text(self) -> str:
        return "[" + ", ".join(
            "[" + ", ".join(self.field.format_elem(e) for e in row) + "]"
            for row in self.entries
        ) + "]"

    def __repr__(self):
        return "\n".join(
            " ".join(self.field.format_elem(e).rjust(3) for e in row)
            for row in self.entries
        ) or "(empty matrix)"


def vec_mul_mat(v, m: MatFq) -> tuple:
    if len(v) != m.rows:
        raise PreconditionError("vector/matrix size mismatch")
    zero = m.field.zero()
    out = []
    for j in range(m.cols):
        acc = zero
        for i, vi in enumerate(v):
            if not vi.is_zero():
                acc = acc + vi * m.entries[i][j]
        out.append(acc)
    return tuple(out)


def rref(m: MatFq) -> tuple[MatFq, int]:
    """Reduced row echelon form and rank."""
    rows = [list(r) for r in m.entries]
    nr, nc = m.rows, m.cols
    pivot_row = 0
    for col in range(nc):
        pivot = None
        for r in range(pivot_row, nr):
            if not rows[r][col].is_zero():
                pivot = r
                break
        if pivot is None:
            continue
        rows[pivot_row], rows[pivot] = rows[pivot], rows[pivot_row]
        inv = rows[pivot_row][col].inverse()
        rows[pivot_row] = [inv * e for e in rows[pivot_row]]
        for r in range(nr):
            if r != pivot_row and not rows[r][col].is_zero():
                c = rows[r][col]
                rows[r] = [a - c * b for a, b in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        if pivot_row == nr:
            break
    return MatFq(rows, m.field), pivot_row


def rank(m: MatFq) -> int:
    return rref(m)[1]


def null_space(m: MatFq) -> list[tuple]:
    """Basis of the right kernel {v : m * v^T = 0}; size cols - rank."""
    red, r = rref(m)
    pivots = []
    row_idx = 0
    for col in range(m.cols):
        if row_idx < r and not red.entries[row_idx][col].is_zero():
            pivots.append(col)
            row_idx += 1
    free = [c for c in range(m.cols) if c not in pivots]
    zero, one = m.field.zero(), m.field.one()
    basis = []
    for fc in free:
        v = [zero] * m.cols
        v[fc] = one
        for i, pc in enumerate(pivots):
            v[pc] = -red.entries[i][fc]
        basis.append(tuple(v))
    return basis


def row_basis(m: MatFq) -> MatFq:
    """RREF with zero rows removed (canonical row-space representative)."""
    red, r = rref(m)
    return MatFq([red.entries[i] for i in range(r)], m.field, cols=m.cols)


def row_space_equal(a: MatFq, b: MatFq) -> bool:
    if a.field != b.field or a.cols != b.cols:
        raise FieldMismatchError("row spaces live in different ambient spaces")
    return row_basis(a).entries == row_basis(b).entries


def row_space_contains(m: MatFq, v) -> bool:
    """True when v lies in the row space of m."""
    stacked = m.stack(MatFq([list(v)], m.field))
    return rank(stacked) == rank(m)


def intersect_row_spaces(a: MatFq, b: MatFq) -> MatFq:
    """Basis of the intersection of two row spaces.

    Solved through the left kernel of the stacked matrix: x*A = -y*B
    exactly when (x, y) kills [A; B] from the left.
    """
    if a.field != b.field or a.cols != b.cols:
        raise FieldMismatchError("row spaces live in different ambient spaces")
    stacked = a.stack(b)
    kernel = null_space(stacked.transpose())
    vectors = []
    for z in kernel:
        x = z[: a.rows]
        v = vec_mul_mat(x, a)
        if any(not e.is_zero() for e in v):
            vectors.append(v)
    if not vectors:
        return MatFq.zeros(0, a.cols, a.field)
    return row_basis(MatFq(vectors, a.field))


def flatten_vector(v, field: Field) -> tuple:
    """GF(q)^n -> GF(p)^(n*s), concatenating polynomial-basis digits."""
    gfp = field_create(field.p, 1)
    out = []
    for e in v:
        out.extend(gfp.elem(d) for d in e.digits())
    return tuple(out)


def unflatten_vector(fv, field: Field, n: int) -> tuple:
    s = field.s
    if len(fv) != n * s:
        raise PreconditionError("flattened vector has the wrong length")
    out = []
    for i in range(n):
        digits = [c.val if isinstance(c, FieldElem) else int(c) for c in fv[i * s : (i + 1) * s]]
        out.append(field.from_digits(digits))
    return tuple(out)


def flatten_additive_map(func, field: Field, n: int, spot_checks: int = 4) -> MatFq:
    """Matrix over GF(p) of an additive map on GF(q)^n.

    ``func`` maps length-n tuples of field elements to the same.  A few
    sampled pairs guard against passing a non-additive map.
    """
    gfp = field_create(field.p, 1)
    s = field.s
    zero = field.zero()
    basis_rows = []
    for i in range(n):
        for j in range(s):
            v = [zero] * n
            # j-th polynomial-basis element in slot i, matching digits()
            v[i] = field.from_digits([0] * j + [1])
            basis_rows.append(flatten_vector(func(tuple(v)), field))
    mat = MatFq(basis_rows, gfp)

    rng = random.Random(0xC0DE)
    for _ in range(spot_checks):
        u = tuple(field.elem(rng.randrange(field.q)) for _ in range(n))
        v = tuple(field.elem(rng.randrange(field.q)) for _ in range(n))
        uv = tuple(a + b for a, b in zip(u, v))
        lhs = func(uv)
        rhs = tuple(a + b for a, b in zip(func(u), func(v)))
        if tuple(lhs) != rhs:
            raise PreconditionError("map failed an additivity spot-check")
    return mat


def additive_map_kernel(func, field: Field, n: int):
    """Kernel of an additive map as GF(q)^n vectors spanning over GF(p)."""
    mat = flatten_additive_map(func, field, n)
    flat_basis = null_space(mat.transpose())
    # null_space solves m*v^T = 0; we need the left kernel of `mat` seen as
    # acting by v*mat, i.e. the right kernel of mat^T
    return [unflatten_vector(fv, field, n) for fv in flat_basis]
