"""Pseudo-linear and semi-linear transformations of GF(q)^n.

A pseudo-linear map is the additive map
    T(v) = (theta(v_1), ..., theta(v_n)) * M + beta * (theta(v_i) - v_i)_i.
With beta = 0 it is semi-linear: T(c v) = theta(c) T(v).  Applying a skew
polynomial to T (coefficients acting by left scalar multiplication) turns
GF(q)^n into a module over the skew ring; kernels of such polynomial maps
are the geometric side of the code constructions.
"""

from __future__ import annotations

from .errors import FieldMismatchError, PreconditionError
from .fields import Automorphism, FieldElem, field_create
from .linalg import (
    MatFq,
    additive_map_kernel,
    flatten_vector,
    null_space,
    rank,
    row_basis,
    row_space_contains,
    rref,
    vec_mul_mat,
)
from .skewpoly import RingCtx, SkewPoly, lclm_many


class PseudoLinearMap:
    """The data (M, theta, beta) acting on row vectors of length n."""

    def __init__(self, M: MatFq, theta: Automorphism, beta: FieldElem):
        if M.rows != M.cols:
            raise PreconditionError("transformation matrix must be square")
        if theta.field != M.field or beta.field != M.field:
            raise FieldMismatchError("matrix, theta and beta must share a field")
        self.M = M
        self.theta = theta
        self.beta = beta
        self.n = M.rows
        self.field = M.field

    def is_semilinear(self) -> bool:
        return self.beta.is_zero() or self.theta.is_identity()

    def __call__(self, v) -> tuple:
        if len(v) != self.n:
            raise PreconditionError(f"expected a vector of length {self.n}")
        tv = tuple(self.theta(c) for c in v)
        out = vec_mul_mat(tv, self.M)
        if not self.beta.is_zero():
            out = tuple(
                o + self.beta * (t - c) for o, t, c in zip(out, tv, v)
            )
        return out

    def ctx(self) -> RingCtx:
        return RingCtx(self.field, self.theta, self.beta)

    def __repr__(self):
        return (
            f"PseudoLinearMap(n={self.n}, theta_t={self.theta.t}, "
            f"beta={self.beta!r})"
        )


def companion_matrix(f: SkewPoly) -> MatFq:
    """Companion matrix with superdiagonal ones and bottom row read from
    f = X^n - f_{n-1} X^{n-1} - ... - f_0."""
    if not f.is_monic():
        raise PreconditionError("companion matrix needs a monic polynomial")
    n = f.degree
    if n < 1:
        raise PreconditionError("companion matrix needs degree >= 1")
    field = f.ctx.field
    zero, one = field.zero(), field.one()
    rows = []
    for i in range(n - 1):
        row = [zero] * n
        row[i + 1] = one
        rows.append(row)
    rows.append([-f.coeff(i) for i in range(n)])
    return MatFq(rows, field)


def transformation_of(f: SkewPoly) -> PseudoLinearMap:
    """T_f: the pseudo-linear map attached to the modulus f."""
    return PseudoLinearMap(companion_matrix(f), f.ctx.theta, f.ctx.beta)


def apply_T(T: PseudoLinearMap, v) -> tuple:
    return T(v)


def apply_poly_T(p: SkewPoly, T: PseudoLinearMap, v) -> tuple:
    """p(T)(v) = sum_i p_i * T^i(v), coefficients scaling on the left."""
    if len(v) != T.n:
        raise PreconditionError(f"expected a vector of length {T.n}")
    zero = T.field.zero()
    acc = [zero] * T.n
    cur = tuple(v)
    for i, c in enumerate(p.coeffs):
        if i > 0:
            cur = T(cur)
        if not c.is_zero():
            for j in range(T.n):
                acc[j] = acc[j] + c * cur[j]
    return tuple(acc)


def poly_map_is_zero(p: SkewPoly, T: PseudoLinearMap) -> bool:
    """Whether p(T) annihilates the whole space (checked on a GF(p)-basis)."""
    field = T.field
    zero = field.zero()
    for i in range(T.n):
        for j in range(field.s):
            v = [zero] * T.n
            v[i] = field.from_digits([0] * j + [1])
            if any(not c.is_zero() for c in apply_poly_T(p, T, tuple(v))):
                return False
    return True


def kernel_of_poly(h: SkewPoly, T: PseudoLinearMap):
    """Kernel of v -> h(T)(v) with a GF(q)-linearity verdict.

    Returns (basis, is_Fq_linear).  The kernel of an additive twisted map
    is always GF(p)-linear; when it is closed under scalar multiplication
    the basis returned is a GF(q)-basis, otherwise a GF(p)-spanning list.
    """
    field = T.field
    fp_basis = additive_map_kernel(lambda v: apply_poly_T(h, T, v), field, T.n)
    if not fp_basis:
        return [], True
    gfp = field_create(field.p, 1)
    flat = MatFq([flatten_vector(v, field) for v in fp_basis], gfp)
    is_linear = True
    w = field.w
    for v in fp_basis:
        wv = tuple(w * c for c in v)
        if not row_space_contains(flat, flatten_vector(wv, field)):
            is_linear = False
            break
    if not is_linear:
        return fp_basis, False
    # regroup into a GF(q)-basis greedily
    chosen: list[tuple] = []
    cur_rank = 0
    for v in fp_basis:
        cand = MatFq(chosen + [list(v)], field)
        if rank(cand) > cur_rank:
            chosen.append(list(v))
            cur_rank += 1
    basis_mat = row_basis(MatFq(chosen, field))
    return [tuple(r) for r in basis_mat.entries], True


def theta_conjugate_product(M: MatFq, theta: Automorphism) -> MatFq:
    """B = M_(theta^(k-1)) * ... * M_theta * M for k the order of theta."""
    if M.rows != M.cols:
        raise PreconditionError("need a square matrix")
    k = theta.order
    B = M
    for j in range(1, k):
        theta_j = Automorphism(theta.field, (theta.t * j) % theta.field.s)
        B = M.map_entries(theta_j) * B
    return B


def matrix_minimal_poly(B: MatFq) -> SkewPoly:
    """Least-degree monic p over GF(q) with p(B) = 0, via Krylov chains
    per coordinate vector and an lcm across them."""
    if B.rows != B.cols:
        raise PreconditionError("need a square matrix")
    n = B.rows
    field = B.field
    ctx = RingCtx.create(field, t=0)
    zero, one = field.zero(), field.one()
    rels = []
    for i in range(n):
        v = tuple(one if j == i else zero for j in range(n))
        chain = [v]
        while True:
            nxt = vec_mul_mat(chain[-1], B)
            stacked = MatFq([list(r) for r in chain], field)
            if rank(stacked.stack(MatFq([list(nxt)], field))) == len(chain):
                break
            chain.append(nxt)
        # express nxt as a combination of the chain: relation polynomial
        d = len(chain)
        aug = MatFq([list(chain[r]) for r in range(d)], field).transpose()
        coeffs = _solve(aug, nxt)
        rel = SkewPoly([-c for c in coeffs] + [one], ctx)
        rels.append(rel)
    return lclm_many(rels)


def _solve(A: MatFq, b):
    """Solve A * x^T = b^T for one solution (A has full column rank here)."""
    aug = MatFq(
        [list(A.entries[i]) + [b[i]] for i in range(A.rows)], A.field
    )
    red, r = rref(aug)
    ncols = A.cols
    x = [A.field.zero()] * ncols
    row_idx = 0
    for col in range(ncols):
        if row_idx < r and not red.entries[row_idx][col].is_zero():
            x[col] = red.entries[row_idx][ncols]
            row_idx += 1
    return x


def semilinear_minimal_poly(T: PseudoLinearMap) -> SkewPoly:
    """Minimal monic skew polynomial annihilating a semi-linear map.

    Requires beta = 0 and invertible M; equals m_B(X^k) with k the order
    of theta and m_B the (commutative) minimal polynomial of the twisted
    product matrix B.  Its coefficients lie in the fixed field.
    """
    if not T.beta.is_zero():
        raise PreconditionError("minimal polynomials are defined for beta = 0")
    if rank(T.M) < T.n:
        raise PreconditionError("transformation matrix must be invertible")
    k = T.theta.order
    B = theta_conjugate_product(T.M, T.theta)
    m_B = matrix_minimal_poly(B)
    ctx = RingCtx(T.field, T.theta, T.field.zero())
    zero = T.field.zero()
    coeffs = [zero] * (k * m_B.degree + 1)
    for i, c in enumerate(m_B.coeffs):
        coeffs[k * i] = c
    return SkewPoly(coeffs, ctx)


def power_matrix(T: PseudoLinearMap, k: int) -> MatFq:
    """Matrix of T^k when that power happens to be GF(q)-linear."""
    field = T.field
    zero, one = field.zero(), field.one()
    rows = []
    for i in range(T.n):
        v = tuple(one if j == i else zero for j in range(T.n))
        for _ in range(k):
            v = T(v)
        rows.append(list(v))
    return MatFq(rows, field)
