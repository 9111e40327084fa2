"""Skew generalized cyclic codes: construction, divisor enumeration, duals,
minimum distance, kernel decompositions and idempotents.

A code of length n is attached to a monic modulus f of degree n and a
monic right divisor g: its generator matrix stacks the coefficient vector
of g with its images under the pseudo-linear map T_f.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from ._accel import kernels
from .errors import (
    BudgetExceededError,
    NotDivisorError,
    NotInvariantError,
    PreconditionError,
)
from .fields import Field, FieldElem, field_create
from .linalg import (
    MatFq,
    flatten_additive_map,
    flatten_vector,
    intersect_row_spaces,
    null_space,
    rank,
    row_basis,
    row_space_contains,
    row_space_equal,
)
from .pseudolinear import (
    PseudoLinearMap,
    apply_poly_T,
    kernel_of_poly,
    transformation_of,
)
from .skewpoly import (
    Factorization,
    RingCtx,
    SkewPoly,
    invariant_factorization,
    is_invariant,
    left_divide,
    lgcd_bezout,
    right_divide,
)

DEFAULT_BUDGET = 1 << 24


class SkewGCCode:
    """[n, k] code generated by a monic right divisor g of the modulus f."""

    def __init__(self, f: SkewPoly, g: SkewPoly, T: PseudoLinearMap, G: MatFq):
        self.f = f
        self.g = g
        self.T = T
        self.G = G
        self.n = f.degree
        self.k = self.n - g.degree
        self.ctx = f.ctx

    @property
    def field(self) -> Field:
        return self.ctx.field

    def contains(self, v) -> bool:
        return row_space_contains(self.G, v)

    def __repr__(self):
        return f"SkewGCCode[n={self.n}, k={self.k}, g={self.g!r}]"


def code_from_generator_poly(g: SkewPoly, f: SkewPoly) -> SkewGCCode:
    """Build the code with generator matrix rows g, T_f(g), ..., T_f^(k-1)(g)."""
    if g.ctx != f.ctx:
        raise PreconditionError("g and f must live in the same ring")
    if not f.is_monic() or not g.is_monic():
        raise PreconditionError("f and g must be monic")
    n = f.degree
    if not 1 <= g.degree <= n - 1:
        raise PreconditionError(
            f"need 1 <= deg g <= {n - 1} for a nondegenerate code, got {g.degree}"
        )
    if not right_divide(f, g)[1].is_zero():
        raise NotDivisorError("g does not right-divide f")
    T = transformation_of(f)
    k = n - g.degree
    rows = []
    cur = tuple(g.coeffs_padded(n))
    for _ in range(k):
        rows.append(list(cur))
        cur = T(cur)
    G = MatFq(rows, f.ctx.field)
    if rank(G) != k:
        raise PreconditionError("generator matrix is rank deficient")
    return SkewGCCode(f, g, T, G)


def is_invariant_code(G: MatFq, T: PseudoLinearMap) -> bool:
    """Whether T maps the row space of G into itself.

    Checking the rows suffices: T is additive and T(c*v) differs from
    theta(c)*T(v) by a multiple of v, so closure on a spanning set closes
    the whole GF(q)-span.  Membership is tested on the GF(p)-flattened
    span, which also covers spans that are merely GF(p)-linear.
    """
    field = G.field
    gfp = field_create(field.p, 1)
    flat_rows = []
    for row in G.entries:
        for j in range(field.s):
            b = field.from_digits([0] * j + [1])
            flat_rows.append(flatten_vector(tuple(b * e for e in row), field))
    flat = MatFq(flat_rows, gfp)
    for row in G.entries:
        if not row_space_contains(flat, flatten_vector(T(row), field)):
            return False
    return True


def _packed_tables(field: Field):
    if field.mul_table is None:
        raise PreconditionError(
            f"enumeration requires dense tables (q <= 1024), got q = {field.q}"
        )
    if not hasattr(field, "_neg_table"):
        field._neg_table = np.array(
            [field.neg_val(v) for v in range(field.q)], dtype=np.uint16
        )
        field._inv_table = np.array(
            [0] + [field.inv_val(v) for v in range(1, field.q)], dtype=np.uint16
        )
    return field.mul_table, field.add_table, field._neg_table, field._inv_table


def enumerate_right_divisors(
    f: SkewPoly, budget: int = DEFAULT_BUDGET
) -> list[SkewPoly]:
    """All monic right divisors of f with nonzero constant term and degree
    1..n-1, i.e. the candidate scan of the exhaustive search programs with
    scalar multiples normalized away.  Sorted by (degree, coefficients)."""
    ctx = f.ctx
    if not f.is_monic() or f.degree < 1:
        raise PreconditionError("f must be monic of degree >= 1")
    q, n = ctx.field.q, f.degree
    if q**n > budget:
        raise BudgetExceededError(
            f"divisor scan needs q^n = {q**n} > budget {budget}"
        )
    mul, add, neg, inv = _packed_tables(ctx.field)
    theta = ctx.theta.table()
    delta = np.array(
        [ctx.delta(ctx.field.elem(v)).val for v in range(q)], dtype=np.uint16
    )
    fvec = np.array([c.val for c in f.coeffs], dtype=np.uint16)
    hits = kernels.scan_monic_right_divisors(fvec, mul, add, neg, inv, theta, delta)
    polys = [ctx.from_coeffs(h) for h in hits]
    polys.sort(key=lambda p: p.key())
    return polys


def minimum_distance(C: SkewGCCode, budget: int = DEFAULT_BUDGET) -> int:
    """Exact minimum Hamming distance by enumerating all q^k codewords."""
    return min_weight_of_matrix(C.G, budget)


def min_weight_of_matrix(G: MatFq, budget: int = DEFAULT_BUDGET) -> int:
    field = G.field
    if G.rows == 0:
        raise PreconditionError("the zero code has no minimum distance")
    if field.q**G.rows > budget:
        raise BudgetExceededError(
            f"distance enumeration needs q^k = {field.q ** G.rows} > budget {budget}"
        )
    mul, add, _, _ = _packed_tables(field)
    packed = np.array([[e.val for e in row] for row in G.entries], dtype=np.uint16)
    return int(kernels.min_nonzero_weight(packed, mul, add))


def dual_code(C: SkewGCCode) -> MatFq:
    """Generator matrix of the dual code, rank n - k.

    When f = g * h' for some h' (left division is exact) the dual basis is
    read off the independent columns of the stacked orbit matrix of h';
    otherwise the null space of G is returned with a warning.
    """
    n, k = C.n, C.k
    field = C.field
    hprime, r = left_divide(C.f, C.g)
    if r.is_zero():
        rows = []
        cur = tuple(hprime.coeffs_padded(n))
        for _ in range(n):
            rows.append(list(cur))
            cur = C.T(cur)
        P = MatFq(rows, field)
        # pivot columns of P are independent; they span the dual
        from .linalg import rref

        red, _ = rref(P)
        pivot_cols = []
        row_idx = 0
        for col in range(n):
            if row_idx < red.rows and not red.entries[row_idx][col].is_zero():
                pivot_cols.append(col)
                row_idx += 1
        H = MatFq([list(P.col(j)) for j in pivot_cols[: n - k]], field)
        if rank(H) != n - k:
            raise PreconditionError("internal error: dual basis is rank deficient")
        null_basis = MatFq(null_space(C.G), field)
        if not row_space_equal(H, null_basis):
            raise PreconditionError(
                "internal error: stacked-orbit dual disagrees with the null space"
            )
        return H
    warnings.warn(
        "f is not left-divisible by g; dual computed from the null space",
        stacklevel=2,
    )
    return MatFq(null_space(C.G), field)


def dual_pseudolinear_map(T: PseudoLinearMap) -> PseudoLinearMap:
    """The transformation preserving duals: (M^T twisted by theta^-1,
    theta^-1, theta^-1(beta))."""
    inv = T.theta.inverse()
    M = T.M.transpose().map_entries(inv)
    return PseudoLinearMap(M, inv, inv(T.beta))


@dataclass
class DecompComponent:
    factor: SkewPoly
    multiplicity: int
    power: SkewPoly
    space: MatFq
    kernel_is_linear: bool
    idempotent: MatFq

    @property
    def dimension(self) -> int:
        return self.space.rows


@dataclass
class Decomposition:
    f: SkewPoly
    factorization: Factorization
    components: list
    strict: bool

    def total_dimension(self) -> int:
        return sum(c.dimension for c in self.components)


def _span_of_kernel(h: SkewPoly, T: PseudoLinearMap):
    basis, linear = kernel_of_poly(h, T)
    if not basis:
        return MatFq.zeros(0, T.n, T.field), linear
    mat = row_basis(MatFq([list(v) for v in basis], T.field))
    return mat, linear


def decompose(f: SkewPoly, ctx: RingCtx | None = None) -> Decomposition:
    """Split GF(q)^n into the kernels of the factor powers of f under T_f.

    When f generates a two-sided ideal this is the invariant-factor
    decomposition with its Bezout idempotents.  When it does not but all
    coefficients of f lie in the fixed field, the commutative
    factorization over the fixed field is used instead; every claimed
    property of the output (dimensions, direct sum) is verified before
    returning.
    """
    if ctx is not None and f.ctx != ctx:
        raise PreconditionError("f does not belong to the given ring context")
    ctx = f.ctx
    n = f.degree
    T = transformation_of(f)
    strict = is_invariant(f)
    if strict:
        fact = invariant_factorization(f)
    else:
        fact = _fixed_subfield_factorization(f)

    components = []
    for i, (fi, alpha) in enumerate(fact.factors):
        power = fi**alpha
        space, linear = _span_of_kernel(power, T)
        fhat = fact.cofactor(i)
        if len(fact.factors) == 1:
            e_poly = ctx.one()
        else:
            d, _, b = lgcd_bezout(power, fhat)
            if d.degree != 0:
                raise NotInvariantError(
                    "factor powers are not left-coprime; no idempotent projectors"
                )
            e_poly = right_divide(b * fhat, f)[1]
        e_mat = flatten_additive_map(
            lambda v, p=e_poly: apply_poly_T(p, T, v), ctx.field, n
        )
        components.append(
            DecompComponent(fi, alpha, power, space, linear, e_mat)
        )

    if strict:
        for comp in components:
            if not comp.kernel_is_linear:
                raise NotInvariantError("invariant factor kernel failed linearity")
            if comp.dimension != comp.multiplicity * comp.factor.degree:
                raise NotInvariantError("kernel dimension mismatch")
    stacked = components[0].space
    for comp in components[1:]:
        stacked = stacked.stack(comp.space)
    if sum(c.dimension for c in components) != n or rank(stacked) != n:
        raise NotInvariantError(
            "component spans do not decompose the ambient space"
        )
    return Decomposition(f, fact, components, strict)


def _fixed_subfield_factorization(f: SkewPoly) -> Factorization:
    """Distinct-irreducible factorization of f inside the commutative
    subring of fixed-field-coefficient polynomials; the product identity
    is re-verified in the ambient skew ring."""
    ctx = f.ctx
    fixed = ctx.fixed_field_elements()
    fixed_vals = {e.val for e in fixed}
    if any(c.val not in fixed_vals for c in f.coeffs):
        raise NotInvariantError(
            "f neither generates a two-sided ideal nor has fixed-field "
            "coefficients; no decomposition is available"
        )
    from .skewpoly import _commutative_factor

    factors = _commutative_factor(f, fixed)
    factors.sort(key=lambda ga: ga[0].key())
    fact = Factorization(factors, f)
    if fact.expand() != f:
        raise NotInvariantError("fixed-field factor product failed to reproduce f")
    return fact


def code_component_split(C: SkewGCCode, D: Decomposition) -> list[MatFq]:
    """Intersections C_i = C with each component span; their direct sum is C."""
    if D.f != C.f:
        raise PreconditionError("decomposition belongs to a different modulus")
    parts = [intersect_row_spaces(C.G, comp.space) for comp in D.components]
    total = sum(p.rows for p in parts)
    stacked = None
    for p in parts:
        stacked = p if stacked is None else stacked.stack(p)
    if total != C.k or rank(stacked) != C.k:
        raise PreconditionError("component intersections do not sum to the code")
    return parts


def normalize_to_unit_constant(c: SkewPoly, C: SkewGCCode) -> SkewPoly:
    """The unit-constant, weight-preserving form of a nonzero codeword.

    Peels off the lowest monomial exactly: c = b0 * X^i0 * u with u a
    codeword of the same weight and constant coefficient 1.  (Multiplying
    by powers of the inverse of X does not reproduce this form in a
    twisted ring, since the correcting multiple of f need not stay in the
    left ideal; the exact factorization below always does.)
    """
    ctx = c.ctx
    if c.is_zero():
        raise PreconditionError("cannot normalize the zero codeword")
    if C.f.constant().is_zero():
        raise PreconditionError("the modulus must have a nonzero constant term")
    if not right_divide(c, C.g)[1].is_zero():
        raise PreconditionError("polynomial is not in the code ideal")
    i0 = next(i for i, coef in enumerate(c.coeffs) if not coef.is_zero())
    b0 = c.coeffs[i0]
    if i0 == 0:
        return c.scale_left(b0.inverse())
    factor = ctx.monomial(b0, i0)
    u, r = left_divide(c, factor)
    if not r.is_zero() or u.constant() != ctx.field.one():
        raise PreconditionError(
            "codeword does not split off its lowest monomial cleanly "
            "(possible only with a nonzero derivation)"
        )
    if not right_divide(u, C.g)[1].is_zero():
        raise PreconditionError(
            "normalized form left the code ideal (unexpected)"
        )
    return u


def code_record(
    C: SkewGCCode,
    d: int | None = None,
    mds: bool | None = None,
    constacyclic: list | None = None,
    g_literal: SkewPoly | None = None,
) -> dict:
    """JSON-ready record for one code."""
    field = C.field
    g = g_literal if g_literal is not None else C.g
    rec = {
        "q": field.q,
        "n": C.n,
        "k": C.k,
        "d": d,
        "g": [field.format_elem(c) for c in g.coeffs],
        "f": [field.format_elem(c) for c in C.f.coeffs],
        "theta_t": C.ctx.theta.t,
        "beta": field.format_elem(C.ctx.beta),
        "mds": mds,
        "constacyclic_a": (
            None
            if constacyclic is None
            else [field.format_elem(a) for a in constacyclic]
        ),
    }
    return rec
