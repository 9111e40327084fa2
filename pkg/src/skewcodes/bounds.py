"""BCH-style designed-distance machinery and the MDS generator search.

A certificate witnesses the hypothesis pattern: the generator vanishes on
a geometric grid of powers of beta while the twisted norms of beta^(c_j)
avoid 1; the code distance is then at least delta + sum(s_k).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from math import gcd

from .codes import (
    DEFAULT_BUDGET,
    SkewGCCode,
    code_record,
    min_weight_of_matrix,
)
from .errors import BudgetExceededError, PreconditionError
from .fields import Automorphism, Field, FieldElem, element_order
from .linalg import MatFq
from .skewpoly import (
    RingCtx,
    SkewPoly,
    lclm_many,
    map_to_ring,
    norm,
    right_divide,
    skew_eval,
)

GRID_BUDGET = 1 << 16


@dataclass(frozen=True)
class BoundCertificate:
    beta: FieldElem
    l: int
    cs: tuple
    ss: tuple
    delta: int
    claimed_bound: int

    def __post_init__(self):
        if all(c == 0 for c in self.cs):
            raise PreconditionError("at least one direction step must be nonzero")
        if self.claimed_bound != self.delta + sum(self.ss):
            raise PreconditionError("claimed bound must equal delta + sum(s_k)")


@dataclass(frozen=True)
class BoundFailure:
    condition: str  # "root" or "norm"
    detail: str
    index: tuple

    def __bool__(self):
        return False


def _bound_ring(C: SkewGCCode, beta: FieldElem, embedding):
    """Generator polynomial and automorphism moved to beta's field."""
    if not C.ctx.has_zero_derivation():
        raise PreconditionError("distance bounds require a trivial derivation")
    if beta.is_zero():
        raise PreconditionError("beta must be nonzero")
    if beta.field == C.field:
        return C.g, Automorphism(C.field, C.ctx.theta.t)
    if embedding is None:
        raise PreconditionError(
            "beta lies in an extension; pass the embedding from extend_field"
        )
    ext = beta.field
    theta_ext = Automorphism(ext, C.ctx.theta.t)
    ctx_ext = RingCtx(ext, theta_ext, ext.zero())
    return map_to_ring(C.g, ctx_ext, embedding), theta_ext


def verify_bound_general(
    C: SkewGCCode,
    beta: FieldElem,
    l: int,
    cs,
    ss,
    delta: int,
    embedding=None,
):
    """Check the root grid and norm hypotheses; return a certificate for
    d >= delta + sum(s_k) or the first violated condition."""
    cs = tuple(int(c) for c in cs)
    ss = tuple(int(s) for s in ss)
    if len(cs) < 1 or len(ss) != len(cs) - 1:
        raise PreconditionError("need r >= 1 direction steps and r - 1 widths")
    if any(c <= 0 for c in cs):
        raise PreconditionError("direction steps must be positive")
    if any(s < 0 for s in ss):
        raise PreconditionError("grid widths must be >= 0")
    if delta < 2:
        raise PreconditionError("delta must be >= 2")
    if l < 0:
        raise PreconditionError("l must be >= 0")
    g_ext, theta_ext = _bound_ring(C, beta, embedding)
    ranges = [range(delta - 1)] + [range(s + 1) for s in ss]
    grid_size = 1
    for r in ranges:
        grid_size *= len(r)
    if grid_size > GRID_BUDGET:
        raise BudgetExceededError(f"root grid has {grid_size} points > {GRID_BUDGET}")

    one = beta.field.one()
    for point in itertools.product(*ranges):
        e = l + sum(i * c for i, c in zip(point, cs))
        if not skew_eval(g_ext, beta**e).is_zero():
            return BoundFailure(
                condition="root",
                detail=f"g(beta^{e}) != 0 at grid point {point}",
                index=point,
            )
    n = C.n
    for j, c in enumerate(cs, start=1):
        bc = beta**c
        for i in range(1, n):
            if norm(i, bc, theta_ext) == one:
                return BoundFailure(
                    condition="norm",
                    detail=f"N_{i}(beta^{c}) = 1 for direction {j}",
                    index=(i, j),
                )
    return BoundCertificate(
        beta=beta, l=l, cs=cs, ss=ss, delta=delta,
        claimed_bound=delta + sum(ss),
    )


def verify_bound1(
    C: SkewGCCode, beta: FieldElem, l: int, c: int, delta: int, embedding=None
):
    """Single-direction certificate: d >= delta."""
    return verify_bound_general(C, beta, l, (c,), (), delta, embedding)


def norm_condition_by_order(beta: FieldElem, c: int, n: int) -> bool:
    """For theta = id: ord(beta) >= n with gcd(ord(beta), c) = 1 forces
    beta^(i*c) != 1 for i = 1..n-1."""
    o = element_order(beta)
    return o >= n and gcd(o, c) == 1


def mds_generator(
    field: Field,
    theta: Automorphism,
    beta_elem: FieldElem,
    l: int,
    cs,
    ss,
    n: int,
    delta: int,
) -> SkewPoly:
    """Least left multiple of the linear factors over the designed grid;
    any code it generates (inside a modulus it divides) is MDS."""
    if field.q < n + 1:
        raise PreconditionError("the MDS construction needs q >= n + 1")
    if beta_elem.field != field or beta_elem.is_zero():
        raise PreconditionError("beta must be a nonzero element of the field")
    cs = tuple(int(c) for c in cs)
    ss = tuple(int(s) for s in ss)
    if len(cs) < 1 or len(ss) != len(cs) - 1 or any(c <= 0 for c in cs):
        raise PreconditionError("need positive direction steps and r - 1 widths")
    if delta < 0:
        raise PreconditionError("delta must be >= 0")
    one = field.one()
    for c in cs:
        bc = beta_elem**c
        for i in range(1, n):
            if norm(i, bc, theta) == one:
                raise PreconditionError(
                    f"norm condition fails: N_{i}(beta^{c}) = 1"
                )
    ctx = RingCtx(field, theta, field.zero())
    x = ctx.x()
    ranges = [range(delta + 1)] + [range(s + 1) for s in ss]
    factors = []
    seen = set()
    for point in itertools.product(*ranges):
        e = l + sum(i * c for i, c in zip(point, cs))
        root = beta_elem**e
        if root.val in seen:
            continue
        seen.add(root.val)
        factors.append(x - SkewPoly((root,), ctx))
    return lclm_many(factors)


def constacyclic_moduli(g: SkewPoly, n: int) -> list[FieldElem]:
    """All a with g right-dividing X^n - a."""
    ctx = g.ctx
    if g.degree > n:
        raise PreconditionError("deg g must not exceed n")
    out = []
    for a in ctx.field.nonzero_elements():
        f = ctx.from_coeffs([-a] + [ctx.field.zero()] * (n - 1) + [ctx.field.one()])
        if right_divide(f, g)[1].is_zero():
            out.append(a)
    out.sort(key=lambda e: e.val)
    return out


@dataclass
class MdsRow:
    n: int
    k: int
    d: int
    g: SkewPoly
    constacyclic: list
    provenance: dict = dc_field(default_factory=dict)

    def is_mds(self) -> bool:
        return self.d == self.n - self.k + 1

    def record(self) -> dict:
        field = self.g.ctx.field
        return {
            "q": field.q,
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "g": [field.format_elem(c) for c in self.g.coeffs],
            "f": None,
            "theta_t": self.g.ctx.theta.t,
            "beta": field.format_elem(self.g.ctx.beta),
            "mds": self.is_mds(),
            "constacyclic_a": [field.format_elem(a) for a in self.constacyclic],
            "provenance": self.provenance,
        }


def _sweep_base(field: Field) -> FieldElem:
    # the ambient generator the search programs raise to powers: the
    # defining root for extension fields, the ring generator 1 for prime
    # fields (GF(p).1 = 1 in the system the tables were produced with)
    return field.w if field.s > 1 else field.one()


def mds_search(
    field: Field, n: int, theta: Automorphism | None = None,
    budget: int = DEFAULT_BUDGET, distance=None,
) -> list[MdsRow]:
    """Sweep geometric root grids and report every resulting code with its
    exact minimum distance and constacyclic moduli.

    ``distance`` may override the distance computation with a batch
    callable (list of generator matrices -> list of distances), letting a
    caller parallelize the sweep.
    """
    q = field.q
    if not 2 <= n <= q - 1:
        raise PreconditionError(f"need 2 <= n <= q - 1 = {q - 1}, got n = {n}")
    if theta is None:
        theta = Automorphism(field, 0)
    ctx = RingCtx(field, theta, field.zero())
    x = ctx.x()
    base = _sweep_base(field)

    steps = [c for c in range(1, q - 1) if gcd(c, q - 1) == 1]
    root_lists = {}
    for c in steps:
        for l in range(q - 1):
            for k in range(1, n):
                roots = tuple((base ** (l + c * i)).val for i in range(n - k))
                root_lists.setdefault(roots, (c, l))

    by_poly = {}
    for roots, (c, l) in sorted(root_lists.items()):
        factors = [x - SkewPoly((field.elem(r),), ctx) for r in roots]
        if theta.is_identity():
            g = ctx.one()
            for fac in factors:
                g = g * fac
        else:
            g = lclm_many(factors)
        if not 1 <= g.degree <= n - 1:
            continue
        key = g.key()
        if key not in by_poly:
            by_poly[key] = (g, {"c": c, "l": l, "roots": list(roots)})

    entries = []
    for g, prov in by_poly.values():
        k = n - g.degree
        mat_rows = []
        for i in range(k):
            shifted = ctx.monomial(1, i) * g
            mat_rows.append(shifted.coeffs_padded(n))
        entries.append((g, prov, k, MatFq(mat_rows, field)))
    if distance is None:
        dists = [min_weight_of_matrix(G, budget) for _, _, _, G in entries]
    else:
        dists = distance([G for _, _, _, G in entries])
    rows = [
        MdsRow(
            n=n, k=k, d=d, g=g,
            constacyclic=constacyclic_moduli(g, n),
            provenance=prov,
        )
        for (g, prov, k, _), d in zip(entries, dists)
    ]
    rows.sort(key=lambda r: (r.k, r.g.key()))
    return rows
