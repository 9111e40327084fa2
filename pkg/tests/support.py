"""Shared test helpers: independent reference implementations and generators.

The commutative oracle works on plain coefficient lists with schoolbook
algorithms, deliberately sharing no polynomial code with the library.
"""

from __future__ import annotations

import itertools
import random

from skewcodes.fields import Field, FieldElem, field_create
from skewcodes.skewpoly import RingCtx, SkewPoly

# -- commutative polynomial oracle (coefficient lists, ascending) -------------


def c_trim(a: list) -> list:
    while a and a[-1].is_zero():
        a.pop()
    return a


def c_add(a: list, b: list, field: Field) -> list:
    n = max(len(a), len(b))
    z = field.zero()
    out = [(a[i] if i < len(a) else z) + (b[i] if i < len(b) else z) for i in range(n)]
    return c_trim(out)


def c_neg(a: list) -> list:
    return [-x for x in a]

def c_mul(a: list, b: list, field: Field) -> list:
    if not a or not b:
        return []
    z = field.zero()
    out = [z] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return c_trim(out)


def c_divmod(a: list, b: list, field: Field):
    if not b:
        raise ZeroDivisionError
    r = list(a)
    q = [field.zero()] * max(0, len(a) - len(b) + 1)
    inv = b[-1].inverse()
    while len(r) >= len(b):
        c = r[-1] * inv
        d = len(r) - len(b)
        q[d] = c
        for i, y in enumerate(b):
            r[d + i] = r[d + i] - c * y
        r.pop()
        c_trim(r)
    return q, c_trim(r)


def c_gcd(a: list, b: list, field: Field) -> list:
    a, b = list(a), list(b)
    while b:
        _, r = c_divmod(a, b, field)
        a, b = b, r
    if a:
        inv = a[-1].inverse()
        a = [inv * x for x in a]
    return a


def c_lcm(a: list, b: list, field: Field) -> list:
    g = c_gcd(a, b, field)
    q, r = c_divmod(a, g, field)
    assert not r
    out = c_mul(q, b, field)
    if out:
        inv = out[-1].inverse()
        out = [inv * x for x in out]
    return out


def c_eval(a: list, x: FieldElem) -> FieldElem:
    acc = x.field.zero()
    for c in reversed(a):
        acc = acc * x + c
    return acc


def as_oracle(p: SkewPoly) -> list:
    return list(p.coeffs)


def from_oracle(coeffs: list, ctx: RingCtx) -> SkewPoly:
    return SkewPoly(coeffs, ctx)


# -- random generators ---------------------------------------------------------


def rand_elem(rng: random.Random, field: Field) -> FieldElem:
    return field.elem(rng.randrange(field.q))


def rand_nonzero(rng: random.Random, field: Field) -> FieldElem:
    return field.elem(rng.randrange(1, field.q))


def rand_poly(rng: random.Random, ctx: RingCtx, max_deg: int, nonzero=False) -> SkewPoly:
    deg = rng.randrange(0, max_deg + 1)
    coeffs = [rand_elem(rng, ctx.field) for _ in range(deg + 1)]
    p = SkewPoly(coeffs, ctx)
    if nonzero and p.is_zero():
        return SkewPoly([ctx.field.one()], ctx)
    return p


def rand_monic(rng: random.Random, ctx: RingCtx, deg: int) -> SkewPoly:
    coeffs = [rand_elem(rng, ctx.field) for _ in range(deg)] + [ctx.field.one()]
    return SkewPoly(coeffs, ctx)


def rand_vector(rng: random.Random, field: Field, n: int) -> tuple:
    return tuple(rand_elem(rng, field) for _ in range(n))


def all_monic(ctx: RingCtx, deg: int):
    """Every monic polynomial of exact degree deg."""
    field = ctx.field
    for packed in itertools.product(range(field.q), repeat=deg):
        yield SkewPoly(
            [field.elem(v) for v in packed] + [field.one()], ctx
        )


def standard_ctxs():
    """The contexts the randomized suites cycle through."""
    F4 = field_create(2, 2)
    F7 = field_create(7, 1)
    F8 = field_create(2, 3)
    return [
        RingCtx.create(F7, t=0, beta=0),
        RingCtx.create(F4, t=1, beta=0),
        RingCtx.create(F4, t=1, beta=1),
        RingCtx.create(F4, t=1, beta=F4.w),
        RingCtx.create(F8, t=1, beta=0),
        RingCtx.create(F8, t=2, beta=F8.w),
    ]


def invariant_poly_sample(rng: random.Random, ctx: RingCtx, max_parts=2, max_deg=2):
    """A random element of N(R): a product of b_i((X + beta)^k) powers and
    an (X + beta)^t factor, built through the substitution Z = X + beta
    that removes the derivation."""
    field = ctx.field
    k = ctx.theta.order
    z = ctx.x() + SkewPoly((ctx.beta,), ctx)
    zk = z**k
    fixed = ctx.fixed_field_elements()
    out = ctx.one()
    t = rng.randrange(0, 2)
    out = out * z**t
    for _ in range(rng.randrange(1, max_parts + 1)):
        deg = rng.randrange(1, max_deg + 1)
        coeffs = [rng.choice(fixed) for _ in range(deg)] + [field.one()]
        # evaluate b(z^k) by Horner; everything commutes in this subring
        part = SkewPoly((coeffs[-1],), ctx)
        for c in reversed(coeffs[:-1]):
            part = part * zk + SkewPoly((c,), ctx)
        out = out * part
    return out
