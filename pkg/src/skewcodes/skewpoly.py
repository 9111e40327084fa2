"""The skew polynomial ring GF(q)[X; theta, delta] with delta = beta*(theta - id).

Multiplication follows X*a = theta(a)*X + delta(a).  The ring is left and
right Euclidean; both divisions, the left-ideal gcd with Bezout cofactors,
the least common left multiple, twisted norms/evaluation, invariance
testing and the factorization into invariant irreducible factors live
here.
"""

from __future__ import annotations

import re
from functools import reduce

from .errors import (
    FieldMismatchError,
    NotDivisorError,
    NotInvariantError,
    PreconditionError,
)
from .fields import Automorphism, Derivation, Field, FieldElem

NEG_INF = float("-inf")  # degree of the zero polynomial


class RingCtx:
    """Ring context: base field, automorphism and derivation parameter."""

    def __init__(self, field: Field, theta: Automorphism, beta: FieldElem):
        if theta.field != field or beta.field != field:
            raise FieldMismatchError("theta and beta must live in the given field")
        self.field = field
        self.theta = theta
        self.beta = beta
        self.delta = Derivation(beta, theta)
        self._theta_pows: dict[int, Automorphism] = {0: Automorphism(field, 0)}

    @classmethod
    def create(cls, field: Field, t: int = 0, beta=None) -> "RingCtx":
        b = field.zero() if beta is None else field.elem(beta)
        return cls(field, Automorphism(field, t), b)

    def theta_pow(self, k: int) -> Automorphism:
        e = (self.theta.t * k) % self.field.s
        got = self._theta_pows.get(e)
        if got is None:
            got = Automorphism(self.field, e)
            self._theta_pows[e] = got
        return got

    def has_zero_derivation(self) -> bool:
        return self.delta.is_zero()

    def is_commutative(self) -> bool:
        return self.theta.is_identity()

    def fixed_field_elements(self) -> list[FieldElem]:
        return self.theta.fixed_elements()

    def zero(self) -> "SkewPoly":
        return SkewPoly((), self)

    def one(self) -> "SkewPoly":
        return SkewPoly((self.field.one(),), self)

    def x(self) -> "SkewPoly":
        return SkewPoly((self.field.zero(), self.field.one()), self)

    def monomial(self, c, d: int) -> "SkewPoly":
        c = self.field.elem(c)
        if c.is_zero():
            return self.zero()
        return SkewPoly((self.field.zero(),) * d + (c,), self)

    def from_coeffs(self, coeffs) -> "SkewPoly":
        return SkewPoly(tuple(self.field.elem(c) for c in coeffs), self)

    def __eq__(self, other):
        return (
            isinstance(other, RingCtx)
            and other.field == self.field
            and other.theta.t == self.theta.t
            and other.beta == self.beta
        )

    def __hash__(self):
        return hash((self.field, self.theta.t, self.beta.val))

    def __repr__(self):
        return f"{self.field!r}[X; t={self.theta.t}, beta={self.beta!r}]"


class SkewPoly:
    """Skew polynomial in canonical form (no trailing zero coefficients)."""

    __slots__ = ("coeffs", "ctx")

    def __init__(self, coeffs, ctx: RingCtx):
        coeffs = tuple(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "ctx", ctx)

    def __setattr__(self, *a):
        raise AttributeError("SkewPoly is immutable")

    # -- basic queries ---------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ctx.field.one()

    def lc(self) -> FieldElem:
        if not self.coeffs:
            raise PreconditionError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant(self) -> FieldElem:
        return self.coeffs[0] if self.coeffs else self.ctx.field.zero()

    def coeff(self, i: int) -> FieldElem:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ctx.field.zero()

    def coeffs_padded(self, n: int) -> list[FieldElem]:
        if n < len(self.coeffs):
            raise PreconditionError(f"degree {self.degree} does not fit in length {n}")
        return [self.coeff(i) for i in range(n)]

    def weight(self) -> int:
        return sum(1 for c in self.coeffs if not c.is_zero())

    def key(self) -> tuple:
        """Deterministic sort key: (degree, packed coefficient vector)."""
        return (len(self.coeffs), tuple(c.val for c in self.coeffs))

    # -- arithmetic ------------------------------------------------------------

    def _check(self, other: "SkewPoly"):
        if not isinstance(other, SkewPoly) or other.ctx != self.ctx:
            raise FieldMismatchError("polynomials from different ring contexts")

    def __add__(self, other):
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return SkewPoly(out, self.ctx)

    def __neg__(self):
        return SkewPoly((-c for c in self.coeffs), self.ctx)

    def __sub__(self, other):
        return self + (-other)

    def scale_left(self, c) -> "SkewPoly":
        """c * p for a scalar c (coefficients multiplied on the left)."""
        c = self.ctx.field.elem(c)
        return SkewPoly((c * a for a in self.coeffs), self.ctx)

    def _x_shift(self, coeffs: list) -> list:
        # X * (sum c_j X^j)
        theta, delta = self.ctx.theta, self.ctx.delta
        z = self.ctx.field.zero()
        out = [z] * (len(coeffs) + 1)
        trivial = self.ctx.has_zero_derivation()
        for j, c in enumerate(coeffs):
            out[j + 1] = out[j + 1] + theta(c)
            if not trivial:
                out[j] = out[j] + delta(c)
        return out

    def __mul__(self, other):
        if isinstance(other, (FieldElem, int)):
            # right scalar: p * c, distinct from scale_left when theta != id
            return self * SkewPoly((self.ctx.field.elem(other),), self.ctx)
        self._check(other)
        if self.is_zero() or other.is_zero():
            return self.ctx.zero()
        z = self.ctx.field.zero()
        out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        cur = list(other.coeffs)
        for i, ai in enumerate(self.coeffs):
            if i > 0:
                cur = self._x_shift(cur)
            if not ai.is_zero():
                for j, c in enumerate(cur):
                    if not c.is_zero():
                        out[j] = out[j] + ai * c
        return SkewPoly(out, self.ctx)

    def __rmul__(self, other):
        if isinstance(other, (FieldElem, int)):
            return self.scale_left(other)
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise PreconditionError("negative powers are not defined in R")
        result = self.ctx.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def monic(self) -> "SkewPoly":
        if self.is_zero():
            raise PreconditionError("cannot normalize the zero polynomial")
        if self.is_monic():
            return self
        return self.scale_left(self.lc().inverse())

    def __eq__(self, other):
        return (
            isinstance(other, SkewPoly)
            and other.ctx == self.ctx
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((tuple(c.val for c in self.coeffs), self.ctx))

    # -- text ------------------------------------------------------------------

    def to_text(self, var: str = "X") -> str:
        if self.is_zero():
            return "0"
        field = self.ctx.field
        one = field.one()
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            cs = field.format_elem(c)
            if i == 0:
                terms.append(cs)
            else:
                xs = var if i == 1 else f"{var}^{i}"
                terms.append(xs if c == one else f"{cs}*{xs}")
        return " + ".join(terms)

    def __repr__(self):
        return self.to_text()


# -- division and ideals ---------------------------------------------------


def right_divide(a: SkewPoly, b: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """Quotient and remainder with a = q*b + r, deg r < deg b."""
    a._check(b)
    if b.is_zero():
        raise ZeroDivisionError("right division by the zero polynomial")
    ctx = a.ctx
    if a.degree < b.degree:
        return ctx.zero(), a
    m = b.degree
    dmax = len(a.coeffs) - 1 - m
    shifts = [list(b.coeffs)]
    for _ in range(dmax):
        shifts.append(a._x_shift(shifts[-1]))
    z = ctx.field.zero()
    r = list(a.coeffs)
    qc = [z] * (dmax + 1)
    while len(r) - 1 >= m:
        d = len(r) - 1 - m
        lead = shifts[d][-1]  # theta^d applied to lc(b)
        c = r[-1] * lead.inverse()
        qc[d] = c
        row = shifts[d]
        for j, t in enumerate(row):
            if not t.is_zero():
                r[j] = r[j] - c * t
        r.pop()
        while r and r[-1].is_zero():
            r.pop()
    return SkewPoly(qc, ctx), SkewPoly(r, ctx)


def left_divide(a: SkewPoly, b: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """Quotient and remainder with a = b*q + r, deg r < deg b."""
    a._check(b)
    if b.is_zero():
        raise ZeroDivisionError("left division by the zero polynomial")
    ctx = a.ctx
    if a.degree < b.degree:
        return ctx.zero(), a
    m = b.degree
    theta_m_inv = ctx.theta_pow(m).inverse()
    bm_inv = b.lc().inverse()
    z = ctx.field.zero()
    qc = [z] * (a.degree - m + 1)
    r = a
    while not r.is_zero() and r.degree >= m:
        d = r.degree - m
        c = theta_m_inv(bm_inv * r.lc())
        qc[d] = c
        r = r - b * ctx.monomial(c, d)
    return SkewPoly(qc, ctx), r


def right_divides(b: SkewPoly, a: SkewPoly) -> bool:
    """True when a = q*b exactly."""
    return right_divide(a, b)[1].is_zero()


def lgcd_bezout(a: SkewPoly, b: SkewPoly):
    """Monic d with Ra + Rb = Rd, plus u, v such that d = u*a + v*b."""
    if a.is_zero() and b.is_zero():
        raise PreconditionError("lgcd of two zero polynomials is undefined")
    ctx = a.ctx if not a.is_zero() else b.ctx
    r0, r1 = a, b
    u0, u1 = ctx.one(), ctx.zero()
    v0, v1 = ctx.zero(), ctx.one()
    while not r1.is_zero():
        q, r2 = right_divide(r0, r1)
        r0, r1 = r1, r2
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    c = r0.lc().inverse()
    return r0.scale_left(c), u0.scale_left(c), v0.scale_left(c)


def lgcd(a: SkewPoly, b: SkewPoly) -> SkewPoly:
    return lgcd_bezout(a, b)[0]


def lclm(a: SkewPoly, b: SkewPoly) -> SkewPoly:
    """Monic generator of the left ideal Ra intersect Rb (least left multiple)."""
    if a.is_zero() or b.is_zero():
        raise PreconditionError("lclm requires nonzero inputs")
    ctx = a.ctx
    r0, r1 = a, b
    u0, u1 = ctx.one(), ctx.zero()
    while not r1.is_zero():
        q, r2 = right_divide(r0, r1)
        r0, r1 = r1, r2
        u0, u1 = u1, u0 - q * u1
    return (u1 * a).monic()


def lclm_many(polys) -> SkewPoly:
    polys = list(polys)
    if not polys:
        raise PreconditionError("lclm of an empty collection")
    return reduce(lclm, polys)


# -- norms, evaluation, inverses --------------------------------------------


def norm(i: int, b: FieldElem, theta: Automorphism) -> FieldElem:
    """Twisted power N_i(b) = theta^(i-1)(b) * ... * theta(b) * b."""
    if i < 0:
        raise PreconditionError("norm index must be >= 0")
    acc = b.field.one()
    for _ in range(i):
        acc = theta(acc) * b
    return acc


def skew_eval(p: SkewPoly, b: FieldElem) -> FieldElem:
    """Evaluation as the remainder of right division by (X - b).

    Computed through the twisted power recursion G_0 = 1,
    G_{i+1} = theta(G_i)*b + delta(G_i); with a trivial derivation this
    is sum_i p_i N_i(b), and for theta = id plain evaluation.
    """
    if b.field != p.ctx.field:
        raise FieldMismatchError(
            "evaluation point lies outside the coefficient field; "
            "map the polynomial into the extension ring first"
        )
    theta, delta = p.ctx.theta, p.ctx.delta
    acc = b.field.zero()
    g = b.field.one()
    for i, c in enumerate(p.coeffs):
        if i > 0:
            g = theta(g) * b + delta(g)
        if not c.is_zero():
            acc = acc + c * g
    return acc


def map_to_ring(p: SkewPoly, target: RingCtx, embed) -> SkewPoly:
    """Push p through a field embedding into a compatible ring context."""
    return target.from_coeffs(embed(c) for c in p.coeffs)


def x_inverse_mod_f(f: SkewPoly):
    """Left and right inverses of X in R/Rf for monic f with f(0) != 0.

    Returns (alpha, beta_poly) with alpha*X = 1 and X*beta_poly = 1 in R/Rf.
    """
    ctx = f.ctx
    if not f.is_monic():
        raise PreconditionError("f must be monic")
    n = f.degree
    if n < 1 or f.constant().is_zero():
        raise PreconditionError("f must have degree >= 1 and nonzero constant term")
    one = ctx.one()
    c = -f.constant().inverse()
    lifted = one + f.scale_left(c)  # constant term cancels
    alpha = SkewPoly(lifted.coeffs[1:], ctx)

    # X * beta_poly = 1 + d*f for at most one scalar d; with a trivial
    # derivation d = -1/f(0) always works, with a nonzero derivation the
    # right inverse can fail to exist
    x = ctx.x()
    candidates = [c] + [e for e in ctx.field.elements() if e != c]
    for d in candidates:
        target = one + f.scale_left(d)
        q, r = left_divide(target, x)
        if r.is_zero():
            return alpha, q
    raise PreconditionError(
        "X has no right inverse modulo Rf: some scalar multiple of f is "
        "left-divisible by X"
    )


# -- invariance and factorization --------------------------------------------


def is_invariant(p: SkewPoly) -> bool:
    """True when Rp = pR (p generates a two-sided ideal)."""
    if p.is_zero():
        raise PreconditionError("the zero polynomial is not classified")
    if p.degree == 0:
        return True
    ctx = p.ctx
    if ctx.is_commutative():
        return True
    w = ctx.field.w
    x = ctx.x()
    # p*w and p*X in Rp gives pR <= Rp; w*p and X*p in pR gives Rp <= pR
    if not right_divide(p * SkewPoly((w,), ctx), p)[1].is_zero():
        return False
    if not right_divide(p * x, p)[1].is_zero():
        return False
    if not left_divide(p.scale_left(w), p)[1].is_zero():
        return False
    if not left_divide(x * p, p)[1].is_zero():
        return False
    return True


class Factorization:
    """Ordered factors (f_i, alpha_i) of an invariant polynomial."""

    def __init__(self, factors, f: SkewPoly):
        self.factors = list(factors)
        self.f = f

    def expand(self) -> SkewPoly:
        out = self.f.ctx.one()
        for g, a in self.factors:
            out = out * g**a
        return out

    def cofactor(self, i: int) -> SkewPoly:
        """Product of all factor powers except the i-th."""
        out = self.f.ctx.one()
        for j, (g, a) in enumerate(self.factors):
            if j != i:
                out = out * g**a
        return out

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def __repr__(self):
        inner = ", ".join(f"({g!r})^{a}" for g, a in self.factors)
        return f"Factorization[{inner}]"


def _commutative_factor(b: SkewPoly, allowed: list[FieldElem]):
    """Distinct-irreducible factorization of a commutative polynomial whose
    coefficients lie in ``allowed`` (a subfield), by trial division."""
    ctx = b.ctx
    factors = []
    rem = b
    while rem.degree > 0:
        hit = None
        for d in range(1, rem.degree + 1):
            if d > rem.degree:
                break
            for cand in _monic_candidates(ctx, allowed, d):
                if right_divides(cand, rem):
                    hit = cand
                    break
            if hit is not None:
                break
        mult = 0
        while True:
            q, r = right_divide(rem, hit)
            if not r.is_zero():
                break
            rem = q
            mult += 1
        factors.append((hit, mult))
    return factors


def _monic_candidates(ctx: RingCtx, allowed: list[FieldElem], d: int):
    # monic degree-d polynomials with coefficients in the allowed set
    base = len(allowed)
    one = ctx.field.one()
    for packed in range(base**d):
        coeffs = []
        v = packed
        for _ in range(d):
            coeffs.append(allowed[v % base])
            v //= base
        yield SkewPoly(tuple(coeffs) + (one,), ctx)


def _lift_fixed_factorization(f: SkewPoly) -> list:
    """Factor f in N(R) for a trivial derivation via f = X^t * b(X^k)."""
    ctx = f.ctx
    k = ctx.theta.order
    t = next(i for i, c in enumerate(f.coeffs) if not c.is_zero())
    fixed = ctx.fixed_field_elements()
    fixed_set = {e.val for e in fixed}
    b_coeffs = []
    for i in range(t, len(f.coeffs)):
        c = f.coeffs[i]
        if (i - t) % k == 0:
            if c.val not in fixed_set:
                raise NotInvariantError("coefficients do not lie in the fixed field")
            b_coeffs.append(c)
        elif not c.is_zero():
            raise NotInvariantError("exponent pattern incompatible with N(R)")
    b = SkewPoly(b_coeffs, ctx)  # commutative polynomial in Y = X^k
    factors = []
    if t > 0:
        factors.append((ctx.x(), t))
    for g, mult in _commutative_factor(b, fixed):
        lifted = [ctx.field.zero()] * (k * g.degree + 1)
        for i, c in enumerate(g.coeffs):
            lifted[k * i] = c
        factors.append((SkewPoly(lifted, ctx), mult))
    return factors


def _minimal_invariant_divisor(f: SkewPoly):
    ctx = f.ctx
    elems = ctx.field.elements()
    for d in range(1, f.degree):
        for cand in _monic_candidates(ctx, elems, d):
            if right_divides(cand, f) and is_invariant(cand):
                return cand
    return None


def _brute_invariant_factorization(f: SkewPoly) -> list:
    factors = []
    rem = f
    while rem.degree > 0:
        g = _minimal_invariant_divisor(rem)
        if g is None:
            factors.append((rem.monic(), 1))
            break
        mult = 0
        while True:
            q, r = right_divide(rem, g)
            if not r.is_zero():
                break
            rem = q
            mult += 1
        factors.append((g, mult))
    return factors


def invariant_factorization(f: SkewPoly) -> Factorization:
    """Factor a monic invariant f into distinct monic factors, each invariant
    and irreducible among invariant polynomials, with multiplicities."""
    if not f.is_monic():
        raise PreconditionError("f must be monic")
    if not is_invariant(f):
        raise NotInvariantError(
            "f does not generate a two-sided ideal (Rf != fR), so it has no "
            "factorization into invariant irreducible factors"
        )
    ctx = f.ctx
    if ctx.has_zero_derivation():
        factors = _lift_fixed_factorization(f)
    else:
        factors = _brute_invariant_factorization(f)
    factors.sort(key=lambda ga: ga[0].key())
    fact = Factorization(factors, f)
    if fact.expand() != f:
        raise NotInvariantError("factor product failed to reproduce f")
    return fact


# -- parsing -----------------------------------------------------------------


_TOKEN = re.compile(
    r"\s*(?:(?P<lpar>\()|(?P<rpar>\))|(?P<op>[-+*])|(?P<pow>\^)"
    r"|(?P<vec>\[[0-9,\s]*\])|(?P<name>[Xw])|(?P<int>\d+))"
)


def parse_poly(text: str, ctx: RingCtx) -> SkewPoly:
    """Parse either an ascending coefficient list or a symbolic expression.

    Accepted forms: "[1,0,w,1,1]" (elements in the field's text format) or
    expressions such as "X^6-1", "(X-5)(X-3)", "X^2 + w*X + w".
    """
    text = text.strip()
    if text.startswith("[") and _looks_like_coeff_list(text):
        return ctx.from_coeffs(
            ctx.field.parse_elem(part) for part in _split_top_level(text)
        )
    tokens = _tokenize(text)
    poly, pos = _parse_sum(tokens, 0, ctx)
    if pos != len(tokens):
        raise ValueError(f"trailing input in polynomial {text!r}")
    return poly


def _looks_like_coeff_list(text: str) -> bool:
    if not text.endswith("]"):
        return False
    # "[1,0,w,1]" is a coefficient list; "[1,1]" alone could be either but
    # the outer form without X or parentheses is treated as a list
    inner = text[1:-1]
    depth = 0
    for ch in inner:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                return False
    return depth == 0 and "X" not in text and "(" not in text


def _split_top_level(text: str) -> list[str]:
    inner = text.strip()[1:-1]
    parts, depth, cur = [], 0, []
    for ch in inner:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if cur or parts:
        parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


def _tokenize(text: str):
    tokens, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ValueError(f"cannot tokenize polynomial near {text[pos:]!r}")
        pos = m.end()
        kind = m.lastgroup
        tokens.append((kind, m.group(kind)))
    return tokens


def _parse_sum(tokens, pos, ctx):
    sign = 1
    if pos < len(tokens) and tokens[pos] == ("op", "-"):
        sign = -1
        pos += 1
    acc, pos = _parse_product(tokens, pos, ctx)
    if sign < 0:
        acc = -acc
    while pos < len(tokens) and tokens[pos][0] == "op" and tokens[pos][1] in "+-":
        op = tokens[pos][1]
        term, pos = _parse_product(tokens, pos + 1, ctx)
        acc = acc + term if op == "+" else acc - term
    return acc, pos


def _parse_product(tokens, pos, ctx):
    acc, pos = _parse_atom(tokens, pos, ctx)
    while pos < len(tokens):
        kind, val = tokens[pos]
        if kind == "op" and val == "*":
            term, pos = _parse_atom(tokens, pos + 1, ctx)
            acc = acc * term
        elif kind in ("lpar", "name", "int", "vec"):
            term, pos = _parse_atom(tokens, pos, ctx)
            acc = acc * term
        else:
            break
    return acc, pos


def _parse_atom(tokens, pos, ctx):
    if pos >= len(tokens):
        raise ValueError("unexpected end of polynomial expression")
    kind, val = tokens[pos]
    if kind == "lpar":
        inner, pos = _parse_sum(tokens, pos + 1, ctx)
        if pos >= len(tokens) or tokens[pos][0] != "rpar":
            raise ValueError("missing closing parenthesis")
        base, pos = inner, pos + 1
    elif kind == "name" and val == "X":
        base, pos = ctx.x(), pos + 1
    elif kind == "name" and val == "w":
        base, pos = SkewPoly((ctx.field.w,), ctx), pos + 1
    elif kind == "int":
        base, pos = SkewPoly((_int_elem(ctx.field, int(val)),), ctx), pos + 1
    elif kind == "vec":
        base, pos = SkewPoly((ctx.field.parse_elem(val),), ctx), pos + 1
    else:
        raise ValueError(f"unexpected token {val!r} in polynomial")
    if pos < len(tokens) and tokens[pos][0] == "pow":
        if pos + 1 >= len(tokens) or tokens[pos + 1][0] != "int":
            raise ValueError("exponent must be an integer")
        base = base ** int(tokens[pos + 1][1])
        pos += 2
    return base, pos


def _int_elem(field: Field, n: int) -> FieldElem:
    if field.s == 1:
        return field.elem(n % field.p)
    if 0 <= n < field.q:
        return field.elem(n)
    return field.elem(n % field.p)
