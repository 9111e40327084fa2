"""Exact arithmetic in GF(p^s), its automorphisms and theta-derivations.

Elements are stored as integers packing the polynomial-basis coefficient
vector in base p (c0 + c1*p + ... + c_{s-1}*p^{s-1}).  Each field carries
exp/log tables for a primitive element, plus dense q x q add/mul tables
for small q so searches and the compiled kernels can work on flat arrays.
"""

from __future__ import annotations

import functools
from math import gcd

import numpy as np

from ._conway import CONWAY
from .errors import FieldMismatchError, PreconditionError

# dense q x q tables are built below this size; kernels require them
DENSE_TABLE_LIMIT = 1024

Q_LIMIT = 1 << 16


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _digits(val: int, p: int, s: int) -> tuple[int, ...]:
    out = []
    for _ in range(s):
        out.append(val % p)
        val //= p
    return tuple(out)


def _pack(digits, p: int) -> int:
    val = 0
    for d in reversed(list(digits)):
        val = val * p + d
    return val


class Field:
    """GF(p^s) with a fixed monic irreducible modulus over GF(p).

    ``w`` is the distinguished primitive element: the residue class of X
    for extension fields (when that class generates the multiplicative
    group, which holds for all bundled moduli), the smallest primitive
    root for prime fields.
    """

    def __init__(self, p: int, s: int, modulus):
        if not _is_prime(p):
            raise PreconditionError(f"p = {p} is not prime")
        if s < 1:
            raise PreconditionError(f"extension degree must be >= 1, got {s}")
        q = p**s
        if q > Q_LIMIT:
            raise PreconditionError(f"q = {q} exceeds the supported limit 2^16")
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != s + 1 or modulus[-1] != 1:
            raise PreconditionError("modulus must be monic of degree s")
        self.p = p
        self.s = s
        self.q = q
        self.modulus = modulus
        if s > 1 and not self._modulus_irreducible():
            raise PreconditionError(f"modulus {list(modulus)} is reducible over GF({p})")
        self._build_tables()

    # -- construction helpers -------------------------------------------------

    def _raw_mul(self, a: int, b: int) -> int:
        # packed polynomial product reduced mod the modulus; used only to
        # bootstrap the exp/log tables
        p, s = self.p, self.s
        da, db = _digits(a, p, s), _digits(b, p, s)
        prod = [0] * (2 * s - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        for i in range(2 * s - 2, s - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(s):
                    prod[i - s + j] = (prod[i - s + j] - c * self.modulus[j]) % p
        return _pack(prod[:s], p)

    def _modulus_irreducible(self) -> bool:
        # trial division by every monic polynomial of degree <= s/2
        p, s = self.p, self.s
        for d in range(1, s // 2 + 1):
            for packed in range(p**d):
                cand = list(_digits(packed, p, d)) + [1]
                rem = list(self.modulus)
                while len(rem) - 1 >= d:
                    top = rem[-1]
                    if top:
                        off = len(rem) - 1 - d
                        for j, c in enumerate(cand):
                            rem[off + j] = (rem[off + j] - top * c) % p
                    rem.pop()
                if not any(rem):
                    return False
        return True

    def _build_tables(self):
        p, s, q = self.p, self.s, self.q
        if s == 1:
            gen = None
            for g in range(2, p):
                if self._order_of_int(g) == p - 1:
                    gen = g
                    break
            if gen is None:
                gen = 1  # GF(2): the trivial group
        else:
            gen = p  # the residue class of X
            if self._order_of_int(gen) != q - 1:
                gen = next(
                    g for g in range(2, q) if self._order_of_int(g) == q - 1
                )
        exp = np.zeros(q - 1, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._raw_mul(x, gen)
        if x != 1:
            raise PreconditionError("internal error: generator does not have full order")
        self._exp = exp
        self._log = log
        self._gen = gen
        if q <= DENSE_TABLE_LIMIT:
            idx = np.arange(q)
            la, lb = np.meshgrid(log, log, indexing="ij")
            mul = exp[(la + lb) % (q - 1)]
            mul[0, :] = 0
            mul[:, 0] = 0
            dig = np.zeros((q, s), dtype=np.int64)
            v = idx.copy()
            for j in range(s):
                dig[:, j] = v % p
                v //= p
            summed = (dig[:, None, :] + dig[None, :, :]) % p
            add = np.zeros((q, q), dtype=np.int64)
            for j in range(s - 1, -1, -1):
                add = add * p + summed[:, :, j]
            self.mul_table = np.ascontiguousarray(mul, dtype=np.uint16)
            self.add_table = np.ascontiguousarray(add, dtype=np.uint16)
        else:
            self.mul_table = None
            self.add_table = None

    def _order_of_int(self, a: int) -> int:
        # multiplicative order via repeated raw multiplication
        x = a
        n = 1
        while x != 1:
            x = self._raw_mul(x, a)
            n += 1
            if n > self.q:
                return 0
        return n

    # -- scalar arithmetic on packed values -----------------------------------

    def add_val(self, a: int, b: int) -> int:
        if self.add_table is not None:
            return int(self.add_table[a, b])
        p = self.p
        da, db = _digits(a, p, self.s), _digits(b, p, self.s)
        return _pack(((x + y) % p for x, y in zip(da, db)), p)

    def neg_val(self, a: int) -> int:
        p = self.p
        return _pack(((-x) % p for x in _digits(a, p, self.s)), p)

    def mul_val(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self._exp[(self._log[a] + self._log[b]) % (self.q - 1)])

    def inv_val(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return int(self._exp[(-self._log[a]) % (self.q - 1)])

    def pow_val(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("zero has no multiplicative inverse")
            return 0
        return int(self._exp[(self._log[a] * e) % (self.q - 1)])

    # -- element API -----------------------------------------------------------

    def elem(self, val) -> "FieldElem":
        if isinstance(val, FieldElem):
            if val.field is not self:
                raise FieldMismatchError("element belongs to a different field")
            return val
        return FieldElem(int(val) % self.q if self.s == 1 else int(val), self)

    def zero(self) -> "FieldElem":
        return FieldElem(0, self)

    def one(self) -> "FieldElem":
        return FieldElem(1, self)

    @property
    def w(self) -> "FieldElem":
        return FieldElem(self._gen, self)

    def elements(self):
        return [FieldElem(v, self) for v in range(self.q)]

    def nonzero_elements(self):
        return [FieldElem(v, self) for v in range(1, self.q)]

    def from_digits(self, digits) -> "FieldElem":
        digits = list(digits)
        if len(digits) > self.s:
            raise PreconditionError("too many coefficients for this field")
        digits += [0] * (self.s - len(digits))
        return FieldElem(_pack((d % self.p for d in digits), self.p), self)

    # -- text format -----------------------------------------------------------

    def format_elem(self, a: "FieldElem") -> str:
        if self.s == 1:
            return str(a.val)
        if a.val == 0:
            return "0"
        k = int(self._log[a.val])
        if k == 0:
            return "1"
        if k == 1:
            return "w"
        return f"w^{k}"

    def parse_elem(self, text: str) -> "FieldElem":
        text = text.strip()
        if text.startswith("["):
            if not text.endswith("]"):
                raise ValueError(f"unbalanced brackets in element {text!r}")
            parts = [t for t in text[1:-1].split(",") if t.strip()]
            return self.from_digits(int(t) for t in parts)
        if text == "w":
            return self.w
        if text.startswith("w^"):
            return self.w ** int(text[2:])
        if text in ("0", "1"):
            return FieldElem(int(text), self)
        val = int(text)
        if self.s == 1:
            return FieldElem(val % self.p, self)
        raise ValueError(
            f"bare integer {text!r} is ambiguous in GF({self.q}); "
            "use w^k or [c0,c1,...] notation"
        )

    def __repr__(self):
        return f"GF({self.q})"

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and other.p == self.p
            and other.s == self.s
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash((self.p, self.s, self.modulus))


class FieldElem:
    """Immutable element of a :class:`Field`."""

    __slots__ = ("val", "field")

    def __init__(self, val: int, field: Field):
        if not 0 <= val < field.q:
            raise PreconditionError(f"packed value {val} out of range for {field!r}")
        object.__setattr__(self, "val", val)
        object.__setattr__(self, "field", field)

    def __setattr__(self, *a):
        raise AttributeError("FieldElem is immutable")

    def _coerce(self, other) -> "FieldElem":
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise FieldMismatchError("elements from different fields")
            return other
        if isinstance(other, int):
            return self.field.elem(other % self.field.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.field.add_val(self.val, o.val), self.field)

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(self.field.neg_val(self.val), self.field)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.field.mul_val(self.val, o.val), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __pow__(self, e: int):
        return FieldElem(self.field.pow_val(self.val, e), self.field)

    def inverse(self) -> "FieldElem":
        return FieldElem(self.field.inv_val(self.val), self.field)

    def is_zero(self) -> bool:
        return self.val == 0

    def digits(self) -> tuple[int, ...]:
        return _digits(self.val, self.field.p, self.field.s)

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.val == other.val and self.field == other.field
        if isinstance(other, int):
            return self == self.field.elem(other % self.field.p)
        return NotImplemented

    def __hash__(self):
        return hash((self.val, self.field.q))

    def __repr__(self):
        return self.field.format_elem(self)


class Automorphism:
    """Field automorphism a -> a^(p^t) for a fixed exponent 0 <= t < s."""

    def __init__(self, field: Field, t: int):
        self.field = field
        self.t = t % field.s
        q = field.q
        table = np.zeros(q, dtype=np.int64)
        pt = field.p**self.t
        for v in range(1, q):
            table[v] = field._exp[(field._log[v] * pt) % (q - 1)]
        self._table = table

    @property
    def order(self) -> int:
        return self.field.s // gcd(self.field.s, self.t)

    def is_identity(self) -> bool:
        return self.t == 0

    def __call__(self, a: FieldElem) -> FieldElem:
        if a.field != self.field:
            raise FieldMismatchError("element from a different field")
        return FieldElem(int(self._table[a.val]), self.field)

    def apply_val(self, v: int) -> int:
        return int(self._table[v])

    def iterate(self, k: int) -> "Automorphism":
        """theta^k as an automorphism."""
        return Automorphism(self.field, (self.t * k) % self.field.s)

    def inverse(self) -> "Automorphism":
        return Automorphism(self.field, (-self.t) % self.field.s)

    def fixed_elements(self) -> list[FieldElem]:
        return [
            FieldElem(v, self.field)
            for v in range(self.field.q)
            if int(self._table[v]) == v
        ]

    def table(self) -> np.ndarray:
        return self._table.astype(np.uint16)

    def __eq__(self, other):
        return (
            isinstance(other, Automorphism)
            and other.field == self.field
            and other.t == self.t
        )

    def __hash__(self):
        return hash((self.field, self.t))

    def __repr__(self):
        if self.t == 0:
            return f"id on {self.field!r}"
        return f"a -> a^{self.field.p ** self.t} on {self.field!r}"


class Derivation:
    """The inner theta-derivation a -> beta * (theta(a) - a)."""

    def __init__(self, beta: FieldElem, theta: Automorphism):
        if beta.field != theta.field:
            raise FieldMismatchError("beta must live in theta's field")
        self.beta = beta
        self.theta = theta

    def is_zero(self) -> bool:
        return self.beta.is_zero() or self.theta.is_identity()

    def __call__(self, a: FieldElem) -> FieldElem:
        return self.beta * (self.theta(a) - a)

    def __repr__(self):
        return f"delta(beta={self.beta!r}) for {self.theta!r}"


# -- module-level operations ---------------------------------------------------


@functools.lru_cache(maxsize=None)
def _cached_field(p: int, s: int, modulus: tuple) -> Field:
    return Field(p, s, modulus)


def field_create(p: int, s: int, modulus=None) -> Field:
    """Build GF(p^s); the bundled Conway modulus is used when none is given."""
    if not _is_prime(p):
        raise PreconditionError(f"p = {p} is not prime")
    if modulus is None:
        try:
            modulus = CONWAY[(p, s)]
        except KeyError:
            raise PreconditionError(
                f"no bundled modulus for GF({p}^{s}); pass one explicitly"
            ) from None
    return _cached_field(p, s, tuple(int(c) for c in modulus))


def field_from_order(q: int, modulus=None) -> Field:
    """Build GF(q) from a prime power q."""
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        p = q
    s = 0
    n = q
    while n % p == 0 and n > 1:
        n //= p
        s += 1
    if n != 1 or s == 0:
        raise PreconditionError(f"q = {q} is not a prime power")
    return field_create(p, s, modulus)


def apply_automorphism(theta: Automorphism, a: FieldElem) -> FieldElem:
    return theta(a)


def apply_derivation(delta: Derivation, a: FieldElem) -> FieldElem:
    return delta(a)


def element_order(a: FieldElem) -> int:
    """Multiplicative order of a nonzero element; divides q - 1."""
    if a.is_zero():
        raise PreconditionError("the zero element has no multiplicative order")
    qm1 = a.field.q - 1
    k = int(a.field._log[a.val])
    return qm1 // gcd(qm1, k)


def extend_field(base: Field, m: int):
    """GF(p^(s*m)) together with the embedding of ``base`` into it.

    The embedding sends the residue class of X to a root of the base
    modulus chosen compatibly with the power map w -> w^((Q-1)/(q-1)),
    so Conway-defined fields nest the way Magma's do.
    """
    if m < 1:
        raise PreconditionError("extension degree must be >= 1")
    if m == 1:
        return base, lambda a: a
    ext = field_create(base.p, base.s * m)

    if base.s > 1:
        root = ext.w ** ((ext.q - 1) // (base.q - 1))
        if not _eval_base_modulus(base, root).is_zero():
            root = next(
                FieldElem(v, ext)
                for v in range(1, ext.q)
                if _eval_base_modulus(base, FieldElem(v, ext)).is_zero()
            )
    else:
        # prime subfield: digit 0 of a packed value already means c * 1
        root = ext.one()

    images = [ext.zero()] * base.q
    for v in range(base.q):
        acc = ext.zero()
        for j, d in enumerate(_digits(v, base.p, base.s)):
            if d:
                acc = acc + ext.elem(d) * root**j
        images[v] = acc

    def embed(a: FieldElem) -> FieldElem:
        if a.field != base:
            raise FieldMismatchError("element not in the base field")
        return images[a.val]

    return ext, embed


def _sum_of_ones(ext: Field, n: int) -> FieldElem:
    acc = ext.zero()
    one = ext.one()
    for _ in range(n):
        acc = acc + one
    return acc


def _eval_base_modulus(base: Field, x: FieldElem) -> FieldElem:
    acc = x.field.zero()
    for c in reversed(base.modulus):
        acc = acc * x + _sum_of_ones(x.field, c)
    return acc
