"""Dev scratch: generate Conway polynomials for p <= 7, s <= 4 from the definition.

Not shipped. Used once to freeze the bundled modulus table.
"""
import itertools
from math import gcd


def poly_mulmod(a, b, mod, p):
    # dense ascending coeff lists over F_p, reduce mod `mod` (monic)
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    n = len(mod) - 1
    while len(res) > n:
        top = res.pop()
        if top:
            for i in range(n):
                res[-n + i] = (res[-n + i] - top * mod[i]) % p if len(res) >= n else res
            # careful: align: res currently has len >= n
    return res


def reduce_mod(a, mod, p):
    a = a[:]
    n = len(mod) - 1
    while len(a) > n:
        top = a.pop()
        if top:
            for i in range(n):
                a[len(a) - n + i] = (a[len(a) - n + i] - top * mod[i]) % p
    while a and a[-1] == 0:
        a.pop()
    return a


def mulmod(a, b, mod, p):
    res = [0] * (len(a) + len(b) - 1 or 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    return reduce_mod(res, mod, p)


def powmod(a, e, mod, p):
    r = [1]
    b = a[:]
    while e:
        if e & 1:
            r = mulmod(r, b, mod, p)
        b = mulmod(b, b, mod, p)
        e >>= 1
    return r


def is_irreducible(f, p):
    # f monic ascending; trial: x^(p^i) == x check via gcd-free simple method
    n = len(f) - 1
    if n == 1:
        return True
    # check no roots for small, plus full check: f irreducible iff x^(p^n) = x mod f
    # and gcd(x^(p^(n/q)) - x, f) = 1 for prime divisors q of n
    x = [0, 1]
    xp = powmod(x, p ** n, f, p)
    if reduce_mod([(a - b) % p for a, b in itertools.zip_longest(xp, x, fillvalue=0)], f, p):
        return False
    def polygcd(a, b):
        a, b = a[:], b[:]
        while b:
            # a mod b
            a = a[:]
            while len(a) >= len(b):
                if a[-1]:
                    c = a[-1] * pow(b[-1], p - 2, p) % p
                    off = len(a) - len(b)
                    for i in range(len(b)):
                        a[off + i] = (a[off + i] - c * b[i]) % p
                while a and a[-1] == 0:
                    a.pop()
                if not a:
                    break
            a, b = b, a
        return a
    for q in set(factorint(n)):
        xq = powmod(x, p ** (n // q), f, p)
        d = [(a - b) % p for a, b in itertools.zip_longest(xq, x, fillvalue=0)]
        while d and d[-1] == 0:
            d.pop()
        g = polygcd(f[:], d)
        if len(g) - 1 > 0:
            return False
    return True


def factorint(n):
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def element_order(a, mod, p, qm1):
    # order of a in GF(p^n)* with qm1 = p^n - 1
    o = qm1
    for pr in set(factorint(qm1)):
        while o % pr == 0 and powmod(a, o // pr, mod, p) == [1]:
            o //= pr
    return o


def is_primitive(f, p):
    n = len(f) - 1
    qm1 = p ** n - 1
    return element_order([0, 1], f, p, qm1) == qm1


def conway(p, n, table):
    # candidates ordered by word (b_{n-1},...,b_0), b_i = (-1)^(n-i) a_i mod p
    best = None
    for word in itertools.product(range(p), repeat=n):
        # word = (b_{n-1}, ..., b_0)
        a = [0] * n
        for idx, b in enumerate(word):
            i = n - 1 - idx  # coefficient index
            sign = (-1) ** (n - i)
            a[i] = (sign * b) % p
        coeffs = [a[i] for i in range(n)] + [1]
        if coeffs[0] == 0:
            continue
        if not is_irreducible(coeffs, p):
            continue
        if not is_primitive(coeffs, p):
            continue
        # compatibility with subfields
        ok = True
        for m in range(1, n):
            if n % m == 0:
                cm = table[(p, m)]
                # root w of C_{p,n}: check C_{p,m}(w^((p^n-1)/(p^m-1))) == 0 mod f
                e = (p ** n - 1) // (p ** m - 1)
                we = powmod([0, 1], e, coeffs, p)
                # evaluate cm at we
                acc = [0]
                for c in reversed(cm):
                    acc = mulmod(acc, we, coeffs, p)
                    acc = [(x + y) % p for x, y in itertools.zip_longest(acc, [c], fillvalue=0)]
                    acc = reduce_mod(acc, coeffs, p)
                if acc:
                    ok = False
                    break
        if ok:
            best = coeffs
            break
    return best


REMEMBERED = {
    (2, 1): [1, 1], (2, 2): [1, 1, 1], (2, 3): [1, 1, 0, 1], (2, 4): [1, 1, 0, 0, 1],
    (3, 1): [1, 1], (3, 2): [2, 2, 1], (3, 3): [1, 2, 0, 1], (3, 4): [2, 0, 0, 2, 1],
    (5, 1): [3, 1], (5, 2): [2, 4, 1], (5, 3): [3, 3, 0, 1], (5, 4): [2, 4, 4, 0, 1],
    (7, 1): [4, 1], (7, 2): [3, 6, 1], (7, 3): [4, 0, 6, 1], (7, 4): [3, 4, 5, 0, 1],
}

if __name__ == "__main__":
    table = {}
    for p in (2, 3, 5, 7):
        for n in (1, 2, 3, 4):
            c = conway(p, n, table)
            table[(p, n)] = c
            mark = "OK " if REMEMBERED.get((p, n)) == c else "DIFF"
            print(f"C({p},{n}) = {c}   remembered={REMEMBERED.get((p,n))}   {mark}")
