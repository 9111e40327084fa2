"""Pure-Python fallback for the enumeration kernels.

Same contracts as the compiled module: table-driven arithmetic on packed
element values (uint16).  Codeword enumeration is vectorized with numpy;
the divisor scan runs the skew division on plain int lists.
"""

from __future__ import annotations

import numpy as np

IMPL = "python"

_CHUNK = 1 << 14


def min_nonzero_weight(gen: np.ndarray, mul: np.ndarray, add: np.ndarray) -> int:
    """Minimum Hamming weight over the nonzero codewords spanned by the
    rows of ``gen`` (a k x n matrix of packed field values).  Zero
    codewords reached by nonzero messages (rank-deficient input) do not
    count; n + 1 is returned if every codeword is zero."""
    gen = np.asarray(gen, dtype=np.int64)
    k, n = gen.shape
    q = mul.shape[0]
    total = q**k - 1
    best = n + 1
    mul = np.asarray(mul, dtype=np.int64)
    add = np.asarray(add, dtype=np.int64)
    start = 1  # skip the zero message
    while start <= total:
        stop = min(start + _CHUNK, total + 1)
        idx = np.arange(start, stop, dtype=np.int64)
        cw = np.zeros((idx.size, n), dtype=np.int64)
        digits = idx
        for j in range(k):
            dj = digits % q
            digits = digits // q
            nz = dj != 0
            if nz.any():
                contrib = mul[dj[:, None], gen[j][None, :]]
                cw = add[cw, contrib]
        weights = np.count_nonzero(cw, axis=1)
        nonzero = weights[weights > 0]
        if nonzero.size:
            m = int(nonzero.min())
            if m < best:
                best = m
                if best <= 1:
                    return best
        start = stop
    return best


def _skew_shift(coeffs: list, theta: list, delta: list, add: list) -> list:
    """X * (sum c_j X^j) on packed values."""
    out = [0] * (len(coeffs) + 1)
    for j, c in enumerate(coeffs):
        out[j + 1] = add[out[j + 1]][theta[c]]
        d = delta[c]
        if d:
            out[j] = add[out[j]][d]
    return out


def _rdiv_is_exact(f, g, mul, add, neg, inv, theta, delta) -> bool:
    """Whether g right-divides f; both ascending packed coefficient lists,
    g monic."""
    m = len(g) - 1
    r = list(f)
    dmax = len(r) - 1 - m
    if dmax < 0:
        return False
    shifts = [list(g)]
    for _ in range(dmax):
        shifts.append(_skew_shift(shifts[-1], theta, delta, add))
    while len(r) - 1 >= m:
        d = len(r) - 1 - m
        row = shifts[d]
        c = mul[inv[row[-1]]][r[-1]]
        if c:
            for j, t in enumerate(row):
                if t:
                    r[j] = add[r[j]][neg[mul[c][t]]]
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return not r


def scan_monic_right_divisors(f, mul, add, neg, inv, theta, delta) -> list:
    """All monic right divisors of f with nonzero constant term and degree
    between 1 and deg(f) - 1, ascending packed coefficients."""
    f = [int(c) for c in f]
    mul = np.asarray(mul, dtype=np.int64).tolist()
    add = np.asarray(add, dtype=np.int64).tolist()
    neg = [int(x) for x in np.asarray(neg, dtype=np.int64)]
    inv = [int(x) for x in np.asarray(inv, dtype=np.int64)]
    theta = [int(x) for x in np.asarray(theta, dtype=np.int64)]
    delta = [int(x) for x in np.asarray(delta, dtype=np.int64)]
    q = len(theta)
    n = len(f) - 1
    found = []
    for d in range(1, n):
        count = (q - 1) * q ** (d - 1)
        for packed in range(count):
            v = packed
            c0 = 1 + v % (q - 1)
            v //= q - 1
            g = [c0]
            for _ in range(d - 1):
                g.append(v % q)
                v //= q
            g.append(1)
            if _rdiv_is_exact(f, g, mul, add, neg, inv, theta, delta):
                found.append(tuple(g))
    return found
