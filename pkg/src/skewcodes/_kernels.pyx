# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels: codeword weight scan and divisor scan.

Mirrors _kernels_py; arithmetic is table lookups on packed field values.
"""

import numpy as np

IMPL = "compiled"


def min_nonzero_weight(gen, mul, add):
    """Minimum Hamming weight over the nonzero codewords spanned by gen's
    rows; zero codewords from rank-deficient input are skipped."""
    gen_a = np.ascontiguousarray(gen, dtype=np.uint16)
    mul_a = np.ascontiguousarray(mul, dtype=np.uint16)
    add_a = np.ascontiguousarray(add, dtype=np.uint16)
    cdef unsigned short[:, ::1] G = gen_a
    cdef unsigned short[:, ::1] M = mul_a
    cdef unsigned short[:, ::1] A = add_a
    cdef int k = G.shape[0]
    cdef int n = G.shape[1]
    cdef int q = M.shape[0]

    partial_a = np.zeros((k + 1, n), dtype=np.uint16)
    digits_a = np.zeros(k, dtype=np.int64)
    cdef unsigned short[:, ::1] partial = partial_a
    cdef long long[::1] digits = digits_a

    cdef int best = n + 1
    cdef int w, col, d0, j, i
    cdef unsigned short v
    cdef bint outer_zero = True
    cdef bint done = False

    while True:
        # inner sweep over the lowest digit
        for d0 in range(q):
            if outer_zero and d0 == 0:
                continue
            w = 0
            if d0 == 0:
                for col in range(n):
                    if partial[1, col] != 0:
                        w += 1
            else:
                for col in range(n):
                    v = A[partial[1, col], M[d0, G[0, col]]]
                    if v != 0:
                        w += 1
            if 0 < w < best:
                best = w
                if best <= 1:
                    return best
        # odometer step on digits 1..k-1
        done = True
        for j in range(1, k):
            if digits[j] < q - 1:
                digits[j] += 1
                for i in range(1, j):
                    digits[i] = 0
                # refresh partial sums from level j down to 1
                for i in range(j, 0, -1):
                    d0 = <int> digits[i]
                    if d0 == 0:
                        for col in range(n):
                            partial[i, col] = partial[i + 1, col]
                    else:
                        for col in range(n):
                            partial[i, col] = A[partial[i + 1, col], M[d0, G[i, col]]]
                done = False
                break
        if done:
            break
        outer_zero = False
    return best


cdef bint _rdiv_is_exact(unsigned short* f, int nf,
                         unsigned short* g, int ng,
                         unsigned short[:, ::1] M, unsigned short[:, ::1] A,
                         unsigned short[::1] NEG, unsigned short[::1] INV,
                         unsigned short[::1] TH, unsigned short[::1] DE,
                         unsigned short* shifts, unsigned short* r) noexcept:
    # shifts: (nf - ng + 1) rows of width nf; r: width nf scratch
    cdef int m = ng - 1
    cdef int dmax = (nf - 1) - m
    cdef int i, j, d, rlen
    cdef unsigned short c, t, dd
    if dmax < 0:
        return False
    for j in range(ng):
        shifts[j] = g[j]
    for d in range(1, dmax + 1):
        # row d = X * row (d-1)
        for j in range(ng + d):
            shifts[d * nf + j] = 0
        for j in range(ng + d - 1):
            c = shifts[(d - 1) * nf + j]
            shifts[d * nf + j + 1] = A[shifts[d * nf + j + 1], TH[c]]
            dd = DE[c]
            if dd != 0:
                shifts[d * nf + j] = A[shifts[d * nf + j], dd]
    for j in range(nf):
        r[j] = f[j]
    rlen = nf
    while rlen - 1 >= m:
        d = (rlen - 1) - m
        c = M[INV[shifts[d * nf + ng + d - 1]], r[rlen - 1]]
        if c != 0:
            for j in range(ng + d):
                t = shifts[d * nf + j]
                if t != 0:
                    r[j] = A[r[j], NEG[M[c, t]]]
        rlen -= 1
        while rlen > 0 and r[rlen - 1] == 0:
            rlen -= 1
    return rlen == 0


def scan_monic_right_divisors(f, mul, add, neg, inv, theta, delta):
    """Monic right divisors of f with nonzero constant term, degrees
    1..deg(f)-1, as ascending packed coefficient tuples."""
    f_a = np.ascontiguousarray(f, dtype=np.uint16)
    mul_a = np.ascontiguousarray(mul, dtype=np.uint16)
    add_a = np.ascontiguousarray(add, dtype=np.uint16)
    neg_a = np.ascontiguousarray(neg, dtype=np.uint16)
    inv_a = np.ascontiguousarray(inv, dtype=np.uint16)
    th_a = np.ascontiguousarray(theta, dtype=np.uint16)
    de_a = np.ascontiguousarray(delta, dtype=np.uint16)
    cdef unsigned short[::1] F = f_a
    cdef unsigned short[:, ::1] M = mul_a
    cdef unsigned short[:, ::1] A = add_a
    cdef unsigned short[::1] NEG = neg_a
    cdef unsigned short[::1] INV = inv_a
    cdef unsigned short[::1] TH = th_a
    cdef unsigned short[::1] DE = de_a
    cdef int q = TH.shape[0]
    cdef int nf = F.shape[0]
    cdef int n = nf - 1

    g_a = np.zeros(nf, dtype=np.uint16)
    shifts_a = np.zeros(nf * nf, dtype=np.uint16)
    r_a = np.zeros(nf, dtype=np.uint16)
    cdef unsigned short[::1] gbuf = g_a
    cdef unsigned short[::1] shifts = shifts_a
    cdef unsigned short[::1] rbuf = r_a

    cdef int d, j
    cdef long long packed, count, v
    found = []
    for d in range(1, n):
        count = (q - 1)
        for j in range(d - 1):
            count *= q
        for packed in range(count):
            v = packed
            gbuf[0] = <unsigned short> (1 + v % (q - 1))
            v //= q - 1
            for j in range(1, d):
                gbuf[j] = <unsigned short> (v % q)
                v //= q
            gbuf[d] = 1
            if _rdiv_is_exact(&F[0], nf, &gbuf[0], d + 1, M, A, NEG, INV, TH, DE,
                              &shifts[0], &rbuf[0]):
                found.append(tuple(int(gbuf[j]) for j in range(d + 1)))
    return found
