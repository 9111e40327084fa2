"""Pseudo-linear maps, polynomial application, kernels, minimal polynomials."""

import itertools
import random

import pytest

import support as sp
from skewcodes.errors import PreconditionError
from skewcodes.fields import Automorphism, field_create
from skewcodes.linalg import MatFq, null_space, rank, row_basis, row_space_equal
from skewcodes.pseudolinear import (
    PseudoLinearMap,
    apply_poly_T,
    companion_matrix,
    kernel_of_poly,
    matrix_minimal_poly,
    poly_map_is_zero,
    power_matrix,
    semilinear_minimal_poly,
    theta_conjugate_product,
    transformation_of,
)
from skewcodes.skewpoly import (
    RingCtx,
    SkewPoly,
    is_invariant,
    parse_poly,
    right_divide,
)

F3 = field_create(3, 1)
F4 = field_create(2, 2)
F7 = field_create(7, 1)
F8 = field_create(2, 3)


class TestCompanion:
    def test_x2_minus_1(self):
        A = companion_matrix(parse_poly("X^2-1", RingCtx.create(F3)))
        assert A.to_lists() == [[0, 1], [1, 0]]

    def test_modulus_of_length8(self):
        ctx = RingCtx.create(F4, t=1, beta=0)
        A = companion_matrix(ctx.from_coeffs([1, 0, 1, 0, 0, 0, 1, 0, 1]))
        assert [e.val for e in A.entries[-1]] == [1, 0, 1, 0, 0, 0, 1, 0]

    def test_x_pow_n(self):
        A = companion_matrix(parse_poly("X^3", RingCtx.create(F3)))
        assert [e.val for e in A.entries[-1]] == [0, 0, 0]

    def test_non_monic_rejected(self):
        with pytest.raises(PreconditionError):
            companion_matrix(parse_poly("2*X^2+1", RingCtx.create(F3)))


class TestApply:
    def test_plain_matrix_action(self):
        rng = random.Random(3)
        ctx = RingCtx.create(F7)
        f = parse_poly("X^6-1", ctx)
        T = transformation_of(f)
        from skewcodes.linalg import vec_mul_mat

        for _ in range(20):
            v = sp.rand_vector(rng, F7, 6)
            assert T(v) == vec_mul_mat(v, T.M)

    def test_printed_rule(self):
        # length-8 modulus over GF(4): coordinates permute-and-square with
        # two feedback taps, plus the derivation part
        for bval in range(4):
            b = F4.elem(bval)
            ctx = RingCtx.create(F4, t=1, beta=b)
            f = ctx.from_coeffs([1, 0, 1, 0, 0, 0, 1, 0, 1])
            T = transformation_of(f)
            rng = random.Random(5)
            for _ in range(20):
                v = sp.rand_vector(rng, F4, 8)
                s = [c * c for c in v]
                base = (s[7], s[0], s[1] + s[7], s[2], s[3], s[4], s[5] + s[7], s[6])
                expected = tuple(
                    x + b * (sc - c) for x, sc, c in zip(base, s, v)
                )
                assert T(v) == expected

    def test_zero_fixed(self):
        ctx = RingCtx.create(F4, t=1, beta=F4.w)
        T = transformation_of(ctx.from_coeffs([1, 0, 1, 0, 1]))
        z = (F4.zero(),) * 4
        assert T(z) == z

    def test_additivity(self):
        rng = random.Random(7)
        ctx = RingCtx.create(F8, t=1, beta=F8.w)
        T = transformation_of(ctx.from_coeffs([1, 0, F8.w.val, 1, 1]))
        for _ in range(50):
            u = sp.rand_vector(rng, F8, 4)
            v = sp.rand_vector(rng, F8, 4)
            uv = tuple(a + b for a, b in zip(u, v))
            assert T(uv) == tuple(a + b for a, b in zip(T(u), T(v)))

    def test_semilinear_scalar_rule(self):
        # with no derivation: T(c v) = theta(c) T(v), all scalars and vectors
        for field, t, n in [(F4, 1, 3), (F8, 1, 2), (F8, 2, 2)]:
            ctx = RingCtx.create(field, t=t, beta=0)
            rng = random.Random(11)
            f = sp.rand_monic(rng, ctx, n)
            T = transformation_of(f)
            th = ctx.theta
            for c in field.elements():
                for _ in range(10):
                    v = sp.rand_vector(rng, field, n)
                    cv = tuple(c * x for x in v)
                    assert T(cv) == tuple(th(c) * y for y in T(v))


class TestPolyApplication:
    def test_p_equals_x(self):
        ctx = RingCtx.create(F4, t=1, beta=1)
        f = ctx.from_coeffs([1, 0, 1, 0, 1])
        T = transformation_of(f)
        rng = random.Random(13)
        for _ in range(20):
            v = sp.rand_vector(rng, F4, 4)
            assert apply_poly_T(ctx.x(), T, v) == T(v)

    def test_annihilation_iff_invariant(self):
        # exhaustive: monic f of degree <= 4 over GF(4), all derivations
        for bval in range(4):
            ctx = RingCtx.create(F4, t=1, beta=F4.elem(bval))
            for deg in range(1, 5):
                for f in sp.all_monic(ctx, deg):
                    T = transformation_of(f)
                    assert poly_map_is_zero(f, T) == is_invariant(f)

    def test_module_reduction_identity(self):
        # pi_f(p(T_f)(v)) = p * pi_f(v) computed modulo Rf
        rng = random.Random(17)
        for ctx in sp.standard_ctxs():
            f = sp.rand_monic(rng, ctx, 4)
            T = transformation_of(f)
            n = 4
            for _ in range(200):
                p = sp.rand_poly(rng, ctx, 5)
                v = sp.rand_vector(rng, ctx.field, n)
                lhs = SkewPoly(apply_poly_T(p, T, v), ctx)
                rhs = right_divide(p * SkewPoly(v, ctx), f)[1]
                assert lhs == rhs


class TestKernels:
    def test_trivial_kernel(self):
        ctx = RingCtx.create(F4, t=1, beta=1)
        T = transformation_of(ctx.from_coeffs([1, 0, 1, 0, 1]))
        basis, linear = kernel_of_poly(ctx.one(), T)
        assert basis == [] and linear

    def test_commutative_matches_matrix_nullspace(self):
        rng = random.Random(19)
        ctx = RingCtx.create(F7)
        f = parse_poly("X^6-1", ctx)
        T = transformation_of(f)
        A = T.M
        for _ in range(30):
            h = sp.rand_poly(rng, ctx, 3, nonzero=True)
            # h(A) as a matrix, then its left null space
            hA = MatFq.zeros(6, 6, F7)
            from skewcodes.linalg import vec_mul_mat

            rows = []
            for i in range(6):
                e = [F7.zero()] * 6
                e[i] = F7.one()
                rows.append(list(apply_poly_T(h, T, tuple(e))))
            hA = MatFq(rows, F7)
            expected = null_space(hA.transpose())
            basis, linear = kernel_of_poly(h, T)
            assert linear
            if expected:
                assert row_space_equal(
                    MatFq([list(v) for v in basis], F7),
                    MatFq([list(v) for v in expected], F7),
                )
            else:
                assert basis == []

    def test_linearity_flag_matches_invariance(self):
        # exhaustive over nonzero-kernel cases: monic h dividing f
        for bval in range(4):
            ctx = RingCtx.create(F4, t=1, beta=F4.elem(bval))
            for f in sp.all_monic(ctx, 3):
                if not is_invariant(f):
                    continue
                T = transformation_of(f)
                for hdeg in (1, 2):
                    for h in sp.all_monic(ctx, hdeg):
                        if not right_divide(f, h)[1].is_zero():
                            continue
                        # h a right divisor: kernel of the cofactor map
                        basis, linear = kernel_of_poly(h, T)
                        if linear and basis:
                            span = MatFq([list(v) for v in basis], ctx.field)
                            w = ctx.field.w
                            for v in basis:
                                wv = tuple(w * c for c in v)
                                from skewcodes.linalg import row_space_contains

                                assert row_space_contains(span, wv)


class TestThetaConjugate:
    def test_identity_cases(self):
        th = Automorphism(F4, 0)
        rng = random.Random(23)
        M = MatFq([[rng.randrange(4) for _ in range(3)] for _ in range(3)], F4)
        assert theta_conjugate_product(M, th) == M
        frob = Automorphism(F4, 1)
        I = MatFq.identity(3, F4)
        assert theta_conjugate_product(I, frob) == I

    def test_diagonal(self):
        frob = Automorphism(F4, 1)
        M = MatFq([[F4.w, F4.zero()], [F4.zero(), F4.w]], F4)
        B = theta_conjugate_product(M, frob)
        assert B == MatFq.identity(2, F4)  # w^2 * w = 1

    def test_power_of_map(self):
        # T^k acts as the twisted product matrix when beta = 0
        rng = random.Random(29)
        for field, t, n in [(F4, 1, 3), (F8, 1, 2), (F8, 2, 3)]:
            th = Automorphism(field, t)
            for _ in range(10):
                M = MatFq(
                    [[rng.randrange(field.q) for _ in range(n)] for _ in range(n)],
                    field,
                )
                T = PseudoLinearMap(M, th, field.zero())
                k = th.order
                assert power_matrix(T, k) == theta_conjugate_product(M, th)


class TestMinimalPoly:
    def test_identity_matrix(self):
        m = matrix_minimal_poly(MatFq.identity(3, F7))
        assert m == parse_poly("X-1", RingCtx.create(F7))

    def test_zero_matrix(self):
        m = matrix_minimal_poly(MatFq.zeros(2, 2, F7))
        assert m == parse_poly("X", RingCtx.create(F7))

    def test_companion_property(self):
        rng = random.Random(31)
        for _ in range(20):
            ctx = RingCtx.create(F7)
            f = sp.rand_monic(rng, ctx, rng.randrange(1, 5))
            A = companion_matrix(f)
            assert matrix_minimal_poly(A) == f

    def test_annihilates(self):
        rng = random.Random(37)
        for _ in range(30):
            M = MatFq([[rng.randrange(4) for _ in range(4)] for _ in range(4)], F4)
            m = matrix_minimal_poly(M)
            ctx = RingCtx.create(F4)
            T = PseudoLinearMap(M, Automorphism(F4, 0), F4.zero())
            assert poly_map_is_zero(m, T)


def _brute_minimal_semilinear(T, max_deg):
    """Smallest monic annihilator by exhaustive search over coefficients."""
    ctx = RingCtx(T.field, T.theta, T.field.zero())
    for deg in range(1, max_deg + 1):
        for cand in sp.all_monic(ctx, deg):
            if poly_map_is_zero(cand, T):
                return cand
    return None


def _no_smaller_annihilator(T, deg):
    """No nonzero GF(q)-combination of id, T, ..., T^(deg-1) vanishes:
    the flattened maps (basis scalar) * T^i are GF(p)-independent, which
    covers every candidate polynomial of degree < deg at once."""
    from skewcodes.linalg import flatten_additive_map

    field = T.field
    rows = []
    powers = []
    for i in range(deg):
        if i == 0:
            powers.append(lambda v: v)
        else:
            prev = powers[-1]
            powers.append(lambda v, prev=prev: T(prev(v)))
    gfp = field_create(field.p, 1)
    for i in range(deg):
        for j in range(field.s):
            b = field.from_digits([0] * j + [1])
            func = lambda v, i=i, b=b: tuple(b * c for c in powers[i](v))
            mat = flatten_additive_map(func, field, T.n)
            rows.append([e for row in mat.entries for e in row])
    stacked = MatFq(rows, gfp)
    return rank(stacked) == deg * field.s


class TestSemilinearMinimalPoly:
    def test_commutative_reduces_to_matrix_minpoly(self):
        rng = random.Random(41)
        for _ in range(10):
            M = MatFq([[rng.randrange(7) for _ in range(3)] for _ in range(3)], F7)
            if rank(M) < 3:
                continue
            T = PseudoLinearMap(M, Automorphism(F7, 0), F7.zero())
            assert semilinear_minimal_poly(T) == matrix_minimal_poly(M)

    def test_identity_over_f4(self):
        T = PseudoLinearMap(MatFq.identity(2, F4), Automorphism(F4, 1), F4.zero())
        m = semilinear_minimal_poly(T)
        assert m.to_text() == "X^2 + 1"
        assert power_matrix(T, 2) == MatFq.identity(2, F4)

    def test_singular_rejected(self):
        T = PseudoLinearMap(MatFq.zeros(2, 2, F4), Automorphism(F4, 1), F4.zero())
        with pytest.raises(PreconditionError):
            semilinear_minimal_poly(T)

    @pytest.mark.parametrize("field,t", [(F4, 1), (F8, 1), (F8, 2)])
    def test_structure_and_minimality(self, field, t):
        rng = random.Random(43)
        th = Automorphism(field, t)
        k = th.order
        fixed = {e.val for e in th.fixed_elements()}
        count = 0
        while count < 12:
            n = rng.randrange(1, 4)
            M = MatFq(
                [[rng.randrange(field.q) for _ in range(n)] for _ in range(n)],
                field,
            )
            if rank(M) < n:
                continue
            count += 1
            T = PseudoLinearMap(M, th, field.zero())
            m = semilinear_minimal_poly(T)
            # annihilates, coefficients in the fixed field, degree multiple of k
            assert poly_map_is_zero(m, T)
            assert all(c.val in fixed for c in m.coeffs)
            assert m.degree % k == 0
            B = theta_conjugate_product(M, th)
            mB = matrix_minimal_poly(B)
            assert m.degree == k * mB.degree
            # minimality: nothing of lower degree annihilates
            assert _no_smaller_annihilator(T, m.degree)
            # literal enumeration where the candidate count stays small
            if sum(field.q**d for d in range(1, m.degree)) <= 5000:
                assert _brute_minimal_semilinear(T, m.degree) == m
