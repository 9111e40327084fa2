"""Code construction, enumeration, duals, distance, decompositions."""

import itertools
import random
import warnings

import pytest

import support as sp
from skewcodes.codes import (
    SkewGCCode,
    code_component_split,
    code_from_generator_poly,
    decompose,
    dual_code,
    dual_pseudolinear_map,
    enumerate_right_divisors,
    is_invariant_code,
    min_weight_of_matrix,
    minimum_distance,
    normalize_to_unit_constant,
)
from skewcodes.errors import (
    BudgetExceededError,
    NotDivisorError,
    NotInvariantError,
    PreconditionError,
)
from skewcodes.fields import Automorphism, field_create
from skewcodes.linalg import (
    MatFq,
    null_space,
    rank,
    row_space_contains,
    row_space_equal,
    vec_mul_mat,
)
from skewcodes.pseudolinear import PseudoLinearMap, transformation_of
from skewcodes.skewpoly import RingCtx, SkewPoly, parse_poly, right_divide, skew_eval

F3 = field_create(3, 1)
F4 = field_create(2, 2)
F7 = field_create(7, 1)
F8 = field_create(2, 3)
C3 = RingCtx.create(F3)
C7 = RingCtx.create(F7)
R8 = RingCtx.create(F8, t=1, beta=0)


def _f8_example():
    f = R8.from_coeffs([1, 0, F8.w.val, 1, 1])
    return f


class TestConstruction:
    def test_table_row_q3(self):
        C = code_from_generator_poly(parse_poly("X+2", C3), parse_poly("X^2-1", C3))
        assert C.G.to_lists() == [[2, 1]]
        assert (C.n, C.k) == (2, 1)
        assert minimum_distance(C) == 2

    def test_full_degree_rejected(self):
        f = parse_poly("X^2-1", C3)
        with pytest.raises(PreconditionError):
            code_from_generator_poly(f, f)

    def test_non_divisor_rejected(self):
        with pytest.raises(NotDivisorError):
            code_from_generator_poly(parse_poly("X+1", C7), parse_poly("X^2-2", C7))

    def test_f8_mds_code(self):
        C = code_from_generator_poly(parse_poly("X^2 + w*X + w", R8), _f8_example())
        assert (C.n, C.k) == (4, 2)
        assert minimum_distance(C) == 3

    def test_rows_are_orbit(self):
        rng = random.Random(3)
        for ctx in sp.standard_ctxs():
            f = sp.rand_monic(rng, ctx, 4)
            for g in enumerate_right_divisors(f):
                C = code_from_generator_poly(g, f)
                cur = tuple(g.coeffs_padded(4))
                for row in C.G.entries:
                    assert row == cur
                    cur = C.T(cur)

    def test_closed_under_transformation(self):
        rng = random.Random(5)
        for ctx in sp.standard_ctxs():
            f = sp.rand_monic(rng, ctx, 4)
            for g in enumerate_right_divisors(f):
                C = code_from_generator_poly(g, f)
                assert is_invariant_code(C.G, C.T)


class TestInvariantCode:
    def test_full_space(self):
        rng = random.Random(7)
        ctx = RingCtx.create(F4, t=1, beta=F4.w)
        T = transformation_of(sp.rand_monic(rng, ctx, 3))
        assert is_invariant_code(MatFq.identity(3, F4), T)

    def test_orbit_oracle(self):
        # 1-dimensional subspaces: invariance equals orbit containment
        rng = random.Random(11)
        ctx = RingCtx.create(F7)
        f = parse_poly("X^6-1", ctx)
        T = transformation_of(f)
        for _ in range(40):
            v = sp.rand_vector(rng, F7, 6)
            if all(e.is_zero() for e in v):
                continue
            G = MatFq([list(v)], F7)
            expected = row_space_contains(G, T(v))
            assert is_invariant_code(G, T) == expected


class TestEnumerate:
    def test_f8_monic_divisors(self):
        divisors = enumerate_right_divisors(_f8_example())
        assert len(divisors) == 4
        assert parse_poly("X^2 + w*X + w", R8) in divisors
        degrees = sorted(g.degree for g in divisors)
        assert degrees == [1, 2, 2, 3]

    def test_matches_object_level_scan(self):
        rng = random.Random(13)
        for ctx in sp.standard_ctxs():
            if ctx.field.q > 8:
                continue
            f = sp.rand_monic(rng, ctx, 3)
            found = set(enumerate_right_divisors(f))
            expected = set()
            for d in range(1, 3):
                for c0 in ctx.field.nonzero_elements():
                    rest = itertools.product(ctx.field.elements(), repeat=d - 1)
                    for mid in rest:
                        g = SkewPoly((c0,) + mid + (ctx.field.one(),), ctx)
                        if right_divide(f, g)[1].is_zero():
                            expected.add(g)
            assert found == expected

    def test_commutative_divisors_from_factorization(self):
        # the scan finds exactly the products of factor powers that have a
        # nonzero constant term
        rng = random.Random(17)
        for _ in range(20):
            f = sp.rand_monic(rng, C7, 4)
            from skewcodes.skewpoly import invariant_factorization

            fact = invariant_factorization(f)
            expected = set()
            choices = [range(a + 1) for _, a in fact.factors]
            for combo in itertools.product(*choices):
                g = C7.one()
                for (fi, _), e in zip(fact.factors, combo):
                    g = g * fi**e
                if 1 <= g.degree <= f.degree - 1 and not g.constant().is_zero():
                    expected.add(g)
            assert set(enumerate_right_divisors(f)) == expected

    def test_irreducible_empty(self):
        f = parse_poly("X^2+1", C3)  # irreducible over GF(3)
        assert enumerate_right_divisors(f) == []

    def test_budget(self):
        f = parse_poly("X^6-1", C7)
        with pytest.raises(BudgetExceededError):
            enumerate_right_divisors(f, budget=100)


class TestDistance:
    def test_paper_distance_2(self):
        C = code_from_generator_poly(
            parse_poly("(X-5)(X-3)", C7), parse_poly("X^6-1", C7)
        )
        assert minimum_distance(C) == 2

    def test_repetition_code(self):
        for n in (3, 5):
            f = C7.from_coeffs([6] + [0] * (n - 1) + [1])  # X^n - 1
            g = C7.from_coeffs([1] * n)  # (X^n - 1) / (X - 1)
            C = code_from_generator_poly(g, f)
            assert C.k == 1
            assert minimum_distance(C) == n

    def test_budget(self):
        C = code_from_generator_poly(
            parse_poly("X+6", C7), parse_poly("X^6-1", C7)
        )
        with pytest.raises(BudgetExceededError):
            minimum_distance(C, budget=10)

    def test_singleton_bound(self):
        rng = random.Random(19)
        for ctx in sp.standard_ctxs():
            f = sp.rand_monic(rng, ctx, 4)
            for g in enumerate_right_divisors(f):
                C = code_from_generator_poly(g, f)
                d = minimum_distance(C)
                assert d <= C.n - C.k + 1


class TestDual:
    def test_small_example(self):
        C = code_from_generator_poly(parse_poly("X+2", C3), parse_poly("X^2-1", C3))
        H = dual_code(C)
        assert H.to_lists() == [[1, 1]]

    def test_both_factor_orders(self):
        f = parse_poly("X^2-1", C3)
        C = code_from_generator_poly(parse_poly("X-1", C3), f)
        H = dual_code(C)
        assert row_space_equal(H, MatFq(null_space(C.G), F3))

    def test_orthogonality_and_rank(self):
        rng = random.Random(23)
        for ctx in sp.standard_ctxs():
            f = sp.rand_monic(rng, ctx, 4)
            for g in enumerate_right_divisors(f):
                C = code_from_generator_poly(g, f)
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore")
                    H = dual_code(C)
                prod = C.G * H.transpose()
                assert all(e.is_zero() for row in prod.entries for e in row)
                assert rank(H) + rank(C.G) == C.n

    def test_dual_invariant_under_dual_map(self):
        rng = random.Random(29)
        for ctx in sp.standard_ctxs():
            f = sp.rand_monic(rng, ctx, 4)
            for g in enumerate_right_divisors(f):
                C = code_from_generator_poly(g, f)
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore")
                    H = dual_code(C)
                Tdual = dual_pseudolinear_map(C.T)
                assert is_invariant_code(H, Tdual)

    def test_dual_map_data(self):
        # theta = id, beta = 0: just the transpose
        M = MatFq([[1, 2], [0, 1]], F3)
        T = PseudoLinearMap(M, Automorphism(F3, 0), F3.zero())
        assert dual_pseudolinear_map(T).M == M.transpose()

    def test_dual_map_involution(self):
        rng = random.Random(31)
        for field, t in [(F4, 1), (F8, 1), (F8, 2)]:
            M = MatFq(
                [[rng.randrange(field.q) for _ in range(3)] for _ in range(3)], field
            )
            T = PseudoLinearMap(M, Automorphism(field, t), field.w)
            TT = dual_pseudolinear_map(dual_pseudolinear_map(T))
            assert TT.M == T.M
            assert TT.theta == T.theta
            assert TT.beta == T.beta

    def test_dual_perp_pairing(self):
        # every dual row stays orthogonal after applying the dual map
        rng = random.Random(37)
        for ctx in sp.standard_ctxs():
            f = sp.rand_monic(rng, ctx, 4)
            for g in enumerate_right_divisors(f):
                C = code_from_generator_poly(g, f)
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore")
                    H = dual_code(C)
                Tdual = dual_pseudolinear_map(C.T)
                for a in H.entries:
                    ta = Tdual(a)
                    for c in C.G.entries:
                        acc = ctx.field.zero()
                        for x, y in zip(ta, c):
                            acc = acc + x * y
                        assert acc.is_zero()


class TestDecompose:
    def test_single_factor_is_identity_projector(self):
        ctx = RingCtx.create(F4, t=1, beta=0)
        f = parse_poly("X^2+1", ctx)
        D = decompose(f)
        assert len(D.components) == 1
        comp = D.components[0]
        assert comp.dimension == 2
        gfp = field_create(2, 1)
        assert comp.idempotent == MatFq.identity(4, gfp)

    def test_eigen_decomposition_commutative(self):
        D = decompose(parse_poly("X^2-1", C3))
        dims = [c.dimension for c in D.components]
        assert dims == [1, 1]
        A = companion = transformation_of(D.f).M
        # kernels of A - I and A + I
        from skewcodes.pseudolinear import apply_poly_T

        for comp in D.components:
            T = transformation_of(D.f)
            for row in comp.space.entries:
                out = apply_poly_T(comp.power, T, row)
                assert all(e.is_zero() for e in out)

    def test_length8_table_all_betas(self):
        U1 = MatFq(
            [[1, 0, 0, 0, 0, 0, 1, 0], [0, 1, 0, 0, 0, 0, 0, 1],
             [0, 0, 1, 0, 1, 0, 1, 0], [0, 0, 0, 1, 0, 1, 0, 1]], F4
        )
        U2 = MatFq(
            [[1, 0, 0, 0, 1, 0, 0, 0], [0, 1, 0, 0, 0, 1, 0, 0],
             [0, 0, 1, 0, 0, 0, 1, 0], [0, 0, 0, 1, 0, 0, 0, 1]], F4
        )
        for bval in range(4):
            ctx = RingCtx.create(F4, t=1, beta=F4.elem(bval))
            f = ctx.from_coeffs([1, 0, 1, 0, 0, 0, 1, 0, 1])
            D = decompose(f)
            assert [c.dimension for c in D.components] == [4, 4]
            assert row_space_equal(D.components[0].space, U1)
            assert row_space_equal(D.components[1].space, U2)
            assert D.strict == (bval in (0, 1))

    def test_idempotent_identities_where_two_sided(self):
        rng = random.Random(41)
        cases = []
        for _ in range(25):
            cases.append(sp.rand_monic(rng, C7, rng.randrange(2, 6)))
        for bval in (0, 1):
            ctx = RingCtx.create(F4, t=1, beta=F4.elem(bval))
            cases.append(ctx.from_coeffs([1, 0, 1, 0, 0, 0, 1, 0, 1]))
        gfp2 = field_create(2, 1)
        for f in cases:
            D = decompose(f)
            assert D.strict
            mats = [c.idempotent for c in D.components]
            size = mats[0].rows
            gfp = mats[0].field
            ident = MatFq.identity(size, gfp)
            total = MatFq.zeros(size, size, gfp)
            for i, m in enumerate(mats):
                assert m * m == m
                total = MatFq(
                    [
                        [a + b for a, b in zip(r1, r2)]
                        for r1, r2 in zip(total.entries, m.entries)
                    ],
                    gfp,
                )
                for j, m2 in enumerate(mats):
                    if i != j:
                        assert m * m2 == MatFq.zeros(size, size, gfp)
            assert total == ident

    def test_projector_fixes_exactly_its_component(self):
        rng = random.Random(43)
        for f in [
            sp.rand_monic(rng, C7, 4),
            RingCtx.create(F4, t=1, beta=1).from_coeffs([1, 0, 1, 0, 0, 0, 1, 0, 1]),
        ]:
            D = decompose(f)
            field = f.ctx.field
            n = f.degree
            from skewcodes.linalg import flatten_vector, unflatten_vector

            for i, comp in enumerate(D.components):
                for j, other in enumerate(D.components):
                    for row in other.space.entries:
                        flat = flatten_vector(row, field)
                        out = vec_mul_mat(flat, comp.idempotent)
                        got = unflatten_vector(out, field, n)
                        if i == j:
                            assert got == tuple(row)
                        else:
                            assert all(e.is_zero() for e in got)

    def test_row_span_of_projector_matrix_commutative(self):
        # theta = id: rows of each projector matrix span its component
        rng = random.Random(47)
        for _ in range(10):
            f = sp.rand_monic(rng, C7, 4)
            D = decompose(f)
            for comp in D.components:
                if comp.dimension == 0:
                    continue
                # idempotent over the prime field is the GF(7) matrix itself
                rows = [
                    [comp.idempotent.entries[i][j] for j in range(f.degree)]
                    for i in range(f.degree)
                ]
                proj = MatFq([[F7.elem(e.val) for e in row] for row in rows], F7)
                nz = [r for r in proj.entries if any(not e.is_zero() for e in r)]
                assert row_space_equal(MatFq(nz, F7), comp.space)

    def test_non_invariant_without_fixed_coeffs_rejected(self):
        ctx = RingCtx.create(F4, t=1, beta=0)
        with pytest.raises(NotInvariantError):
            decompose(parse_poly("X^2 + w*X + 1", ctx))


class TestComponentSplit:
    def test_full_space_code(self):
        f = parse_poly("X^6-1", C7)
        D = decompose(f)
        C = code_from_generator_poly(parse_poly("X-1", C7), f)
        parts = code_component_split(C, D)
        assert sum(p.rows for p in parts) == C.k

    def test_dims_sum_random(self):
        rng = random.Random(53)
        f = parse_poly("X^6-1", C7)
        D = decompose(f)
        for g in enumerate_right_divisors(f):
            C = code_from_generator_poly(g, f)
            parts = code_component_split(C, D)
            assert sum(p.rows for p in parts) == C.k
            for p, comp in zip(parts, D.components):
                for row in p.entries:
                    assert row_space_contains(C.G, row)
                    assert row_space_contains(comp.space, row)


class TestNormalize:
    def test_nonzero_constant_scaling(self):
        f = _f8_example()
        g = parse_poly("X^2 + w*X + w", R8)
        C = code_from_generator_poly(g, f)
        out = normalize_to_unit_constant(g, C)
        assert out.constant() == F8.one()
        assert out == g.scale_left(g.constant().inverse())

    def test_shifted_codeword(self):
        f = _f8_example()
        g = parse_poly("X^2 + w*X + w", R8)
        C = code_from_generator_poly(g, f)
        c = right_divide(R8.x() * g, f)[1]
        out = normalize_to_unit_constant(c, C)
        assert out.constant() == F8.one()
        assert right_divide(out, g)[1].is_zero()

    def test_weight_preserved(self):
        rng = random.Random(59)
        f = _f8_example()
        for g in enumerate_right_divisors(f):
            C = code_from_generator_poly(g, f)
            for _ in range(30):
                u = sp.rand_poly(rng, R8, C.k - 1) if C.k > 1 else R8.one()
                c = right_divide(u * g, f)[1]
                if c.is_zero():
                    continue
                out = normalize_to_unit_constant(c, C)
                assert out.weight() == c.weight()
                assert out.constant() == F8.one()
                assert right_divide(out, g)[1].is_zero()

    def test_rejects_outsiders(self):
        f = _f8_example()
        g = parse_poly("X^2 + w*X + w", R8)
        C = code_from_generator_poly(g, f)
        with pytest.raises(PreconditionError):
            normalize_to_unit_constant(R8.zero(), C)
        with pytest.raises(PreconditionError):
            normalize_to_unit_constant(R8.one(), C)
