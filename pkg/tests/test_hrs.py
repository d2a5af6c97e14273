import random

import numpy as np
import pytest

from hrscodes import (
    BudgetExceededError,
    CodeParams,
    FieldMismatchError,
    NrtMatrix,
    ParameterError,
    Poly,
    PrimeField,
    brute_force_min_distance,
    brute_force_nearest_codeword,
    codeword_weight_formula,
    encode,
    hermite_interpolate,
    nearest_codeword_multiplicity,
    nrt_distance,
    nrt_weight,
    solve,
)
from conftest import (
    GOLDEN_CODEWORD,
    GOLDEN_MESSAGE,
    GOLDEN_RECEIVED,
    random_code,
    random_poly,
)


def encode_slow(params, f):
    """Scalar re-implementation of the evaluation map, used as an oracle."""
    rows = []
    for i in range(params.s):
        d = f.hyperderivative(i)
        rows.append(
            [
                int(params.multipliers[i, j]) * d.evaluate(a) % params.p
                for j, a in enumerate(params.alphas)
            ]
        )
    return NrtMatrix(params.field, rows)


class TestCodeParams:
    def test_validation(self):
        with pytest.raises(ParameterError):
            CodeParams(5, 3, 6, 2, [0, 1, 2])  # s > p
        with pytest.raises(ParameterError):
            CodeParams(5, 6, 1, 2, [0, 1, 2, 3, 4, 0])  # r > p
        with pytest.raises(ParameterError):
            CodeParams(5, 2, 2, 5, [0, 1])  # t > rs
        with pytest.raises(ParameterError):
            CodeParams(5, 2, 2, 0, [0, 1])
        with pytest.raises(ParameterError):
            CodeParams(5, 2, 1, 1, [1, 6])  # 6 = 1 mod 5: duplicate points
        with pytest.raises(ParameterError):
            CodeParams(5, 2, 1, 1, [0])  # wrong count
        with pytest.raises(ParameterError):
            CodeParams(5, 2, 1, 2, [0, 1], [[1, 0]])  # zero multiplier
        with pytest.raises(ParameterError):
            CodeParams(5, 2, 1, 2, [0, 1], [[1, 1], [1, 1]])  # wrong V shape
        with pytest.raises(ValueError):
            CodeParams(6, 2, 1, 2, [0, 1])
        with pytest.raises(ParameterError):
            CodeParams(5, 2, 1, 2.0, [0, 1])

    def test_basics(self):
        params = CodeParams(7, 4, 2, 4, [1, 2, 3, 4])
        assert params.p == 7 and params.unit_multipliers
        assert params == CodeParams(PrimeField(7), 4, 2, 4, [8, 2, 3, 4])
        assert params != CodeParams(7, 4, 2, 3, [1, 2, 3, 4])
        v = [[2, 2, 2, 2], [3, 3, 3, 3]]
        scaled = CodeParams(7, 4, 2, 4, [1, 2, 3, 4], v)
        assert not scaled.unit_multipliers
        inv = scaled.inverse_multipliers()
        assert (scaled.multipliers * inv % 7 == 1).all()

    def test_tables(self):
        params = CodeParams(7, 3, 2, 4, [1, 3, 5])
        tab = params.power_table(5)
        assert tab.tolist() == [[1, 1, 1, 1, 1], [1, 3, 2, 6, 4], [1, 5, 4, 6, 2]]
        binom = params.binomial_table(6, 3)
        import math

        want = [[math.comb(k, j) % 7 for j in range(3)] for k in range(6)]
        assert binom.tolist() == want
        # growth keeps earlier slices intact
        assert params.binomial_table(9, 2).tolist() == [
            [math.comb(k, j) % 7 for j in range(2)] for k in range(9)
        ]


class TestEncode:
    def test_golden(self, golden_params, golden_message):
        assert encode(golden_params, golden_message).to_lists() == GOLDEN_CODEWORD

    def test_trivial(self, golden_params, gf7):
        assert encode(golden_params, Poly.zero(gf7)).to_lists() == [[0] * 4, [0] * 4]
        assert encode(golden_params, Poly.one(gf7)).to_lists() == [[1] * 4, [0] * 4]

    def test_degree_bound(self, golden_params, gf7):
        with pytest.raises(ParameterError):
            encode(golden_params, Poly.monomial(gf7, 4))
        with pytest.raises(FieldMismatchError):
            encode(golden_params, Poly(PrimeField(5), [1]))

    def test_against_scalar_oracle(self):
        rnd = random.Random(10)
        for _ in range(150):
            p = rnd.choice([2, 3, 5, 7, 13])
            params = random_code(rnd, p)
            if rnd.random() < 0.5:
                v = [
                    [rnd.randint(1, p - 1) for _ in range(params.r)]
                    for _ in range(params.s)
                ]
                params = CodeParams(p, params.r, params.s, params.t, params.alphas, v)
            f = random_poly(rnd, params.field, params.t)
            assert encode(params, f) == encode_slow(params, f)

    def test_linearity(self):
        rnd = random.Random(11)
        for _ in range(100):
            params = random_code(rnd, 7)
            f = random_poly(rnd, params.field, params.t)
            g = random_poly(rnd, params.field, params.t)
            a, b = rnd.randrange(7), rnd.randrange(7)
            combo = f.scale(a) + g.scale(b)
            lhs = encode(params, combo).entries
            rhs = (a * encode(params, f).entries + b * encode(params, g).entries) % 7
            assert (lhs == rhs).all()

    def test_large_modulus(self):
        p = 2**61 - 1
        params = CodeParams(p, 3, 2, 4, [1, 2, p - 1])
        f = Poly(params.field, [p - 1, p - 2, 1, 5])
        assert encode(params, f) == encode_slow(params, f)


class TestHermite:
    def test_roundtrip_random(self):
        rnd = random.Random(12)
        for _ in range(150):
            p = rnd.choice([5, 7, 13])
            s = rnd.randint(1, 3)
            r = rnd.randint(1, min(p, 4))
            params = CodeParams(p, r, s, r * s, rnd.sample(range(p), r))
            f = random_poly(rnd, params.field, r * s)
            assert hermite_interpolate(params, encode(params, f)) == f

    def test_s1_is_lagrange(self, gf7):
        params = CodeParams(7, 4, 1, 4, [1, 2, 5, 6])
        y = NrtMatrix(gf7, [[2, 0, 3, 3]])
        h = hermite_interpolate(params, y)
        assert h.degree < 4
        assert [h.evaluate(a) for a in params.alphas] == [2, 0, 3, 3]

    def test_golden_received_against_linear_solve(self, golden_params, golden_received, gf7):
        # Independent oracle: fit the 8 coefficients of H directly from the
        # constraint matrix with entry C(k, i) * alpha**(k-i).
        rows = []
        rhs = []
        for i in range(2):
            for j, a in enumerate(golden_params.alphas):
                rows.append(
                    [gf7.binomial(k, i) * pow(a, k - i, 7) if k >= i else 0 for k in range(8)]
                )
                rhs.append(int(golden_received.entries[i, j]))
        sol = solve(gf7, np.array(rows), rhs)
        assert sol is not None and sol.rank == 8
        expect = Poly(gf7, [int(c) for c in sol.particular])
        h = hermite_interpolate(golden_params, golden_received)
        assert h == expect
        for i in range(2):
            d = h.hyperderivative(i)
            for j, a in enumerate(golden_params.alphas):
                assert d.evaluate(a) == int(golden_received.entries[i, j])

    def test_shape_validation(self, golden_params, gf7):
        with pytest.raises(ParameterError):
            hermite_interpolate(golden_params, NrtMatrix(gf7, [[1, 2, 3, 4]]))


class TestWeightFormula:
    def test_trivial(self, golden_params, gf7):
        assert codeword_weight_formula(golden_params, Poly.zero(gf7)) == 0

    def test_simple_root(self):
        # One simple root among the evaluation points with s=2: 2r - 1.
        params = CodeParams(7, 4, 2, 8, [1, 2, 3, 4])
        f = Poly(params.field, [-1 % 7, 1]) * Poly(params.field, [3])
        assert codeword_weight_formula(params, f) == 2 * 4 - 1

    def test_matches_encode(self):
        rnd = random.Random(13)
        for _ in range(300):
            params = random_code(rnd, rnd.choice([5, 7]))
            f = random_poly(rnd, params.field, params.t)
            assert codeword_weight_formula(params, f) == nrt_weight(encode(params, f))

    def test_multiplier_invariance(self):
        rnd = random.Random(14)
        for _ in range(100):
            p = rnd.choice([5, 7])
            base = random_code(rnd, p)
            v = [[rnd.randint(1, p - 1) for _ in range(base.r)] for _ in range(base.s)]
            scaled = CodeParams(p, base.r, base.s, base.t, base.alphas, v)
            f = random_poly(rnd, base.field, base.t)
            assert nrt_weight(encode(base, f)) == nrt_weight(encode(scaled, f))


class TestBruteForce:
    def test_min_distance_examples(self):
        assert brute_force_min_distance(CodeParams(5, 3, 2, 3, [0, 1, 2])) == 4
        assert brute_force_min_distance(CodeParams(7, 2, 2, 2, [1, 2])) == 3
        # t = rs forces distance 1
        assert brute_force_min_distance(CodeParams(3, 2, 2, 4, [0, 1])) == 1

    def test_budget_guard(self):
        params = CodeParams(101, 4, 2, 4, [1, 2, 3, 4])
        with pytest.raises(BudgetExceededError):
            brute_force_min_distance(params, budget=10**6)
        with pytest.raises(BudgetExceededError):
            brute_force_nearest_codeword(
                params, NrtMatrix(params.field, [[0] * 4] * 2), budget=10**6
            )

    def test_nearest_codeword(self, golden_params, golden_received, gf7):
        f, dist = brute_force_nearest_codeword(golden_params, golden_received)
        assert f == Poly(gf7, GOLDEN_MESSAGE) and dist == 2
        cw = encode(golden_params, f)
        g, zero = brute_force_nearest_codeword(golden_params, cw)
        assert g == f and zero == 0

    def test_nearest_tie_breaks_lexicographically(self):
        # Constants over two points with s=1: (0,1) is at distance 1 from
        # both the all-0 and the all-1 codeword; lex picks coefficients [0].
        params = CodeParams(3, 2, 1, 1, [1, 2])
        y = NrtMatrix(params.field, [[0, 1]])
        f, dist, count = nearest_codeword_multiplicity(params, y)
        assert dist == 1 and count == 2
        assert f == Poly.zero(params.field)

    def test_nearest_scan_matches_naive(self):
        rnd = random.Random(15)
        for _ in range(20):
            p = rnd.choice([2, 3])
            params = random_code(rnd, p, max_s=2, max_rs=4)
            if params.p**params.t > 100:
                continue
            y = NrtMatrix(
                params.field,
                [[rnd.randrange(p) for _ in range(params.r)] for _ in range(params.s)],
            )
            best = None
            n_msgs = params.p**params.t
            for n in range(n_msgs):
                digits = []
                for k in range(params.t):
                    digits.append(n // p ** (params.t - 1 - k) % p)
                f = Poly(params.field, digits)
                d = nrt_distance(encode(params, f), y)
                if best is None or d < best[1]:
                    best = (f, d)
            got_f, got_d = brute_force_nearest_codeword(params, y)
            assert (got_f, got_d) == best
