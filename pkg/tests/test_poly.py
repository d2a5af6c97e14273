import math
import random

import pytest

from hrscodes import FieldMismatchError, Poly, PrimeField
from hrscodes.poly import NEG_INF


@pytest.fixture
def gf7():
    return PrimeField(7)


def naive_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return out


def test_normalization_and_queries(gf7):
    f = Poly(gf7, [3, 0, 7, 14, 0, 0])
    assert f.coeffs == (3,)
    assert f.degree == 0
    z = Poly(gf7, [0, 0])
    assert z.is_zero and z.degree == NEG_INF
    assert z.to_list() == [0]
    assert Poly.monomial(gf7, 3, 2).to_list() == [0, 0, 0, 2]
    assert Poly.one(gf7).to_list() == [1]
    assert str(Poly(gf7, [5, 2, 3, 1])) == "X^3 + 3*X^2 + 2*X + 5"


def test_immutable_and_hashable(gf7):
    f = Poly(gf7, [1, 2])
    with pytest.raises(AttributeError):
        f.coeffs = (5,)
    assert f == Poly(gf7, [1, 2, 0])
    assert hash(f) == hash(Poly(gf7, [1, 2]))
    assert f != Poly(PrimeField(11), [1, 2])


def test_field_mismatch(gf7):
    g = Poly(PrimeField(11), [1])
    with pytest.raises(FieldMismatchError):
        Poly(gf7, [1]) + g
    with pytest.raises(TypeError):
        Poly(gf7, [1]) + 3


def test_ring_ops_against_naive(gf7):
    rnd = random.Random(0)
    p = 7
    for _ in range(300):
        a = [rnd.randrange(p) for _ in range(rnd.randint(0, 8))]
        b = [rnd.randrange(p) for _ in range(rnd.randint(0, 8))]
        fa, fb = Poly(gf7, a), Poly(gf7, b)
        add = [(x + y) % p for x, y in zip(a + [0] * len(b), b + [0] * len(a))]
        assert (fa + fb) == Poly(gf7, add)
        assert fa - fb == fa + (-fb)
        assert fa * fb == Poly(gf7, naive_mul(a, b, p))
        c = rnd.randrange(p)
        assert fa.scale(c) == fa * Poly(gf7, [c])


def test_divmod_property(gf7):
    rnd = random.Random(1)
    for _ in range(300):
        a = Poly(gf7, [rnd.randrange(7) for _ in range(rnd.randint(0, 9))])
        b = Poly(gf7, [rnd.randrange(7) for _ in range(rnd.randint(1, 5))])
        if b.is_zero:
            continue
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.is_zero or r.degree < b.degree
        assert a // b == q and a % b == r


def test_division_by_zero(gf7):
    with pytest.raises(ZeroDivisionError):
        divmod(Poly(gf7, [1]), Poly.zero(gf7))


def test_evaluate(gf7):
    rnd = random.Random(2)
    for _ in range(100):
        coeffs = [rnd.randrange(7) for _ in range(rnd.randint(0, 8))]
        f = Poly(gf7, coeffs)
        x = rnd.randrange(7)
        assert f.evaluate(x) == sum(c * x**k for k, c in enumerate(coeffs)) % 7


def test_hyperderivative_definition(gf7):
    rnd = random.Random(3)
    for _ in range(200):
        coeffs = [rnd.randrange(7) for _ in range(rnd.randint(0, 9))]
        f = Poly(gf7, coeffs)
        j = rnd.randint(0, 9)
        expect = [math.comb(i, j) * c % 7 for i, c in enumerate(coeffs)][j:]
        assert f.hyperderivative(j) == Poly(gf7, expect)
    assert Poly(gf7, [1, 1]).hyperderivative(0) == Poly(gf7, [1, 1])
    with pytest.raises(ValueError):
        Poly(gf7, [1]).hyperderivative(-1)


def test_hyperderivative_characteristic_p(gf7):
    # The order-1 derivative of X^7 is 7*X^6 = 0 in GF(7), while the
    # order-7 one is exactly 1.
    x7 = Poly.monomial(gf7, 7)
    assert x7.hyperderivative(1).is_zero
    assert x7.hyperderivative(7) == Poly.one(gf7)


def test_taylor_matches_hyperderivatives(gf7):
    rnd = random.Random(4)
    for _ in range(200):
        f = Poly(gf7, [rnd.randrange(7) for _ in range(rnd.randint(0, 9))])
        alpha = rnd.randrange(7)
        count = rnd.randint(1, 10)
        tay = f.taylor(alpha, count)
        assert tay == [f.hyperderivative(j).evaluate(alpha) for j in range(count)]
        # Reassembling sum tay[j]*(X-alpha)^j recovers f when count > deg.
        if count > max(f.degree, 0):
            lin = Poly(gf7, [-alpha % 7, 1])
            acc = Poly.zero(gf7)
            for c in reversed(tay):
                acc = acc * lin + Poly(gf7, [c])
            assert acc == f


def test_vanishing_order(gf7):
    rnd = random.Random(5)
    for _ in range(200):
        alpha = rnd.randrange(7)
        k = rnd.randint(0, 4)
        # g with g(alpha) != 0
        while True:
            g = Poly(gf7, [rnd.randrange(7) for _ in range(rnd.randint(1, 4))])
            if not g.is_zero and g.evaluate(alpha) != 0:
                break
        lin = Poly(gf7, [-alpha % 7, 1])
        f = g
        for _ in range(k):
            f = f * lin
        assert f.vanishing_order(alpha, cap=6) == min(k, 6)
        assert f.vanishing_order(alpha, cap=max(k - 1, 0)) == max(k - 1, 0)
    assert Poly.zero(gf7).vanishing_order(3, cap=5) == 5
    with pytest.raises(ValueError):
        Poly.one(gf7).vanishing_order(0, cap=-1)
