import random
from fractions import Fraction

import pytest

from padichyper.errors import DenominatorDivisibleByP
from padichyper.gamma import (
    GammaCache,
    gamma_cache,
    gamma_p,
    verify_eq29,
    verify_lemma31,
    verify_lemma5,
    verify_reflection,
)
from padichyper.padic import PrecisionContext, unramified_context


def gamma_brute(n: int, p: int, K: int) -> int:
    """Literal product definition, the independent oracle."""
    m = p**K
    acc = 1
    for j in range(1, n):
        if j % p:
            acc = acc * j % m
    return acc if n % 2 == 0 else -acc % m


class TestGammaValues:
    def test_at_zero(self):
        cache = gamma_cache(7, 4)
        assert cache.gamma(Fraction(0)) == 1

    def test_at_one(self):
        cache = gamma_cache(7, 4)
        assert cache.gamma(Fraction(1)) == 7**4 - 1

    def test_half_mod_25_is_gamma_of_13(self):
        # 1/2 = 13 mod 25; independent product oracle
        cache = gamma_cache(5, 2)
        assert cache.gamma(Fraction(1, 2)) == gamma_brute(13, 5, 2)

    def test_small_integers_match_product_definition(self):
        cache = gamma_cache(11, 3)
        for n in range(20):
            assert cache.gamma(Fraction(n)) == (1 if n == 0 else gamma_brute(n, 11, 3))

    @pytest.mark.parametrize("p,K", [(5, 4), (7, 3), (13, 3), (29, 2)])
    def test_random_residues_match_brute_force(self, p, K):
        rng = random.Random(p * 1000 + K)
        cache = gamma_cache(p, K)
        for _ in range(25):
            n = rng.randrange(p**K)
            assert cache.gamma(Fraction(n)) == (1 if n == 0 else gamma_brute(n, p, K))

    def test_batched_equals_single(self):
        cache = GammaCache(PrecisionContext(7, 4))
        args = [Fraction(a, b) for a in range(-6, 7) for b in (1, 2, 3, 4, 6) ]
        batch = cache.gamma_many(args)
        fresh = gamma_cache(7, 4)
        for x in set(Fraction(a) for a in args):
            assert batch[x] == fresh.gamma(x)

    def test_rational_table(self):
        cache = gamma_cache(7, 5)
        tab = cache.rational_table(12)
        for c in range(12):
            assert tab[c] == cache.gamma(Fraction(c, 12))

    def test_denominator_divisible_by_p(self):
        cache = gamma_cache(7, 3)
        with pytest.raises(DenominatorDivisibleByP):
            cache.gamma(Fraction(1, 14))

    def test_gamma_p_wraps_zp(self):
        cache = gamma_cache(5, 3)
        z = gamma_p(Fraction(1, 2), cache)
        assert z.context.p == 5 and z.residue == cache.gamma(Fraction(1, 2))

    def test_segment_product_beyond_int64_direct_range(self):
        # 11^9 sits between 2^31 and 2^32, exercising the split multiply
        cache = gamma_cache(11, 9)
        m = 11**9
        lo, hi = 5_000_000, 5_130_000
        acc = 1
        for j in range(lo, hi):
            if j % 11:
                acc = acc * j % m
        assert cache._segment_product(lo, hi) == acc


class TestContinuity:
    @pytest.mark.parametrize("p", [5, 7, 11, 13])
    def test_digit_agreement(self, p):
        # x = x' mod p^m implies gamma(x) = gamma(x') mod p^m
        K = 5
        cache = gamma_cache(p, K)
        rng = random.Random(p)
        for _ in range(40):
            den = rng.choice([1, 2, 3, 4, 6, 12])
            num = rng.randrange(-200, 200)
            x = Fraction(num, den)
            if x.denominator % p == 0:
                continue
            m = rng.randrange(1, K + 1)
            shift = rng.randrange(1, 5) * p**m
            y = x + shift
            gx, gy = cache.gamma(x), cache.gamma(y)
            assert (gx - gy) % p**m == 0


class TestReflection:
    def test_half(self):
        for p in (5, 7, 11):
            assert verify_reflection(Fraction(1, 2), gamma_cache(p, 4))

    def test_zero(self):
        # Gamma(0) * Gamma(1) = -1
        cache = gamma_cache(7, 3)
        assert cache.gamma(Fraction(0)) * cache.gamma(Fraction(1)) % 7**3 == 7**3 - 1
        assert verify_reflection(Fraction(0), cache)

    def test_third_at_p7(self):
        assert verify_reflection(Fraction(1, 3), gamma_cache(7, 3))

    def test_many(self):
        cache = gamma_cache(13, 4)
        for num in range(-15, 16):
            for den in (1, 2, 3, 4, 6, 7):
                assert verify_reflection(Fraction(num, den), cache)


class TestProductIdentities:
    @pytest.mark.parametrize("p,r", [(7, 1), (13, 1), (5, 2)])
    def test_lemma31_exhaustive(self, p, r):
        u = unramified_context(p, 5, r)
        q = p**r
        for t in (2, 3, 6):
            if t % p == 0:
                continue
            for j in range(q - 1):
                assert verify_lemma31(t, j, u), (p, r, t, j)

    def test_lemma31_j_zero_collapses(self):
        u = unramified_context(11, 5, 1)
        for t in (2, 3, 6):
            assert verify_lemma31(t, 0, u)

    @pytest.mark.parametrize("p,r", [(7, 1), (13, 1), (5, 2)])
    def test_eq29_exhaustive(self, p, r):
        u = unramified_context(p, 5, r)
        for l in range(1, p**r - 1):
            assert verify_eq29(l, u), (p, r, l)

    def test_eq29_at_half_point(self):
        u = unramified_context(7, 5, 1)
        assert verify_eq29(3, u)

    @pytest.mark.parametrize("p,r", [(7, 1), (11, 1), (13, 1), (5, 2), (7, 2), (11, 2), (13, 2)])
    def test_floor_identity_exhaustive(self, p, r):
        q = p**r
        for l in range(1, q - 1):
            if 2 * l == q - 1:
                continue
            for i in range(r):
                assert verify_lemma5(l, i, p, r), (p, r, l, i)

    def test_floor_identity_rejects_midpoint(self):
        with pytest.raises(ValueError):
            verify_lemma5(3, 0, 7, 1)
