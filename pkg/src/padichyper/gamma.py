"""Morita's p-adic gamma function at rational arguments with p-free
denominator, to precision p^K, plus the gamma product identities the
verification suite checks.

The continuity estimate Gamma_p(x) = Gamma_p(n) mod p^K for any integer
n = x mod p^K reduces every evaluation to a truncated product of p-free
integers.  Those products are served by a checkpointed prefix-product table:
requested points are sorted, gaps are filled with numpy pairwise tree
reductions, and a generalized Wilson reflection (the product of all units of
Z/p^K is -1) keeps every sweep inside [0, p^K/2].
"""

from __future__ import annotations

from bisect import bisect_right, insort
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

import numpy as np

from .errors import DenominatorDivisibleByP
from .padic import (
    PrecisionContext,
    UnramifiedContext,
    ZpElement,
    frac_floor,
    teichmueller,
    zq_inv,
    zq_pow,
)

# Pairwise int64 products are exact below 2^63, so direct tree reduction
# needs modulus < 2^31; a 16-bit split of one factor extends that to 2^32.
_NUMPY_DIRECT_LIMIT = 1 << 31
_NUMPY_SPLIT_LIMIT = 1 << 32
_CHUNK = 1 << 22


def _pairmul(a: np.ndarray, b: np.ndarray, m: int) -> np.ndarray:
    if m <= _NUMPY_DIRECT_LIMIT:
        return (a * b) % m
    hi = b >> 16
    lo = b & 0xFFFF
    return (((a * hi % m) << 16) % m + a * lo % m) % m


def _tree_reduce(arr: np.ndarray, m: int) -> int:
    """Product of an int64 array mod m by halving passes."""
    tail = 1
    while arr.size > 1:
        if arr.size & 1:
            tail = tail * int(arr[-1]) % m
            arr = arr[:-1]
        arr = _pairmul(arr[0::2], arr[1::2], m)
    head = int(arr[0]) if arr.size else 1
    return head * tail % m


class GammaCache:
    """Sparse memo of cumulative unit products for one (p, K).

    ``table[n]`` is the product of all p-free j < n, mod p^K; checkpoints are
    added lazily as gamma arguments arrive and reused across calls.
    """

    def __init__(self, context: PrecisionContext):
        self.context = context
        self.table: dict[int, int] = {0: 1, 1: 1, 2: 1}
        self._keys = [0, 1, 2]

    # -- cumulative products ------------------------------------------------

    def _segment_product(self, lo: int, hi: int) -> int:
        """Product of p-free j in [lo, hi) mod p^K."""
        p, m = self.context.p, self.context.modulus
        lo = max(lo, 1)
        if hi - lo <= 2048 or m > _NUMPY_SPLIT_LIMIT:
            acc = 1
            for j in range(lo, hi):
                if j % p:
                    acc = acc * j % m
            return acc
        acc = 1
        for start in range(lo, hi, _CHUNK):
            stop = min(start + _CHUNK, hi)
            arr = np.arange(start, stop, dtype=np.int64)
            arr = arr[arr % p != 0]
            acc = acc * _tree_reduce(arr, m) % m
        return acc

    def _fill(self, points: Iterable[int]) -> None:
        for n in sorted(set(points)):
            if n in self.table:
                continue
            n0 = self._keys[bisect_right(self._keys, n) - 1]
            val = self.table[n0] * self._segment_product(n0, n) % self.context.modulus
            self.table[n] = val
            insort(self._keys, n)

    def _f(self, n: int) -> int:
        """f(n) = prod_{0<j<n, p-free} j mod p^K, via reflection for large n."""
        m, p = self.context.modulus, self.context.p
        half = (m + 1) // 2
        if n <= half:
            return self.table[n]
        mirror = m - n
        c = mirror - mirror // p
        inv = pow(self.table[mirror + 1], -1, m)
        return (-inv if c % 2 == 0 else inv) % m

    def _reflection_points(self, ns: Iterable[int]) -> set[int]:
        m = self.context.modulus
        half = (m + 1) // 2
        out = set()
        for n in ns:
            if n == 0:
                continue
            out.add(n if n <= half else m - n + 1)
        return out

    # -- gamma values ---------------------------------------------------------

    def _reduce_argument(self, x: Fraction) -> int:
        if x.denominator % self.context.p == 0:
            raise DenominatorDivisibleByP(
                f"{x} has denominator divisible by {self.context.p}"
            )
        m = self.context.modulus
        return x.numerator * pow(x.denominator, -1, m) % m

    def _gamma_of_n(self, n: int) -> int:
        if n == 0:
            return 1
        f = self._f(n)
        return f if n % 2 == 0 else -f % self.context.modulus

    def gamma_many(self, args: Iterable[Fraction]) -> dict[Fraction, int]:
        """Gamma values for a batch of rationals, one table sweep for all."""
        wanted = {Fraction(x) for x in args}
        ns = {x: self._reduce_argument(x) for x in wanted}
        self._fill(self._reflection_points(ns.values()))
        return {x: self._gamma_of_n(n) for x, n in ns.items()}

    def gamma(self, x) -> int:
        x = Fraction(x)
        return self.gamma_many([x])[x]

    @lru_cache(maxsize=64)
    def rational_table(self, denominator: int) -> list[int]:
        """Gamma_p(c/denominator) for every c in [0, denominator), as a list."""
        vals = self.gamma_many(Fraction(c, denominator) for c in range(denominator))
        return [vals[Fraction(c, denominator)] for c in range(denominator)]


@lru_cache(maxsize=None)
def gamma_cache(p: int, K: int) -> GammaCache:
    return GammaCache(PrecisionContext(p, K))


def gamma_p(x, cache: GammaCache) -> ZpElement:
    """Morita p-adic gamma of a rational with p-free denominator, mod p^K."""
    return ZpElement(cache.gamma(Fraction(x)), cache.context)


def verify_reflection(x, cache: GammaCache) -> bool:
    """Gamma_p(x) * Gamma_p(1-x) must be the sign (-1)^{x0}, where x0 is the
    representative of x mod p in {1, ..., p}."""
    x = Fraction(x)
    m = cache.context.modulus
    p = cache.context.p
    vals = cache.gamma_many([x, 1 - x])
    prod = vals[x] * vals[1 - x] % m
    r0 = x.numerator * pow(x.denominator, -1, p) % p
    x0 = p if r0 == 0 else r0
    expected = (m - 1) if x0 % 2 else 1
    return prod == expected


def _omega_power(t_int: int, exponent: int, uctx: UnramifiedContext):
    """omega(t)^exponent for a positive integer t coprime to p."""
    base = teichmueller(t_int % uctx.p, uctx)
    e = exponent % (uctx.q - 1)
    return zq_pow(base, e)


def lemma31_sides(t: int, j: int, uctx: UnramifiedContext):
    """Both sides of the two gamma multiplication identities over a
    denominator-t grid shifted by j/(q-1), as Z_q values mod p^K.

    Returns ((lhs1, rhs1), (lhs2, rhs2)).
    """
    p, r, q = uctx.p, uctx.r, uctx.q
    if t <= 0 or t % p == 0:
        raise ValueError("t must be a positive integer coprime to p")
    if not 0 <= j <= q - 2:
        raise ValueError("j out of range")
    cache = gamma_cache(p, uctx.K)
    m = uctx.modulus

    args = set()
    for i in range(r):
        pi = p**i
        args.add(frac_floor(Fraction(t * pi * j, q - 1))[0])
        args.add(frac_floor(Fraction(-t * pi * j, q - 1))[0])
        for h in range(t):
            if h:
                args.add(frac_floor(Fraction(h * pi, t))[0])
            args.add(frac_floor(Fraction(h * pi, t) + Fraction(pi * j, q - 1))[0])
            args.add(frac_floor(Fraction((1 + h) * pi, t) - Fraction(pi * j, q - 1))[0])
    g = cache.gamma_many(args)

    def gv(x: Fraction) -> int:
        return g[frac_floor(x)[0]]

    lhs1 = rhs1 = lhs2 = rhs2 = 1
    for i in range(r):
        pi = p**i
        lhs1 = lhs1 * gv(Fraction(t * pi * j, q - 1)) % m
        lhs2 = lhs2 * gv(Fraction(-t * pi * j, q - 1)) % m
        for h in range(1, t):
            base = gv(Fraction(h * pi, t))
            lhs1 = lhs1 * base % m
            lhs2 = lhs2 * base % m
        for h in range(t):
            rhs1 = rhs1 * gv(Fraction(h * pi, t) + Fraction(pi * j, q - 1)) % m
            rhs2 = rhs2 * gv(Fraction((1 + h) * pi, t) - Fraction(pi * j, q - 1)) % m

    left1 = _omega_power(t, t * j, uctx).scale(lhs1)
    left2 = _omega_power(t, -t * j, uctx).scale(lhs2)
    return (left1, uctx.from_int(rhs1)), (left2, uctx.from_int(rhs2))


def verify_lemma31(t: int, j: int, uctx: UnramifiedContext) -> bool:
    """Both gamma multiplication identities, checked mod p^K."""
    (l1, r1), (l2, r2) = lemma31_sides(t, j, uctx)
    return l1.coeffs == r1.coeffs and l2.coeffs == r2.coeffs


def eq29_sides(l: int, uctx: UnramifiedContext):
    """(gamma product over Frobenius twists, (-1)^r omega-bar^l(-1)) mod p^K."""
    p, r, q = uctx.p, uctx.r, uctx.q
    if not 0 < l < q - 1:
        raise ValueError("l must satisfy 0 < l < q-1")
    cache = gamma_cache(p, uctx.K)
    m = uctx.modulus
    args = set()
    for i in range(r):
        pi = p**i
        args.add(frac_floor(Fraction((q - 1 - l) * pi, q - 1))[0])
        args.add(frac_floor(Fraction(l * pi, q - 1))[0])
    g = cache.gamma_many(args)
    lhs = 1
    for i in range(r):
        pi = p**i
        lhs = lhs * g[frac_floor(Fraction((q - 1 - l) * pi, q - 1))[0]] % m
        lhs = lhs * g[frac_floor(Fraction(l * pi, q - 1))[0]] % m
    omega_minus_one = teichmueller(-1 % p, uctx)
    rhs = zq_pow(zq_inv(omega_minus_one), l % (q - 1))
    if r % 2:
        rhs = -rhs
    return uctx.from_int(lhs), rhs


def verify_eq29(l: int, uctx: UnramifiedContext) -> bool:
    """Product over Frobenius twists of Gamma_p at l/(q-1) and its complement
    equals (-1)^r * omega-bar^l(-1), mod p^K."""
    lhs, rhs = eq29_sides(l, uctx)
    return lhs.coeffs == rhs.coeffs


def lemma5_sides(l: int, i: int, p: int, r: int) -> tuple[int, int]:
    """The two signed floor sums built from l p^i/(q-1) and the fractional
    parts of p^i/2, -p^i/6, -5 p^i/6."""
    q = p**r
    if not 1 <= l <= q - 2:
        raise ValueError("l out of range")
    if 2 * l == q - 1:
        raise ValueError("l = (q-1)/2 is excluded")
    if not 0 <= i <= r - 1:
        raise ValueError("i out of range")
    if p in (2, 3):
        raise ValueError("p must be coprime to 6")
    pi = p**i
    s = Fraction(l * pi, q - 1)

    def fl(x) -> int:
        return frac_floor(x)[1]

    lhs = fl(3 * s) + 3 * fl(-s) - 3 * fl(-2 * s) - fl(6 * s)
    half = frac_floor(Fraction(pi, 2))[0]
    sixth = frac_floor(Fraction(-pi, 6))[0]
    five_sixth = frac_floor(Fraction(-5 * pi, 6))[0]
    rhs = -2 * fl(half - s) - fl(sixth + s) - fl(five_sixth + s)
    return lhs, rhs


def verify_lemma5(l: int, i: int, p: int, r: int) -> bool:
    """Exact integer identity between the two floor sums."""
    lhs, rhs = lemma5_sides(l, i, p, r)
    return lhs == rhs
