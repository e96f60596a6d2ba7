"""Exact arithmetic in Z/p^K, the unramified extension Z_q mod p^K, and
valuation/unit p-adic numbers.

Everything here is exact: residues are Python integers reduced mod p^K,
extension elements are coefficient vectors in the power basis of a lifted
defining polynomial, and every p-adic value carries the absolute precision
(the exponent A such that the value is known up to O(p^A)) through all
operations.  All types are immutable after construction and safe to share.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .errors import (
    CompositeP,
    ContextMismatch,
    DenominatorDivisibleByP,
    NotAUnit,
    PrecisionExhausted,
    ZeroArgument,
)

RationalLike = Union[Fraction, int]


def frac_floor(x: RationalLike) -> tuple[Fraction, int]:
    """Split x into (fractional part in [0,1), floor), exactly."""
    x = Fraction(x)
    fl = x.numerator // x.denominator
    return x - fl, fl


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (intended for n <= ~10^10)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def default_precision(p: int, r: int) -> int:
    """Default working precision K = max(5, ceil(log_p(20 q)) + r): identity
    comparisons involve integers bounded by a small multiple of q, and the
    extra r digits absorb the valuation shifts of the series terms."""
    q = p**r
    k0 = 1
    while p**k0 < 20 * q:
        k0 += 1
    return max(5, k0 + r)


def padic_valuation(n: int, p: int) -> int:
    """Largest w with p^w | n; requires n != 0."""
    if n == 0:
        raise ZeroArgument("valuation of 0 is infinite")
    w = 0
    while n % p == 0:
        n //= p
        w += 1
    return w


@dataclass(frozen=True)
class PrecisionContext:
    """Working ring Z/p^K for an odd prime p."""

    p: int
    K: int
    modulus: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.p == 2 or not is_prime(self.p):
            raise CompositeP(f"p must be an odd prime, got {self.p}")
        if self.K < 1:
            raise ValueError(f"precision exponent must be >= 1, got {self.K}")
        object.__setattr__(self, "modulus", self.p**self.K)


@dataclass(frozen=True)
class ZpElement:
    """Residue in Z/p^K."""

    residue: int
    context: PrecisionContext

    def __post_init__(self):
        if not 0 <= self.residue < self.context.modulus:
            raise ValueError("residue out of range")

    def _check(self, other: "ZpElement"):
        if self.context != other.context:
            raise ContextMismatch("Zp operands from different contexts")

    def __add__(self, other):
        self._check(other)
        return ZpElement((self.residue + other.residue) % self.context.modulus, self.context)

    def __sub__(self, other):
        self._check(other)
        return ZpElement((self.residue - other.residue) % self.context.modulus, self.context)

    def __mul__(self, other):
        self._check(other)
        return ZpElement((self.residue * other.residue) % self.context.modulus, self.context)

    def __neg__(self):
        return ZpElement(-self.residue % self.context.modulus, self.context)

    @property
    def is_unit(self) -> bool:
        return self.residue % self.context.p != 0

    def inverse(self) -> "ZpElement":
        if not self.is_unit:
            raise NotAUnit("element is divisible by p")
        return ZpElement(pow(self.residue, -1, self.context.modulus), self.context)


def zp_from_rational(x: RationalLike, ctx: PrecisionContext) -> ZpElement:
    """Embed a rational with p-free denominator into Z/p^K."""
    x = Fraction(x)
    if x.denominator % ctx.p == 0:
        raise DenominatorDivisibleByP(f"{x} has denominator divisible by {ctx.p}")
    res = x.numerator * pow(x.denominator, -1, ctx.modulus) % ctx.modulus
    return ZpElement(res, ctx)


# ---------------------------------------------------------------------------
# Polynomial helpers over F_p, used to pick and validate defining polynomials.
# Polynomials are dense coefficient lists, lowest degree first.


def _poly_mulmod(a: Sequence[int], b: Sequence[int], poly: Sequence[int], p: int) -> list[int]:
    """a*b reduced by the monic polynomial x^r + poly, all mod p."""
    r = len(poly)
    prod = [0] * (2 * r - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for d in range(2 * r - 2, r - 1, -1):
        c = prod[d]
        if c:
            prod[d] = 0
            for j, cj in enumerate(poly):
                prod[d - r + j] = (prod[d - r + j] - c * cj) % p
    return prod[:r]


def _poly_powmod(a: Sequence[int], e: int, poly: Sequence[int], p: int) -> list[int]:
    r = len(poly)
    result = [1] + [0] * (r - 1)
    base = list(a)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, poly, p)
        base = _poly_mulmod(base, base, poly, p)
        e >>= 1
    return result


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    """Monic gcd of dense polynomials over F_p."""

    def deg(f):
        d = len(f) - 1
        while d >= 0 and f[d] == 0:
            d -= 1
        return d

    while deg(b) >= 0:
        da, db = deg(a), deg(b)
        if da < db:
            a, b = b, a
            continue
        inv = pow(b[deg(b)], -1, p)
        while deg(a) >= deg(b):
            da = deg(a)
            c = a[da] * inv % p
            shift = da - deg(b)
            for j in range(deg(b) + 1):
                a[shift + j] = (a[shift + j] - c * b[j]) % p
        a, b = b, a
    d = deg(a)
    inv = pow(a[d], -1, p)
    return [c * inv % p for c in a[: d + 1]]


def _is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Irreducibility of the monic polynomial x^r + poly over F_p."""
    r = len(poly)
    if r == 1:
        return True
    x = [0, 1] + [0] * (r - 2)
    frob = list(x)
    for _ in range(r):
        frob = _poly_powmod(frob, p, poly, p)
    if frob != x[:r]:
        return False
    for ell in prime_factors(r):
        frob = list(x)
        for _ in range(r // ell):
            frob = _poly_powmod(frob, p, poly, p)
        diff = [(frob[i] - x[i]) % p for i in range(r)]
        full = list(poly) + [1]
        if len(_poly_gcd(diff, full, p)) - 1 != 0:
            return False
    return True


def _root_is_primitive(poly: Sequence[int], p: int) -> bool:
    """Does the residue class of x generate the multiplicative group?"""
    r = len(poly)
    q = p**r
    one = [1] + [0] * (r - 1)
    x = ([0, 1] + [0] * (r - 2)) if r > 1 else [(-poly[0]) % p]
    for ell in prime_factors(q - 1):
        if _poly_powmod(x, (q - 1) // ell, poly, p) == one:
            return False
    return True


def smallest_primitive_root(p: int) -> int:
    """Least primitive root modulo an odd prime p."""
    facs = prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // ell, p) != 1 for ell in facs):
            return g
    raise CompositeP(f"no primitive root mod {p}; is p prime?")


@lru_cache(maxsize=None)
def find_defining_poly(p: int, r: int, variant: int = 0) -> tuple[int, ...]:
    """Deterministic defining polynomial for F_{p^r}: lower coefficients of the
    first monic degree-r polynomial, in lexicographic order of the coefficient
    tuple (c_0, ..., c_{r-1}), that is irreducible mod p and whose root
    generates the multiplicative group.

    For r = 1 the polynomial is x - g with g the (variant+1)-th primitive
    root, so the "root" convention matches the prime-field generator.
    ``variant`` skips that many admissible candidates (test hook for
    checking model independence).
    """
    if r == 1:
        facs = prime_factors(p - 1)
        skipped = 0
        for g in range(2, p):
            if all(pow(g, (p - 1) // ell, p) != 1 for ell in facs):
                if skipped == variant:
                    return ((-g) % p,)
                skipped += 1
        raise CompositeP(f"no primitive root mod {p}")
    skipped = 0
    for counter in range(p**r):
        coeffs = []
        c = counter
        for _ in range(r):
            c, digit = divmod(c, p)
            coeffs.append(digit)
        poly = tuple(coeffs)
        if _is_irreducible(poly, p) and _root_is_primitive(poly, p):
            if skipped == variant:
                return poly
            skipped += 1
    raise CompositeP(f"no admissible degree-{r} polynomial over F_{p}")


@dataclass(frozen=True)
class UnramifiedContext:
    """Z_q mod p^K presented as Z/p^K[x] modulo a monic lifted polynomial.

    ``poly`` holds the lower coefficients (c_0, ..., c_{r-1}) of
    x^r + c_{r-1} x^{r-1} + ... + c_0, reduced mod p^K; its reduction mod p
    must be irreducible with a primitive root (checked at construction).
    """

    base: PrecisionContext
    r: int
    poly: tuple[int, ...]

    def __post_init__(self):
        if self.r < 1 or len(self.poly) != self.r:
            raise ValueError("poly must have exactly r lower coefficients")
        if any(not 0 <= c < self.base.modulus for c in self.poly):
            raise ValueError("poly coefficients must be reduced mod p^K")
        pm = self.poly_mod_p
        if not _is_irreducible(pm, self.p):
            raise ValueError("defining polynomial is reducible mod p")
        if not _root_is_primitive(pm, self.p):
            raise ValueError("root of defining polynomial is not primitive")

    @property
    def p(self) -> int:
        return self.base.p

    @property
    def K(self) -> int:
        return self.base.K

    @property
    def modulus(self) -> int:
        return self.base.modulus

    @property
    def q(self) -> int:
        return self.p**self.r

    @property
    def poly_mod_p(self) -> tuple[int, ...]:
        return tuple(c % self.p for c in self.poly)

    def element(self, coeffs: Sequence[int]) -> "ZqElement":
        cs = tuple(c % self.modulus for c in coeffs)
        if len(cs) < self.r:
            cs = cs + (0,) * (self.r - len(cs))
        return ZqElement(cs, self)

    def from_int(self, n: int) -> "ZqElement":
        return self.element((n,))

    @property
    def one(self) -> "ZqElement":
        return self.from_int(1)

    @property
    def zero_elt(self) -> "ZqElement":
        return self.from_int(0)

    def reduce_to(self, K2: int) -> "UnramifiedContext":
        """The same extension at a smaller precision exponent."""
        if K2 > self.K:
            raise ValueError("can only reduce precision")
        if K2 == self.K:
            return self
        m2 = self.p**K2
        return unramified_context(self.p, K2, self.r, tuple(c % m2 for c in self.poly))


@lru_cache(maxsize=None)
def unramified_context(p: int, K: int, r: int, poly: tuple[int, ...] | None = None) -> UnramifiedContext:
    """Cached UnramifiedContext; defaults to the deterministic defining polynomial."""
    if poly is None:
        poly = find_defining_poly(p, r)
        poly = tuple(c % p**K for c in poly)
    return UnramifiedContext(PrecisionContext(p, K), r, poly)


@dataclass(frozen=True)
class ZqElement:
    """Element of Z_q mod p^K as coordinates in the power basis."""

    coeffs: tuple[int, ...]
    context: UnramifiedContext

    def __post_init__(self):
        if len(self.coeffs) != self.context.r:
            raise ValueError("coefficient vector has wrong length")

    def _check(self, other: "ZqElement"):
        if self.context != other.context:
            raise ContextMismatch("Zq operands from different contexts")

    def __add__(self, other):
        self._check(other)
        m = self.context.modulus
        return ZqElement(tuple((a + b) % m for a, b in zip(self.coeffs, other.coeffs)), self.context)

    def __sub__(self, other):
        self._check(other)
        m = self.context.modulus
        return ZqElement(tuple((a - b) % m for a, b in zip(self.coeffs, other.coeffs)), self.context)

    def __neg__(self):
        m = self.context.modulus
        return ZqElement(tuple(-a % m for a in self.coeffs), self.context)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        ctx = self.context
        m = ctx.modulus
        r = ctx.r
        if r == 1:
            return ZqElement((self.coeffs[0] * other.coeffs[0] % m,), ctx)
        prod = [0] * (2 * r - 1)
        for i, ai in enumerate(self.coeffs):
            if ai:
                for j, bj in enumerate(other.coeffs):
                    prod[i + j] = (prod[i + j] + ai * bj) % m
        poly = ctx.poly
        for d in range(2 * r - 2, r - 1, -1):
            c = prod[d]
            if c:
                prod[d] = 0
                for j, cj in enumerate(poly):
                    prod[d - r + j] = (prod[d - r + j] - c * cj) % m
        return ZqElement(tuple(prod[:r]), ctx)

    __rmul__ = __mul__

    def scale(self, n: int) -> "ZqElement":
        m = self.context.modulus
        return ZqElement(tuple(a * n % m for a in self.coeffs), self.context)

    def __pow__(self, e: int) -> "ZqElement":
        return zq_pow(self, e)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def is_unit(self) -> bool:
        return any(c % self.context.p for c in self.coeffs)

    def valuation(self) -> int | None:
        """min_i v_p(coeff_i), or None for the zero vector."""
        if self.is_zero:
            return None
        return min(padic_valuation(c, self.context.p) for c in self.coeffs if c)

    def shift(self, w: int) -> "ZqElement":
        """Multiply by p^w (w >= 0)."""
        return self.scale(self.context.p**w)

    def unshift(self, w: int) -> "ZqElement":
        """Divide exactly by p^w; every coefficient must be divisible."""
        pw = self.context.p**w
        if any(c % pw for c in self.coeffs):
            raise ValueError("not divisible by p^w")
        return ZqElement(tuple(c // pw for c in self.coeffs), self.context)

    def reduce_to(self, K2: int) -> "ZqElement":
        ctx2 = self.context.reduce_to(K2)
        m2 = ctx2.modulus
        return ZqElement(tuple(c % m2 for c in self.coeffs), ctx2)

    def inverse(self) -> "ZqElement":
        return zq_inv(self)

    def __repr__(self):
        return f"Zq{self.coeffs}@{self.context.p}^{self.context.K}"


def zq_arith(kind: str, x: ZqElement, y: ZqElement) -> ZqElement:
    """Ring operation in Z_q mod p^K; kind in {'add', 'sub', 'mul'}."""
    if kind == "add":
        return x + y
    if kind == "sub":
        return x - y
    if kind == "mul":
        return x * y
    raise ValueError(f"unknown operation {kind!r}")


def zq_inv(x: ZqElement) -> ZqElement:
    """Inverse of a unit, via the residue-field inverse lifted by Hensel iteration."""
    if not x.is_unit:
        raise NotAUnit("element is divisible by p")
    ctx = x.context
    p, r, K = ctx.p, ctx.r, ctx.K
    if r == 1:
        return ZqElement((pow(x.coeffs[0], -1, ctx.modulus),), ctx)
    poly_p = list(ctx.poly_mod_p)
    a_mod_p = [c % p for c in x.coeffs]
    inv_p = _poly_powmod(a_mod_p, p**r - 2, poly_p, p)
    z = ctx.element(tuple(inv_p))
    two = ctx.from_int(2)
    for _ in range(max(1, K).bit_length() + 1):
        z = z * (two - x * z)
    if (x * z).coeffs != ctx.one.coeffs:
        raise AssertionError("Hensel inversion failed to converge")
    return z


def zq_pow(x: ZqElement, e: int) -> ZqElement:
    """x^e by binary exponentiation, e >= 0."""
    if e < 0:
        raise ValueError("negative exponent; invert first")
    result = x.context.one
    base = x
    while e:
        if e & 1:
            result = result * base
        base = base * base
        e >>= 1
    return result


def _coeffs_of(t) -> tuple[int, ...]:
    if isinstance(t, int):
        return (t,)
    if hasattr(t, "coeffs"):
        return tuple(t.coeffs)
    return tuple(t)


def teichmueller(t, uctx: UnramifiedContext) -> ZqElement:
    """Teichmueller lift of a nonzero residue-field element: the unique
    (q-1)-th root of unity in Z_q congruent to t mod p.

    Computed by iterating z <- z^q from the coefficient-wise naive lift;
    each step gains at least one p-digit, so at most K steps are needed.
    Accepts an integer, a coefficient sequence, or anything with ``.coeffs``.
    """
    coeffs = _coeffs_of(t)
    coeffs = tuple(c % uctx.p for c in coeffs)
    if all(c == 0 for c in coeffs):
        raise ZeroArgument("Teichmueller lift requires a nonzero element")
    if len(coeffs) > uctx.r:
        raise ContextMismatch("element has more coordinates than the extension degree")
    z = uctx.element(coeffs)
    q = uctx.q
    for _ in range(uctx.K + 1):
        nxt = zq_pow(z, q)
        if nxt.coeffs == z.coeffs:
            break
        z = nxt
    else:
        raise AssertionError("q-power iteration did not stabilize")
    return z


# ---------------------------------------------------------------------------
# Valuation/unit p-adic numbers with tracked absolute precision.


@dataclass(frozen=True)
class PadicNumber:
    """A p-adic number p^valuation * unit known up to O(p^abs_prec).

    ``exact_zero`` marks a value indistinguishable from 0 at the available
    precision (unit unused); ``abs_prec`` may be ``math.inf`` for exactly
    embedded integers that happen to be zero.
    """

    valuation: int
    unit: ZqElement | None
    abs_prec: float
    exact_zero: bool = False

    def __post_init__(self):
        if self.exact_zero:
            return
        if self.unit is None or not self.unit.is_unit:
            raise ValueError("nonzero PadicNumber needs a unit part")
        if self.abs_prec <= self.valuation:
            raise PrecisionExhausted(
                f"value of valuation {self.valuation} known only to O(p^{self.abs_prec})"
            )

    @property
    def context(self) -> UnramifiedContext | None:
        return None if self.unit is None else self.unit.context

    @classmethod
    def zero(cls, abs_prec: float = math.inf) -> "PadicNumber":
        return cls(0, None, abs_prec, exact_zero=True)

    @classmethod
    def from_unit(cls, valuation: int, unit: ZqElement, abs_prec: float | None = None) -> "PadicNumber":
        if abs_prec is None:
            abs_prec = valuation + unit.context.K
        return cls(valuation, unit, abs_prec)

    @classmethod
    def from_int(cls, n: int, uctx: UnramifiedContext) -> "PadicNumber":
        if n == 0:
            return cls.zero()
        w = padic_valuation(n, uctx.p)
        return cls.from_unit(w, uctx.from_int(n // uctx.p**w))

    @classmethod
    def from_rational(cls, x: RationalLike, uctx: UnramifiedContext) -> "PadicNumber":
        x = Fraction(x)
        if x == 0:
            return cls.zero()
        wn = padic_valuation(x.numerator, uctx.p) if x.numerator % uctx.p == 0 else 0
        wd = padic_valuation(x.denominator, uctx.p) if x.denominator % uctx.p == 0 else 0
        num = x.numerator // uctx.p**wn
        den = x.denominator // uctx.p**wd
        unit = uctx.from_int(num * pow(den, -1, uctx.modulus))
        return cls.from_unit(wn - wd, unit)

    def __mul__(self, other: "PadicNumber") -> "PadicNumber":
        if self.exact_zero or other.exact_zero:
            prec = math.inf
            if self.exact_zero:
                prec = min(prec, self.abs_prec + (other.valuation if not other.exact_zero else other.abs_prec))
            if other.exact_zero:
                prec = min(prec, other.abs_prec + (self.valuation if not self.exact_zero else self.abs_prec))
            return PadicNumber.zero(prec)
        v = self.valuation + other.valuation
        unit = self.unit * other.unit
        prec = min(self.abs_prec + other.valuation, other.abs_prec + self.valuation, v + unit.context.K)
        return PadicNumber(v, unit, prec)

    def __neg__(self) -> "PadicNumber":
        if self.exact_zero:
            return self
        return PadicNumber(self.valuation, -self.unit, self.abs_prec)

    def __add__(self, other: "PadicNumber") -> "PadicNumber":
        return padic_sum([self, other])

    def __sub__(self, other: "PadicNumber") -> "PadicNumber":
        return padic_sum([self, -other])

    def scale_int(self, n: int) -> "PadicNumber":
        """Multiply by an exact integer scalar."""
        if self.exact_zero or n == 0:
            if n == 0:
                return PadicNumber.zero()
            return self
        w = padic_valuation(n, self.unit.context.p)
        unit = self.unit.scale(n // self.unit.context.p**w)
        return PadicNumber(self.valuation + w, unit, self.abs_prec + w)

    def reduce_to(self, K2: int) -> "PadicNumber":
        """Re-express with units stored mod p^K2 (abs precision capped accordingly)."""
        if self.exact_zero:
            return self
        prec = min(self.abs_prec, self.valuation + K2)
        if prec <= self.valuation:
            return PadicNumber.zero(prec)
        return PadicNumber(self.valuation, self.unit.reduce_to(K2), prec)

    def agrees_to(self, other: "PadicNumber", prec: int) -> bool:
        """True iff self - other is O(p^prec); both must carry that much precision.

        Works across contexts that present the same extension at different K:
        each side only contributes digits below prec, which its own storage
        precision is guaranteed to cover.
        """
        if self.abs_prec < prec or other.abs_prec < prec:
            raise PrecisionExhausted(
                f"comparison at O(p^{prec}) needs more precision than tracked"
            )
        a, b = self, other
        if a.exact_zero and b.exact_zero:
            return True
        for x, y in ((a, b), (b, a)):
            if x.exact_zero:
                return y.valuation >= prec
        ca, cb = a.unit.context, b.unit.context
        if (ca.p, ca.r) != (cb.p, cb.r):
            raise ContextMismatch("values live in different extensions")
        p = ca.p
        vmin = min(a.valuation, b.valuation)
        rel = prec - vmin
        if rel <= 0:
            return True
        mod_rel = p**rel
        sa = p ** (a.valuation - vmin)
        sb = p ** (b.valuation - vmin)
        if ca.poly_mod_p != cb.poly_mod_p:
            # different models of the same extension are only comparable on
            # the canonical subring Z_p: all higher coordinates must vanish
            higher = [u * sa for u in a.unit.coeffs[1:]] + [u * sb for u in b.unit.coeffs[1:]]
            if any(u % mod_rel for u in higher):
                raise ContextMismatch(
                    "values live in different models and are not both in Z_p"
                )
            return (a.unit.coeffs[0] * sa - b.unit.coeffs[0] * sb) % mod_rel == 0
        return all(
            (ua * sa - ub * sb) % mod_rel == 0
            for ua, ub in zip(a.unit.coeffs, b.unit.coeffs)
        )

    def digits(self, limit: int | None = None) -> str:
        """Canonical base-p rendering, low digit first, prefixed 'valuation:'.

        For r >= 2 each digit is the dot-joined tuple of coordinate digits.
        Only digits guaranteed by abs_prec are printed.
        """
        if self.exact_zero:
            tag = "exact" if self.abs_prec == math.inf else f"O(p^{int(self.abs_prec)})"
            return f"zero:{tag}"
        ctx = self.unit.context
        nd = int(min(self.abs_prec - self.valuation, ctx.K))
        if limit is not None:
            nd = min(nd, limit)
        p = ctx.p
        cols = []
        coeffs = list(self.unit.coeffs)
        for _ in range(nd):
            row = [c % p for c in coeffs]
            coeffs = [c // p for c in coeffs]
            cols.append(".".join(str(d) for d in row) if ctx.r > 1 else str(row[0]))
        return f"{self.valuation}:" + ",".join(cols)

    def __repr__(self):
        return f"PadicNumber({self.digits(limit=6)})"


def padic_sum(terms: Iterable[PadicNumber]) -> PadicNumber:
    """Exact sum: rescale to the minimum valuation, add units mod p^K,
    renormalize (extracting p-powers into the valuation), and report the
    surviving absolute precision.
    """
    terms = list(terms)
    if not terms:
        raise ValueError("empty sum")
    abs_prec = min(t.abs_prec for t in terms)
    nonzero = [t for t in terms if not t.exact_zero]
    if not nonzero:
        return PadicNumber.zero(abs_prec)
    ctx = nonzero[0].unit.context
    for t in nonzero[1:]:
        if t.unit.context != ctx:
            raise ContextMismatch("summands from different contexts")
    vmin = min(t.valuation for t in nonzero)
    rel = abs_prec - vmin
    if rel < 1:
        raise PrecisionExhausted("no guaranteed digits survive at the minimum valuation")
    acc = [0] * ctx.r
    m = ctx.modulus
    p = ctx.p
    for t in nonzero:
        pw = p ** (t.valuation - vmin)
        for i, c in enumerate(t.unit.coeffs):
            acc[i] = (acc[i] + c * pw) % m
    rel_cap = int(min(rel, ctx.K))
    mod_rel = p**rel_cap
    if all(c % mod_rel == 0 for c in acc):
        return PadicNumber.zero(abs_prec)
    w = min(padic_valuation(c % mod_rel, p) for c in acc if c % mod_rel)
    unit = ZqElement(tuple(c // p**w % m for c in acc), ctx)
    return PadicNumber(vmin + w, unit, abs_prec)
