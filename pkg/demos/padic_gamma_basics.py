"""A tour of the p-adic gamma function at rational arguments.

Run with: python demos/padic_gamma_basics.py
"""

from fractions import Fraction

from padichyper import gamma_cache, verify_reflection

p, K = 7, 6
cache = gamma_cache(p, K)
mod = p**K

print(f"Working modulo {p}^{K} = {mod}\n")

# The function interpolates the signed partial products of p-free integers:
# at nonnegative integers it is exactly (-1)^n * prod_{0<j<n, p∤j} j.
print("At small integers (value mod p^K):")
for n in range(8):
    print(f"  Gamma_{p}({n}) = {cache.gamma(Fraction(n))}")

# Rational arguments with p-free denominator are reduced mod p^K first;
# continuity makes the truncation exact digit-for-digit.
print("\nAt rationals:")
for x in (Fraction(1, 2), Fraction(1, 3), Fraction(-5, 6), Fraction(22, 3)):
    print(f"  Gamma_{p}({x}) = {cache.gamma(x)}")

# Digit agreement: arguments congruent mod p^m give values congruent mod p^m.
x = Fraction(1, 2)
print("\nContinuity in the argument:")
for m in range(1, K):
    y = x + 3 * p**m
    gx, gy = cache.gamma(x), cache.gamma(y)
    print(f"  x = 1/2 vs x + 3*{p}^{m}: values agree mod {p}^{m}: {(gx - gy) % p**m == 0}")

# Reflection: Gamma(x) Gamma(1-x) is the sign (-1)^{x0} with x0 = x mod p in {1..p}.
print("\nReflection products:")
for x in (Fraction(0), Fraction(1, 2), Fraction(2, 3), Fraction(-1, 4)):
    prod = cache.gamma(x) * cache.gamma(1 - x) % mod
    sign = "+1" if prod == 1 else "-1" if prod == mod - 1 else "??"
    print(f"  Gamma({x}) * Gamma({1 - x}) = {sign}   (verified: {verify_reflection(x, cache)})")
