"""Numeric Gauss sums over F_q: absolute values, the product relation, the
additive-character expansion, and the Davenport-Hasse relation.

Run with: python demos/gauss_sums.py
"""

from padichyper import (
    build_field,
    check_davenport_hasse,
    check_gk_product,
    check_orthogonality,
    check_theta_expansion,
    gauss_sum,
)

field = build_field(13, 1)
q = field.q

print(f"Gauss sums over F_{q} (complex doubles):")
print(f"  G(trivial) = {gauss_sum(0, field):.6f}  (always -1)")
for m in (1, 2, 6):
    G = gauss_sum(m, field)
    print(f"  m={m}: G = {G:.6f},  |G|^2 = {abs(G)**2:.9f}  (exactly q in theory)")

print("\nExact orthogonality of the character table:", check_orthogonality(field))

print("\nProduct relation G_k G_(-k) = q T^k(-1):")
for k in (1, 3, 6):
    print(f"  k={k}: {check_gk_product(k, field)}")

print("\nAdditive character through its Gauss-sum expansion:")
for idx in (1, 5, 12):
    alpha = field.from_index(idx)
    print(f"  alpha={idx}: {check_theta_expansion(alpha, field)}")

print("\nDavenport-Hasse products over the m-torsion characters:")
f = build_field(7, 2)  # q = 49 = 1 mod 2, 3, 6
for m in (2, 3, 6):
    ok = all(check_davenport_hasse(m, e, f) for e in range(0, f.q - 1, 7))
    print(f"  q=49, m={m}, sampled psi: {ok}")
