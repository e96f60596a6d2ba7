"""Complex floating-point Gauss sums over F_q, verifying the character-sum
facts that live in C rather than Z_q: the G_k G_{-k} product, the expansion of
the additive character through Gauss sums, and the Davenport-Hasse relation.

This module is float-only and quarantined: nothing p-adic depends on it.
Roots of unity are tabulated once per field so each sum is a table gather.
"""

from __future__ import annotations

import cmath
import math
from typing import Union

import numpy as np

from .errors import ModulusMismatch, TrivialCharacter, ZeroArgument
from .fields import CharacterIndex, FqElement, FqField, as_char_exponent, trace

#: Complex values are plain double-precision Python complex numbers.
ComplexVal = complex


def default_tolerance(field: FqField) -> float:
    """Absolute tolerance 1e-6 * q: q-1 unit-modulus terms accumulate error
    linearly in q at double precision."""
    return 1e-6 * field.q


class GaussTables:
    """Per-field root-of-unity tables and all q-1 Gauss sums."""

    def __init__(self, field: FqField):
        self.field = field
        q, q1, p = field.q, field.q - 1, field.p
        self.zeta_q1 = np.exp(2j * math.pi * np.arange(q1) / q1)
        self.zeta_p = np.exp(2j * math.pi * np.arange(p) / p)
        tr = np.array([trace(field.from_index(i)) for i in range(q)], dtype=np.int64)
        # theta(g^s) for s = 0..q-2
        self.theta_of_s = self.zeta_p[tr[np.array(field.exp[:q1], dtype=np.int64)]]
        s = np.arange(q1)
        self.G = np.array(
            [np.sum(self.zeta_q1[(m * s) % q1] * self.theta_of_s) for m in range(q1)]
        )
        if not np.all(np.isfinite(self.G)):
            raise ArithmeticError("non-finite Gauss sum")


_TABLES: dict[int, GaussTables] = {}


def gauss_tables(field: FqField) -> GaussTables:
    key = id(field)
    if key not in _TABLES:
        _TABLES[key] = GaussTables(field)
    return _TABLES[key]


def gauss_sum(m: Union[int, CharacterIndex], field: FqField) -> ComplexVal:
    """G(T^m) = sum over x != 0 of T^m(x) theta(x); the x = 0 term vanishes
    by the chi(0) = 0 convention."""
    e = as_char_exponent(m, field.q - 1)
    return complex(gauss_tables(field).G[e])


def _char_value(e: int, x: FqElement) -> ComplexVal:
    """T^e(x) for nonzero x, as an exact table root of unity."""
    tab = gauss_tables(x.field)
    return complex(tab.zeta_q1[e * x.dlog() % (x.field.q - 1)])


def gk_product_sides(k: Union[int, CharacterIndex], field: FqField) -> tuple[ComplexVal, ComplexVal]:
    """(G_k G_{-k}, q T^k(-1)) for a nontrivial character index k."""
    q1 = field.q - 1
    e = as_char_exponent(k, q1)
    if e == 0:
        raise TrivialCharacter("k must be nonzero mod q-1")
    tab = gauss_tables(field)
    lhs = complex(tab.G[e] * tab.G[(-e) % q1])
    # T^k(-1) = zeta^{k (q-1)/2} = (-1)^k exactly
    rhs = complex(field.q * (-1 if e % 2 else 1))
    return lhs, rhs


def check_gk_product(k: Union[int, CharacterIndex], field: FqField, tol: float | None = None) -> bool:
    """|G_k G_{-k} - q T^k(-1)| < tol for a nontrivial character index k."""
    lhs, rhs = gk_product_sides(k, field)
    if tol is None:
        tol = default_tolerance(field)
    return abs(lhs - rhs) < tol


def theta_expansion_sides(alpha: FqElement, field: FqField) -> tuple[ComplexVal, ComplexVal]:
    """(theta(alpha), its expansion (1/(q-1)) sum_m G_{-m} T^m(alpha))."""
    if alpha.is_zero:
        raise ZeroArgument("alpha must be nonzero")
    tab = gauss_tables(field)
    q1 = field.q - 1
    lhs = complex(tab.zeta_p[trace(alpha)])
    s = alpha.dlog()
    ms = np.arange(q1)
    rhs = complex(np.sum(tab.G[(-ms) % q1] * tab.zeta_q1[(ms * s) % q1]) / q1)
    return lhs, rhs


def check_theta_expansion(alpha: FqElement, field: FqField, tol: float | None = None) -> bool:
    """theta(alpha) against its Gauss-sum expansion."""
    lhs, rhs = theta_expansion_sides(alpha, field)
    if tol is None:
        tol = default_tolerance(field)
    return abs(lhs - rhs) < tol


def davenport_hasse_sides(
    m: int, psi: Union[int, CharacterIndex], field: FqField
) -> tuple[ComplexVal, ComplexVal]:
    """Both sides of the Davenport-Hasse product relation for the m-torsion
    characters twisted by psi."""
    q1 = field.q - 1
    if m <= 0 or q1 % m != 0:
        raise ModulusMismatch(f"q = {field.q} is not 1 mod {m}")
    e = as_char_exponent(psi, q1)
    tab = gauss_tables(field)
    step = q1 // m
    lhs = 1 + 0j
    base = 1 + 0j
    for k in range(m):
        lhs *= tab.G[(k * step + e) % q1]
        base *= tab.G[k * step]
    m_elt = field.element(m) ** (-m)
    rhs = -tab.G[(m * e) % q1] * _char_value(e, m_elt) * base
    if not (cmath.isfinite(lhs) and cmath.isfinite(rhs)):
        raise ArithmeticError("non-finite product")
    return complex(lhs), complex(rhs)


def check_davenport_hasse(
    m: int, psi: Union[int, CharacterIndex], field: FqField, tol: float | None = None
) -> bool:
    """Product of G over the m-torsion characters twisted by psi against
    -G(psi^m) psi(m^-m) times the untwisted product."""
    lhs, rhs = davenport_hasse_sides(m, psi, field)
    if tol is None:
        tol = default_tolerance(field)
    return abs(lhs - rhs) < tol
