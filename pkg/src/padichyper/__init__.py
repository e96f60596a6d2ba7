"""Exact p-adic hypergeometric series over finite fields, with the point
counting and character machinery to verify their transformation identities.

Layers, bottom up:

- ``padic``: Z/p^K, the unramified extension Z_q, Teichmueller lifts, and
  valuation/unit p-adic numbers with tracked absolute precision.
- ``gamma``: Morita's p-adic gamma at rational arguments (batched, cached)
  and the gamma product identities.
- ``fields``: F_{p^r} with deterministic generator and discrete-log tables,
  multiplicative characters, trace.
- ``gauss``: complex-float Gauss sums and their product relations.
- ``hyper``: the nGn series evaluator and integer recovery.
- ``curves``: Weierstrass/Hessian point counts and the parameter bridge.
- ``verify``: identity checks as records, range sweeps, reports.
- ``cli``: the command-line entry point.
"""

from .errors import (
    BoundTooLargeForPrecision,
    CompositeP,
    ContextMismatch,
    DenominatorDivisibleByP,
    FieldTooLarge,
    ModulusMismatch,
    NoRepresentativeInBound,
    NotAnInteger,
    NotAUnit,
    PadicHyperError,
    PrecisionExhausted,
    PreconditionFailed,
    SingularCurve,
    SingularHessian,
    TrivialCharacter,
    ZeroArgument,
)
from .padic import (
    PadicNumber,
    PrecisionContext,
    UnramifiedContext,
    ZpElement,
    ZqElement,
    default_precision,
    frac_floor,
    padic_sum,
    teichmueller,
    unramified_context,
    zp_from_rational,
    zq_arith,
    zq_inv,
    zq_pow,
)
from .gamma import GammaCache, gamma_cache, gamma_p, verify_eq29, verify_lemma31, verify_lemma5, verify_reflection
from .fields import (
    CharacterIndex,
    FqElement,
    FqField,
    build_field,
    char_eval_padic,
    check_orthogonality,
    phi,
    trace,
    uctx_for,
)
from .gauss import (
    check_davenport_hasse,
    check_gk_product,
    check_theta_expansion,
    gauss_sum,
)
from .hyper import GInstance, GParams, GProfile, g_eval, g_term, gparams, profile_for, recover_integer
from .curves import (
    CurveCount,
    HessianCurve,
    WeierstrassCurve,
    check_count_relation,
    count_hessian,
    count_weierstrass,
    hessian_bridge,
    is_generic,
    j_invariant,
)
from .verify import (
    AlphaValue,
    RangeSpec,
    Report,
    VerifyRecord,
    run_suite,
    verify_bs1,
    verify_cor2,
    verify_hessian,
    verify_mc,
    verify_mt1,
)

__version__ = "0.1.0"
