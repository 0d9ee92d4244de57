"""Exact arithmetic for the Erdos-Straus equation 4/n = 1/u1 + 1/u2 + 1/u3:
solution enumeration, Hilbert symbols, certified p-adic points, and the
local invariants of the associated quaternion class.
"""

from .arith import (
    Rat,
    Sign,
    is_prime,
    kronecker,
    legendre,
    legendre_unit,
    odd_prime_divisors,
    prime_factors,
    primes_up_to,
    unit_part,
    vp,
)
from .brauer import (
    AdelicPoint,
    InvariantReport,
    adelic_total_invariant,
    brauer_set_witnesses,
    divisor_product,
    invariant_profile,
    local_invariant,
    verify,
)
from .enumerate import (
    DegenerateFamily,
    brute_force_oracle,
    canonical,
    degenerate_families,
    integer_solutions,
    natural_solutions,
)
from .fp import (
    FpCensus,
    census,
    count_affine_points,
    nonsurjectivity_witness,
    reduction_image,
)
from .hilbert import (
    INFINITY,
    OracleInconclusive,
    Place,
    hilbert,
    hilbert_at_infinity,
    hilbert_at_odd_prime,
    hilbert_at_two,
    hilbert_oracle,
    reciprocity_check,
)
from .padic import (
    HenselCertificate,
    NotCertifiable,
    PadicPoint,
    TwoAdicReport,
    exhaust_two_adic,
    hensel_certify,
    lemma_two_table,
    refine,
    sample_bad_odd_prime,
    sample_even_two,
)
from .surface import (
    RealComponent,
    Solution,
    TypeKind,
    TypeTag,
    classify_type,
    cross_ratio_identity,
    evaluate_form,
    is_natural,
    is_solution,
    real_component,
    unit_valuation_pair,
)
from .yamamoto import (
    Factorization,
    RecoveryFailure,
    TypeNotApplicable,
    YamamotoReport,
    all_factorizations,
    recover_factorization,
    yamamoto_check,
)

__version__ = "0.1.0"
