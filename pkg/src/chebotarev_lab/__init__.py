"""chebotarev-lab: exact desk-scale verification of Artin coefficient
identities, large-sieve mean values, explicit weight functions, zero-free
region optimizations, and Chebotarev prime counting.
"""

from .artin import (
    CoefficientSeries,
    LocalRootMultiset,
    Partition,
    coeff_a_K,
    coeff_a_KxK,
    coeff_a_KxK_prime,
    euler_factor_series,
    lambda_vm,
    local_roots,
    log_deriv_taylor_term,
    mertens_partial_sum,
    partitions_of,
    schur,
    series_a_K,
    series_a_KxK,
)
from .chebotarev import (
    AdmissibilityCertificate,
    BaseChangeCheck,
    ChebotarevCount,
    FlexiErrorReport,
    base_change_compare,
    flexi_error_report,
    is_admissible,
    partial_summation_pi,
    pi_C_count,
    pi_count,
    psi_weighted_class,
    psi_weighted_items,
    splitting_tally,
)
from .families import (
    Family,
    avg_cheb_error,
    compositum_disc_check,
    intersection_multiplicity,
    resolvent_square_class,
)
from .fields import (
    BUILTIN_CATALOG,
    FieldDescriptor,
    FrobeniusData,
    builtin_field,
    factor_poly_mod_p,
    frobenius_data,
    load_catalog,
    parse_catalog,
    quadratic_field,
)
from .groups import ConjugacyClass, FiniteGroup, build_group
from .large_sieve import (
    DirichletPolynomial,
    FamilyWindow,
    msq_integral,
    mvt_primes_lhs,
    mvt_report,
    pre_large_sieve_lhs,
    prime_polynomial,
    zero_density_report,
)
from .sieve import PrimeSieve, sieve_primes
from .weights import (
    WeightParams,
    check_decay_right_halfplane,
    check_decay_shifted_line,
    eps_flexi_li,
    eps_flexi_pi,
    f_eval,
    laplace_F,
)
from .zfr import (
    EtaProfile,
    ZfrData,
    classical_eta_profile,
    classical_zfr,
    constant_zfr,
    error_factor,
    eta_classical_closed,
    eta_from_delta,
    eta_large_zfr_closed,
    grid_eta_profile,
    large_sieve_zfr,
    rational_eta_profile,
)

__version__ = "0.1.0"
