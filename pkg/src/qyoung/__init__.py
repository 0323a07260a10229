"""qyoung: exact and Monte-Carlo tools for random Young diagrams.

The package implements the q-deformed Plancherel measure coming from
Iwahori-Hecke algebras and the Schur-Weyl measures coming from tensor
representations, together with the algebra of polynomial functions on
Young diagrams used to verify their limit theorems: exact rational
identities at small sizes, and seeded Monte-Carlo estimation at scale.
"""

from .partitions import (
    EMPTY,
    FrobeniusCoordinates,
    Partition,
    addable_cells,
    b_statistic,
    conjugate,
    covers,
    dimension,
    falling_factorial,
    frobenius,
    hook_multiset,
    partitions_of,
    power_sum_eval,
)
from .characters import character, normalized_character, sigma_character, z_order
from .measures import (
    QParameter,
    corner_growth_weights,
    exact_growth_distribution,
    generic_degree,
    q_factorial,
    q_int,
    q_transition,
    qplancherel_mass,
    schur_weyl_sigma_expectation,
    sigma_expectation_qplancherel,
)
from .observables import (
    Observable,
    SigmaCombination,
    disjoint_product,
    evaluate,
    evaluate_sigma_combination,
    observable_multiply,
    p_rho_in_sigma,
    sigma_combination_in_p,
    sigma_combination_product,
    sigma_k_in_p,
    sigma_product,
    sigma_rho_in_p,
)
from .qcharacters import eval_qcharacter, qchar_transition, qcharacter_observable, scalar_mp, scalar_ph
from .cumulants import (
    brillinger_check,
    disjoint_cumulant,
    identity_cumulant,
    joint_cumulant,
    set_partitions,
)
from .sampling import GrowthState, sample_qplancherel, stream_rng
from .words import (
    Word,
    maj_pushforward,
    perm_statistics,
    rsk_shape,
    sample_schur_weyl,
)
from .harness import (
    MCConfig,
    SampleReport,
    clt_covariance_targets,
    exact_expectation,
    exact_schur_weyl_expectation,
    mc_run,
    schur_weyl_check,
    verify_exact_suite,
)

__all__ = [
    "EMPTY",
    "FrobeniusCoordinates",
    "GrowthState",
    "MCConfig",
    "Observable",
    "Partition",
    "QParameter",
    "SampleReport",
    "SigmaCombination",
    "Word",
    "addable_cells",
    "b_statistic",
    "brillinger_check",
    "character",
    "clt_covariance_targets",
    "conjugate",
    "corner_growth_weights",
    "covers",
    "dimension",
    "disjoint_cumulant",
    "disjoint_product",
    "eval_qcharacter",
    "evaluate",
    "evaluate_sigma_combination",
    "exact_expectation",
    "exact_growth_distribution",
    "exact_schur_weyl_expectation",
    "falling_factorial",
    "frobenius",
    "generic_degree",
    "hook_multiset",
    "identity_cumulant",
    "joint_cumulant",
    "maj_pushforward",
    "mc_run",
    "normalized_character",
    "observable_multiply",
    "p_rho_in_sigma",
    "partitions_of",
    "perm_statistics",
    "power_sum_eval",
    "q_factorial",
    "q_int",
    "q_transition",
    "qchar_transition",
    "qcharacter_observable",
    "qplancherel_mass",
    "rsk_shape",
    "sample_qplancherel",
    "sample_schur_weyl",
    "scalar_mp",
    "scalar_ph",
    "schur_weyl_check",
    "schur_weyl_sigma_expectation",
    "set_partitions",
    "sigma_character",
    "sigma_combination_in_p",
    "sigma_combination_product",
    "sigma_expectation_qplancherel",
    "sigma_k_in_p",
    "sigma_product",
    "sigma_rho_in_p",
    "stream_rng",
    "verify_exact_suite",
    "z_order",
]
