"""Exact arithmetic for riffle-style card shuffles.

Shuffle models as exact permutation distributions, the insertion
correspondences that explain them, symmetric function evaluations, and
cycle index generating series, all over rationals.
"""

from .combinat import (
    character,
    compose,
    conjugate,
    cycle_type,
    descent_class_count,
    descent_mask,
    inverse_permutation,
    kostka,
    multinomial,
    partition_stats,
    partitions,
    permutation_stats,
    reverse_permutation,
    semistandard_tableaux,
    skew_row_count,
    standard_tableaux,
    tableau_count,
    unimodal_permutations,
)
from .cycleindex import (
    cycle_index,
    cycle_type_probability,
    deck_size_mixture_check,
    expected_fixed_points,
    necklace_count,
    occupancy_probability,
    rsk_shape_probability,
    series_from_payload,
    series_to_payload,
    unimodal_gf,
)
from .poly import RationalPoly, as_fraction, fraction_str
from .rsk import (
    RSKPair,
    VARIANTS,
    rsk,
    rsk_inverse,
    rsk_shape,
    validate_pair,
    word_to_permutation,
    zeroed_word_to_distribution,
)
from .series import TruncatedSeries, geometric_series
from .shuffles import (
    ConfigurationError,
    PermDistribution,
    ShuffleSpec,
    abg_shuffle,
    convolve,
    distribution_from_payload,
    distribution_to_payload,
    empirical_distribution,
    exact_distribution,
    iterate,
    mu_shuffle,
    riffle_shuffle,
    sample_permutation,
    sample_permutations,
    separation_bound,
    separation_distance,
    spec_from_dict,
    spec_to_dict,
    top_to_random,
    typec_shuffle,
    uniform_distribution,
    uniform_riffle,
)
from .symfunc import (
    CAUCHY_KINDS,
    ParamVector,
    cauchy_check,
    extended_h_list,
    extended_power_sum,
    extended_schur,
    power_sum,
    power_sum_partition,
    schur,
    schur_jacobi_trudi,
    stembridge_s,
)
