"""Representations of the symmetric group and spectra of random Coxeter-generator matrices."""
from .partitions import (
    Partition,
    conjugate,
    dimension,
    dimension_determinant,
    hook_data,
    parse_shape,
    partitions_of,
    shape_statistics,
    theta_ratio,
)
from .tableaux import StandardTableau, apply_adjacent, axial_distance, enumerate_tableaux
from .representation import apply_generator, coxeter_audit, generator, represent_word, trace_character
from .characters import (
    LimitProfile,
    SkewShape,
    plancherel_moments,
    ratio_mn,
    ratio_one_transposition,
    ratio_two_transpositions,
    skew_count,
    theta_from_profiles,
    zeta,
)
from .hermite import LimitParameters, gaussian_raw_moment, hermite, limit_moment
from .spectra import (
    assemble_matrix,
    empirical_moment,
    expected_moment,
    ks_distance,
    monte_carlo,
    sample_coefficients,
    spectrum,
)

__version__ = "0.1.0"
