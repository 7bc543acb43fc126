"""Frequency-hopping sequence families from quadratic-residue classes mod p^n.

The residues modulo p^n split into 2n classes built from quadratic
residues and non-residues at every p-adic level.  Labelling each
residue by its class and cyclically shifting the labels yields a
family of 2n sequences of length p^n over a 2n-symbol alphabet.  This
package builds those families, computes their Hamming auto- and
cross-correlation both by direct counting and by closed forms that are
enabled only after arbitration against the brute-force oracle, and
certifies optimality against the Lempel-Greenberg, Peng-Fan and
average-Hamming bounds in exact rational arithmetic.
"""

from .bounds import (
    AverageCorrelations,
    ExactRational,
    MaxCorrelations,
    OptimalityReport,
    ah_optimality_check,
    average_correlations,
    lempel_greenberg_bound,
    lempel_greenberg_floor,
    max_correlations,
    optimality_report,
    peng_fan_bounds,
)
from .correlation import (
    ClosedFormVerdict,
    CorrelationTable,
    Discrepancy,
    autocorrelation_closed,
    correlation_table,
    crosscorrelation_closed,
    family_tables,
    hamming_correlation,
    verify_closed_forms,
)
from .cyclotomy import (
    ClassId,
    FhsParams,
    FormulaNotCovered,
    class_id,
    class_index_array,
    class_members,
    classify,
    cyclotomic_number_bruteforce,
    cyclotomic_number_closed,
    delta_lk,
    delta_star,
    fit_mixed_pair_constant,
    generator_class_members,
    unit_class_members,
    unit_class_size,
)
from .fhs import (
    FhsFamily,
    FhsSequence,
    build_family,
    build_sequence,
    frequency_counts,
    is_uniformly_distributed,
)

__version__ = "0.1.0"

__all__ = [
    "AverageCorrelations",
    "ClassId",
    "ClosedFormVerdict",
    "CorrelationTable",
    "Discrepancy",
    "ExactRational",
    "FhsFamily",
    "FhsParams",
    "FhsSequence",
    "FormulaNotCovered",
    "MaxCorrelations",
    "OptimalityReport",
    "ah_optimality_check",
    "autocorrelation_closed",
    "average_correlations",
    "build_family",
    "build_sequence",
    "class_id",
    "class_index_array",
    "class_members",
    "classify",
    "correlation_table",
    "crosscorrelation_closed",
    "cyclotomic_number_bruteforce",
    "cyclotomic_number_closed",
    "delta_lk",
    "delta_star",
    "family_tables",
    "fit_mixed_pair_constant",
    "frequency_counts",
    "generator_class_members",
    "hamming_correlation",
    "is_uniformly_distributed",
    "lempel_greenberg_bound",
    "lempel_greenberg_floor",
    "max_correlations",
    "optimality_report",
    "peng_fan_bounds",
    "unit_class_members",
    "unit_class_size",
    "verify_closed_forms",
]
