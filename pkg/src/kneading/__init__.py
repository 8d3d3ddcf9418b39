"""Exact symbolic dynamics of unimodal maps.

Kneading words and their digit encodings, the accumulation value of the
period-doubling cascade as exact dyadic enclosures, continued fractions of
the level values, kneading determinants and dynamical zeta functions with
certified entropy brackets, subshift language statistics, substitution
letter frequencies, and a floating-point laboratory for logistic and tent
maps.  Everything outside :mod:`kneading.dynamics` computes over integers
and :class:`fractions.Fraction`; no third-party runtime dependencies.
"""

from kneading.symbolic import (
    FEIGENBAUM_RULE,
    THUE_MORSE_RULE,
    FixedPointStream,
    FunctionStream,
    PeriodicStream,
    SubstitutionRule,
    SymbolStream,
    check_word,
    complement,
    feigenbaum_limit,
    feigenbaum_stream,
    feigenbaum_word,
    fixed_point_prefix,
    minimal_period,
    renormalize_seq,
    shift,
    stream_from_json,
    stream_to_json,
    substitute,
)
from kneading.encoding import (
    Order,
    admissible,
    binary_digits,
    epsilon,
    in_lambda,
    is_maximal,
    kneading_from_tau,
    stream_tau,
    tau_of_periodic,
    tent,
    word_order,
    xi,
    xi_inverse,
)
from kneading.feigenbaum import (
    PAIR_RULE,
    PAIR_TO_DIGITS,
    DyadicEnclosure,
    TauLevel,
    renormalize_tau,
    tau_difference,
    tau_from_kneading,
    tau_infinity_digit,
    tau_infinity_digits,
    tau_infinity_enclosure,
    tau_level,
    thue_morse_check,
)
from kneading.cfrac import (
    ContinuationReport,
    ContinuedFraction,
    Convergent,
    cf_continuation_check,
    cf_of_enclosure,
    cf_of_rational,
    cf_table,
    convergents,
)
from kneading.spectral import (
    EntropyInconclusive,
    EntropyResult,
    IntSeries,
    OrbitCounts,
    entropy,
    feigenbaum_zeta,
    kneading_determinant,
    orbit_counts,
    series_of_rational,
    xi_series,
    zeta_series,
)
from kneading.language import (
    LanguageQuery,
    complexity,
    forbidden_words,
    language_words,
)
from kneading.frequency import (
    IncidenceMatrix,
    NormalityReport,
    characteristic_polynomial,
    empirical_frequencies,
    incidence,
    integer_eigenvalues,
    letter_frequencies,
    normality_report,
    pair_frequencies,
    perron_frobenius,
)
from kneading.dynamics import (
    Lemma1Report,
    NotRenormalizableError,
    OrbitEscapeError,
    ScanReport,
    ScanRow,
    UnimodalMap,
    band_merging_parameter,
    itinerary,
    kneading,
    lemma1_validate,
    logistic_map,
    monotonicity_scan,
    renormalize_map,
    renormalize_word,
    skew_tent_map,
    superstable_parameter,
    tent_map,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # symbolic
    "SubstitutionRule",
    "substitute",
    "SymbolStream",
    "PeriodicStream",
    "FixedPointStream",
    "FunctionStream",
    "FEIGENBAUM_RULE",
    "THUE_MORSE_RULE",
    "check_word",
    "complement",
    "minimal_period",
    "shift",
    "fixed_point_prefix",
    "renormalize_seq",
    "feigenbaum_word",
    "feigenbaum_stream",
    "feigenbaum_limit",
    "stream_to_json",
    "stream_from_json",
    # encoding
    "Order",
    "xi",
    "xi_inverse",
    "epsilon",
    "tau_of_periodic",
    "stream_tau",
    "binary_digits",
    "kneading_from_tau",
    "tent",
    "in_lambda",
    "word_order",
    "is_maximal",
    "admissible",
    # feigenbaum
    "PAIR_RULE",
    "PAIR_TO_DIGITS",
    "DyadicEnclosure",
    "TauLevel",
    "tau_level",
    "tau_difference",
    "tau_infinity_digit",
    "tau_infinity_digits",
    "tau_infinity_enclosure",
    "renormalize_tau",
    "thue_morse_check",
    "tau_from_kneading",
    # cfrac
    "ContinuedFraction",
    "Convergent",
    "ContinuationReport",
    "cf_of_rational",
    "cf_of_enclosure",
    "convergents",
    "cf_table",
    "cf_continuation_check",
    # spectral
    "EntropyInconclusive",
    "IntSeries",
    "OrbitCounts",
    "EntropyResult",
    "kneading_determinant",
    "zeta_series",
    "series_of_rational",
    "xi_series",
    "feigenbaum_zeta",
    "orbit_counts",
    "entropy",
    # language
    "LanguageQuery",
    "complexity",
    "language_words",
    "forbidden_words",
    # frequency
    "IncidenceMatrix",
    "incidence",
    "characteristic_polynomial",
    "integer_eigenvalues",
    "perron_frobenius",
    "letter_frequencies",
    "pair_frequencies",
    "empirical_frequencies",
    "NormalityReport",
    "normality_report",
    # dynamics
    "OrbitEscapeError",
    "NotRenormalizableError",
    "UnimodalMap",
    "logistic_map",
    "tent_map",
    "skew_tent_map",
    "itinerary",
    "kneading",
    "renormalize_word",
    "renormalize_map",
    "superstable_parameter",
    "band_merging_parameter",
    "Lemma1Report",
    "lemma1_validate",
    "ScanRow",
    "ScanReport",
    "monotonicity_scan",
]
