"""Exact enumeration, genus computation, and genus statistics of 2-bridge
knots organized by crossing number."""

from .words import (
    Word,
    make_word,
    reversal_partner,
    is_palindromic_type,
    to_symbols,
    parse_symbols,
    enumerate_T,
    enumerate_Tp,
    canonical_class_reps,
)
from .genus import genus_by_reduction, genus_by_seifert
from .counts import t_total, tp_total, knots_total, t_of, tp_of, tbar_of
from .stats import (
    Ensemble,
    QsClass,
    distribution,
    knot_mean,
    knot_variance,
    stats_document,
)
from .oracle import empirical_distribution, empirical_totals, verify_all

__version__ = "0.1.0"

__all__ = [
    "Word",
    "make_word",
    "reversal_partner",
    "is_palindromic_type",
    "to_symbols",
    "parse_symbols",
    "enumerate_T",
    "enumerate_Tp",
    "canonical_class_reps",
    "genus_by_reduction",
    "genus_by_seifert",
    "t_total",
    "tp_total",
    "knots_total",
    "t_of",
    "tp_of",
    "tbar_of",
    "Ensemble",
    "QsClass",
    "distribution",
    "knot_mean",
    "knot_variance",
    "stats_document",
    "empirical_distribution",
    "empirical_totals",
    "verify_all",
    "__version__",
]
