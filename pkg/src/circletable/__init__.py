"""Stable one-on-one conversations at a circular table with random L/R preferences."""

__version__ = "0.1.0"

from .closed_form import f_closed, g_closed, greedy_sum, greedy_unmatched_probability, limits
from .core import Matching, Preferences, Regularity, classify, natural_pairs
from .exact_enum import enumerate_f, enumerate_g, enumerate_report
from .stability import is_stable_def, stable_set, unique_stable_matching

__all__ = [
    "Matching",
    "Preferences",
    "Regularity",
    "classify",
    "enumerate_f",
    "enumerate_g",
    "enumerate_report",
    "f_closed",
    "g_closed",
    "greedy_sum",
    "greedy_unmatched_probability",
    "is_stable_def",
    "limits",
    "natural_pairs",
    "stable_set",
    "unique_stable_matching",
]
