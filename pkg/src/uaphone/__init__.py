"""Phonetic keys and inverted indexes for Ukrainian surnames and medicine titles."""

from .index import (
    OptimizationReport,
    PhoneticIndex,
    build,
    dedup,
    edit_distance,
    frequency_report,
    lookup,
    optimization_report,
)
from .medicine import MEDICINE_RULES, medicine_keys
from .rewrite import RewriteRule, RuleSet, apply, lint
from .surname import SURNAME_RULES, surname_key, surname_key_trace
from .textnorm import CleanToken, EmptyAfterClean, RawRecord, clean, fold_homoglyphs

__version__ = "0.1.0"
