"""Phonetic keys for medicine titles written in Ukrainian or Russian.

Only features shared by both languages are reduced: no cluster codes, no
assimilation and no ending compression (drug name endings carry meaning).
"""

from __future__ import annotations

from .rewrite import DEDUP, DEDUP_PATTERN, LITERAL, SET_TO_ONE, RewriteRule, RuleSet, rewrite
from .textnorm import MEDICINE, RawRecord, clean

MEDICINE_RULES = RuleSet(
    "medicine",
    (
        RewriteRule(LITERAL, "ґ", "г", step="7"),
        RewriteRule(SET_TO_ONE, "йе|іе", "е", step="8"),
        RewriteRule(SET_TO_ONE, "іа|ія|иа", "а", step="8"),
        RewriteRule(LITERAL, "йо", "о", step="8"),
        RewriteRule(SET_TO_ONE, "є|э", "е", step="8"),
        RewriteRule(LITERAL, "я", "а", step="8"),
        RewriteRule(SET_TO_ONE, "і|ї|ы|й", "и", step="8"),
        RewriteRule(LITERAL, "ю", "у", step="8"),
        RewriteRule(LITERAL, "ё", "о", step="8"),
        RewriteRule(DEDUP, DEDUP_PATTERN, step="9"),
    ),
)


def medicine_token_key(token) -> str:
    return rewrite(MEDICINE_RULES, token)


def medicine_keys(title: RawRecord | str) -> list[str]:
    """One key per surviving word of the title, in order, duplicates kept."""
    return [medicine_token_key(tok) for tok in clean(title, MEDICINE)]
