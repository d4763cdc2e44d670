"""Phonetic keys for Ukrainian surnames."""

from __future__ import annotations

from .rewrite import (
    CLASS_PAIR,
    DEDUP,
    DEDUP_PATTERN,
    END_ANCHORED,
    LITERAL,
    SET_TO_ONE,
    WORD_END,
    RewriteRule,
    RewriteTrace,
    RuleSet,
    apply,
    rewrite,
)
from .textnorm import CleanToken


def _end(pattern, code):
    return RewriteRule(END_ANCHORED, pattern, code, WORD_END, "13")


# Endings are spelled as they look after steps 2-12 have run, otherwise the
# й in -айко/-ейко/-ийло could never be seen (step 3 turns й into и).
ENDINGS: tuple[tuple[str, str, str], ...] = (
    # (code, pattern after reduction, surname spelling)
    ("A", "авко", "авко"),
    ("B", "аико|аика", "айко|айка"),
    ("C", "аило", "айло"),
    ("D", "анко", "анко"),
    ("E", "ашко", "ашко"),
    ("F", "евич", "евич"),
    ("G", "евка", "евка"),
    ("H", "еико|еика", "ейко|ейка"),
    ("I", "енко|енка", "енко|енка"),
    ("J", "ечко", "ечко"),
    ("K", "ешко", "ешко"),
    ("L", "ило", "ийло"),
    ("M", "иско", "иско"),
    ("N", "ишин", "ишин"),
    ("O", "ишко", "ишко"),
    ("P", "ович", "ович"),
    ("Q", "онко", "онко"),
    ("R", "очко", "очко"),
    ("S", "уник", "уник"),
    ("T", "унко|унка", "унко|унка"),
    ("U", "ушко|ушка", "ушко|ушка"),
)
ENDING_CODES = frozenset(code for code, _, _ in ENDINGS)

SURNAME_RULES = RuleSet(
    "surname",
    (
        RewriteRule(LITERAL, "ґ", "г", step="2"),
        # digraphs before single letters
        RewriteRule(SET_TO_ONE, "іе|йе", "е", step="3"),
        RewriteRule(SET_TO_ONE, "іа|ія", "а", step="3"),
        RewriteRule(LITERAL, "йо", "о", step="3"),
        RewriteRule(LITERAL, "є", "е", step="3"),
        RewriteRule(LITERAL, "я", "а", step="3"),
        RewriteRule(SET_TO_ONE, "і|ї|й", "и", step="3"),
        RewriteRule(LITERAL, "ю", "у", step="3"),
        RewriteRule(END_ANCHORED, "ў", "в", WORD_END, step="4"),
        RewriteRule(SET_TO_ONE, "цьк|дськ|тськ|кськ|чськ|цськ", "3", step="5"),
        RewriteRule(SET_TO_ONE, "зьк|гськ|жськ|зськ", "2", step="5"),
        # any run of с before -ьк- folds into one cluster
        RewriteRule(LITERAL, "сськ", "ськ", step="5"),
        RewriteRule(LITERAL, "ськ", "1", step="5"),
        RewriteRule(LITERAL, "ь", "", step="6"),
        RewriteRule(CLASS_PAIR, "[пхтшс][бгджз]", "[бгджз]", step="7"),
        RewriteRule(LITERAL, "хв", "ф", step="8"),
        RewriteRule(SET_TO_ONE, "сч|жч|шч|щч", "щ", step="9"),
        RewriteRule(LITERAL, "стн", "сн", step="10"),
        RewriteRule(LITERAL, "здн", "зн", step="10"),
        RewriteRule(LITERAL, "слн", "сн", step="10"),
        RewriteRule(LITERAL, "стл", "сл", step="10"),
        RewriteRule(LITERAL, "шчн", "шн", step="10"),
        RewriteRule(LITERAL, "цв", "ц", step="11"),
        RewriteRule(DEDUP, DEDUP_PATTERN, step="12"),
        *(_end(pattern, code) for code, pattern, _ in ENDINGS),
    ),
)


def _as_token(token) -> CleanToken:
    if isinstance(token, CleanToken):
        return token
    return CleanToken(token, hyphenated="-" in token)


def surname_key(token: CleanToken | str) -> str:
    """Phonetic key of a cleaned surname.

    Double and triple surnames are unique enough to be their own key.

    >>> surname_key("шевченко")
    'шевчI'
    """
    token = _as_token(token)
    if token.hyphenated:
        return token.text
    return rewrite(SURNAME_RULES, token.text)


def surname_key_trace(token: CleanToken | str) -> tuple[str, RewriteTrace]:
    token = _as_token(token)
    if token.hyphenated:
        return token.text, []
    return apply(SURNAME_RULES, token.text)
