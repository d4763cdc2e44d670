"""Cleanup of raw surname and medicine-title strings into Cyrillic tokens.

Everything downstream (key generation, indexing) assumes its input went
through :func:`clean` first.  The order inside ``clean`` is fixed: case,
homoglyph fold, separators/apostrophes, alphabet filter, hyphen repair.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass

SURNAME = "surname"
MEDICINE = "medicine"
MODES = (SURNAME, MEDICINE)

# Latin look-alikes typed by mistake on a Latin keyboard layout.
HOMOGLYPHS: tuple[tuple[str, str], ...] = (
    ("a", "а"),
    ("b", "в"),
    ("c", "с"),
    ("d", "д"),
    ("e", "е"),
    ("h", "н"),
    ("i", "і"),
    ("k", "к"),
    ("m", "м"),
    ("o", "о"),
    ("p", "р"),
    ("t", "т"),
    ("u", "и"),
    ("x", "х"),
    ("y", "у"),
)
_FOLD_TABLE = str.maketrans(dict(HOMOGLYPHS))

UKRAINIAN_EXTRAS = "ьюяєіїґ"
RUSSIAN_EXTRAS = "ёыэъ"
# ў is kept so the word-final non-syllabic rule has something to act on.
ALPHABET = frozenset(
    [chr(c) for c in range(ord("а"), ord("щ") + 1)]
    + list(UKRAINIAN_EXTRAS + RUSSIAN_EXTRAS + "ў")
)

APOSTROPHES = "'’ʼ`"
_APOSTROPHE_TABLE = str.maketrans("", "", APOSTROPHES)

MEDICINE_MIN_TOKEN = 4
SURNAME_MIN_LETTERS = 2

_HYPHEN_RUN = re.compile(r"-{2,}")
_MEDICINE_SIGNS = str.maketrans("", "", "ьъ")


class CleanError(ValueError):
    """Base class for records that cannot be turned into tokens."""


class EmptyAfterClean(CleanError):
    """Fewer than two letters survived the cleanup."""

    def __init__(self, raw: str, cleaned: str):
        self.raw = raw
        self.cleaned = cleaned
        super().__init__(
            f"fewer than {SURNAME_MIN_LETTERS} letters after cleanup: {raw!r}"
        )


@dataclass(frozen=True)
class RawRecord:
    """Untouched user input; cleanup never mutates it."""

    text: str


@dataclass(frozen=True)
class CleanToken:
    text: str
    hyphenated: bool = False

    def __post_init__(self):
        bad = [ch for ch in self.text if ch not in ALPHABET and ch != "-"]
        if bad:
            raise ValueError(f"characters outside alphabet: {bad!r}")
        if self.text.startswith("-") or self.text.endswith("-") or "--" in self.text:
            raise ValueError(f"malformed hyphenation: {self.text!r}")
        if ("-" in self.text) != self.hyphenated:
            raise ValueError("hyphenated flag does not match text")

    def __str__(self):
        return self.text


def fold_homoglyphs(s: str) -> str:
    """Replace Latin letters that look like Cyrillic ones by the Cyrillic letter.

    Expects lowercase input; characters outside the map pass through.
    """
    return s.translate(_FOLD_TABLE)


def _prepare(text: str) -> str:
    return fold_homoglyphs(unicodedata.normalize("NFC", text).lower())


def _letter_count(text: str) -> int:
    return sum(1 for ch in text if ch in ALPHABET and ch != "ь")


def clean_surname(text: str) -> CleanToken:
    s = _prepare(text)
    s = s.translate(_APOSTROPHE_TABLE)
    s = "".join(ch for ch in s if ch in ALPHABET or ch == "-")
    s = _HYPHEN_RUN.sub("-", s).strip("-")
    if _letter_count(s) < SURNAME_MIN_LETTERS:
        raise EmptyAfterClean(text, s)
    return CleanToken(s, hyphenated="-" in s)


def clean_medicine(text: str) -> list[CleanToken]:
    s = _prepare(text)
    s = s.translate(_APOSTROPHE_TABLE)
    chars = []
    for ch in s:
        if ch in ALPHABET:
            chars.append(ch)
        elif unicodedata.category(ch).startswith("L"):
            # unmapped Latin and other scripts: dropped like in surname mode
            continue
        else:
            # '.', ',', '-', ®, ™, &, *, digits, whitespace all separate words
            chars.append(" ")
    tokens = []
    for word in "".join(chars).split():
        word = word.translate(_MEDICINE_SIGNS)
        if len(word) >= MEDICINE_MIN_TOKEN:
            tokens.append(CleanToken(word))
    return tokens


def clean(raw: RawRecord | str, mode: str = SURNAME):
    """Clean a raw record.

    Surname mode returns one :class:`CleanToken` or raises
    :class:`EmptyAfterClean`; medicine mode returns a (possibly empty) list.
    """
    text = raw.text if isinstance(raw, RawRecord) else raw
    if mode == SURNAME:
        return clean_surname(text)
    if mode == MEDICINE:
        return clean_medicine(text)
    raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
