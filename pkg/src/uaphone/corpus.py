"""Synthetic surname and medicine corpora for tests, benchmarks and demos.

Real registry extracts cannot ship with the package.  These generators
mimic their shape: the most common Ukrainian surnames at their observed
per-mille rates, a long tail of plausible surnames below them, and spelling variants
of the kinds people actually produce (і/и, е/є, dropped soft signs,
doubled letters, ґ/г, apostrophes, Latin look-alikes, -енко/-енка).
"""

from __future__ import annotations

import random
from typing import Callable, Iterator

# (rate in per mille, forms); masculine/feminine pairs share the rate
COMMON_SURNAMES: tuple[tuple[float, tuple[str, ...]], ...] = (
    (3.3, ("Мельник",)),
    (3.0, ("Шевченко",)),
    (2.6, ("Бойко",)),
    (2.5, ("Коваленко",)),
    (2.5, ("Бондаренко",)),
    (2.3, ("Ткаченко",)),
    (2.2, ("Ковальчук",)),
    (2.2, ("Кравченко",)),
    (2.0, ("Іванов", "Іванова")),
    (1.9, ("Олійник",)),
    (1.8, ("Коваль",)),
    (1.8, ("Шевчук",)),
    (1.7, ("Поліщук",)),
    (1.4, ("Ткачук",)),
    (1.4, ("Бондар",)),
    (1.4, ("Марченко",)),
    (1.3, ("Лисенко",)),
    (1.3, ("Мороз",)),
    (1.3, ("Савченко",)),
    (1.3, ("Руденко",)),
    (1.3, ("Петренко",)),
    (1.2, ("Кравчук",)),
    (1.2, ("Клименко",)),
    (1.2, ("Попов", "Попова")),
    (1.1, ("Павленко",)),
    (1.1, ("Савчук",)),
    (1.1, ("Кузьменко",)),
    (1.1, ("Левченко",)),
    (1.0, ("Пономаренко",)),
    (1.0, ("Василенко",)),
    (1.0, ("Волошин", "Волошина")),
    (1.0, ("Харченко",)),
    (1.0, ("Ковальов", "Ковальова")),
    (1.0, ("Карпенко",)),
    (1.0, ("Сидоренко",)),
    (1.0, ("Гаврилюк",)),
    (1.0, ("Мельничук",)),
    (1.0, ("Хоменко",)),
    (1.0, ("Павлюк",)),
    (1.0, ("Швець",)),
    (1.0, ("Попович",)),
    (0.9, ("Романюк",)),
    (0.9, ("Чорний", "Чорна")),
    (0.9, ("Панченко",)),
    (0.9, ("Литвиненко",)),
    (0.9, ("Мазур",)),
    (0.9, ("Кушнір",)),
    (0.9, ("Юрченко",)),
    (0.8, ("Дяченко",)),
    (0.8, ("Мартинюк",)),
    (0.8, ("Костюк",)),
    (0.8, ("Ткач",)),
    (0.8, ("Петров", "Петрова")),
    (0.8, ("Семенюк",)),
    (0.8, ("Приходько",)),
    (0.8, ("Костенко",)),
    (0.8, ("Гончаренко",)),
    (0.8, ("Кулик",)),
    (0.8, ("Коломієць",)),
    (0.8, ("Білоус",)),
    (0.8, ("Назаренко",)),
    (0.8, ("Волков", "Волкова")),
    (0.8, ("Кравець",)),
    (0.8, ("Козак",)),
    (0.8, ("Ковтун",)),
)

COMMON_SURNAME_FORMS: tuple[str, ...] = tuple(f for _, forms in COMMON_SURNAMES for f in forms)

_ONSETS = "бвгдзклмнпрстхцчшж"
_VOWELS = "аоуеи"
_CODAS = ["", "р", "л", "н", "в", "к", "ш", "т", "с", "м"]
_SUFFIXES = (
    "енко", "енка", "ук", "юк", "чук", "ак", "як", "ич", "ович", "евич", "ів",
    "ов", "ин", "ишин", "ський", "цький", "зький", "ець", "ко", "айко", "ейко",
    "ушко", "очко", "ечко", "уник", "ийло", "унко", "ан", "ар", "ник", "ко",
    "авко", "анко", "ашко", "евка", "ишко", "онко", "иско", "ешко", "айло",
)

# Substrings that rewrite rules consume as a unit; variants never
# touch their letters, because a variant inside them is not a spelling
# of the same sound.
CONTEXTS = (
    "ськ", "зьк", "цьк", "дськ", "тськ", "кськ", "чськ", "цськ", "гськ", "жськ",
    "зськ", "хв", "сч", "жч", "шч", "щч", "стн", "здн", "слн",
    "стл", "шчн", "цв",
) + tuple(a + b for a in "пхтшс" for b in "бгджз")
VOWELISH = set("аеєиіїоуюяйёэы")
_REVERSE_HOMOGLYPHS = {
    "а": "a", "в": "b", "с": "c", "д": "d", "е": "e", "н": "h", "і": "i",
    "к": "k", "м": "m", "о": "o", "р": "p", "т": "t", "и": "u", "х": "x", "у": "y",
}
APOSTROPHE_VARIANTS = ("'", "’", "ʼ", "`")


def protected_positions(word: str, contexts=CONTEXTS) -> set[int]:
    low = word.lower()
    out: set[int] = set()
    for ctx in contexts:
        start = low.find(ctx)
        while start != -1:
            out.update(range(start, start + len(ctx)))
            start = low.find(ctx, start + 1)
    return out


def _vowel_isolated(low: str, i: int) -> bool:
    before = low[i - 1] if i > 0 else ""
    after = low[i + 1] if i + 1 < len(low) else ""
    return before not in VOWELISH and after not in VOWELISH


def _match_case(src: str, ch: str) -> str:
    return ch.upper() if src.isupper() else ch


def _swap_at(word: str, i: int, ch: str) -> str:
    return word[:i] + _match_case(word[i], ch) + word[i + 1 :]


def vowel_variants(word: str, groups: tuple[str, ...]) -> list[str]:
    """Swap one vowel for another member of its group, away from other vowels."""
    low = word.lower()
    out = []
    for i, ch in enumerate(low):
        for group in groups:
            if ch in group and _vowel_isolated(low, i):
                out.extend(_swap_at(word, i, other) for other in group if other != ch)
    return out


def soft_sign_drops(word: str, signs: str = "ь") -> list[str]:
    low = word.lower()
    keep = protected_positions(low)
    return [word[:i] + word[i + 1 :] for i, ch in enumerate(low) if ch in signs and i not in keep]


def doublings(word: str) -> list[str]:
    low = word.lower()
    keep = protected_positions(low)
    return [
        word[: i + 1] + word[i].lower() + word[i + 1 :]
        for i, ch in enumerate(low)
        if ch.isalpha() and i not in keep and ch not in "ьъ"
        # repeating a vowel next to another vowel builds new digraphs
        and not (ch in VOWELISH and not _vowel_isolated(low, i))
    ]


def g_variants(word: str) -> list[str]:
    low = word.lower()
    return [_swap_at(word, i, "ґ") for i, ch in enumerate(low) if ch == "г"] + [
        _swap_at(word, i, "г") for i, ch in enumerate(low) if ch == "ґ"
    ]


def apostrophe_variants(word: str) -> list[str]:
    return [
        word[:i] + APOSTROPHE_VARIANTS[i % len(APOSTROPHE_VARIANTS)] + word[i:]
        for i in range(1, len(word))
    ]


def latin_variants(word: str) -> list[str]:
    """One letter, then every possible letter, typed on the Latin layout."""
    low = word.lower()
    spots = [i for i, ch in enumerate(low) if ch in _REVERSE_HOMOGLYPHS]
    out = [_swap_at(word, i, _REVERSE_HOMOGLYPHS[low[i]]) for i in spots]
    if len(spots) > 1:
        full = word
        for i in spots:
            full = _swap_at(full, i, _REVERSE_HOMOGLYPHS[low[i]])
        out.append(full)
    return out


def ending_variants(word: str) -> list[str]:
    low = word.lower()
    if low.endswith("енко"):
        return [word[:-1] + _match_case(word[-1], "а")]
    if low.endswith("енка"):
        return [word[:-1] + _match_case(word[-1], "о")]
    return []


SURNAME_CLASSES: dict[str, Callable[[str], list[str]]] = {
    "і/и/ї": lambda w: vowel_variants(w, ("іиї",)),
    "е/є": lambda w: vowel_variants(w, ("еє",)),
    "ь drop": soft_sign_drops,
    "doubling": doublings,
    "ґ/г": g_variants,
    "apostrophe": apostrophe_variants,
    "latin": latin_variants,
    "-енко/-енка": ending_variants,
}

MEDICINE_CLASSES: dict[str, Callable[[str], list[str]]] = {
    "і/и/ы": lambda w: vowel_variants(w, ("іиы",)),
    "е/є/э": lambda w: vowel_variants(w, ("еєэ",)),
    "ё/о": lambda w: vowel_variants(w, ("ёо",)),
    "ь/ъ": lambda w: soft_sign_drops(w, "ьъ"),
    "doubling": doublings,
}


def surname_variants(base: str) -> dict[str, list[str]]:
    return {name: fn(base) for name, fn in SURNAME_CLASSES.items()}


def synthetic_surnames(count: int, seed: int = 0) -> list[str]:
    """Distinct made-up surnames built from syllables and common suffixes."""
    rng = random.Random(seed)
    seen: set[str] = set()
    out: list[str] = []
    while len(out) < count:
        stem = "".join(
            rng.choice(_ONSETS) + rng.choice(_VOWELS) for _ in range(rng.randint(1, 2))
        ) + rng.choice(_CODAS)
        name = (stem + rng.choice(_SUFFIXES)).capitalize()
        if name not in seen:
            seen.add(name)
            out.append(name)
    return out


def base_surnames(count: int = 500, seed: int = 0) -> list[str]:
    """Most common surnames first, topped up with synthetic ones."""
    names = list(COMMON_SURNAME_FORMS)
    known = {n.lower() for n in names}
    for name in synthetic_surnames(count * 2, seed):
        if len(names) >= count:
            break
        if name.lower() not in known:
            known.add(name.lower())
            names.append(name)
    return names[:count]


def random_variant(word: str, rng: random.Random) -> str:
    options = [v for fn in SURNAME_CLASSES.values() for v in fn(word)]
    return rng.choice(options) if options else word


def surname_corpus(
    size: int,
    seed: int = 0,
    tail: int = 2000,
    variant_rate: float = 0.3,
) -> list[str]:
    """Records drawn with the common-surname rates plus a tail of rarer surnames.

    Tail surname ``i`` gets ``0.75 / (1 + i/400)`` per mille, so every
    tail name stays below the least frequent common surname (0.8).
    """
    rng = random.Random(seed)
    names: list[str] = []
    weights: list[float] = []
    for rate, forms in COMMON_SURNAMES:
        for form in forms:
            names.append(form)
            weights.append(rate / len(forms))
    table_lower = {n.lower() for n in names}
    tail_names = [n for n in synthetic_surnames(tail + 200, seed + 1) if n.lower() not in table_lower]
    for i, name in enumerate(tail_names[:tail]):
        names.append(name)
        weights.append(0.75 / (1 + i / 400))
    picks = rng.choices(names, weights=weights, k=size)
    return [random_variant(p, rng) if rng.random() < variant_rate else p for p in picks]


# Russian spelling, Ukrainian spelling
MEDICINE_PAIRS: tuple[tuple[str, str], ...] = (
    ("Анальгин", "Анальгін"),
    ("Ибупрофен", "Ібупрофен"),
    ("Энтеросгель", "Ентеросгель"),
    ("Аспирин", "Аспірин"),
    ("Цитрамон", "Цитрамон"),
    ("Димедрол", "Димедрол"),
    ("Валидол", "Валідол"),
    ("Корвалол", "Корвалол"),
    ("Нимесил", "Німесил"),
    ("Диклофенак", "Диклофенак"),
    ("Амоксициллин", "Амоксицилін"),
    ("Азитромицин", "Азитроміцин"),
    ("Цефтриаксон", "Цефтріаксон"),
    ("Метронидазол", "Метронідазол"),
    ("Флуконазол", "Флуконазол"),
    ("Омепразол", "Омепразол"),
    ("Пантопразол", "Пантопразол"),
    ("Лоратадин", "Лоратадин"),
    ("Цетиризин", "Цетиризин"),
    ("Супрастин", "Супрастин"),
    ("Смекта", "Смекта"),
    ("Мезим", "Мезим"),
    ("Фестал", "Фестал"),
    ("Лоперамид", "Лоперамід"),
    ("Регидрон", "Регідрон"),
    ("Актовегин", "Актовегін"),
    ("Эналаприл", "Еналаприл"),
    ("Каптоприл", "Каптоприл"),
    ("Лизиноприл", "Лізиноприл"),
    ("Амлодипин", "Амлодипін"),
    ("Бисопролол", "Бісопролол"),
    ("Метопролол", "Метопролол"),
    ("Аторвастатин", "Аторвастатин"),
    ("Розувастатин", "Розувастатин"),
    ("Метформин", "Метформін"),
    ("Глибенкламид", "Глібенкламід"),
    ("Инсулин", "Інсулін"),
    ("Гепарин", "Гепарин"),
    ("Варфарин", "Варфарин"),
    ("Клопидогрел", "Клопідогрель"),
    ("Дексаметазон", "Дексаметазон"),
    ("Преднизолон", "Преднізолон"),
    ("Эуфиллин", "Еуфілін"),
    ("Сальбутамол", "Сальбутамол"),
    ("Амброксол", "Амброксол"),
    ("Бромгексин", "Бромгексин"),
    ("Ацетилцистеин", "Ацетилцистеїн"),
    ("Парацетамол", "Парацетамол"),
    ("Кеторолак", "Кеторолак"),
    ("Мелоксикам", "Мелоксикам"),
    ("Но-шпа Форте", "Но-шпа Форте"),
    ("Дротаверин", "Дротаверин"),
    ("Папаверин", "Папаверин"),
    ("Фуросемид", "Фуросемід"),
    ("Гидрохлортиазид", "Гідрохлортіазид"),
    ("Спиронолактон", "Спіронолактон"),
    ("Левотироксин", "Левотироксин"),
    ("Тиротропин", "Тіротропін"),
    ("Фолиевая кислота", "Фолієва кислота"),
    ("Рибоксин", "Рибоксин"),
)


def medicine_pairs(count: int = 200) -> list[tuple[str, str]]:
    """Bilingual spelling pairs differing only in reducible letters.

    Starts from the hand-written Russian/Ukrainian pairs whose difference
    is purely one of the handled classes, then adds one generated variant
    per class of each Russian title until ``count`` pairs exist.
    """
    out: list[tuple[str, str]] = []
    seen = set()
    for ru, ua in MEDICINE_PAIRS:
        if ru != ua:
            out.append((ru, ua))
            seen.add((ru, ua))
    for ru, _ in MEDICINE_PAIRS:
        for fn in MEDICINE_CLASSES.values():
            for variant in fn(ru):
                if (ru, variant) not in seen:
                    seen.add((ru, variant))
                    out.append((ru, variant))
                    break
    # second sweep takes further positions when the first one ran short
    for ru, _ in MEDICINE_PAIRS:
        for fn in MEDICINE_CLASSES.values():
            for variant in fn(ru):
                if (ru, variant) not in seen:
                    seen.add((ru, variant))
                    out.append((ru, variant))
    return out[:count]


def random_tokens(count: int, seed: int = 0, alphabet: str | None = None) -> Iterator[str]:
    """Letter soup laced with the fragments the rules care about.

    Used for differential testing of rule engines, not for realism.
    """
    rng = random.Random(seed)
    letters = alphabet or "абвгґдеєжзиіїйклмнопрстуфхцчшщьюяёыэъў"
    fragments = list(CONTEXTS) + [
        "іе", "йе", "іа", "ія", "йо", "иа", "ьк", "сськ", "ссськ", "ў", "ий",
        "енко", "енка", "ович", "евич", "айко", "ейко", "ийло", "ушка", "уник",
    ]
    while count > 0:
        parts = []
        for _ in range(rng.randint(1, 6)):
            if rng.random() < 0.35:
                parts.append(rng.choice(fragments))
            else:
                ch = rng.choice(letters)
                parts.append(ch * (2 if rng.random() < 0.1 else 1))
        token = "".join(parts)
        if sum(ch != "ь" for ch in token) >= 2:
            count -= 1
            yield token
