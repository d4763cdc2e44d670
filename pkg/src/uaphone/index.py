"""Inverted phonetic index: key -> bucket of (cleaned form, count).

Also home of the reports computed from an index: compression gain,
surname frequency statistics and duplicate groups.
"""

from __future__ import annotations

import math
import time
from collections import Counter
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from typing import Iterable, Iterator, NamedTuple

from .medicine import medicine_token_key
from .surname import ENDING_CODES, ENDINGS, surname_key
from .textnorm import MEDICINE, MODES, SURNAME, CleanError, clean_medicine, clean_surname

FULL = "full"
STRUCTURED = "structured"


class BuildError(RuntimeError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class DegenerateInput(ValueError):
    pass


class Reject(NamedTuple):
    line: int
    reason: str


class Hit(NamedTuple):
    form: str
    count: int
    distance: int | None = None


@dataclass
class PhoneticIndex:
    ruleset: str
    buckets: dict[str, dict[str, int]] = field(default_factory=dict)
    built: float = field(default_factory=time.time, compare=False)

    def __post_init__(self):
        if self.ruleset not in MODES:
            raise ValueError(f"unknown ruleset {self.ruleset!r}")

    @property
    def records(self) -> int:
        return sum(sum(b.values()) for b in self.buckets.values())

    def __len__(self):
        return len(self.buckets)

    def __contains__(self, key):
        return key in self.buckets

    def bucket(self, key: str) -> list[tuple[str, int]]:
        return sorted(self.buckets.get(key, {}).items())

    def items(self) -> Iterator[tuple[str, list[tuple[str, int]]]]:
        for key in sorted(self.buckets):
            yield key, self.bucket(key)

    def forms(self) -> dict[str, int]:
        return {f: c for b in self.buckets.values() for f, c in b.items()}

    def add(self, form: str, key: str, count: int = 1):
        bucket = self.buckets.setdefault(key, {})
        bucket[form] = bucket.get(form, 0) + count

    def dumps(self) -> str:
        lines = [f"#ruleset={self.ruleset}", f"#records={self.records}"]
        for key, members in self.items():
            lines.extend(f"{key}\t{form}\t{count}" for form, count in members)
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> "PhoneticIndex":
        header = {}
        index = None
        for lineno, line in enumerate(text.splitlines(), 1):
            if line.startswith("#"):
                name, _, value = line[1:].partition("=")
                header[name] = value
                continue
            if index is None:
                index = cls(header.get("ruleset", SURNAME))
            try:
                key, form, count = line.split("\t")
                index.add(form, key, int(count))
            except ValueError:
                raise BuildError(lineno, f"malformed index line {line!r}") from None
        if index is None:
            index = cls(header.get("ruleset", SURNAME))
        if "records" in header and int(header["records"]) != index.records:
            raise BuildError(2, f"header says {header['records']} records, body has {index.records}")
        return index


def _forms(text: str, ruleset: str) -> list[str]:
    if ruleset == SURNAME:
        return [clean_surname(text).text]
    tokens = clean_medicine(text)
    if not tokens:
        raise CleanError("no word of 4 or more letters")
    return [t.text for t in tokens]


def form_key(form: str, ruleset: str) -> str:
    """Key of an already cleaned form."""
    if ruleset == SURNAME:
        return surname_key(form)
    return medicine_token_key(form)


def key_function(ruleset: str):
    """Return ``text -> [(cleaned form, key), ...]`` for the ruleset."""
    if ruleset not in MODES:
        raise ValueError(f"unknown ruleset {ruleset!r}")

    def keys(text):
        return [(form, form_key(form, ruleset)) for form in _forms(text, ruleset)]

    return keys


def build(records: Iterable, ruleset: str = SURNAME) -> tuple[PhoneticIndex, list[Reject]]:
    """Clean, key and index every record; bad records go to the reject list."""
    if ruleset not in MODES:
        raise ValueError(f"unknown ruleset {ruleset!r}")
    counts: Counter = Counter()
    rejects: list[Reject] = []
    for lineno, raw in enumerate(records, 1):
        text = getattr(raw, "text", raw)
        if isinstance(text, bytes):
            try:
                text = text.decode("utf-8")
            except UnicodeDecodeError as exc:
                raise BuildError(lineno, f"invalid UTF-8: {exc}") from None
        text = text.rstrip("\r\n")
        try:
            counts.update(_forms(text, ruleset))
        except CleanError as exc:
            rejects.append(Reject(lineno, str(exc)))
    # key each distinct form once; corpora repeat forms heavily
    index = PhoneticIndex(ruleset)
    for form, count in counts.items():
        index.add(form, form_key(form, ruleset), count)
    return index, rejects


def merge(a: PhoneticIndex, b: PhoneticIndex) -> PhoneticIndex:
    """Union of two partial indexes built with the same ruleset."""
    if a.ruleset != b.ruleset:
        raise ValueError(f"cannot merge {a.ruleset} index with {b.ruleset} index")
    out = PhoneticIndex(a.ruleset)
    for part in (a, b):
        for key, bucket in part.buckets.items():
            for form, count in bucket.items():
                out.add(form, key, count)
    return out


def edit_distance(a: str, b: str) -> int:
    """Levenshtein distance (unit cost insert/delete/substitute)."""
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        cur = [i]
        for j, cb in enumerate(b, 1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (ca != cb)))
        prev = cur
    return prev[-1]


def lookup(index: PhoneticIndex, query, rank: str = "none") -> list[Hit]:
    """Members of the query's bucket(s).

    Raises :class:`CleanError` when the query itself cannot be cleaned; an
    unknown key just gives an empty list.  Medicine queries match any word.
    """
    text = getattr(query, "text", query)
    pairs = key_function(index.ruleset)(text)
    members: dict[str, int] = {}
    for _, key in pairs:
        members.update(index.buckets.get(key, {}))
    if rank == "none":
        return [Hit(form, count) for form, count in sorted(members.items())]
    if rank != "edit-distance":
        raise ValueError(f"unknown rank {rank!r}")
    cleaned = [form for form, _ in pairs]
    hits = [
        Hit(form, count, min(edit_distance(q, form) for q in cleaned))
        for form, count in members.items()
    ]
    hits.sort(key=lambda h: (h.distance, h.form))
    return hits


def scan(index: PhoneticIndex, query, max_distance: int = 2) -> list[Hit]:
    """Brute-force alternative to :func:`lookup`: edit distance to every form."""
    pairs = key_function(index.ruleset)(getattr(query, "text", query))
    cleaned = [form for form, _ in pairs]
    hits = []
    for form, count in index.forms().items():
        d = min(edit_distance(q, form) for q in cleaned)
        if d <= max_distance:
            hits.append(Hit(form, count, d))
    hits.sort(key=lambda h: (h.distance, h.form))
    return hits


def coefficient(index_size: int, full_size: int) -> float:
    """Optimization coefficient (1 - I/N) * 100, in percent."""
    if full_size <= 0:
        raise DegenerateInput("full sample is empty")
    return (1 - index_size / full_size) * 100


def round_percent(value: float) -> Decimal:
    return Decimal(repr(value)).quantize(Decimal("0.1"), rounding=ROUND_HALF_UP)


@dataclass(frozen=True)
class OptimizationReport:
    n_num: int
    i_num: int
    n_vol: int
    i_vol: int
    sample: str = STRUCTURED

    @property
    def k_num(self) -> float:
        return coefficient(self.i_num, self.n_num)

    @property
    def k_vol(self) -> float:
        return coefficient(self.i_vol, self.n_vol)

    def as_dict(self) -> dict:
        return {
            "sample": self.sample,
            "N_num": self.n_num,
            "I_num": self.i_num,
            "N_vol": self.n_vol,
            "I_vol": self.i_vol,
            "K_num": float(round_percent(self.k_num)),
            "K_vol": float(round_percent(self.k_vol)),
        }

    def format(self) -> str:
        return (
            f"{self.sample:<10} number: N={self.n_num:>12,} I={self.i_num:>12,} "
            f"K={round_percent(self.k_num)} %\n"
            f"{'':<10} volume: N={self.n_vol:>12,} I={self.i_vol:>12,} "
            f"K={round_percent(self.k_vol)} %"
        )


def optimization_report(index: PhoneticIndex, sample: str = STRUCTURED) -> OptimizationReport:
    """Index size against either the distinct forms or the full record list."""
    forms = index.forms()
    if not forms:
        raise DegenerateInput("index is empty")
    i_num = len(index.buckets)
    i_vol = sum(len(k) for k in index.buckets)
    if sample == STRUCTURED:
        n_num = len(forms)
        n_vol = sum(len(f) for f in forms)
    elif sample == FULL:
        n_num = sum(forms.values())
        n_vol = sum(len(f) * c for f, c in forms.items())
    else:
        raise ValueError(f"unknown sample {sample!r}")
    return OptimizationReport(n_num, i_num, n_vol, i_vol, sample)


def power_model(n: int | float) -> float:
    """Frequency model F = 2*pi*n**-e (per mille)."""
    return 2 * math.pi * n ** (-math.e)


ENDING_LABELS = {code: spelling for code, _, spelling in ENDINGS}


@dataclass
class FrequencyReport:
    total: int
    rates: dict[str, float]
    top: list[tuple[str, int, float]]
    endings: dict[str, int]
    power_law: list[tuple[int, float, float]]

    def as_dict(self) -> dict:
        return {
            "total": self.total,
            "top": [{"form": f, "count": c, "permille": r} for f, c, r in self.top],
            "endings": [
                {"code": code, "ending": ENDING_LABELS[code], "count": n}
                for code, n in self.endings.items()
            ],
            "power_law": [
                {"n": n, "observed": obs, "model": model} for n, obs, model in self.power_law
            ],
        }

    def format(self) -> str:
        out = [f"records: {self.total}", "", f"{'rank':>4}  {'surname':<20} {'count':>8} {'‰':>8}"]
        for i, (form, count, rate) in enumerate(self.top, 1):
            out.append(f"{i:>4}  {form:<20} {count:>8} {rate:>8.2f}")
        out += ["", f"{'code':<5} {'ending':<10} {'count':>8}"]
        for code, n in self.endings.items():
            out.append(f"{code:<5} {ENDING_LABELS[code]:<10} {n:>8}")
        out += ["", f"{'n':>6} {'observed ‰':>12} {'2πn^-e ‰':>12}"]
        for n, obs, model in self.power_law:
            out.append(f"{n:>6} {obs:>12.4f} {model:>12.4f}")
        return "\n".join(out)


def frequency_report(index: PhoneticIndex, top: int = 10) -> FrequencyReport:
    forms = index.forms()
    total = sum(forms.values())
    if total == 0:
        return FrequencyReport(0, {}, [], {}, [])
    rates = {f: c * 1000 / total for f, c in forms.items()}
    ranked = sorted(forms.items(), key=lambda fc: (-fc[1], fc[0]))[:top]
    endings: Counter = Counter()
    for key, bucket in index.buckets.items():
        if key and key[-1] in ENDING_CODES:
            endings[key[-1]] += sum(bucket.values())
    # n = how many distinct surnames share one occurrence count
    classes = Counter(forms.values())
    power = [
        (n, count * 1000 / total, power_model(n))
        for count, n in sorted(classes.items(), reverse=True)
    ]
    return FrequencyReport(
        total,
        rates,
        [(f, c, rates[f]) for f, c in ranked],
        dict(sorted(endings.items(), key=lambda kv: (-kv[1], kv[0]))),
        power,
    )


@dataclass(frozen=True)
class DuplicateGroup:
    key: str
    members: tuple[tuple[str, int], ...]

    @property
    def total(self) -> int:
        return sum(c for _, c in self.members)


def dedup(index: PhoneticIndex) -> list[DuplicateGroup]:
    """Buckets holding two or more distinct spellings, biggest first."""
    groups = [DuplicateGroup(key, tuple(members)) for key, members in index.items() if len(members) >= 2]
    groups.sort(key=lambda g: (-g.total, g.key))
    return groups
