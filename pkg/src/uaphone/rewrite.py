"""Ordered string-rewrite engine.

A :class:`RuleSet` is plain data: an ordered tuple of :class:`RewriteRule`.
:func:`apply` runs every rule once, in order; each rule is a global
leftmost, non-overlapping replace repeated until it no longer matches.

Rule kinds
----------
``literal``          one substring -> replacement
``set-to-one``       any of several substrings -> one replacement
                     (leftmost match wins, longest alternative at a position)
``char-class-pair``  ``[XYZ][abc]`` -> ``[xyz]``: a member of the first class,
                     when followed by a member of the second, becomes the
                     positionally corresponding replacement character.  The
                     second character is left in place.
``end-anchored``     like ``set-to-one`` but only at the end of the string
``dedup``            any run of one repeated character -> that character

Plain-text table format, one rule per line, tab separated::

    kind  pattern  replacement  anchor  [step]

Alternatives in a pattern are separated by ``|``.  ``#`` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

LITERAL = "literal"
CLASS_PAIR = "char-class-pair"
SET_TO_ONE = "set-to-one"
END_ANCHORED = "end-anchored"
DEDUP = "dedup"
KINDS = (LITERAL, CLASS_PAIR, SET_TO_ONE, END_ANCHORED, DEDUP)

NO_ANCHOR = "none"
WORD_END = "word-end"

DEDUP_PATTERN = "*"
_CLASS_PAIR_RE = re.compile(r"^\[([^\]]+)\]\[([^\]]+)\]$")


class RuleFormatError(ValueError):
    pass


@dataclass(frozen=True)
class RewriteRule:
    kind: str
    pattern: str
    replacement: str = ""
    anchor: str = NO_ANCHOR
    step: str = ""
    _regex: re.Pattern = field(init=False, repr=False, compare=False)
    _table: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise RuleFormatError(f"unknown rule kind {self.kind!r}")
        if not self.pattern:
            raise RuleFormatError("empty pattern")
        expected_anchor = WORD_END if self.kind == END_ANCHORED else NO_ANCHOR
        if self.anchor != expected_anchor:
            raise RuleFormatError(
                f"{self.kind} rule needs anchor {expected_anchor!r}, got {self.anchor!r}"
            )
        object.__setattr__(self, "_regex", self._compile())
        table = {}
        if self.kind == CLASS_PAIR:
            table = dict(zip(self.classes[0], self.replacement.strip("[]")))
        object.__setattr__(self, "_table", table)

    @property
    def alternatives(self) -> tuple[str, ...]:
        """Concrete substrings this rule matches (class rules expanded)."""
        if self.kind == DEDUP:
            return ()
        if self.kind == CLASS_PAIR:
            left, right = self.classes
            return tuple(a + b for a in left for b in right)
        if self.kind == LITERAL:
            return (self.pattern,)
        return tuple(self.pattern.split("|"))

    @property
    def classes(self) -> tuple[str, str]:
        m = _CLASS_PAIR_RE.match(self.pattern)
        if not m:
            raise RuleFormatError(f"class pattern must look like [..][..]: {self.pattern!r}")
        return m.group(1), m.group(2)

    def pair_table(self) -> dict[str, str]:
        """Explicit (two-char match -> two-char result) table of a class rule."""
        left, right = self.classes
        target = self.replacement.strip("[]")
        return {a + b: t + b for a, t in zip(left, target) for b in right}

    def _compile(self) -> re.Pattern:
        if self.kind == DEDUP:
            if self.pattern != DEDUP_PATTERN:
                raise RuleFormatError(f"dedup pattern must be {DEDUP_PATTERN!r}")
            return re.compile(r"(.)\1+", re.DOTALL)
        if self.kind == CLASS_PAIR:
            left, right = self.classes
            target = self.replacement.strip("[]")
            if len(target) != len(left) or not self.replacement.startswith("["):
                raise RuleFormatError(
                    f"class replacement must be [..] of length {len(left)}: {self.replacement!r}"
                )
            return re.compile(f"([{re.escape(left)}])(?=[{re.escape(right)}])")
        alts = self.alternatives
        if any(not a for a in alts):
            raise RuleFormatError(f"empty alternative in {self.pattern!r}")
        body = "|".join(re.escape(a) for a in sorted(alts, key=len, reverse=True))
        if self.kind == END_ANCHORED:
            return re.compile(f"(?:{body})$")
        return re.compile(body)

    def _sub_once(self, s: str) -> str:
        if self.kind == DEDUP:
            return self._regex.sub(r"\1", s)
        if self.kind == CLASS_PAIR:
            return self._regex.sub(lambda m: self._table[m.group(1)], s)
        return self._regex.sub(lambda m: self.replacement, s)

    def apply(self, s: str) -> str:
        """Rewrite ``s`` with this rule until it stops matching."""
        for _ in range(len(s) + 2):
            out = self._sub_once(s)
            if out == s:
                return out
            s = out
        raise RuntimeError(f"rule {self.pattern!r} does not settle on {s!r}")

    def to_line(self) -> str:
        cols = [self.kind, self.pattern, self.replacement, self.anchor]
        if self.step:
            cols.append(self.step)
        return "\t".join(cols)


class TraceStep(NamedTuple):
    rule: int
    step: str
    before: str
    after: str


RewriteTrace = list[TraceStep]


@dataclass(frozen=True)
class RuleSet:
    name: str
    rules: tuple[RewriteRule, ...]

    def __len__(self):
        return len(self.rules)

    def to_table(self) -> str:
        lines = [f"# ruleset: {self.name}"]
        lines.extend(rule.to_line() for rule in self.rules)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_table(cls, text: str, name: str | None = None) -> "RuleSet":
        rules = []
        table_name = name
        for lineno, line in enumerate(text.splitlines(), 1):
            if line.startswith("# ruleset:") and table_name is None:
                table_name = line.split(":", 1)[1].strip()
                continue
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) not in (4, 5):
                raise RuleFormatError(f"line {lineno}: expected 4 or 5 tab-separated columns")
            try:
                rules.append(RewriteRule(*cols))
            except RuleFormatError as exc:
                raise RuleFormatError(f"line {lineno}: {exc}") from None
        return cls(table_name or "unnamed", tuple(rules))


def apply(ruleset: RuleSet, token) -> tuple[str, RewriteTrace]:
    """Run ``ruleset`` over ``token`` (a CleanToken or str).

    Returns the final string and the trace of rules that changed it.
    """
    s = getattr(token, "text", token)
    trace: RewriteTrace = []
    for i, rule in enumerate(ruleset.rules):
        out = rule.apply(s)
        if out != s:
            trace.append(TraceStep(i, rule.step, s, out))
            s = out
    return s, trace


def rewrite(ruleset: RuleSet, token) -> str:
    """:func:`apply` without the trace; the fast path used for indexing."""
    s = getattr(token, "text", token)
    for rule in ruleset.rules:
        s = rule.apply(s)
    return s


def replay(ruleset: RuleSet, original: str, trace: Iterable[TraceStep]) -> str:
    """Re-run only the traced rules and check every recorded step."""
    s = original
    for step in trace:
        if step.before != s:
            raise AssertionError(f"trace broken before rule {step.rule}: {step.before!r} != {s!r}")
        s = ruleset.rules[step.rule].apply(s)
        if s != step.after:
            raise AssertionError(f"rule {step.rule} gives {s!r}, trace says {step.after!r}")
    return s


def _removed_chars(rule: RewriteRule) -> set[str]:
    """Characters the rule eliminates everywhere they occur."""
    if rule.kind not in (LITERAL, SET_TO_ONE):
        return set()
    return {a for a in rule.alternatives if len(a) == 1 and a not in rule.replacement}


def lint(ruleset: RuleSet) -> list[str]:
    """Report ordering hazards in a ruleset.

    * a pattern containing a character that an earlier rule deletes or
      rewrites unconditionally (and nothing reintroduced since);
    * a pattern with a doubled character after a dedup rule;
    * a replacement that reintroduces a removed character;
    * an end-anchored pattern shadowed by an earlier end-anchored pattern
      that is a suffix of it.
    """
    warnings: list[str] = []
    removed: dict[str, int] = {}
    dedup_at: int | None = None
    endings: list[tuple[int, str]] = []
    for i, rule in enumerate(ruleset.rules):
        label = f"rule {i}" + (f" (step {rule.step})" if rule.step else "")
        for alt in rule.alternatives:
            gone = [ch for ch in alt if ch in removed]
            if gone:
                warnings.append(
                    f"{label}: pattern '{alt}' unreachable "
                    f"('{gone[0]}' removed by rule {removed[gone[0]]})"
                )
            elif dedup_at is not None and any(a == b for a, b in zip(alt, alt[1:])):
                warnings.append(
                    f"{label}: pattern '{alt}' unreachable (doubled letters collapsed by rule {dedup_at})"
                )
        if rule.kind == END_ANCHORED:
            for alt in rule.alternatives:
                for j, earlier in endings:
                    if alt.endswith(earlier):
                        warnings.append(
                            f"{label}: end-anchored pattern '{alt}' shadowed by '{earlier}' of rule {j}"
                        )
            endings.extend((i, alt) for alt in rule.alternatives)
        replacement = "" if rule.kind == DEDUP else rule.replacement.strip("[]")
        back = [ch for ch in replacement if ch in removed]
        if back:
            warnings.append(
                f"{label}: replacement '{rule.replacement}' reintroduces "
                f"'{back[0]}' removed by rule {removed[back[0]]}"
            )
            for ch in back:
                del removed[ch]
        for ch in _removed_chars(rule):
            removed.setdefault(ch, i)
        if rule.kind == DEDUP:
            dedup_at = i
        elif dedup_at is not None and any(
            a == b for a, b in zip(replacement, replacement[1:])
        ):
            dedup_at = None
    return warnings
