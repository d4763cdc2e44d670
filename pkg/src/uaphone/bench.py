"""Wall-clock timings: per-rule rewrite cost and bucket lookup vs. full scan."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .index import PhoneticIndex, build, lookup, scan
from .medicine import MEDICINE_RULES
from .surname import SURNAME_RULES
from .textnorm import MEDICINE, SURNAME, CleanError, clean

MIN_RECORDS = 1000


class BenchError(ValueError):
    pass


@dataclass
class RuleTiming:
    label: str
    step: str
    seconds: float


@dataclass
class BenchReport:
    records: int
    rule_times: list[RuleTiming] = field(default_factory=list)
    bucket_mean: float = 0.0
    scan_mean: float = 0.0
    bucket_queries: int = 0
    scan_queries: int = 0

    @property
    def ratio(self) -> float:
        return self.scan_mean / self.bucket_mean if self.bucket_mean else float("inf")

    def as_dict(self) -> dict:
        return {
            "records": self.records,
            "rules": [
                {"rule": t.label, "step": t.step, "seconds": t.seconds} for t in self.rule_times
            ],
            "bucket_mean_seconds": self.bucket_mean,
            "scan_mean_seconds": self.scan_mean,
            "bucket_queries": self.bucket_queries,
            "scan_queries": self.scan_queries,
            "speedup": self.ratio,
        }

    def format(self) -> str:
        total = sum(t.seconds for t in self.rule_times) or 1.0
        lines = [f"records: {self.records}", "", f"{'step':>5}  {'rule':<40} {'ms':>10} {'share':>7}"]
        for t in sorted(self.rule_times, key=lambda t: -t.seconds):
            lines.append(
                f"{t.step:>5}  {t.label:<40} {t.seconds * 1000:>10.2f} {t.seconds / total:>7.1%}"
            )
        lines += [
            "",
            f"bucket lookup: {self.bucket_mean * 1e6:12.1f} us/query ({self.bucket_queries} queries)",
            f"linear scan:   {self.scan_mean * 1e6:12.1f} us/query ({self.scan_queries} queries)",
            f"speedup:       {self.ratio:12.1f}x",
        ]
        return "\n".join(lines)


def time_rules(texts: list[str], ruleset: str, warmup: int = 200) -> list[RuleTiming]:
    """Cost of each stage when run over the whole corpus, one rule at a time."""
    rules = SURNAME_RULES if ruleset == SURNAME else MEDICINE_RULES

    def cleaned(batch):
        tokens = []
        for text in batch:
            try:
                got = clean(text, ruleset)
            except CleanError:
                continue
            if ruleset == MEDICINE:
                tokens.extend(t.text for t in got)
            elif not got.hyphenated:
                tokens.append(got.text)
        return tokens

    # warm-up pass, not timed
    states = cleaned(texts[:warmup])
    for rule in rules.rules:
        states = [rule.apply(s) for s in states]

    timings = []
    t0 = time.perf_counter()
    states = cleaned(texts)
    timings.append(RuleTiming("clean", "1", time.perf_counter() - t0))
    for rule in rules.rules:
        t0 = time.perf_counter()
        states = [rule.apply(s) for s in states]
        label = f"{rule.kind} {rule.pattern}" + (f" -> {rule.replacement}" if rule.replacement else "")
        timings.append(RuleTiming(label[:40], rule.step, time.perf_counter() - t0))
    return timings


def _mean_latency(fn, queries, warmup):
    for q in queries[:warmup]:
        fn(q)
    timed = queries[warmup:]
    t0 = time.perf_counter()
    for q in timed:
        fn(q)
    return (time.perf_counter() - t0) / len(timed), len(timed)


def run_bench(
    texts: list[str],
    ruleset: str = SURNAME,
    bucket_queries: int = 500,
    scan_queries: int = 20,
    warmup: int = 5,
    seed: int = 0,
    index: PhoneticIndex | None = None,
) -> BenchReport:
    if len(texts) < MIN_RECORDS:
        raise BenchError(
            f"corpus has {len(texts)} records; at least {MIN_RECORDS} are needed for meaningful timings"
        )
    if index is None:
        index, _ = build(texts, ruleset)
    report = BenchReport(records=len(texts))
    report.rule_times = time_rules(texts, ruleset)

    rng = random.Random(seed)
    pool = []
    for text in rng.sample(texts, min(len(texts), bucket_queries + warmup)):
        try:
            got = clean(text, ruleset)
        except CleanError:
            continue
        if ruleset == MEDICINE and not got:
            continue
        pool.append(text)
    if len(pool) <= warmup:
        raise BenchError("not enough cleanable records to sample queries from")
    report.bucket_mean, report.bucket_queries = _mean_latency(
        lambda q: lookup(index, q, rank="edit-distance"), pool, warmup
    )
    report.scan_mean, report.scan_queries = _mean_latency(
        lambda q: scan(index, q), pool[: scan_queries + warmup], warmup
    )
    return report
