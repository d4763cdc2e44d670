import itertools
from decimal import Decimal

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from uaphone.corpus import COMMON_SURNAME_FORMS, base_surnames, surname_corpus, surname_variants
from uaphone.index import (
    FULL,
    STRUCTURED,
    BuildError,
    DegenerateInput,
    Hit,
    OptimizationReport,
    PhoneticIndex,
    build,
    coefficient,
    dedup,
    edit_distance,
    frequency_report,
    lookup,
    merge,
    optimization_report,
    power_model,
    round_percent,
    scan,
)
from uaphone.textnorm import MEDICINE, SURNAME, CleanError, clean

short = st.text(alphabet="абвгд", max_size=6)


def bfs_distance(a: str, b: str) -> int:
    """Breadth-first search over single edits; slow but obviously correct."""
    alphabet = sorted(set(a + b)) or ["а"]
    seen = {a}
    frontier = [a]
    for d in itertools.count():
        if b in seen:
            return d
        nxt = []
        for s in frontier:
            cands = {s[:i] + s[i + 1 :] for i in range(len(s))}
            cands |= {s[:i] + c + s[i:] for i in range(len(s) + 1) for c in alphabet}
            cands |= {s[:i] + c + s[i + 1 :] for i in range(len(s)) for c in alphabet}
            for c in cands - seen:
                if len(c) <= max(len(a), len(b)):
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt


class TestBuild:
    def test_example(self):
        index, rejects = build(["Шевченко", "Шевченка", "Бойко"])
        assert rejects == []
        assert dict(index.items()) == {
            "шевчI": [("шевченка", 1), ("шевченко", 1)],
            "боико": [("бойко", 1)],
        }
        assert index.records == 3

    def test_empty(self):
        index, rejects = build([])
        assert len(index) == 0 and index.records == 0 and rejects == []

    def test_rejects_keep_line_numbers(self):
        index, rejects = build(["Бойко", "", "1234", "Ю"])
        assert [r.line for r in rejects] == [2, 3, 4]
        assert index.records == 1

    def test_bad_utf8_names_line(self):
        with pytest.raises(BuildError, match="line 2"):
            build([b"\xd0\x91\xd0\xbe\xd0\xb9\xd0\xba\xd0\xbe", b"\xff\xfe"])

    def test_synthetic_thousand_compresses(self):
        index, _ = build(surname_corpus(1000, seed=3))
        report = optimization_report(index, STRUCTURED)
        assert report.i_num < report.n_num

    def test_medicine_counts_words(self):
        index, rejects = build(["Анальгін форте", "анальгин", "Но-шпа"], MEDICINE)
        assert index.bucket("аналгин") == [("аналгин", 1), ("аналгін", 1)]
        assert [r.line for r in rejects] == [3]

    def test_unknown_ruleset(self):
        with pytest.raises(ValueError):
            build(["x"], "tax")


class TestSerialization:
    def test_format(self):
        index, _ = build(["Шевченко", "Шевченка", "Бойко", "Бойко"])
        assert index.dumps() == (
            "#ruleset=surname\n#records=4\n"
            "боико\tбойко\t2\n"
            "шевчI\tшевченка\t1\nшевчI\tшевченко\t1\n"
        )

    def test_round_trip(self):
        index, _ = build(surname_corpus(3000, seed=1))
        again = PhoneticIndex.loads(index.dumps())
        assert again == index
        assert again.dumps() == index.dumps()

    def test_rebuild_is_byte_identical(self):
        records = surname_corpus(3000, seed=2)
        assert build(records)[0].dumps() == build(records)[0].dumps()

    def test_header_mismatch(self):
        with pytest.raises(BuildError):
            PhoneticIndex.loads("#ruleset=surname\n#records=5\nа\tаа\t1\n")

    def test_malformed_line(self):
        with pytest.raises(BuildError, match="line 2"):
            PhoneticIndex.loads("#ruleset=surname\nоops\n")


class TestMerge:
    def test_split_build_equals_whole(self):
        records = surname_corpus(2000, seed=4)
        whole, _ = build(records)
        parts = [build(records[i::3])[0] for i in range(3)]
        left = merge(merge(parts[0], parts[1]), parts[2])
        right = merge(parts[0], merge(parts[1], parts[2]))
        assert left == right == whole
        assert merge(parts[1], parts[0]) == merge(parts[0], parts[1])

    def test_ruleset_mismatch(self):
        with pytest.raises(ValueError):
            merge(PhoneticIndex(SURNAME), PhoneticIndex(MEDICINE))


class TestLookup:
    @pytest.fixture
    def index(self):
        return build(["Шевченко", "Шевченка", "Бойко", "Кравець", "Кравець", "Мельник"])[0]

    def test_bucket_sorted(self, index):
        assert lookup(index, "Шевченко") == [Hit("шевченка", 1), Hit("шевченко", 1)]

    def test_rank_by_distance(self, index):
        hits = lookup(index, "Шевченко", rank="edit-distance")
        assert [(h.form, h.distance) for h in hits] == [("шевченко", 0), ("шевченка", 1)]

    def test_soft_sign_variant_found(self, index):
        assert lookup(index, "Кравец") == [Hit("кравець", 2)]

    def test_no_bucket_is_empty(self, index):
        assert lookup(index, "Ццц") == []
        assert lookup(PhoneticIndex(SURNAME), "Ццц") == []

    def test_unclean_query_is_an_error(self, index):
        with pytest.raises(CleanError):
            lookup(index, "123")

    def test_scan_agrees_on_exact_hit(self, index):
        assert scan(index, "Мельник", 0) == [Hit("мельник", 1, 0)]

    def test_own_form_always_found(self):
        index, _ = build(COMMON_SURNAME_FORMS)
        for name in COMMON_SURNAME_FORMS:
            forms = [h.form for h in lookup(index, name)]
            assert name.lower() in forms


class TestEditDistance:
    @pytest.mark.parametrize("a, b, d", [("кіт", "кіт", 0), ("кіт", "кит", 1), ("а", "", 1), ("", "", 0), ("шевченко", "шевченка", 1)])
    def test_examples(self, a, b, d):
        assert edit_distance(a, b) == d

    @settings(max_examples=300)
    @given(st.text(alphabet="абв", max_size=4), st.text(alphabet="абв", max_size=4))
    def test_matches_bfs(self, a, b):
        assert edit_distance(a, b) == bfs_distance(a, b)

    @given(short, short, short)
    def test_metric(self, a, b, c):
        assert edit_distance(a, b) >= 0
        assert (edit_distance(a, b) == 0) == (a == b)
        assert edit_distance(a, b) == edit_distance(b, a)
        assert edit_distance(a, c) <= edit_distance(a, b) + edit_distance(b, c)


class TestOptimizationReport:
    def test_structured_row(self):
        r = OptimizationReport(547_825, 434_495, 9_213_759, 8_358_969)
        assert round_percent(r.k_num) == Decimal("20.7")
        assert round_percent(r.k_vol) == Decimal("9.3")
        assert "K=20.7 %" in r.format() and "K=9.3 %" in r.format()

    def test_medicine_figure(self):
        assert round_percent(coefficient(16_049, 23_198)) == Decimal("30.8")

    def test_no_compression(self):
        index, _ = build(["Мельник", "Бойко"])
        r = optimization_report(index)
        assert r.i_num == r.n_num and r.k_num == 0.0
        assert "K=0.0 %" in r.format()

    def test_degenerate(self):
        with pytest.raises(DegenerateInput):
            optimization_report(PhoneticIndex(SURNAME))
        with pytest.raises(DegenerateInput):
            coefficient(0, 0)

    def test_structured_and_full(self):
        index, _ = build(["Шевченко", "Шевченка", "Шевченко", "Бойко"])
        s = optimization_report(index, STRUCTURED)
        f = optimization_report(index, FULL)
        assert (s.n_num, s.i_num) == (3, 2)
        assert (f.n_num, f.i_num) == (4, 2)
        assert s.n_vol == len("шевченко") + len("шевченка") + len("бойко")
        assert s.i_vol == len("шевчI") + len("боико")
        assert 0 <= s.k_num <= 100

    def test_k_round_trip_from_serialized_counts(self):
        index, _ = build(surname_corpus(5000, seed=5))
        again = PhoneticIndex.loads(index.dumps())
        for sample in (STRUCTURED, FULL):
            stored = optimization_report(index, sample).as_dict()
            r = optimization_report(again, sample)
            recomputed = (1 - r.i_num / r.n_num) * 100
            assert abs(recomputed - stored["K_num"]) <= 0.05


class TestFrequency:
    def test_rate(self):
        index, _ = build(["Мельник"] * 33 + ["Бойко"] * 9967)
        report = frequency_report(index)
        assert report.rates["мельник"] == pytest.approx(3.3)
        assert sum(report.rates.values()) <= 1000 + 1e-9

    def test_model_at_one(self):
        assert power_model(1) == pytest.approx(6.283, abs=1e-3)

    def test_top_of_seeded_corpus(self):
        index, _ = build(surname_corpus(100_000, seed=0))
        assert frequency_report(index, 5).top[0][0] == "мельник"

    def test_ending_histogram_counts_records(self):
        index, _ = build(["Шевченко", "Шевченка", "Петрович", "Мельник"])
        report = frequency_report(index)
        assert report.endings == {"I": 2, "P": 1}

    def test_power_law_rows(self):
        index, _ = build(["Бойко", "Бойко", "Мельник", "Кравець"])
        rows = frequency_report(index).power_law
        # two surnames occur once, one occurs twice
        assert [(n, obs) for n, obs, _ in rows] == [(1, 500.0), (2, 250.0)]


class TestDedup:
    def test_group_of_two(self):
        index, _ = build(["Кравец", "Кравець"])
        groups = dedup(index)
        assert len(groups) == 1
        assert groups[0].members == (("кравец", 1), ("кравець", 1))

    def test_all_unique(self):
        assert dedup(build(["Мельник", "Бойко"])[0]) == []

    def test_sorted_by_total(self):
        index, _ = build(["Кравец", "Кравець", "Шевченко", "Шевченка", "Шевченко"])
        assert [g.total for g in dedup(index)] == [3, 2]

    def test_variants_share_group_with_base(self):
        records = []
        labeled = []
        for base in base_surnames(40):
            records.append(base)
            for variants in surname_variants(base).values():
                records += variants
                labeled += [(base, v) for v in variants]
        index, _ = build(records)
        group_of = {f: g.key for g in dedup(index) for f, _ in g.members}
        for base, v in labeled:
            b, w = clean(base).text, clean(v).text
            if b != w:
                assert group_of[b] == group_of[w]


@settings(max_examples=200)
@given(st.lists(st.sampled_from(list(COMMON_SURNAME_FORMS) + ["Кравец", "Ковальов", "Ґонта"]), max_size=30))
def test_partition(records):
    index, _ = build(records)
    seen = {}
    for key, members in index.items():
        for form, _ in members:
            assert form not in seen
            seen[form] = key
        assert [f for f, _ in members] == sorted(f for f, _ in members)
    assert index.records == len(records)
