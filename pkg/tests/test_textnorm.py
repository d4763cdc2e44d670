import unicodedata

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from uaphone.textnorm import (
    ALPHABET,
    HOMOGLYPHS,
    MEDICINE,
    SURNAME,
    CleanToken,
    EmptyAfterClean,
    RawRecord,
    clean,
    fold_homoglyphs,
)

# characters that actually occur in dirty registry data, plus arbitrary unicode
messy = st.text(
    alphabet=st.one_of(
        st.sampled_from(sorted(ALPHABET) + list("ABCEHIKMOPTXYabcdehikmoptuxyvnlЁЇІ -–--'’ʼ`.,®™&*0123456789\t")),
        st.characters(),
    ),
    max_size=30,
)


class TestSurnameClean:
    def test_apostrophe_and_space_removed(self):
        tok = clean(RawRecord("Мел'ник "))
        assert tok == CleanToken("мелник", hyphenated=False)

    def test_empty_rejected(self):
        with pytest.raises(EmptyAfterClean):
            clean("")

    def test_single_letter_rejected(self):
        with pytest.raises(EmptyAfterClean):
            clean(" Ю- ")

    def test_soft_sign_does_not_count_as_letter(self):
        with pytest.raises(EmptyAfterClean):
            clean("ьь")

    def test_hyphen_runs_and_edges(self):
        tok = clean("ШЕВЧЕНКО--БОЙКО-")
        assert tok.text == "шевченко-бойко"
        assert tok.hyphenated

    def test_all_apostrophe_variants(self):
        for ap in "'’ʼ`":
            assert clean(f"П{ap}ятниця").text == "пятниця"

    def test_latin_lookalikes_folded(self):
        assert clean("Cидopoв").text == "сидоров"
        assert clean("KOBAЛЬ").text == "коваль"

    def test_digits_and_punctuation_deleted(self):
        assert clean("Бой1ко.").text == "бойко"

    def test_deleted_characters_do_not_leave_double_hyphens(self):
        assert clean("Бойко-7-Шевчук").text == "бойко-шевчук"

    def test_decomposed_unicode(self):
        decomposed = unicodedata.normalize("NFD", "Йосипів")
        assert decomposed != "Йосипів"
        assert clean(decomposed).text == "йосипів"

    def test_raw_record_untouched(self):
        rec = RawRecord("  Мел'ник ")
        clean(rec)
        assert rec.text == "  Мел'ник "

    def test_invalid_token_rejected_by_type(self):
        with pytest.raises(ValueError):
            CleanToken("abc")
        with pytest.raises(ValueError):
            CleanToken("-бойко")

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            clean("x", "tax")


class TestMedicineClean:
    def test_short_tokens_dropped(self):
        assert clean("Но-Шпа®", MEDICINE) == []

    def test_empty(self):
        assert clean("", MEDICINE) == []

    def test_split_and_signs(self):
        toks = clean("Фолієва кислота, табл. 1мг", MEDICINE)
        assert [t.text for t in toks] == ["фолієва", "кислота", "табл"]

    def test_soft_and_hard_sign_removed(self):
        assert [t.text for t in clean("Анальгін-Ъ подъем", MEDICINE)] == ["аналгін", "подем"]

    def test_length_counted_after_sign_removal(self):
        # "мазь" is four characters but only three letters
        assert clean("мазь", MEDICINE) == []

    def test_special_marks_separate(self):
        assert [t.text for t in clean("Аспірин&Кофеїн*", MEDICINE)] == ["аспірин", "кофеїн"]


class TestFold:
    def test_partial_latin(self):
        assert fold_homoglyphs("ivanenko") == "і" + "v" + "а" + "n" + "е" + "n" + "к" + "о"

    def test_identity_on_cyrillic(self):
        assert fold_homoglyphs("боуко") == "боуко"

    def test_mixed_script(self):
        assert fold_homoglyphs("cидopoв") == "сидоров"

    def test_map_is_injective_and_targets_outside_domain(self):
        sources = [a for a, _ in HOMOGLYPHS]
        targets = [b for _, b in HOMOGLYPHS]
        assert len(set(sources)) == len(sources)
        assert len(set(targets)) == len(targets)
        assert not set(targets) & set(sources)

    @given(st.text(max_size=40))
    def test_idempotent_and_local(self, s):
        s = s.lower()
        once = fold_homoglyphs(s)
        assert fold_homoglyphs(once) == once
        mapped = dict(HOMOGLYPHS)
        for a, b in zip(s, once):
            assert b == mapped.get(a, a)


class TestCleanProperties:
    @settings(max_examples=500)
    @given(messy)
    def test_surname_output_in_alphabet_and_idempotent(self, text):
        try:
            tok = clean(text)
        except EmptyAfterClean:
            return
        assert set(tok.text) <= ALPHABET | {"-"}
        assert "--" not in tok.text
        assert not tok.text.startswith("-") and not tok.text.endswith("-")
        assert clean(tok.text) == tok

    @settings(max_examples=500)
    @given(messy)
    def test_medicine_tokens(self, text):
        toks = clean(text, MEDICINE)
        for tok in toks:
            assert len(tok.text) >= 4
            assert set(tok.text) <= ALPHABET
            assert not set(tok.text) & set("ьъ'’ʼ`")
        assert clean(" ".join(t.text for t in toks), MEDICINE) == toks

    @given(messy)
    def test_byte_identical_inputs_same_output(self, text):
        other = text.encode("utf-8").decode("utf-8")
        for mode in (SURNAME, MEDICINE):
            try:
                a = clean(text, mode)
            except EmptyAfterClean:
                with pytest.raises(EmptyAfterClean):
                    clean(other, mode)
                continue
            assert clean(other, mode) == a
