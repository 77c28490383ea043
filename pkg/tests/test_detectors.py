import random

from conftest import EXEMPLAR_CASUAL, EXEMPLAR_FORMAL, EXEMPLAR_INFORMAL
from helpers import inject_markers

from formality3.detectors import (
    KIND_TIER,
    detect_casual_markers,
    detect_formal_markers,
    detect_informal_markers,
)
from formality3.textcore import tag


def kinds(evidence):
    return [e.kind for e in evidence]


def matched(evidence, kind):
    return [e.matched for e in evidence if e.kind == kind]


class TestInformal:
    def test_informal_exemplar(self, lexicons):
        ev = detect_informal_markers(tag(EXEMPLAR_INFORMAL, lexicons), lexicons)
        assert "lol" in matched(ev, "netspeak")
        assert "sooo" in matched(ev, "nonstandard_spelling")
        assert "idk" in matched(ev, "netspeak")
        assert "omg" in matched(ev, "interjection")
        assert "O_O" in matched(ev, "emoji")

    def test_formal_exemplar_is_clean(self, lexicons):
        assert detect_informal_markers(tag(EXEMPLAR_FORMAL, lexicons), lexicons) == []

    def test_confusion_list(self, lexicons):
        ev = detect_informal_markers(tag("im happy", lexicons), lexicons)
        assert "im" in matched(ev, "grammatical_error")

    def test_sentence_initial_lowercase_i(self, lexicons):
        ev = detect_informal_markers(tag("i went home", lexicons), lexicons)
        assert "i" in matched(ev, "grammatical_error")
        # mid-sentence i is out of the curated subset
        ev = detect_informal_markers(tag("whatever i said", lexicons), lexicons)
        assert "i" not in matched(ev, "grammatical_error")

    def test_duplicated_word(self, lexicons):
        ev = detect_informal_markers(tag("the the cat", lexicons), lexicons)
        assert "the the" in matched(ev, "grammatical_error")
        # no flag across a sentence boundary
        ev = detect_informal_markers(tag("It works. Works again.", lexicons),
                                     lexicons)
        assert matched(ev, "grammatical_error") == []

    def test_elongation_requires_oov(self, lexicons):
        ev = detect_informal_markers(tag("that was sooo good", lexicons), lexicons)
        assert "sooo" in matched(ev, "nonstandard_spelling")

    def test_emoticons(self, lexicons):
        ev = detect_informal_markers(tag("nice :) really", lexicons), lexicons)
        assert ":)" in matched(ev, "emoji")
        for emoticon in ("O_O", "o.O", "^_^", "T_T", "-_-", ">.<", "xD", "<3"):
            ev = detect_informal_markers(
                tag(f"well {emoticon} then", lexicons), lexicons)
            assert emoticon in matched(ev, "emoji"), emoticon

    def test_plain_words_are_not_emoticons(self, lexicons):
        # regression: vertical-eye and reversed-smiley patterns must not
        # swallow ordinary words or colon-suffixed words
        for text in ("that is too much", "what to do: run", "he said: go",
                     "a tot of rum", "dip: tasty"):
            ev = detect_informal_markers(tag(text, lexicons), lexicons)
            assert matched(ev, "emoji") == [], text


class TestCasual:
    def test_casual_exemplar(self, lexicons):
        ev = detect_casual_markers(tag(EXEMPLAR_CASUAL, lexicons), lexicons)
        assert "hey" in matched(ev, "direct_address")
        assert "i'm" in matched(ev, "contraction")

    def test_clean_sentence(self, lexicons):
        ev = detect_casual_markers(tag("The report was submitted.", lexicons),
                                   lexicons)
        assert ev == []

    def test_second_person_and_contraction(self, lexicons):
        ev = detect_casual_markers(tag("you can't do that", lexicons), lexicons)
        assert "you" in matched(ev, "direct_address")
        assert "can't" in matched(ev, "contraction")

    def test_possessive_is_not_a_contraction(self, lexicons):
        ev = detect_casual_markers(tag("John's bike broke", lexicons), lexicons)
        assert matched(ev, "contraction") == []

    def test_abbreviation_allowlist(self, lexicons):
        ev = detect_casual_markers(tag("more info on the TV", lexicons), lexicons)
        assert matched(ev, "abbreviation") == ["info"]


class TestFormal:
    def test_formal_exemplar_hedge(self, lexicons):
        ev = detect_formal_markers(tag(EXEMPLAR_FORMAL, lexicons), lexicons)
        assert "it appears that" in matched(ev, "hedging")

    def test_passive_only(self, lexicons):
        ev = detect_formal_markers(tag("The proposal was rejected.", lexicons),
                                   lexicons)
        assert kinds(ev) == ["passive_voice"]
        assert matched(ev, "passive_voice") == ["was rejected"]

    def test_passive_within_two_tokens(self, lexicons):
        ev = detect_formal_markers(
            tag("The plan was quickly rejected.", lexicons), lexicons)
        assert "was quickly rejected" in matched(ev, "passive_voice")
        ev = detect_formal_markers(
            tag("The plan was really very quickly rejected.", lexicons), lexicons)
        assert matched(ev, "passive_voice") == []

    def test_nominalization_suffix_and_length(self, lexicons):
        ev = detect_formal_markers(
            tag("The transformation was a success.", lexicons), lexicons)
        assert "transformation" in matched(ev, "nominalization")
        # "-al" is not a nominalizing suffix
        ev = detect_formal_markers(tag("The proposal stands.", lexicons), lexicons)
        assert matched(ev, "nominalization") == []

    def test_no_markers(self, lexicons):
        assert detect_formal_markers(tag("dog runs fast", lexicons), lexicons) == []

    def test_hedge_longest_match_first(self, lexicons):
        # "it appears that" must win over the shorter "it appears"
        ev = detect_formal_markers(
            tag("it appears that nothing changed", lexicons), lexicons)
        assert matched(ev, "hedging") == ["it appears that"]


class TestProperties:
    def test_spans_map_to_real_characters(self, lexicons):
        rng = random.Random(11)
        for _ in range(200):
            tiers = {t for t in ("informal", "casual", "formal")
                     if rng.random() < 0.5}
            text = inject_markers(rng, tiers)
            sentence = tag(text, lexicons)
            evidence = (detect_informal_markers(sentence, lexicons)
                        + detect_casual_markers(sentence, lexicons)
                        + detect_formal_markers(sentence, lexicons))
            for e in evidence:
                assert 0 <= e.start < e.end <= len(text)
                assert text[e.start:e.end].strip()

    def test_tier_independence(self, lexicons):
        base = "the report looks fine"
        with_casual = "hey, the report looks fine you know"
        informal_a = detect_informal_markers(tag(base, lexicons), lexicons)
        informal_b = detect_informal_markers(tag(with_casual, lexicons), lexicons)
        assert [e.kind for e in informal_a] == [e.kind for e in informal_b] == []
        formal_a = detect_formal_markers(tag(base, lexicons), lexicons)
        formal_b = detect_formal_markers(tag(with_casual, lexicons), lexicons)
        assert [e.kind for e in formal_a] == [e.kind for e in formal_b]

    def test_case_insensitive_kinds(self, lexicons):
        # uppercasing changes no evidence kinds for the lexicon/pattern
        # detectors; the lowercase-i heuristic is excluded by construction
        rng = random.Random(13)
        for _ in range(150):
            tiers = {t for t in ("informal", "casual", "formal")
                     if rng.random() < 0.5}
            text = inject_markers(rng, tiers)
            upper = text.upper()

            def kind_bag(s):
                sentence = tag(s, lexicons)
                evidence = (detect_informal_markers(sentence, lexicons)
                            + detect_casual_markers(sentence, lexicons)
                            + detect_formal_markers(sentence, lexicons))
                return sorted(e.kind for e in evidence
                              if not (e.kind == "grammatical_error"
                                      and e.matched == "i"))

            assert kind_bag(text) == kind_bag(upper), text

    def test_appending_emoji_adds_exactly_one_emoji(self, lexicons):
        rng = random.Random(17)
        for _ in range(100):
            tiers = {t for t in ("informal", "casual", "formal")
                     if rng.random() < 0.5}
            text = inject_markers(rng, tiers)
            augmented = text + " \U0001F602"

            def bag(s):
                sentence = tag(s, lexicons)
                evidence = (detect_informal_markers(sentence, lexicons)
                            + detect_casual_markers(sentence, lexicons)
                            + detect_formal_markers(sentence, lexicons))
                return sorted((e.kind, e.matched) for e in evidence)

            before = bag(text)
            after = bag(augmented)
            assert after == sorted(before + [("emoji", "\U0001F602")])

    def test_kind_tier_table_is_total(self):
        assert set(KIND_TIER) == {
            "slang", "netspeak", "interjection", "emoji",
            "nonstandard_spelling", "grammatical_error",
            "contraction", "abbreviation", "direct_address",
            "hedging", "nominalization", "passive_voice",
        }
