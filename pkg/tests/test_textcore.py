import random

import pytest

from helpers import oracle_tokenize, random_token_text

from formality3 import _scan_py
from formality3.textcore import (
    LexiconError,
    USING_COMPILED_SCANNER,
    default_lexicon_dir,
    load_lexicons,
    pos_tag,
    tag,
    tokenize,
)


def surfaces(text):
    return [t.surface for t in tokenize(text).tokens]


class TestTokenize:
    def test_empty(self):
        assert tokenize("").tokens == ()

    def test_punctuation_split(self):
        assert surfaces("Hello, world!") == ["Hello", ",", "world", "!"]

    def test_apostrophe_and_emoji(self):
        assert surfaces("can't stop \U0001F602") == ["can't", "stop", "\U0001F602"]

    def test_acronym_periods_stay_attached(self):
        assert surfaces("born in the u.s. today") == \
            ["born", "in", "the", "u.s.", "today"]
        assert surfaces("It ended.") == ["It", "ended", "."]
        assert surfaces("pi is 3.14") == ["pi", "is", "3.14"]

    def test_spans_match_surfaces(self):
        text = "Hey, I'm not sure what happened... O_O \U0001F602"
        for token in tokenize(text).tokens:
            assert text[token.start:token.end] == token.surface

    def test_matches_regex_oracle_on_random_inputs(self):
        rng = random.Random(20240811)
        for _ in range(500):
            text = random_token_text(rng, rng.randint(0, 30))
            assert surfaces(text) == oracle_tokenize(text), repr(text)

    def test_deterministic(self):
        text = "idk what just happened but omg O_O"
        assert tokenize(text) == tokenize(text)

    def test_span_reconstruction(self):
        rng = random.Random(99)
        texts = [random_token_text(rng, rng.randint(0, 40)) for _ in range(200)]
        texts += ["", "   ", "a  b\tc\nd", "\U0001F602\U0001F602"]
        for text in texts:
            rebuilt = []
            cursor = 0
            for token in tokenize(text).tokens:
                rebuilt.append(text[cursor:token.start])
                rebuilt.append(token.surface)
                cursor = token.end
            rebuilt.append(text[cursor:])
            assert "".join(rebuilt) == text

    def test_tokens_ordered_nonoverlapping(self):
        rng = random.Random(7)
        for _ in range(100):
            tokens = tokenize(random_token_text(rng, 25)).tokens
            for a, b in zip(tokens, tokens[1:]):
                assert a.end <= b.start
            for t in tokens:
                assert 0 <= t.start < t.end


class TestScannerTwins:
    @pytest.mark.skipif(not USING_COMPILED_SCANNER,
                        reason="compiled scanner not built")
    def test_pure_and_compiled_agree(self):
        from formality3 import _scan_c

        rng = random.Random(4242)
        samples = [random_token_text(rng, rng.randint(0, 60)) for _ in range(800)]
        samples += [
            "", " ", "can't stop \U0001F602", "u.s.a. rocks",
            "élève résumé naïve",  # accented letters
            "日本語 テスト",          # CJK
            "mixed \U0001F680 rocket:⭐star",
            "tab\tseparated\nnewline",
        ]
        for text in samples:
            assert _scan_c.scan_spans(text) == _scan_py.scan_spans(text), repr(text)

    @pytest.mark.skipif(not USING_COMPILED_SCANNER,
                        reason="compiled scanner not built")
    def test_emoji_tables_match(self):
        from formality3._emoji import EMOJI_RANGES, is_emoji
        from formality3 import _scan_c

        # probe boundary codepoints through both scanners
        for lo, hi in EMOJI_RANGES:
            for cp in (lo, hi, lo - 1, hi + 1):
                ch = chr(cp)
                text = f"a {ch} b"
                assert _scan_c.scan_spans(text) == _scan_py.scan_spans(text)
                if is_emoji(ch):
                    assert (2, 3) in _scan_py.scan_spans(text)


class TestPosTag:
    def test_lexicon_lookup(self, lexicons):
        tokens = tag("The cat sleeps", lexicons).tokens
        assert [t.pos for t in tokens] == ["article", "noun", "verb"]
        # matches a direct lookup of the shipped lexicon
        for token in tokens:
            assert token.pos == lexicons.pos[token.surface.lower()][0]

    def test_emoji_char_class(self, lexicons):
        assert tag("\U0001F602", lexicons).tokens[0].pos == "emoji"

    def test_suffix_fallback(self, lexicons):
        assert "happiness" not in lexicons.pos
        assert tag("happiness", lexicons).tokens[0].pos == "noun"
        assert tag("bravely", lexicons).tokens[0].pos == "adverb"

    def test_numeral_and_punctuation(self, lexicons):
        tokens = tag("3.14 , !", lexicons).tokens
        assert [t.pos for t in tokens] == ["numeral", "punctuation", "punctuation"]

    def test_unknown_is_other(self, lexicons):
        assert tag("zzqx", lexicons).tokens[0].pos == "other"

    def test_every_token_tagged_surfaces_unchanged(self, lexicons):
        rng = random.Random(3)
        for _ in range(50):
            text = random_token_text(rng, 24)
            plain = tokenize(text)
            tagged = pos_tag(plain, lexicons)
            assert all(t.pos is not None for t in tagged.tokens)
            assert [(t.surface, t.start, t.end) for t in tagged.tokens] == \
                [(t.surface, t.start, t.end) for t in plain.tokens]

    def test_missing_pos_lexicon_errors(self):
        from formality3.textcore import LexiconSet

        empty = LexiconSet(entries={}, pos={})
        with pytest.raises(LexiconError, match="pos_lexicon"):
            pos_tag(tokenize("hello"), empty)


class TestLoadLexicons:
    def test_happy_path(self, lexicons):
        for lexicon_id in ("slang", "netspeak", "interjections",
                           "abbreviations", "hedges", "direct_address",
                           "dictionary"):
            assert lexicons.words(lexicon_id)
        assert lexicons.pos["the"][0] == "article"

    def test_dedup_and_lowercase(self, tmp_path):
        src = default_lexicon_dir()
        for name in ("netspeak", "interjections", "abbreviations", "hedges",
                     "direct_address", "pos_lexicon", "dictionary"):
            (tmp_path / f"{name}.txt").write_text(
                (src / f"{name}.txt").read_text(encoding="utf-8"),
                encoding="utf-8")
        (tmp_path / "slang.txt").write_text("# test\nLOL\nlol\n", encoding="utf-8")
        loaded = load_lexicons(tmp_path)
        assert loaded.words("slang") == frozenset({"lol"})

    def test_missing_file_names_the_lexicon(self, tmp_path):
        src = default_lexicon_dir()
        for name in ("slang", "netspeak", "interjections", "abbreviations",
                     "direct_address", "pos_lexicon", "dictionary"):
            (tmp_path / f"{name}.txt").write_text(
                (src / f"{name}.txt").read_text(encoding="utf-8"),
                encoding="utf-8")
        with pytest.raises(LexiconError, match="lexicon 'hedges' not found"):
            load_lexicons(tmp_path)

    def test_duplicate_lexicon_id(self, tmp_path):
        src = default_lexicon_dir()
        for name in ("slang", "netspeak", "interjections", "abbreviations",
                     "hedges", "direct_address", "pos_lexicon", "dictionary"):
            (tmp_path / f"{name}.txt").write_text(
                (src / f"{name}.txt").read_text(encoding="utf-8"),
                encoding="utf-8")
        (tmp_path / "Slang.txt").write_text("shadow\n", encoding="utf-8")
        with pytest.raises(LexiconError, match="duplicate lexicon 'slang'"):
            load_lexicons(tmp_path)

    def test_missing_directory(self, tmp_path):
        with pytest.raises(LexiconError, match="not found"):
            load_lexicons(tmp_path / "nope")
