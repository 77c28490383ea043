"""Deterministic tokenization, POS tagging, and lexicon loading.

No statistical models anywhere: tagging is lexicon lookup plus suffix
heuristics, so every downstream metric is reproducible bit-for-bit. The
token scanner has a compiled variant; the pure-Python one is the fallback
selected at import time (see USING_COMPILED_SCANNER).
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable, Mapping

from formality3._emoji import is_emoji

try:
    from formality3._scan_c import scan_spans as _scan_spans
    USING_COMPILED_SCANNER = True
except ImportError:
    from formality3._scan_py import scan_spans as _scan_spans
    USING_COMPILED_SCANNER = False

# word classes
NOUN = "noun"
VERB = "verb"
ADJECTIVE = "adjective"
ADVERB = "adverb"
PRONOUN = "pronoun"
PREPOSITION = "preposition"
ARTICLE = "article"
INTERJECTION = "interjection"
CONJUNCTION = "conjunction"
NUMERAL = "numeral"
PUNCTUATION = "punctuation"
EMOJI = "emoji"
OTHER = "other"

POS_CLASSES = frozenset({
    NOUN, VERB, ADJECTIVE, ADVERB, PRONOUN, PREPOSITION, ARTICLE,
    INTERJECTION, CONJUNCTION, NUMERAL, PUNCTUATION, EMOJI, OTHER,
})

LEXICON_IDS = (
    "slang", "netspeak", "interjections", "abbreviations",
    "hedges", "direct_address", "pos_lexicon", "dictionary",
)

# tried in order; first match wins
_SUFFIX_POS = (
    ("tion", NOUN), ("sion", NOUN), ("ment", NOUN), ("ness", NOUN),
    ("ity", NOUN), ("ance", NOUN), ("ence", NOUN), ("ship", NOUN),
    ("hood", NOUN),
    ("ly", ADVERB),
    ("ous", ADJECTIVE), ("ful", ADJECTIVE), ("ive", ADJECTIVE),
    ("able", ADJECTIVE), ("ible", ADJECTIVE), ("less", ADJECTIVE),
    ("ize", VERB), ("ise", VERB), ("ing", VERB), ("ed", VERB),
)


class LexiconError(Exception):
    """A lexicon resource is missing or malformed."""


@dataclass(frozen=True)
class Token:
    surface: str
    start: int
    end: int
    pos: str | None = None


@dataclass(frozen=True)
class TaggedSentence:
    text: str
    tokens: tuple[Token, ...]

    def tagged(self) -> bool:
        return all(t.pos is not None for t in self.tokens)


@dataclass(frozen=True)
class LexiconSet:
    """Read-only bundle of the shipped lexicons.

    ``entries`` maps each plain lexicon id to its lowercase entry set;
    ``pos`` maps a surface form to its ranked POS list (first = default).
    """

    entries: Mapping[str, frozenset[str]]
    pos: Mapping[str, tuple[str, ...]]

    def words(self, lexicon_id: str) -> frozenset[str]:
        try:
            return self.entries[lexicon_id]
        except KeyError:
            raise LexiconError(f"lexicon {lexicon_id!r} not loaded") from None


def default_lexicon_dir() -> Path:
    from importlib.resources import files

    return Path(str(files("formality3").joinpath("resources/lexicons")))


def tokenize(text: str) -> TaggedSentence:
    """Split *text* into tokens (pos left unset).

    Punctuation is split from words except apostrophes and periods inside a
    word; emoji codepoints are single tokens. Empty text gives no tokens.
    """
    tokens = tuple(
        Token(surface=text[s:e], start=s, end=e) for s, e in _scan_spans(text)
    )
    return TaggedSentence(text=text, tokens=tokens)


def _char_class(surface: str) -> str | None:
    if len(surface) == 1 and is_emoji(surface):
        return EMOJI
    if not any(c.isalnum() for c in surface):
        return PUNCTUATION
    if all(c.isdigit() or c in ".," for c in surface):
        return NUMERAL
    return None


def _lexicon_pos(surface: str, pos_lex: Mapping[str, tuple[str, ...]]) -> str | None:
    lowered = surface.lower()
    ranked = pos_lex.get(lowered)
    if ranked:
        return ranked[0]
    # inflection fallback: strip a plural/3sg -s or -es
    for suffix in ("es", "s"):
        if lowered.endswith(suffix) and len(lowered) > len(suffix) + 1:
            ranked = pos_lex.get(lowered[: -len(suffix)])
            if ranked:
                return ranked[0]
    return None


def _suffix_pos(surface: str) -> str | None:
    lowered = surface.lower()
    for suffix, pos in _SUFFIX_POS:
        if lowered.endswith(suffix) and len(lowered) > len(suffix) + 1:
            return pos
    return None


def pos_tag(sentence: TaggedSentence, lexicons: LexiconSet) -> TaggedSentence:
    """Assign one POS class to every token.

    Lookup order: character class (emoji / punctuation / numeral), then
    pos_lexicon (with -s/-es inflection fallback), then suffix heuristics,
    then ``other``.
    """
    if not lexicons.pos:
        raise LexiconError("pos_lexicon not loaded; call load_lexicons() first")
    tagged = []
    for token in sentence.tokens:
        pos = _char_class(token.surface)
        if pos is None:
            pos = _lexicon_pos(token.surface, lexicons.pos)
        if pos is None:
            pos = _suffix_pos(token.surface)
        if pos is None:
            pos = OTHER
        tagged.append(replace(token, pos=pos))
    return TaggedSentence(text=sentence.text, tokens=tuple(tagged))


def tag(text: str, lexicons: LexiconSet) -> TaggedSentence:
    """tokenize + pos_tag in one step."""
    return pos_tag(tokenize(text), lexicons)


def _read_lines(path: Path) -> Iterable[str]:
    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield line


def load_lexicons(directory: str | Path) -> LexiconSet:
    """Load the eight shipped lexicons from *directory*.

    One UTF-8 file per lexicon id (``<id>.txt``), one entry per line,
    ``#`` comments, entries lowercased and deduplicated on load.
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise LexiconError(f"lexicon directory {str(directory)!r} not found")

    # a second file differing only in case would silently shadow on
    # case-insensitive filesystems; reject it
    seen: dict[str, list[str]] = {}
    for path in directory.iterdir():
        if path.suffix.lower() == ".txt":
            seen.setdefault(path.stem.lower(), []).append(path.name)
    for lexicon_id, names in seen.items():
        if lexicon_id in LEXICON_IDS and len(names) > 1:
            raise LexiconError(
                f"duplicate lexicon {lexicon_id!r}: {sorted(names)}"
            )

    entries: dict[str, frozenset[str]] = {}
    pos: dict[str, tuple[str, ...]] = {}
    for lexicon_id in LEXICON_IDS:
        path = directory / f"{lexicon_id}.txt"
        if not path.is_file():
            raise LexiconError(f"lexicon {lexicon_id!r} not found")
        if lexicon_id == "pos_lexicon":
            pos = _parse_pos_lexicon(path)
        else:
            entries[lexicon_id] = frozenset(
                unicodedata.normalize("NFC", line.lower())
                for line in _read_lines(path)
            )
    return LexiconSet(entries=entries, pos=pos)


def _parse_pos_lexicon(path: Path) -> dict[str, tuple[str, ...]]:
    table: dict[str, tuple[str, ...]] = {}
    for line in _read_lines(path):
        parts = line.lower().split()
        if len(parts) < 2:
            raise LexiconError(f"pos_lexicon line needs 'surface pos...': {line!r}")
        surface, ranked = parts[0], tuple(parts[1:])
        bad = [p for p in ranked if p not in POS_CLASSES]
        if bad:
            raise LexiconError(f"pos_lexicon has unknown class {bad[0]!r} for {surface!r}")
        if surface not in table:  # duplicates keep the first ranking
            table[surface] = ranked
    return table
