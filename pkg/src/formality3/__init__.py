"""formality3: a three-level formality spectrum toolkit.

Rule-based register classification (informal / casual / formal), corpus
integrity metrics, bidirectional style-transfer evaluation, and the
casual-anchored dataset construction pipeline with a human review stage.
"""

from formality3.classifier import FormalityLabel, classify, hd_formality_score
from formality3.textcore import (
    USING_COMPILED_SCANNER,
    LexiconSet,
    TaggedSentence,
    Token,
    default_lexicon_dir,
    load_lexicons,
    tokenize,
)

__version__ = "0.1.0"

__all__ = [
    "FormalityLabel",
    "LexiconSet",
    "TaggedSentence",
    "Token",
    "USING_COMPILED_SCANNER",
    "classify",
    "default_lexicon_dir",
    "hd_formality_score",
    "load_lexicons",
    "tokenize",
    "__version__",
]
