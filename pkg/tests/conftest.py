from pathlib import Path

import pytest

from formality3.textcore import default_lexicon_dir, load_lexicons

DATA_DIR = Path(__file__).parent / "data"

EXEMPLAR_INFORMAL = "LOL that was sooo weird. idk what just happened but omg O_O"
EXEMPLAR_CASUAL = "Hey, I'm not sure what happened, but it was quite weird."
EXEMPLAR_FORMAL = ("It appears that an unexpected event occurred, "
                   "the nature of which remains unclear.")


@pytest.fixture(scope="session")
def lexicons():
    return load_lexicons(default_lexicon_dir())
