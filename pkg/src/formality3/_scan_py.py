"""Pure-Python token scanner (reference implementation).

Segmentation policy:
- tokens cover every non-whitespace run; whitespace is skipped
- emoji codepoints become single one-character tokens
- a word is a maximal run of alphanumeric characters, extended across
  an apostrophe when a letter/digit follows ("can't", "O'Neill")
- a period extends a word when a letter/digit follows ("3.14", "u.s"),
  or when the word already contains a period ("u.s." keeps its final dot)
- every other character is a single one-character token

The compiled scanner in _scan_c.pyx implements the same policy; both must
produce identical spans for all inputs.
"""

from formality3._emoji import is_emoji

_APOSTROPHES = ("'", "’")


def scan_spans(text):
    """Return the (start, end) token spans of *text*, in order."""
    spans = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if is_emoji(ch):
            spans.append((i, i + 1))
            i += 1
            continue
        if ch.isalnum():
            j = i + 1
            has_dot = False
            while j < n:
                c = text[j]
                if c.isalnum():
                    j += 1
                elif c in _APOSTROPHES and text[j - 1].isalnum() \
                        and j + 1 < n and text[j + 1].isalnum():
                    j += 1
                elif c == "." and text[j - 1].isalnum() \
                        and ((j + 1 < n and text[j + 1].isalnum()) or has_dot):
                    has_dot = True
                    j += 1
                else:
                    break
            spans.append((i, j))
            i = j
            continue
        spans.append((i, i + 1))
        i += 1
    return spans
