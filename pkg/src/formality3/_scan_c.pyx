# cython: language_level=3, boundscheck=False
"""Compiled token scanner; mirrors _scan_py.scan_spans exactly.

Keep the segmentation policy in sync with _scan_py.py — the test suite
compares both scanners span-for-span.
"""

cdef inline bint _is_emoji(Py_UCS4 cp):
    # same table as _emoji.EMOJI_RANGES
    if 0x1F000 <= cp <= 0x1FAFF:
        return True
    if 0x2600 <= cp <= 0x27BF:
        return True
    if 0x2B1B <= cp <= 0x2B1C:
        return True
    if cp == 0x2B50 or cp == 0x2B55:
        return True
    return False


cdef inline bint _is_apostrophe(Py_UCS4 cp):
    return cp == 0x27 or cp == 0x2019


def scan_spans(str text):
    """Return the (start, end) token spans of *text*, in order."""
    cdef Py_ssize_t i = 0, j, n = len(text)
    cdef Py_UCS4 ch, c
    cdef bint has_dot
    spans = []
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if _is_emoji(ch):
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
                elif _is_apostrophe(c) and (<Py_UCS4>text[j - 1]).isalnum() \
                        and j + 1 < n and (<Py_UCS4>text[j + 1]).isalnum():
                    j += 1
                elif c == u'.' and (<Py_UCS4>text[j - 1]).isalnum() \
                        and ((j + 1 < n and (<Py_UCS4>text[j + 1]).isalnum()) or has_dot):
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
