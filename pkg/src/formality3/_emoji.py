"""Emoji codepoint ranges shared by the pure and compiled token scanners.

The compiled scanner hardcodes the same ranges for speed; a test asserts the
two tables stay identical.
"""

EMOJI_RANGES = (
    (0x1F000, 0x1FAFF),  # pictographs, emoticons, transport, supplemental symbols
    (0x2600, 0x27BF),    # misc symbols + dingbats
    (0x2B1B, 0x2B1C),
    (0x2B50, 0x2B50),
    (0x2B55, 0x2B55),
)


def is_emoji(ch: str) -> bool:
    cp = ord(ch)
    for lo, hi in EMOJI_RANGES:
        if lo <= cp <= hi:
            return True
    return False
