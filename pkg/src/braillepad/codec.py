"""Grade-1 Braille translation between text and six-dot patterns.

A pattern is a frozenset of dot numbers 1..6 (empty set = space).  The
translation is stateful: the number sign switches the following a-j shapes
to digits until a space or a non-digit-shaped cell, the capital indicator
(dot 6) capitalizes exactly the next letter, and the letter sign ends
number mode without producing output (needed so digit runs followed by
a-j letters survive a roundtrip).
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from importlib import resources

DotPattern = frozenset[int]

EMPTY: DotPattern = frozenset()

#: Every character encode_text accepts.
CHARSET = set(string.ascii_letters + string.digits + " .,")

#: Digit characters in chart order: the shapes of a..j stand for 1..9,0.
DIGIT_ORDER = "1234567890"


class UnsupportedCharacter(ValueError):
    def __init__(self, position: int, char: str):
        self.position = position
        self.char = char
        super().__init__(f"unsupported character {char!r} at position {position}")


class InvalidPattern(ValueError):
    def __init__(self, index: int, pattern: DotPattern, partial: str = ""):
        self.index = index
        self.pattern = pattern
        self.partial = partial
        dots = "".join(str(d) for d in sorted(pattern)) or "blank"
        super().__init__(f"pattern {dots} has no meaning at cell {index}")


@dataclass(frozen=True)
class PatternClass:
    """Classification of one cell: kind plus the character it stands for."""

    kind: str  # letter | digit | number_sign | capital_sign | letter_sign | space | punctuation | unknown
    char: str | None = None


def _load_chart() -> dict[str, DotPattern]:
    chart: dict[str, DotPattern] = {}
    text = resources.files("braillepad.data").joinpath("chart.tsv").read_text("utf-8")
    for line in text.splitlines():
        if not line.strip():
            continue
        key, _, digits = line.partition("\t")
        chart[key] = frozenset(int(d) for d in digits.strip())
    return chart


_CHART = _load_chart()

LETTER_TO_PATTERN: dict[str, DotPattern] = {c: _CHART[c] for c in string.ascii_lowercase}
PATTERN_TO_LETTER: dict[DotPattern, str] = {p: c for c, p in LETTER_TO_PATTERN.items()}
PUNCT_TO_PATTERN: dict[str, DotPattern] = {c: _CHART[c] for c in ".,"}
PATTERN_TO_PUNCT: dict[DotPattern, str] = {p: c for c, p in PUNCT_TO_PATTERN.items()}
NUMBER_SIGN: DotPattern = _CHART["NUMBER"]
CAPITAL_SIGN: DotPattern = _CHART["CAPITAL"]
LETTER_SIGN: DotPattern = _CHART["LETTER"]

DIGIT_TO_PATTERN: dict[str, DotPattern] = {
    d: LETTER_TO_PATTERN[letter] for d, letter in zip(DIGIT_ORDER, "abcdefghij")
}
PATTERN_TO_DIGIT: dict[DotPattern, str] = {p: d for d, p in DIGIT_TO_PATTERN.items()}


def pattern(*dots: int) -> DotPattern:
    """Convenience constructor; validates dot numbers."""
    p = frozenset(dots)
    if not p <= {1, 2, 3, 4, 5, 6}:
        raise ValueError(f"dots must be in 1..6, got {sorted(p)}")
    return p


def classify_pattern(p: DotPattern, number_mode: bool = False) -> PatternClass:
    """Classify a cell; total over all 64 patterns in both modes."""
    if p == EMPTY:
        return PatternClass("space", " ")
    if p == NUMBER_SIGN:
        return PatternClass("number_sign")
    if p == CAPITAL_SIGN:
        return PatternClass("capital_sign")
    if p == LETTER_SIGN:
        return PatternClass("letter_sign")
    if number_mode and p in PATTERN_TO_DIGIT:
        return PatternClass("digit", PATTERN_TO_DIGIT[p])
    if p in PATTERN_TO_LETTER:
        return PatternClass("letter", PATTERN_TO_LETTER[p])
    if p in PATTERN_TO_PUNCT:
        return PatternClass("punctuation", PATTERN_TO_PUNCT[p])
    return PatternClass("unknown")


def encode_text(text: str) -> list[DotPattern]:
    """Translate text over the supported charset into a cell sequence.

    Uppercase letters get the capital indicator, a maximal digit run gets
    one number sign, and a digit run followed by a lowercase a-j letter
    gets a letter sign so the decode side can tell them apart.
    """
    cells: list[DotPattern] = []
    number_mode = False
    for i, ch in enumerate(text):
        if ch not in CHARSET:
            raise UnsupportedCharacter(i, ch)
        if ch.isdigit():
            if not number_mode:
                cells.append(NUMBER_SIGN)
                number_mode = True
            cells.append(DIGIT_TO_PATTERN[ch])
            continue
        if number_mode and ch in "abcdefghij":
            cells.append(LETTER_SIGN)
        number_mode = False
        if ch == " ":
            cells.append(EMPTY)
        elif ch in PUNCT_TO_PATTERN:
            cells.append(PUNCT_TO_PATTERN[ch])
        else:
            if ch.isupper():
                cells.append(CAPITAL_SIGN)
            cells.append(LETTER_TO_PATTERN[ch.lower()])
    return cells


class CellDecoder:
    """Stateful cell-at-a-time decoder shared by decode_cells and compose."""

    def __init__(self) -> None:
        self.number_mode = False
        self.capital_pending = False

    def step(self, p: DotPattern, index: int = 0) -> str:
        """Decode one cell; returns '' for indicator cells."""
        cls = classify_pattern(p, self.number_mode)
        if cls.kind == "space":
            self.number_mode = False
            return " "
        if cls.kind == "number_sign":
            self.number_mode = True
            return ""
        if cls.kind == "capital_sign":
            self.number_mode = False
            self.capital_pending = True
            return ""
        if cls.kind == "letter_sign":
            self.number_mode = False
            return ""
        if cls.kind == "digit":
            return cls.char
        if cls.kind in ("letter", "punctuation"):
            self.number_mode = False
            ch = cls.char
            if cls.kind == "letter" and self.capital_pending:
                ch = ch.upper()
                self.capital_pending = False
            return ch
        raise InvalidPattern(index, p)


def decode_cells(cells: list[DotPattern]) -> str:
    """Left-to-right stateful decode; raises InvalidPattern (carrying the
    decoded prefix) at the first meaningless cell."""
    decoder = CellDecoder()
    out: list[str] = []
    for i, p in enumerate(cells):
        try:
            out.append(decoder.step(p, i))
        except InvalidPattern as exc:
            raise InvalidPattern(i, p, "".join(out)) from None
    return "".join(out)


def char_pattern(ch: str) -> DotPattern:
    """The single display cell for one character (indicators omitted).

    Used by read-by-touch and help, where the cursor steps one character
    at a time and capitals/digits show their base shape.
    """
    if ch == " ":
        return EMPTY
    if ch.isdigit():
        return DIGIT_TO_PATTERN[ch]
    if ch in PUNCT_TO_PATTERN:
        return PUNCT_TO_PATTERN[ch]
    low = ch.lower()
    if low in LETTER_TO_PATTERN:
        return LETTER_TO_PATTERN[low]
    raise UnsupportedCharacter(0, ch)


def dots_string(p: DotPattern) -> str:
    """'125' for {1,2,5}; '0' for the blank cell."""
    return "".join(str(d) for d in sorted(p)) or "0"


def parse_dots(s: str) -> DotPattern:
    """Inverse of dots_string; '0' or '' denote the blank cell."""
    if s in ("", "0"):
        return EMPTY
    if not all(c in "123456" for c in s):
        raise ValueError(f"bad dot group {s!r}")
    return frozenset(int(c) for c in s)
