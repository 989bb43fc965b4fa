"""Note intelligence: leading "remind me ..." / "call ..." with a trailing
"at TIME" clause.  Anything that does not match is an ordinary note."""

from __future__ import annotations

import re
from dataclasses import dataclass


class InvalidTime(ValueError):
    pass


@dataclass(frozen=True)
class TimeOfDay:
    hour: int
    minute: int

    def __post_init__(self):
        if not (0 <= self.hour <= 23 and 0 <= self.minute <= 59):
            raise InvalidTime(f"{self.hour}:{self.minute:02d} out of range")

    def __str__(self) -> str:
        return f"{self.hour:02d}:{self.minute:02d}"


@dataclass(frozen=True)
class Intent:
    kind: str  # "reminder" | "call"
    text: str  # reminder message or call target

    def __post_init__(self):
        if self.kind not in ("reminder", "call"):
            raise ValueError(f"bad intent kind {self.kind!r}")
        if not self.text.strip():
            raise ValueError("intent text must be nonempty")


# Accepted forms: H, H:MM, HH:MM (24h), "H MM" (colon-free, typeable in
# Braille via the number sign), and H[:MM] am/pm.
_TIME_RE = re.compile(
    r"""^\s*
        (?P<h>\d{1,2})
        (?:[:\ ](?P<m>\d{1,2}))?
        (?:\s*(?P<ap>am|pm))?
        \s*$""",
    re.IGNORECASE | re.VERBOSE,
)


def parse_time(s: str) -> TimeOfDay:
    """Parse a time-of-day string or raise InvalidTime."""
    m = _TIME_RE.match(s)
    if not m:
        raise InvalidTime(f"unrecognized time {s!r}")
    hour = int(m.group("h"))
    minute = int(m.group("m") or 0)
    ap = m.group("ap")
    if ap:
        if not (1 <= hour <= 12):
            raise InvalidTime(f"12-hour value out of range in {s!r}")
        ap = ap.lower()
        if ap == "am":
            hour = 0 if hour == 12 else hour
        else:
            hour = 12 if hour == 12 else hour + 12
    if hour > 23 or minute > 59:
        raise InvalidTime(f"{s!r} out of range")
    return TimeOfDay(hour, minute)


_KEYWORDS = (("remind me", "reminder"), ("call", "call"))


def parse_intent(note: str) -> tuple[Intent, TimeOfDay] | None:
    """Detect a leading "remind me"/"call" command with a trailing "at TIME".

    The time comes from the last " at " whose suffix parses as a valid
    time; the message/target is everything strictly between the keyword
    and that " at ".  Returns None for plain notes, never raises.
    """
    stripped = note.lstrip()
    lower = stripped.lower()
    for keyword, kind in _KEYWORDS:
        if lower == keyword or lower.startswith(keyword + " "):
            body = stripped[len(keyword):]
            break
    else:
        return None

    # scan " at " occurrences right-to-left for a parseable time suffix
    body_lower = body.lower()
    pos = len(body_lower)
    while True:
        pos = body_lower.rfind(" at ", 0, pos)
        if pos < 0:
            return None
        try:
            tod = parse_time(body[pos + 4:])
        except InvalidTime:
            continue
        text = body[:pos].strip()
        if not text:
            return None
        return Intent(kind, text), tod
