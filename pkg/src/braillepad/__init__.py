"""Eyes-free Braille note pad: six-dot touch input, Grade-1 translation,
vibration/speech feedback, note persistence, and note intelligence."""

from .codec import (
    CHARSET,
    DotPattern,
    InvalidPattern,
    UnsupportedCharacter,
    classify_pattern,
    decode_cells,
    encode_text,
)
from .gestures import Gesture, GestureConfig, GestureEngine, TouchEvent, hit_test
from .intents import Intent, InvalidTime, TimeOfDay, parse_intent, parse_time
from .ports import PortSuite, make_recording_suite
from .runtime import Runtime, RuntimeConfig
from .scheduler import Scheduler
from .session import Effect, ScreenModel, Session, Settings
from .store import NoteStore, sanitize_name

__all__ = [
    "CHARSET",
    "DotPattern",
    "InvalidPattern",
    "UnsupportedCharacter",
    "classify_pattern",
    "decode_cells",
    "encode_text",
    "Gesture",
    "GestureConfig",
    "GestureEngine",
    "TouchEvent",
    "hit_test",
    "Intent",
    "InvalidTime",
    "TimeOfDay",
    "parse_intent",
    "parse_time",
    "PortSuite",
    "make_recording_suite",
    "Runtime",
    "RuntimeConfig",
    "Scheduler",
    "Effect",
    "ScreenModel",
    "Session",
    "Settings",
    "NoteStore",
    "sanitize_name",
]
