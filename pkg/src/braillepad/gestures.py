"""Classifies raw pointer events into the gesture vocabulary the session
understands: explore, tap / double tap / triple tap, long press, fling.

All decisions use time deltas only, so shifting every timestamp by a
constant produces an identical gesture sequence.  Taps are held back
until the multi-tap window closes (resolved by a later event or by
flush); a triple tap resolves immediately on its third up.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class GestureError(ValueError):
    pass


class OutOfOrderEvent(GestureError):
    pass


class IllegalSequence(GestureError):
    pass


@dataclass(frozen=True)
class TouchEvent:
    kind: str  # "down" | "move" | "up"
    x: float
    y: float
    t: int  # milliseconds


@dataclass(frozen=True)
class Gesture:
    kind: str  # explore | tap | double_tap | triple_tap | long_press | fling_left | fling_right
    x: float | None = None
    y: float | None = None


@dataclass(frozen=True)
class GestureConfig:
    tap_max_ms: int = 300
    multi_tap_gap_ms: int = 300
    long_press_min_ms: int = 500
    fling_min_dx: float = 0.25
    fling_max_ms: int = 300
    fling_max_dy: float = 0.15
    move_slop: float = 0.05

    def __post_init__(self):
        if self.long_press_min_ms <= self.tap_max_ms:
            raise ValueError("long_press_min_ms must exceed tap_max_ms")
        if self.fling_min_dx <= self.move_slop:
            raise ValueError("fling_min_dx must exceed move_slop")


class GestureEngine:
    def __init__(self, config: GestureConfig | None = None):
        self.config = config or GestureConfig()
        self._last_t: int | None = None
        # active press
        self._down: TouchEvent | None = None
        self._moved = False
        self._long_press_sent = False
        # pending (unresolved) tap run
        self._tap_count = 0
        self._tap_pos: tuple[float, float] | None = None
        self._last_up_t: int | None = None

    def feed(self, e: TouchEvent) -> list[Gesture]:
        if not (0.0 <= e.x <= 1.0 and 0.0 <= e.y <= 1.0):
            raise IllegalSequence(f"coordinates out of range: ({e.x}, {e.y})")
        if self._last_t is not None and e.t < self._last_t:
            raise OutOfOrderEvent(f"timestamp {e.t} after {self._last_t}")
        self._last_t = e.t

        if e.kind == "down":
            return self._on_down(e)
        if e.kind == "move":
            return self._on_move(e)
        if e.kind == "up":
            return self._on_up(e)
        raise IllegalSequence(f"unknown event kind {e.kind!r}")

    def flush(self, now: int) -> list[Gesture]:
        """Resolve taps once the multi-tap window has passed quietly."""
        if self._last_t is not None and now < self._last_t:
            raise OutOfOrderEvent(f"flush at {now} before {self._last_t}")
        out: list[Gesture] = []
        if self._down is not None:
            out += self._maybe_long_press(now)
        if self._tap_count and now - self._last_up_t >= self.config.multi_tap_gap_ms:
            out += self._resolve_taps()
        return out

    def _on_down(self, e: TouchEvent) -> list[Gesture]:
        if self._down is not None:
            raise IllegalSequence("down while pointer already down")
        out: list[Gesture] = []
        if self._tap_count and e.t - self._last_up_t >= self.config.multi_tap_gap_ms:
            out += self._resolve_taps()
        self._down = e
        self._moved = False
        self._long_press_sent = False
        out.append(Gesture("explore", e.x, e.y))
        return out

    def _on_move(self, e: TouchEvent) -> list[Gesture]:
        if self._down is None:
            raise IllegalSequence("move without down")
        out = self._maybe_long_press(e.t)
        if math.hypot(e.x - self._down.x, e.y - self._down.y) > self.config.move_slop:
            self._moved = True
        out.append(Gesture("explore", e.x, e.y))
        return out

    def _on_up(self, e: TouchEvent) -> list[Gesture]:
        if self._down is None:
            raise IllegalSequence("up without down")
        down = self._down
        duration = e.t - down.t
        dx = e.x - down.x
        dy = e.y - down.y
        self._down = None

        if self._long_press_sent:
            return []

        cfg = self.config
        if (
            duration <= cfg.fling_max_ms
            and abs(dx) >= cfg.fling_min_dx
            and abs(dy) <= cfg.fling_max_dy
        ):
            out = self._resolve_taps()
            out.append(Gesture("fling_left" if dx < 0 else "fling_right"))
            return out

        if math.hypot(dx, dy) > cfg.move_slop:
            self._moved = True
        if self._moved:
            return self._resolve_taps()  # drag that is neither fling nor tap

        if duration >= cfg.long_press_min_ms:
            out = self._resolve_taps()
            out.append(Gesture("long_press", down.x, down.y))
            return out

        if duration <= cfg.tap_max_ms:
            if self._tap_count and e.t - self._last_up_t >= cfg.multi_tap_gap_ms:
                # window already closed; previous run resolves first
                out = self._resolve_taps()
            else:
                out = []
            self._tap_count += 1
            self._tap_pos = (down.x, down.y)
            self._last_up_t = e.t
            if self._tap_count == 3:
                self._tap_count = 0
                self._tap_pos = None
                out.append(Gesture("triple_tap"))
            return out

        return self._resolve_taps()  # between tap and long-press thresholds

    def _maybe_long_press(self, now: int) -> list[Gesture]:
        if (
            self._down is not None
            and not self._long_press_sent
            and not self._moved
            and now - self._down.t >= self.config.long_press_min_ms
        ):
            self._long_press_sent = True
            return self._resolve_taps() + [Gesture("long_press", self._down.x, self._down.y)]
        return []

    def _resolve_taps(self) -> list[Gesture]:
        count, pos = self._tap_count, self._tap_pos
        self._tap_count = 0
        self._tap_pos = None
        if count == 1:
            return [Gesture("tap", *pos)]
        if count == 2:
            return [Gesture("double_tap", *pos)]
        return []


# --- layouts -------------------------------------------------------------

MENU3 = "MENU3"
MENU2 = "MENU2"
DOT6 = "DOT6"
TEXT = "TEXT"


def LIST(n: int) -> str:
    return f"LIST{n}"


def _band(y: float, n: int) -> int:
    """Horizontal band index; boundary points belong to the lower index."""
    return max(0, min(n - 1, math.ceil(y * n) - 1))


def hit_test(layout: str, x: float, y: float) -> int:
    """Region under (x, y).  Bands/lists/text use 0-based indices; DOT6
    returns the dot number 1..6 (left column 1,2,3 top to bottom)."""
    if layout == MENU3:
        return _band(y, 3)
    if layout == MENU2:
        return _band(y, 2)
    if layout == TEXT:
        return 0
    if layout == DOT6:
        row = _band(y, 3)
        col = 0 if x <= 0.5 else 1
        return row + 1 + 3 * col
    if layout.startswith("LIST"):
        return _band(y, int(layout[4:]))
    raise ValueError(f"unknown layout {layout!r}")
