"""Shared script-building helpers: compose touch-event sequences for the
gesture grammar (tap, double tap, triple tap, long press, fling) both as
TouchEvent lists and as replay-script JSON lines."""

from __future__ import annotations

import json

from braillepad.gestures import TouchEvent

#: Center of each dot region on the six-dot layout.
DOT_XY = {
    1: (0.25, 0.15),
    2: (0.25, 0.5),
    3: (0.25, 0.85),
    4: (0.75, 0.15),
    5: (0.75, 0.5),
    6: (0.75, 0.85),
}


class ScriptBuilder:
    """Emits well-spaced touch sequences with monotonically growing time."""

    def __init__(self, start_t: int = 0):
        self.t = start_t
        self.events: list[TouchEvent] = []

    def _emit(self, kind: str, x: float, y: float):
        self.events.append(TouchEvent(kind, x, y, self.t))

    def tap(self, x: float, y: float):
        self._emit("down", x, y)
        self.t += 50
        self._emit("up", x, y)
        self.t += 200

    def double_tap(self, x: float, y: float):
        self.tap(x, y)
        self.tap(x, y)
        self.t += 400  # close the multi-tap window before whatever follows

    def triple_tap(self, x: float = 0.5, y: float = 0.5):
        for _ in range(3):
            self.tap(x, y)
        self.t += 400

    def long_press(self, x: float, y: float):
        self._emit("down", x, y)
        self.t += 600
        self._emit("up", x, y)
        self.t += 400

    def fling_left(self, y: float = 0.8):
        self._emit("down", 0.9, y)
        self.t += 100
        self._emit("up", 0.2, y)
        self.t += 400

    def fling_right(self, y: float = 0.8):
        self._emit("down", 0.1, y)
        self.t += 100
        self._emit("up", 0.8, y)
        self.t += 400

    def cell(self, *dots: int):
        """Toggle the given dots then commit the cell."""
        for d in dots:
            self.long_press(*DOT_XY[d])
        self.fling_left()

    def type_text(self, cells):
        """Enter pre-encoded cells one by one (each a set of dots)."""
        for pattern in cells:
            self.cell(*sorted(pattern))

    # -- replay-script rendering ------------------------------------------

    def script_lines(self, final_flush: bool = True) -> list[str]:
        lines = [
            json.dumps({"op": "touch", "kind": e.kind, "x": e.x, "y": e.y, "t": e.t})
            for e in self.events
        ]
        if final_flush:
            lines.append(json.dumps({"op": "flush", "t": self.t + 1000}))
        return lines

    def script(self, final_flush: bool = True) -> str:
        return "\n".join(self.script_lines(final_flush)) + "\n"
