"""Deterministic event-script replay: line-delimited JSON in, feedback
log out.  Scripts drive the same runtime the service uses, so headless
runs and wire sessions are interchangeable."""

from __future__ import annotations

import json
from dataclasses import dataclass
from datetime import datetime

from .gestures import TouchEvent
from .runtime import Runtime, RuntimeConfig


class ScriptParseError(ValueError):
    def __init__(self, line_no: int, reason: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {reason}")


class AssertionMismatch(AssertionError):
    def __init__(self, line_no: int, expected: dict, got: list[dict]):
        self.line_no = line_no
        self.expected = expected
        self.got = got
        super().__init__(f"line {line_no}: expected effect {expected} not produced; got {got}")


@dataclass(frozen=True)
class ScriptRecord:
    line_no: int
    op: str  # touch | flush | text | clock | expect
    data: dict


_OPS = {"touch", "flush", "text", "clock", "expect"}


def parse_script(text: str) -> list[ScriptRecord]:
    """Parse and validate a whole script before any execution."""
    records: list[ScriptRecord] = []
    last_t: int | None = None
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ScriptParseError(line_no, f"bad JSON: {exc}") from None
        op = obj.get("op")
        if op not in _OPS:
            raise ScriptParseError(line_no, f"unknown op {op!r}")
        if op == "touch":
            missing = {"kind", "x", "y", "t"} - obj.keys()
            if missing:
                raise ScriptParseError(line_no, f"touch record missing {sorted(missing)}")
            if obj["kind"] not in ("down", "move", "up"):
                raise ScriptParseError(line_no, f"bad touch kind {obj['kind']!r}")
        if op in ("touch", "flush"):
            t = obj.get("t")
            if not isinstance(t, (int, float)):
                raise ScriptParseError(line_no, "missing timestamp")
            if last_t is not None and t < last_t:
                raise ScriptParseError(line_no, f"timestamp regresses: {t} < {last_t}")
            last_t = t
        if op == "clock":
            try:
                datetime.fromisoformat(obj["to"])
            except (KeyError, ValueError):
                raise ScriptParseError(line_no, "clock record needs an ISO-8601 'to'") from None
        if op == "text" and not isinstance(obj.get("value"), str):
            raise ScriptParseError(line_no, "text record needs a string 'value'")
        if op == "expect" and not isinstance(obj.get("effect"), dict):
            raise ScriptParseError(line_no, "expect record needs an 'effect' object")
        records.append(ScriptRecord(line_no, op, obj))
    return records


def replay(script: str | list[ScriptRecord], config: RuntimeConfig) -> list[str]:
    """Run a script; returns the feedback log lines.

    An `expect` record asserts that its effect object appeared in the log
    since the previous non-expect record (boot effects count for leading
    expects)."""
    records = parse_script(script) if isinstance(script, str) else script
    runtime = Runtime(config)
    mark = 0
    for rec in records:
        if rec.op == "expect":
            window = runtime.log[mark:]
            if rec.data["effect"] not in window:
                raise AssertionMismatch(rec.line_no, rec.data["effect"], window)
            continue
        mark = len(runtime.log)
        if rec.op == "touch":
            runtime.feed_touch(
                TouchEvent(rec.data["kind"], rec.data["x"], rec.data["y"], int(rec.data["t"]))
            )
        elif rec.op == "flush":
            runtime.flush(int(rec.data["t"]))
        elif rec.op == "text":
            runtime.inject_text(rec.data["value"])
        elif rec.op == "clock":
            runtime.advance_clock(datetime.fromisoformat(rec.data["to"]))
    return runtime.log_lines()
