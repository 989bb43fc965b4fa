"""Acceptance suite: one test per release criterion, each printing a
PASS/FAIL line (run with -s to see them)."""

import json
import random
import string
from datetime import datetime, timedelta
from pathlib import Path

import pytest

from braillepad import codec
from braillepad.gestures import Gesture, GestureEngine, TouchEvent, hit_test
from braillepad.intents import TimeOfDay, Intent
from braillepad.replay import replay
from braillepad.runtime import Runtime, RuntimeConfig
from braillepad.scheduler import Scheduler, next_occurrence
from braillepad.server import SessionConnection
from braillepad.session import Session
from braillepad.ports import make_recording_suite

from helpers import DOT_XY, ScriptBuilder
from test_gestures import CORPUS

DATA = Path(__file__).parent / "data"


class _Criterion:
    def __init__(self, name):
        self.name = name

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        print(f"[{'FAIL' if exc_type else 'PASS'}] {self.name}")
        return False


def test_codec_chart_conformance():
    with _Criterion("codec chart conformance ('h'={1,2,5}, 26 distinct, 1000 roundtrips)"):
        assert codec.encode_text("h") == [frozenset({1, 2, 5})]
        assert codec.decode_cells([frozenset({1, 2, 5})]) == "h"
        assert len({codec.LETTER_TO_PATTERN[c] for c in string.ascii_lowercase}) == 26
        rng = random.Random(0)
        alphabet = sorted(codec.CHARSET)
        failures = 0
        for _ in range(1000):
            t = "".join(rng.choice(alphabet) for _ in range(rng.randrange(0, 30)))
            if codec.decode_cells(codec.encode_text(t)) != t:
                failures += 1
        assert failures == 0


def test_gesture_table():
    with _Criterion(f"gesture corpus ({len(CORPUS)} streams) + time-translation invariance"):
        assert len(CORPUS) >= 20

        def run(events, flush_at):
            engine = GestureEngine()
            out = []
            for e in events:
                out += engine.feed(TouchEvent(*e))
            if flush_at is not None:
                out += engine.flush(flush_at)
            return [g.kind for g in out]

        for name, events, flush_at, expected in CORPUS:
            assert run(events, flush_at) == expected, name
            for shift in (17, 100000):
                shifted = [(k, x, y, t + shift) for (k, x, y, t) in events]
                shifted_flush = None if flush_at is None else flush_at + shift
                assert run(shifted, shifted_flush) == expected, f"{name} shifted {shift}"


def test_golden_compose_hi(tmp_path):
    with _Criterion("golden 'compose hi' script: byte-exact log + n1.note"):
        script = (DATA / "compose_hi.script").read_text()
        lines = replay(script, RuntimeConfig(notes_dir=str(tmp_path / "notes")))
        golden = (DATA / "compose_hi.golden.log").read_text().splitlines()
        assert lines == golden
        assert (tmp_path / "notes" / "n1.note").read_bytes() == b"hi"


def _type_note(runtime: Runtime, text: str, name: str):
    session = runtime.session

    def apply(g):
        runtime.apply_effects(session.handle(g))

    apply(Gesture("double_tap", 0.5, 0.15))
    apply(Gesture("double_tap", 0.5, 0.2))
    for cell in codec.encode_text(text):
        for d in sorted(cell):
            apply(Gesture("long_press", *DOT_XY[d]))
        apply(Gesture("fling_left"))
    apply(Gesture("triple_tap"))
    for cell in codec.encode_text(name):
        for d in sorted(cell):
            apply(Gesture("long_press", *DOT_XY[d]))
        apply(Gesture("fling_left"))
    apply(Gesture("triple_tap"))


def test_intelligence_reminder(tmp_path):
    with _Criterion("intelligence: reminder note notifies and speaks at 21:00"):
        cfg = RuntimeConfig(
            notes_dir=str(tmp_path / "notes"), start_time=datetime(2024, 1, 1, 20, 0)
        )
        runtime = Runtime(cfg)
        _type_note(runtime, "remind me take pills at 21 00", "pills")
        assert len(runtime.scheduler.pending()) == 1
        spoken_before = len(runtime.ports.speech.calls)
        fired = runtime.advance_clock(datetime(2024, 1, 1, 21, 0))
        assert [f.outcome for f in fired] == ["notified"]
        assert runtime.ports.notifier.calls == ["take pills"]
        assert runtime.ports.speech.calls[spoken_before:] == ["take pills"]


@pytest.mark.parametrize("sim_present", [True, False])
def test_intelligence_call(tmp_path, sim_present):
    label = "dials 555" if sim_present else "fails with no sim"
    with _Criterion(f"intelligence: call note with sim_present={sim_present} {label}"):
        cfg = RuntimeConfig(
            notes_dir=str(tmp_path / "notes"),
            start_time=datetime(2024, 1, 1, 20, 0),
            contacts={"mom": "555"},
            sim_present=sim_present,
        )
        runtime = Runtime(cfg)
        _type_note(runtime, "call mom at 9 pm", "mom")
        fired = runtime.advance_clock(datetime(2024, 1, 1, 21, 0))
        assert len(fired) == 1
        if sim_present:
            assert fired[0].outcome == "dialed"
            assert runtime.ports.telephony.calls == [("555", "dialed")]
        else:
            assert fired[0].outcome == "failed(no sim)"
            assert runtime.ports.telephony.calls == []


def test_read_by_touch_ordering(tmp_path):
    with _Criterion("read-by-touch: selected dots of 'h' vibrate strictly longer"):
        store_dir = tmp_path / "notes"
        store_dir.mkdir()
        (store_dir / "n1.note").write_text("h")
        runtime = Runtime(RuntimeConfig(notes_dir=str(store_dir)))
        session = runtime.session

        def apply(g):
            runtime.apply_effects(session.handle(g))

        apply(Gesture("double_tap", 0.5, 0.15))   # Notes
        apply(Gesture("double_tap", 0.5, 0.75))   # Open
        apply(Gesture("double_tap", 0.5, 0.1))    # first row: n1
        apply(Gesture("double_tap", 0.5, 0.25))   # read by touch
        assert session.screen == "read_touch"

        durations = {}
        for dot in range(1, 7):
            out = session.handle(Gesture("explore", *DOT_XY[dot]))
            (vib,) = [e for e in out if e.kind == "vibrate"]
            durations[dot] = vib.ms
        plain = [durations[d] for d in (3, 4, 6)]
        selected = [durations[d] for d in (1, 2, 5)]
        assert max(plain) < min(selected)


def test_scheduler_next_occurrence_property():
    with _Criterion("scheduler: 10,000 next-occurrence pairs + single fire"):
        rng = random.Random(42)
        for _ in range(10_000):
            now = datetime(2024, 1, 1) + timedelta(
                minutes=rng.randrange(60 * 24 * 500), seconds=rng.randrange(60)
            )
            t = TimeOfDay(rng.randrange(24), rng.randrange(60))
            fire = next_occurrence(t, now)
            assert timedelta(0) <= fire - now < timedelta(hours=24)
            assert (fire.hour, fire.minute) == (t.hour, t.minute)

        for trial in range(20):
            ports = make_recording_suite(now=datetime(2024, 1, 1, 12, 0))
            sched = Scheduler(ports)
            ids = [
                sched.schedule(
                    Intent("reminder", f"m{i}"),
                    TimeOfDay(rng.randrange(24), rng.randrange(60)),
                ).id
                for i in range(10)
            ]
            t = datetime(2024, 1, 1, 12, 0)
            fired = []
            while t < datetime(2024, 1, 3):
                t += timedelta(minutes=rng.randrange(1, 480))
                fired += sched.advance(t)
            assert sorted(f.id for f in fired) == sorted(ids)


def test_determinism_and_equivalence(tmp_path):
    with _Criterion("determinism: double replay identical; serve/replay equivalent"):
        script = (DATA / "compose_hi.script").read_text()
        runs = [
            replay(script, RuntimeConfig(notes_dir=str(tmp_path / f"r{i}"))) for i in range(2)
        ]
        assert runs[0] == runs[1]

        conn = SessionConnection(RuntimeConfig(notes_dir=str(tmp_path / "wire")))
        wire = [f for f in conn.boot_frames() if f["type"] != "screen"]
        for line in script.splitlines():
            obj = json.loads(line)
            op = obj.pop("op")
            obj["type"] = "touch" if op == "touch" else op
            for out in conn.handle_frame(json.dumps(obj)):
                if out["type"] not in ("screen", "error"):
                    wire.append(out)

        def strip(d):
            d = dict(d)
            d.pop("effect", None)
            d.pop("type", None)
            return d

        assert [strip(json.loads(l)) for l in runs[0]] == [strip(f) for f in wire]
