"""Wires the session to the store, scheduler, and ports: applies effects
in emission order and produces the canonical feedback log."""

from __future__ import annotations

import json
from dataclasses import dataclass
from datetime import datetime

from .gestures import GestureConfig, GestureEngine, TouchEvent
from .ports import PortSuite, make_recording_suite
from .scheduler import FiredAction, Scheduler
from .session import Effect, Session, Settings, msg
from .store import AlreadyExists, NoteStore


@dataclass
class RuntimeConfig:
    notes_dir: str = "./notes"
    gestures: GestureConfig | None = None
    settings: Settings | None = None
    speech_available: bool = True
    sim_present: bool = True
    contacts: dict[str, str] | None = None
    start_time: datetime | None = None
    short_vibrate_ms: int = 40
    long_vibrate_ms: int = 120
    schedule_file: str | None = None


class Runtime:
    """One interactive session plus its effect interpreter."""

    def __init__(self, config: RuntimeConfig, ports: PortSuite | None = None):
        self.config = config
        self.ports = ports or make_recording_suite(
            speech_available=config.speech_available,
            sim_present=config.sim_present,
            contacts=config.contacts,
            now=config.start_time,
        )
        self.store = NoteStore(config.notes_dir)
        self.scheduler = Scheduler(self.ports, config.schedule_file)
        self.engine = GestureEngine(config.gestures)
        self.log: list[dict] = []
        self.session, effects = Session.boot(
            config.settings,
            speech_available=config.speech_available and self.ports.speech.available(),
            short_vibrate_ms=config.short_vibrate_ms,
            long_vibrate_ms=config.long_vibrate_ms,
        )
        self.apply_effects(effects)

    # -- input ------------------------------------------------------------

    def feed_touch(self, event: TouchEvent) -> None:
        for gesture in self.engine.feed(event):
            self.apply_effects(self.session.handle(gesture))

    def flush(self, now_ms: int) -> None:
        for gesture in self.engine.flush(now_ms):
            self.apply_effects(self.session.handle(gesture))

    def inject_text(self, text: str) -> None:
        self.apply_effects(self.session.inject_text(text))

    def advance_clock(self, to: datetime) -> list[FiredAction]:
        self.ports.clock.advance_to(to)
        fired = self.scheduler.advance(to)
        for action in fired:
            self.log.append(
                {
                    "fired": {
                        "id": action.id,
                        "kind": action.intent.kind,
                        "text": action.intent.text,
                        "at": action.fired_at.isoformat(),
                        "outcome": action.outcome,
                    }
                }
            )
        return fired

    # -- effect interpretation --------------------------------------------

    def apply_effects(self, effects: list[Effect]) -> None:
        for effect in effects:
            self._apply(effect)

    def _apply(self, effect: Effect) -> None:
        kind = effect.kind
        if kind == "vibrate":
            self.ports.vibration.vibrate(effect.ms)
            self.log.append(effect.to_dict())
        elif kind == "speak":
            self.ports.speech.speak(effect.text)
            self.log.append(effect.to_dict())
        elif kind == "save_note":
            try:
                self.store.save(effect.name, effect.content, effect.overwrite)
                self.log.append(effect.to_dict())
            except AlreadyExists:
                self.log.append({"effect": "save_failed", "name": effect.name})
                self.apply_effects(
                    self.session._speak(msg("save_failed.exists", effect.name))
                )
        elif kind == "list_notes":
            self.log.append(effect.to_dict())
            self.apply_effects(self.session.set_listing(self.store.list()))
        elif kind == "load_note":
            self.log.append(effect.to_dict())
            content = self.store.load(effect.name)
            self.apply_effects(self.session.set_loaded(effect.name, content))
        elif kind == "schedule":
            action = self.scheduler.schedule(effect.intent, effect.time)
            d = effect.to_dict()
            d["fire_at"] = action.fire_at.isoformat()
            self.log.append(d)
        elif kind == "request_speech_install":
            self.log.append(effect.to_dict())
        else:
            raise ValueError(f"unknown effect kind {kind!r}")

    # -- output -----------------------------------------------------------

    def log_lines(self) -> list[str]:
        return [json.dumps(entry, sort_keys=True) for entry in self.log]
