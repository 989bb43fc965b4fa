"""Fires parsed intents at their next time-of-day occurrence.

Driven explicitly through advance(); pending actions survive restarts via
a one-record-per-line file (`schedule.rec`)."""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime, timedelta
from pathlib import Path

from .intents import Intent, TimeOfDay
from .ports import PortSuite


class ClockRegression(ValueError):
    pass


class UnknownId(KeyError):
    pass


@dataclass(frozen=True)
class ScheduledAction:
    id: int
    intent: Intent
    fire_at: datetime


@dataclass(frozen=True)
class FiredAction:
    id: int
    intent: Intent
    fired_at: datetime
    outcome: str  # "notified" | "dialed" | "failed(<reason>)"


def next_occurrence(t: TimeOfDay, now: datetime) -> datetime:
    """The next datetime >= now whose time-of-day equals t (minute resolution)."""
    candidate = now.replace(hour=t.hour, minute=t.minute, second=0, microsecond=0)
    if candidate < now:
        candidate += timedelta(days=1)
    return candidate


class Scheduler:
    def __init__(self, ports: PortSuite, persist_path: str | Path | None = None):
        self.ports = ports
        self.persist_path = Path(persist_path) if persist_path else None
        self._pending: dict[int, ScheduledAction] = {}
        self._next_id = 1
        self._time = ports.clock.now()
        if self.persist_path and self.persist_path.exists():
            self._load()

    def schedule(self, intent: Intent, t: TimeOfDay, now: datetime | None = None) -> ScheduledAction:
        now = now or self.ports.clock.now()
        action = ScheduledAction(self._next_id, intent, next_occurrence(t, now))
        self._next_id += 1
        self._pending[action.id] = action
        self._persist()
        return action

    def cancel(self, action_id: int) -> None:
        if action_id not in self._pending:
            raise UnknownId(action_id)
        del self._pending[action_id]
        self._persist()

    def pending(self) -> list[ScheduledAction]:
        return sorted(self._pending.values(), key=lambda a: (a.fire_at, a.id))

    def advance(self, to: datetime) -> list[FiredAction]:
        """Fire everything due at or before `to`, in (fire_at, id) order."""
        if to < self._time:
            raise ClockRegression(f"{to} < {self._time}")
        self._time = to
        due = sorted(
            (a for a in self._pending.values() if a.fire_at <= to),
            key=lambda a: (a.fire_at, a.id),
        )
        fired = []
        for action in due:
            del self._pending[action.id]
            fired.append(self._fire(action))
        if due:
            self._persist()
        return fired

    def _fire(self, action: ScheduledAction) -> FiredAction:
        intent = action.intent
        if intent.kind == "reminder":
            self.ports.notifier.notify(intent.text)
            self.ports.speech.speak(intent.text)
            outcome = "notified"
        else:
            if not self.ports.telephony.sim_present():
                outcome = "failed(no sim)"
            else:
                target = intent.text
                number = target if target.isdigit() else self.ports.contacts.resolve(target)
                if number is None:
                    outcome = "failed(unknown contact)"
                else:
                    self.ports.telephony.dial(number)
                    outcome = "dialed"
        return FiredAction(action.id, intent, action.fire_at, outcome)

    # record format: id<TAB>kind<TAB>payload<TAB>fire_at-iso8601
    def _persist(self) -> None:
        if not self.persist_path:
            return
        lines = [
            f"{a.id}\t{a.intent.kind}\t{a.intent.text}\t{a.fire_at.isoformat()}"
            for a in self.pending()
        ]
        self.persist_path.parent.mkdir(parents=True, exist_ok=True)
        self.persist_path.write_text("".join(line + "\n" for line in lines), "utf-8")

    def _load(self) -> None:
        for line in self.persist_path.read_text("utf-8").splitlines():
            if not line.strip():
                continue
            sid, kind, payload, iso = line.split("\t")
            action = ScheduledAction(int(sid), Intent(kind, payload), datetime.fromisoformat(iso))
            self._pending[action.id] = action
            self._next_id = max(self._next_id, action.id + 1)
