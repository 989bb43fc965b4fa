"""Device-facing ports (speech, vibration, telephony, contacts, notifier,
clock) with in-memory recording fakes for headless operation and tests."""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime, timedelta
from pathlib import Path


class RecordingSpeech:
    def __init__(self, available: bool = True):
        self._available = available
        self.calls: list[str] = []

    def available(self) -> bool:
        return self._available

    def speak(self, text: str) -> None:
        self.calls.append(text)


class RecordingVibration:
    def __init__(self):
        self.calls: list[int] = []

    def vibrate(self, ms: int) -> None:
        self.calls.append(ms)


class RecordingTelephony:
    def __init__(self, sim_present: bool = True):
        self._sim_present = sim_present
        self.calls: list[tuple[str, str]] = []  # (target, "dialed" | "rejected")

    def sim_present(self) -> bool:
        return self._sim_present

    def dial(self, target: str) -> bool:
        if not self._sim_present:
            self.calls.append((target, "rejected"))
            return False
        self.calls.append((target, "dialed"))
        return True


class ContactsTable:
    def __init__(self, table: dict[str, str] | None = None):
        self.table = dict(table or {})

    def resolve(self, name: str) -> str | None:
        return self.table.get(name)

    @classmethod
    def from_tsv(cls, path: str | Path) -> "ContactsTable":
        table = {}
        for line in Path(path).read_text("utf-8").splitlines():
            if not line.strip():
                continue
            name, _, number = line.partition("\t")
            table[name.strip()] = number.strip()
        return cls(table)


class RecordingNotifier:
    def __init__(self):
        self.calls: list[str] = []

    def notify(self, message: str) -> None:
        self.calls.append(message)


class VirtualClock:
    """Test-controlled time source; only ever moves forward."""

    def __init__(self, start: datetime):
        self._now = start

    def now(self) -> datetime:
        return self._now

    def advance_to(self, to: datetime) -> None:
        if to < self._now:
            raise ValueError(f"clock regression: {to} < {self._now}")
        self._now = to

    def advance(self, delta: timedelta) -> None:
        self._now += delta


@dataclass
class PortSuite:
    speech: RecordingSpeech
    vibration: RecordingVibration
    telephony: RecordingTelephony
    contacts: ContactsTable
    notifier: RecordingNotifier
    clock: VirtualClock


def make_recording_suite(
    speech_available: bool = True,
    sim_present: bool = True,
    contacts: dict[str, str] | None = None,
    now: datetime | None = None,
) -> PortSuite:
    return PortSuite(
        speech=RecordingSpeech(speech_available),
        vibration=RecordingVibration(),
        telephony=RecordingTelephony(sim_present),
        contacts=ContactsTable(contacts),
        notifier=RecordingNotifier(),
        clock=VirtualClock(now or datetime(2024, 1, 1, 0, 0)),
    )
