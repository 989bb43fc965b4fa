"""Command line surface: script replay, the WebSocket service, and
Braille translation / note utilities.

Exit codes: 0 ok, 1 assertion mismatch, 2 parse or config error."""

from __future__ import annotations

import os
import sys
from datetime import datetime
from pathlib import Path

import click

from . import codec
from .gestures import GestureConfig
from .ports import ContactsTable
from .replay import AssertionMismatch, ScriptParseError, replay as run_replay
from .runtime import RuntimeConfig
from .session import Settings
from .store import NoteStore

DEFAULT_NOTES_DIR = os.environ.get("BRAILLEPAD_NOTES_DIR", "./notes")

_GESTURE_KEYS = {
    "tap_max_ms": int,
    "multi_tap_gap_ms": int,
    "long_press_min_ms": int,
    "fling_min_dx": float,
    "fling_max_ms": int,
    "fling_max_dy": float,
    "move_slop": float,
}
_RUNTIME_KEYS = {
    "short_vibrate_ms": int,
    "long_vibrate_ms": int,
    "tts_enabled": bool,
    "braille_filename_mode": bool,
    "speech_available": bool,
    "sim_present": bool,
    "start_time": str,
}


def _parse_bool(v: str) -> bool:
    if v.lower() in ("1", "true", "on", "yes"):
        return True
    if v.lower() in ("0", "false", "off", "no"):
        return False
    raise ValueError(f"not a boolean: {v!r}")


def load_config(path: str | None, notes_dir: str, contacts: str | None) -> RuntimeConfig:
    """Build a RuntimeConfig from a key=value file plus CLI flags."""
    gesture_kw: dict = {}
    values: dict = {}
    if path:
        for line_no, line in enumerate(Path(path).read_text("utf-8").splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, raw = line.partition("=")
            key, raw = key.strip(), raw.strip()
            if not sep:
                raise click.ClickException(f"{path}:{line_no}: expected key=value")
            if key in _GESTURE_KEYS:
                gesture_kw[key] = _GESTURE_KEYS[key](raw)
            elif key in _RUNTIME_KEYS:
                conv = _RUNTIME_KEYS[key]
                values[key] = _parse_bool(raw) if conv is bool else conv(raw)
            else:
                raise click.ClickException(f"{path}:{line_no}: unknown key {key!r}")
    settings = Settings(
        tts_enabled=values.get("tts_enabled", True),
        braille_filename_mode=values.get("braille_filename_mode", True),
    )
    contact_table = ContactsTable.from_tsv(contacts).table if contacts else None
    start = values.get("start_time")
    return RuntimeConfig(
        notes_dir=notes_dir,
        gestures=GestureConfig(**gesture_kw) if gesture_kw else None,
        settings=settings,
        speech_available=values.get("speech_available", True),
        sim_present=values.get("sim_present", True),
        contacts=contact_table,
        start_time=datetime.fromisoformat(start) if start else None,
        short_vibrate_ms=values.get("short_vibrate_ms", 40),
        long_vibrate_ms=values.get("long_vibrate_ms", 120),
    )


@click.group()
def main():
    """Eyes-free Braille note pad."""


_shared = [
    click.option("--notes-dir", default=DEFAULT_NOTES_DIR, show_default=True),
    click.option("--contacts", default=None, help="contacts.tsv (name<TAB>number)"),
    click.option("--config", "config_path", default=None, help="key=value config file"),
]


def shared_options(f):
    for opt in reversed(_shared):
        f = opt(f)
    return f


@main.command("replay")
@click.argument("script", type=click.Path(exists=True))
@shared_options
def replay_cmd(script, notes_dir, contacts, config_path):
    """Replay an event script and print the feedback log."""
    try:
        config = load_config(config_path, notes_dir, contacts)
        lines = run_replay(Path(script).read_text("utf-8"), config)
    except ScriptParseError as exc:
        click.echo(f"script error: {exc}", err=True)
        sys.exit(2)
    except AssertionMismatch as exc:
        click.echo(f"assertion failed: {exc}", err=True)
        sys.exit(1)
    for line in lines:
        click.echo(line)


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8765, show_default=True)
@shared_options
def serve_cmd(host, port, notes_dir, contacts, config_path):
    """Run the WebSocket service for the touch-pad UI."""
    from . import server

    config = load_config(config_path, notes_dir, contacts)
    click.echo(f"listening on ws://{host}:{port}", err=True)
    server.run(config, host, port)


@main.command("translate")
@click.argument("direction", type=click.Choice(["to-braille", "from-braille"]))
@click.argument("text")
def translate_cmd(direction, text):
    """Translate between text and space-separated dot groups."""
    try:
        if direction == "to-braille":
            cells = codec.encode_text(text)
            click.echo(" ".join(codec.dots_string(p) for p in cells))
        else:
            groups = text.split()
            cells = [codec.parse_dots(g) for g in groups]
            click.echo(codec.decode_cells(cells))
    except (codec.UnsupportedCharacter, codec.InvalidPattern, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)


@main.command("notes")
@click.argument("action", type=click.Choice(["list", "show"]))
@click.argument("name", required=False)
@click.option("--notes-dir", default=DEFAULT_NOTES_DIR, show_default=True)
def notes_cmd(action, name, notes_dir):
    """List saved notes or print one."""
    store = NoteStore(notes_dir)
    if action == "list":
        for entry in store.list():
            click.echo(entry)
    else:
        if not name:
            click.echo("error: show requires a note name", err=True)
            sys.exit(2)
        click.echo(store.load(name))


if __name__ == "__main__":
    main()
