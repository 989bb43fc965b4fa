"""One-file-per-note persistence: `<dir>/<name>.note`, UTF-8, exact bytes."""

from __future__ import annotations

import re
from pathlib import Path

MAX_NAME_LEN = 64
_NAME_OK = re.compile(r"[a-z0-9_-]")


class NoteStoreError(Exception):
    pass


class EmptyName(NoteStoreError):
    pass


class AlreadyExists(NoteStoreError):
    pass


class NotFound(NoteStoreError):
    pass


class IoFailure(NoteStoreError):
    pass


def sanitize_name(raw: str) -> str:
    """Lowercase, map anything outside [a-z0-9_-] to '_', truncate to 64.

    Surrounding whitespace is stripped first so invisible input cannot
    survive as underscores; idempotent by construction.
    """
    trimmed = raw.strip().lower()
    if not trimmed:
        raise EmptyName("note name is empty")
    cleaned = "".join(c if _NAME_OK.match(c) else "_" for c in trimmed)
    return cleaned[:MAX_NAME_LEN]


class NoteStore:
    def __init__(self, directory: str | Path):
        self.directory = Path(directory)

    def _path(self, name: str) -> Path:
        return self.directory / f"{name}.note"

    def save(self, name: str, content: str, overwrite: bool = False) -> None:
        path = self._path(name)
        if not overwrite and path.exists():
            raise AlreadyExists(name)
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            path.write_bytes(content.encode("utf-8"))
        except OSError as exc:
            raise IoFailure(str(exc)) from exc

    def load(self, name: str) -> str:
        path = self._path(name)
        if not path.exists():
            raise NotFound(name)
        try:
            return path.read_bytes().decode("utf-8")
        except OSError as exc:
            raise IoFailure(str(exc)) from exc

    def list(self) -> list[str]:
        if not self.directory.exists():
            return []
        try:
            return sorted(p.stem for p in self.directory.iterdir() if p.suffix == ".note")
        except OSError as exc:
            raise IoFailure(str(exc)) from exc
