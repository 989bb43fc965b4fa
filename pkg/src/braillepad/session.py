"""The application state machine: screens, compose and readback logic,
and feedback generation.

A Session consumes gestures (plus the runtime's listing/content
deliveries) and emits Effect values; it never touches the clock, the
filesystem, or any device, which keeps every trajectory replayable."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from importlib import resources

from . import codec
from .codec import CellDecoder, DotPattern, InvalidPattern, char_pattern
from .gestures import DOT6, LIST, MENU2, MENU3, TEXT, Gesture, hit_test
from .intents import Intent, TimeOfDay, parse_intent
from .store import EmptyName, sanitize_name

MAIN_MENU = "main_menu"
NOTES_MENU = "notes_menu"
COMPOSE = "compose"
SAVE_NAME = "save_name"
OPEN_LIST = "open_list"
READ_CHOICE = "read_choice"
READ_TOUCH = "read_touch"
READ_SPEECH = "read_speech"
SETTINGS = "settings"
HELP = "help"

#: Order the help screen steps through.
HELP_CHARS = "abcdefghijklmnopqrstuvwxyz1234567890., "

#: fling_left = back on these screens (elsewhere flings are mode-local).
BACK_TARGETS = {
    NOTES_MENU: MAIN_MENU,
    READ_CHOICE: OPEN_LIST,
    READ_SPEECH: READ_CHOICE,
    SETTINGS: MAIN_MENU,
}

PAGE_SIZE = 5


def _load_messages() -> dict[str, str]:
    out = {}
    text = resources.files("braillepad.data").joinpath("messages.tsv").read_text("utf-8")
    for line in text.splitlines():
        if line.strip():
            key, _, msg = line.partition("\t")
            out[key] = msg
    return out


MESSAGES = _load_messages()


def msg(key: str, *args) -> str:
    return MESSAGES[key].format(*args)


def char_name(ch: str) -> str:
    """Spoken name for one character."""
    if ch == " ":
        return msg("char.space")
    if ch == ".":
        return msg("char.period")
    if ch == ",":
        return msg("char.comma")
    if ch.isupper():
        return msg("char.capital", ch.lower())
    return ch


@dataclass(frozen=True)
class Settings:
    tts_enabled: bool = True
    braille_filename_mode: bool = True


@dataclass(frozen=True)
class Effect:
    kind: str  # vibrate | speak | save_note | list_notes | load_note | schedule | request_speech_install
    ms: int | None = None
    text: str | None = None
    name: str | None = None
    content: str | None = None
    overwrite: bool | None = None
    intent: Intent | None = None
    time: TimeOfDay | None = None

    def to_dict(self) -> dict:
        d: dict = {"effect": self.kind}
        if self.ms is not None:
            d["ms"] = self.ms
        if self.text is not None:
            d["text"] = self.text
        if self.name is not None:
            d["name"] = self.name
        if self.content is not None:
            d["content"] = self.content
        if self.overwrite is not None:
            d["overwrite"] = self.overwrite
        if self.intent is not None:
            d["intent"] = {"kind": self.intent.kind, "text": self.intent.text}
        if self.time is not None:
            d["time"] = str(self.time)
        return d


def vibrate(ms: int) -> Effect:
    return Effect("vibrate", ms=ms)


def speak(text: str) -> Effect:
    return Effect("speak", text=text)


@dataclass
class ScreenModel:
    screen: str
    layout: str
    labels: list[str] = field(default_factory=list)
    dots: list[bool] | None = None  # index 0 = dot 1, when layout is DOT6
    status: str = ""

    def to_dict(self) -> dict:
        return {
            "screen": self.screen,
            "layout": self.layout,
            "labels": self.labels,
            "dots": self.dots,
            "status": self.status,
        }


class Session:
    """Single-owner state machine; one gesture at a time."""

    def __init__(
        self,
        settings: Settings | None = None,
        speech_available: bool = True,
        short_vibrate_ms: int = 40,
        long_vibrate_ms: int = 120,
    ):
        if long_vibrate_ms <= short_vibrate_ms:
            raise ValueError("long vibration must exceed short vibration")
        self.settings = settings or Settings()
        self.speech_available = speech_available
        self.short_ms = short_vibrate_ms
        self.long_ms = long_vibrate_ms

        self.screen = MAIN_MENU
        self.compose_text = ""
        self.current_pattern: DotPattern = codec.EMPTY
        self._decoder = CellDecoder()
        self.pending_name = ""
        self.listing: list[str] = []
        self.page = 0
        self.note_content = ""
        self.loaded_name: str | None = None
        self.read_cursor = 0
        self.help_index = 0
        self.last_explored_region: int | None = None

    # -- construction -----------------------------------------------------

    @classmethod
    def boot(
        cls, settings: Settings | None = None, speech_available: bool = True, **kw
    ) -> tuple["Session", list[Effect]]:
        session = cls(settings, speech_available, **kw)
        effects: list[Effect] = []
        if not speech_available:
            effects.append(Effect("request_speech_install"))
        effects += session._speak(msg("main_menu.enter"))
        return session, effects

    # -- helpers ----------------------------------------------------------

    def _speak(self, text: str) -> list[Effect]:
        if self.settings.tts_enabled and self.speech_available:
            return [speak(text)]
        return []

    def _layout(self) -> str:
        return {
            MAIN_MENU: MENU3,
            NOTES_MENU: MENU2,
            COMPOSE: DOT6,
            SAVE_NAME: DOT6 if self.settings.braille_filename_mode else TEXT,
            OPEN_LIST: LIST(PAGE_SIZE),
            READ_CHOICE: MENU2,
            READ_TOUCH: DOT6,
            READ_SPEECH: TEXT,
            SETTINGS: MENU2,
            HELP: DOT6,
        }[self.screen]

    def _dot6_selection(self) -> DotPattern:
        if self.screen in (COMPOSE, SAVE_NAME):
            return self.current_pattern
        if self.screen == READ_TOUCH:
            if self.read_cursor < len(self.note_content):
                return char_pattern(self.note_content[self.read_cursor])
            return codec.EMPTY
        if self.screen == HELP:
            return char_pattern(HELP_CHARS[self.help_index])
        return codec.EMPTY

    def _enter(self, screen: str, announce: str | None) -> list[Effect]:
        self.screen = screen
        self.last_explored_region = None
        return self._speak(announce) if announce else []

    def _page_count(self) -> int:
        return max(1, -(-len(self.listing) // PAGE_SIZE))

    def _listing_index(self, region: int) -> int | None:
        idx = self.page * PAGE_SIZE + region
        return idx if idx < len(self.listing) else None

    def _settings_label(self, region: int) -> str:
        if region == 0:
            return msg("settings.tts.on" if self.settings.tts_enabled else "settings.tts.off")
        return msg(
            "settings.braille_names.on"
            if self.settings.braille_filename_mode
            else "settings.braille_names.off"
        )

    # -- gesture handling -------------------------------------------------

    def handle(self, g: Gesture) -> list[Effect]:
        if g.kind == "explore":
            return self._explore(g.x, g.y)
        # any resolved gesture ends the explore pass; re-announce afterwards
        self.last_explored_region = None
        if g.kind == "double_tap":
            return self._double_tap(g.x, g.y)
        if g.kind == "triple_tap":
            return self._triple_tap()
        if g.kind == "long_press":
            return self._long_press(g.x, g.y)
        if g.kind == "fling_left":
            return self._fling(left=True)
        if g.kind == "fling_right":
            return self._fling(left=False)
        return []  # plain taps carry no meaning

    def _explore(self, x: float, y: float) -> list[Effect]:
        layout = self._layout()
        region = hit_test(layout, x, y)
        if region == self.last_explored_region:
            return []
        self.last_explored_region = region

        if layout == DOT6:
            selected = region in self._dot6_selection()
            effects = [vibrate(self.long_ms if selected else self.short_ms)]
            effects += self._speak(
                msg("dot.selected", region) if selected else msg("dot.plain", region)
            )
            return effects

        label: str | None = None
        if self.screen == MAIN_MENU:
            label = msg(f"main_menu.region.{region}")
        elif self.screen == NOTES_MENU:
            label = msg(f"notes_menu.region.{region}")
        elif self.screen == READ_CHOICE:
            label = msg(f"read_choice.region.{region}")
        elif self.screen == SETTINGS:
            label = self._settings_label(region)
        elif self.screen == OPEN_LIST:
            idx = self._listing_index(region)
            if idx is not None:
                label = self.listing[idx]
        if label is None:
            return []  # region with no meaning: silent
        return [vibrate(self.short_ms)] + self._speak(label)

    def _double_tap(self, x: float, y: float) -> list[Effect]:
        region = hit_test(self._layout(), x, y)
        if self.screen == MAIN_MENU:
            if region == 0:
                return self._enter(NOTES_MENU, msg("notes_menu.enter"))
            if region == 1:
                return self._enter(SETTINGS, msg("settings.enter"))
            return self._enter(HELP, msg("help.enter"))
        if self.screen == NOTES_MENU:
            if region == 0:
                self.compose_text = ""
                self.loaded_name = None
                self.current_pattern = codec.EMPTY
                self._decoder = CellDecoder()
                return self._enter(COMPOSE, msg("compose.enter"))
            self.listing = []
            self.page = 0
            return [Effect("list_notes")] + self._enter(OPEN_LIST, None)
        if self.screen == OPEN_LIST:
            idx = self._listing_index(region)
            if idx is None:
                return []
            name = self.listing[idx]
            return [Effect("load_note", name=name)] + self._enter(READ_CHOICE, None)
        if self.screen == READ_CHOICE:
            if region == 0:
                self.read_cursor = 0
                return self._enter(READ_TOUCH, msg("read_touch.enter"))
            effects = self._enter(READ_SPEECH, None)
            if self.settings.tts_enabled and self.speech_available:
                effects += [speak(self.note_content)]
            else:
                # the one speak that ignores the mute switch
                effects += [speak(msg("speech_required"))]
            return effects
        if self.screen == READ_SPEECH:
            self.compose_text = self.note_content
            self.current_pattern = codec.EMPTY
            self._decoder = CellDecoder()
            return self._enter(COMPOSE, msg("compose.resume"))
        if self.screen == SETTINGS:
            if region == 0:
                self.settings = replace(self.settings, tts_enabled=not self.settings.tts_enabled)
            else:
                self.settings = replace(
                    self.settings,
                    braille_filename_mode=not self.settings.braille_filename_mode,
                )
            return [vibrate(self.short_ms)] + self._speak(self._settings_label(region))
        return []

    def _triple_tap(self) -> list[Effect]:
        if self.screen == COMPOSE:
            if not self.compose_text:
                return [vibrate(self.long_ms)] + self._speak(msg("nothing_to_save"))
            self.pending_name = ""
            self.current_pattern = codec.EMPTY
            self._decoder = CellDecoder()
            key = (
                "save_name.enter.braille"
                if self.settings.braille_filename_mode
                else "save_name.enter.text"
            )
            return self._enter(SAVE_NAME, msg(key))
        if self.screen == SAVE_NAME:
            return self._finalize_save()
        if self.screen == READ_TOUCH:
            return self._enter(NOTES_MENU, msg("notes_menu.enter"))
        if self.screen == HELP:
            return self._enter(MAIN_MENU, msg("main_menu.enter"))
        return []

    def _finalize_save(self) -> list[Effect]:
        try:
            name = sanitize_name(self.pending_name)
        except EmptyName:
            return [vibrate(self.long_ms)] + self._speak(msg("invalid_name"))
        content = self.compose_text
        overwrite = name == self.loaded_name
        effects = [Effect("save_note", name=name, content=content, overwrite=overwrite)]
        parsed = parse_intent(content)
        if parsed:
            intent, tod = parsed
            effects.append(Effect("schedule", intent=intent, time=tod))
            effects += self._speak(msg("intent.scheduled", intent.kind, tod))
        elif content.lower().lstrip().startswith(("remind me", "call ")):
            effects += self._speak(msg("intent.unrecognized"))
        effects += self._speak(msg("saved", name))
        self.compose_text = ""
        self.pending_name = ""
        self.loaded_name = None
        return effects + self._enter(NOTES_MENU, msg("notes_menu.enter"))

    def _long_press(self, x: float, y: float) -> list[Effect]:
        if not (self.screen == COMPOSE or (self.screen == SAVE_NAME and self._layout() == DOT6)):
            return []
        dot = hit_test(DOT6, x, y)
        if dot in self.current_pattern:
            self.current_pattern = self.current_pattern - {dot}
            spoken = msg("dot.cleared", dot)
        else:
            self.current_pattern = self.current_pattern | {dot}
            spoken = msg("dot.selected", dot)
        return [vibrate(self.short_ms)] + self._speak(spoken)

    def _commit_cell(self) -> list[Effect]:
        cls = codec.classify_pattern(self.current_pattern, self._decoder.number_mode)
        try:
            ch = self._decoder.step(self.current_pattern)
        except InvalidPattern:
            return [vibrate(self.long_ms)] + self._speak(msg("invalid_pattern"))
        self.current_pattern = codec.EMPTY
        if ch:
            if self.screen == COMPOSE:
                self.compose_text += ch
            else:
                self.pending_name += ch
            spoken = char_name(ch)
        else:
            spoken = msg(f"commit.{cls.kind}")
        return [vibrate(self.short_ms)] + self._speak(spoken)

    def _fling(self, left: bool) -> list[Effect]:
        if self.screen == COMPOSE or (self.screen == SAVE_NAME and self._layout() == DOT6):
            return self._commit_cell() if left else []
        if self.screen == SAVE_NAME:  # text entry mode
            if left:
                return self._enter(COMPOSE, msg("compose.enter"))
            return []
        if self.screen == OPEN_LIST:
            if left:
                if self.page > 0:
                    self.page -= 1
                    self.last_explored_region = None
                    return self._speak(msg("open_list.page", self.page + 1, self._page_count()))
                return self._enter(NOTES_MENU, msg("notes_menu.enter"))
            if (self.page + 1) * PAGE_SIZE < len(self.listing):
                self.page += 1
                self.last_explored_region = None
                return self._speak(msg("open_list.page", self.page + 1, self._page_count()))
            return []
        if self.screen == READ_TOUCH:
            if left:
                if self.read_cursor > 0:
                    self.read_cursor -= 1
                    self.last_explored_region = None
                    return self._speak(char_name(self.note_content[self.read_cursor]))
                return self._speak(msg("read_touch.start"))
            if self.read_cursor + 1 < len(self.note_content):
                self.read_cursor += 1
                self.last_explored_region = None
                return self._speak(char_name(self.note_content[self.read_cursor]))
            return self._speak(msg("read_touch.end"))
        if self.screen == HELP:
            step = -1 if left else 1
            self.help_index = (self.help_index + step) % len(HELP_CHARS)
            self.last_explored_region = None
            return self._speak(char_name(HELP_CHARS[self.help_index]))
        if left and self.screen in BACK_TARGETS:
            target = BACK_TARGETS[self.screen]
            announce = {
                MAIN_MENU: msg("main_menu.enter"),
                NOTES_MENU: msg("notes_menu.enter"),
                OPEN_LIST: msg("open_list.enter", len(self.listing)),
                READ_CHOICE: msg("read_choice.enter"),
            }[target]
            return self._enter(target, announce)
        return []

    # -- runtime deliveries ----------------------------------------------

    def set_listing(self, names: list[str]) -> list[Effect]:
        """Runtime answer to a list_notes effect."""
        self.listing = list(names)
        self.page = 0
        if not names:
            return self._speak(msg("open_list.empty"))
        return self._speak(msg("open_list.enter", len(names)))

    def set_loaded(self, name: str, content: str) -> list[Effect]:
        """Runtime answer to a load_note effect."""
        self.loaded_name = name
        self.note_content = content
        self.read_cursor = 0
        return self._speak(msg("read_choice.enter"))

    def inject_text(self, text: str) -> list[Effect]:
        """Direct text entry; only meaningful in text-mode file naming."""
        if self.screen == SAVE_NAME and self._layout() == TEXT:
            self.pending_name += text
            return self._speak(text)
        return []

    # -- projection -------------------------------------------------------

    def snapshot(self) -> ScreenModel:
        layout = self._layout()
        model = ScreenModel(self.screen, layout)
        if layout == DOT6:
            selection = self._dot6_selection()
            model.dots = [d in selection for d in range(1, 7)]
        if self.screen == MAIN_MENU:
            model.labels = [msg(f"main_menu.region.{i}") for i in range(3)]
        elif self.screen == NOTES_MENU:
            model.labels = [msg(f"notes_menu.region.{i}") for i in range(2)]
        elif self.screen == COMPOSE:
            model.status = self.compose_text
        elif self.screen == SAVE_NAME:
            model.status = self.pending_name
        elif self.screen == OPEN_LIST:
            start = self.page * PAGE_SIZE
            model.labels = self.listing[start : start + PAGE_SIZE]
            model.status = msg("open_list.page", self.page + 1, self._page_count())
        elif self.screen == READ_CHOICE:
            model.labels = [msg(f"read_choice.region.{i}") for i in range(2)]
        elif self.screen == READ_TOUCH:
            if self.note_content:
                ch = self.note_content[self.read_cursor]
                model.status = f"{self.read_cursor + 1}/{len(self.note_content)} {char_name(ch)}"
        elif self.screen == READ_SPEECH:
            model.status = self.note_content
        elif self.screen == SETTINGS:
            model.labels = [self._settings_label(i) for i in range(2)]
        elif self.screen == HELP:
            model.status = char_name(HELP_CHARS[self.help_index])
        return model
