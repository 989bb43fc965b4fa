"""WebSocket service: one session per connection, one JSON object per
frame.  The client sends raw touch/flush/text/clock frames; the server
answers with vibrate/speak/screen/fired/error frames and pushes a fresh
screen frame after every handled input."""

from __future__ import annotations

import asyncio
import json
from datetime import datetime

from websockets.asyncio.server import serve as ws_serve

from .gestures import GestureError, TouchEvent
from .runtime import Runtime, RuntimeConfig


def _log_entry_to_frame(entry: dict) -> dict:
    if "fired" in entry:
        return {"type": "fired", **entry["fired"]}
    frame = dict(entry)
    frame["type"] = frame.pop("effect")
    return frame


class SessionConnection:
    """Frame handling for one client, independent of the transport."""

    def __init__(self, config: RuntimeConfig):
        self.runtime = Runtime(config)

    def boot_frames(self) -> list[dict]:
        frames = [_log_entry_to_frame(e) for e in self.runtime.log]
        frames.append(self.screen_frame())
        return frames

    def screen_frame(self) -> dict:
        return {"type": "screen", "model": self.runtime.session.snapshot().to_dict()}

    def handle_frame(self, raw: str) -> list[dict]:
        try:
            frame = json.loads(raw)
        except json.JSONDecodeError:
            return [{"type": "error", "code": "bad_json", "message": "frame is not valid JSON"}]
        mark = len(self.runtime.log)
        try:
            ftype = frame.get("type")
            if ftype == "touch":
                self.runtime.feed_touch(
                    TouchEvent(frame["kind"], frame["x"], frame["y"], int(frame["t"]))
                )
            elif ftype == "flush":
                self.runtime.flush(int(frame["t"]))
            elif ftype == "text_input":
                self.runtime.inject_text(frame["text"])
            elif ftype == "clock":
                self.runtime.advance_clock(datetime.fromisoformat(frame["now"]))
            else:
                return [
                    {"type": "error", "code": "bad_frame", "message": f"unknown type {ftype!r}"}
                ]
        except (GestureError, KeyError, TypeError, ValueError) as exc:
            return [{"type": "error", "code": "bad_frame", "message": str(exc)}]
        out = [_log_entry_to_frame(e) for e in self.runtime.log[mark:]]
        out.append(self.screen_frame())
        return out


async def serve(config: RuntimeConfig, host: str = "127.0.0.1", port: int = 8765):
    async def handler(websocket):
        conn = SessionConnection(config)
        for frame in conn.boot_frames():
            await websocket.send(json.dumps(frame))
        async for raw in websocket:
            for frame in conn.handle_frame(raw):
                await websocket.send(json.dumps(frame))

    return await ws_serve(handler, host, port)


async def serve_forever(config: RuntimeConfig, host: str = "127.0.0.1", port: int = 8765):
    server = await serve(config, host, port)
    await server.serve_forever()


def run(config: RuntimeConfig, host: str = "127.0.0.1", port: int = 8765):
    asyncio.run(serve_forever(config, host, port))
