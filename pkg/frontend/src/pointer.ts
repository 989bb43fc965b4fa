// Maps DOM pointer events on the pad to raw touch frames. No gesture
// logic here: the server classifies everything.

import { ClientFrame, TouchFrame } from './protocol.js';

export interface PadRect {
  left: number;
  top: number;
  width: number;
  height: number;
}

const clamp01 = (v: number) => Math.min(1, Math.max(0, v));

// Normalized pad coordinates, or null when the point is outside the pad.
export function normalizePoint(
  rect: PadRect,
  clientX: number,
  clientY: number,
): { x: number; y: number } | null {
  const x = (clientX - rect.left) / rect.width;
  const y = (clientY - rect.top) / rect.height;
  if (x < 0 || x > 1 || y < 0 || y > 1) return null;
  return { x: clamp01(x), y: clamp01(y) };
}

export const FLUSH_IDLE_MS = 350;

// Turns (kind, position, time) samples into touch frames with session-
// relative monotonic timestamps, and decides when an idle flush is due.
export class PointerTracker {
  private t0: number | null = null;
  private lastT = 0;
  private down = false;

  frameFor(
    kind: 'down' | 'move' | 'up',
    rect: PadRect,
    clientX: number,
    clientY: number,
    nowMs: number,
  ): TouchFrame | null {
    const pos = normalizePoint(rect, clientX, clientY);
    if (pos === null) {
      // a press that leaves the pad ends the stream cleanly
      if (this.down && kind !== 'down') {
        this.down = kind !== 'up' && this.down;
      }
      return null;
    }
    if (kind === 'down') {
      if (this.down) return null;
      this.down = true;
    } else {
      if (!this.down) return null;
      if (kind === 'up') this.down = false;
    }
    if (this.t0 === null) this.t0 = nowMs;
    const t = Math.max(this.lastT, Math.round(nowMs - this.t0));
    this.lastT = t;
    return { type: 'touch', kind, x: pos.x, y: pos.y, t };
  }

  flushFrame(nowMs: number): ClientFrame | null {
    if (this.t0 === null || this.down) return null;
    const t = Math.max(this.lastT, Math.round(nowMs - this.t0));
    this.lastT = t;
    return { type: 'flush', t };
  }

  isDown(): boolean {
    return this.down;
  }
}
