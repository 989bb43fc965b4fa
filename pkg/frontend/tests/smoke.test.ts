// @vitest-environment jsdom
// UI smoke against a live service: a scripted pointer sequence (hold
// dot 1, commit swipe) must end in a rendered screen frame showing the
// appended character.
import { spawn, ChildProcess } from 'node:child_process';
import { mkdtempSync } from 'node:fs';
import { tmpdir } from 'node:os';
import { join } from 'node:path';
import WebSocket from 'ws';
import { afterAll, beforeAll, describe, expect, it } from 'vitest';

import { PointerTracker } from '../src/pointer.js';
import { encodeFrame, decodeFrame, ScreenModel, ClientFrame } from '../src/protocol.js';
import { renderScreen } from '../src/render.js';

const PORT = 18765 + Math.floor(Math.random() * 1000);
let service: ChildProcess;

beforeAll(async () => {
  const notesDir = mkdtempSync(join(tmpdir(), 'braillepad-'));
  service = spawn('python3', [
    '-m', 'braillepad.cli', 'serve', '--port', String(PORT), '--notes-dir', notesDir,
  ], { stdio: 'ignore' });
  await waitForService();
}, 15000);

afterAll(() => {
  service?.kill();
});

async function waitForService(): Promise<void> {
  for (let i = 0; i < 50; i++) {
    try {
      await new Promise<void>((resolve, reject) => {
        const ws = new WebSocket(`ws://127.0.0.1:${PORT}`);
        ws.on('open', () => { ws.close(); resolve(); });
        ws.on('error', reject);
      });
      return;
    } catch {
      await new Promise((r) => setTimeout(r, 100));
    }
  }
  throw new Error('service did not come up');
}

class TestClient {
  ws: WebSocket;
  screens: ScreenModel[] = [];
  vibrations: number[] = [];
  private queue: (() => void)[] = [];

  constructor() {
    this.ws = new WebSocket(`ws://127.0.0.1:${PORT}`);
    this.ws.on('message', (data) => {
      const frame = decodeFrame(String(data));
      if (!frame) return;
      if (frame.type === 'screen' && frame.model) {
        this.screens.push(frame.model);
        this.queue.shift()?.();
      } else if (frame.type === 'vibrate' && typeof frame.ms === 'number') {
        this.vibrations.push(frame.ms);
      }
    });
  }

  open(): Promise<void> {
    return new Promise((resolve) => this.ws.on('open', () => resolve()));
  }

  // send one client frame and wait for the screen frame that follows it
  send(frame: ClientFrame): Promise<void> {
    return new Promise((resolve) => {
      this.queue.push(resolve);
      this.ws.send(encodeFrame(frame));
    });
  }

  waitForScreen(): Promise<void> {
    return new Promise((resolve) => this.queue.push(resolve));
  }

  last(): ScreenModel {
    return this.screens[this.screens.length - 1];
  }
}

const rect = { left: 0, top: 0, width: 300, height: 600 };

async function doubleTap(client: TestClient, tracker: PointerTracker, cx: number, cy: number, t: number) {
  await client.send(tracker.frameFor('down', rect, cx, cy, t)!);
  await client.send(tracker.frameFor('up', rect, cx, cy, t + 50)!);
  await client.send(tracker.frameFor('down', rect, cx, cy, t + 250)!);
  await client.send(tracker.frameFor('up', rect, cx, cy, t + 300)!);
  await client.send(tracker.flushFrame(t + 700)!);
}

describe('live service smoke', () => {
  it('hold dot 1 + commit swipe renders the appended character', async () => {
    const client = new TestClient();
    await client.open();
    await client.waitForScreen(); // boot push
    expect(client.last().screen).toBe('main_menu');

    const tracker = new PointerTracker();
    await doubleTap(client, tracker, 150, 90, 1000);   // Notes
    await doubleTap(client, tracker, 150, 120, 2000);  // Compose
    expect(client.last().screen).toBe('compose');

    // hold dot 1 (top-left region) for 600 ms
    await client.send(tracker.frameFor('down', rect, 75, 90, 3000)!);
    await client.send(tracker.frameFor('up', rect, 75, 90, 3600)!);
    expect(client.last().dots).toEqual([true, false, false, false, false, false]);

    // commit swipe right-to-left
    await client.send(tracker.frameFor('down', rect, 270, 480, 4000)!);
    await client.send(tracker.frameFor('up', rect, 60, 480, 4100)!);

    const model = client.last();
    expect(model.screen).toBe('compose');
    expect(model.status).toBe('a'); // dot 1 alone is the letter a
    expect(model.dots).toEqual([false, false, false, false, false, false]);

    // the rendered DOM reflects the appended character
    document.body.innerHTML = '<div id="pad"></div><div id="status"></div>';
    renderScreen(document, document.getElementById('pad')!, model, false);
    expect(document.getElementById('status')!.textContent).toBe('a');

    // both vibration durations were observed; long pulses exist for
    // the selected-dot explore, short for plain regions
    expect(client.vibrations).toContain(40);
    client.ws.close();
  }, 15000);
});
