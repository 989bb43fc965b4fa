// Wires the touch pad to the service: pointer events out, feedback and
// screen frames in.

import { FeedbackPlayer } from './feedback.js';
import { FLUSH_IDLE_MS, PointerTracker } from './pointer.js';
import { decodeFrame, encodeFrame, ScreenModel } from './protocol.js';
import { renderScreen } from './render.js';

export function startApp(doc: Document, endpoint: string): void {
  const pad = doc.getElementById('pad')!;
  const connState = doc.getElementById('connection')!;
  const feedback = new FeedbackPlayer(doc, { mute: false });
  const tracker = new PointerTracker();
  let socket: WebSocket | null = null;
  let lastModel: ScreenModel | null = null;
  let showLabels = false;
  let flushTimer: number | undefined;

  const win = doc.defaultView as (Window & typeof globalThis);

  function connect(): void {
    connState.textContent = 'connecting...';
    connState.className = '';
    socket = new win.WebSocket(endpoint);
    socket.onopen = () => {
      connState.textContent = 'connected';
      connState.className = 'ok';
    };
    socket.onmessage = (ev) => {
      const frame = decodeFrame(String(ev.data));
      if (!frame) return;
      if (frame.type === 'screen' && frame.model) {
        lastModel = frame.model;
        renderScreen(doc, pad, frame.model, showLabels);
      } else {
        feedback.play(frame);
      }
    };
    socket.onclose = () => {
      connState.textContent = 'disconnected';
      connState.className = 'error';
    };
    socket.onerror = () => {
      connState.textContent = 'connection failed';
      connState.className = 'error';
    };
  }

  function send(frame: ReturnType<PointerTracker['frameFor']>): void {
    if (frame && socket && socket.readyState === win.WebSocket.OPEN) {
      socket.send(encodeFrame(frame));
    }
  }

  function scheduleFlush(): void {
    if (flushTimer !== undefined) win.clearTimeout(flushTimer);
    flushTimer = win.setTimeout(() => {
      const frame = tracker.flushFrame(win.performance.now());
      if (frame && socket && socket.readyState === win.WebSocket.OPEN) {
        socket.send(encodeFrame(frame));
      }
    }, FLUSH_IDLE_MS);
  }

  function onPointer(kind: 'down' | 'move' | 'up') {
    return (ev: PointerEvent) => {
      ev.preventDefault();
      const rect = pad.getBoundingClientRect();
      send(tracker.frameFor(kind, rect, ev.clientX, ev.clientY, win.performance.now()));
      if (kind === 'up') scheduleFlush();
    };
  }

  pad.addEventListener('pointerdown', onPointer('down') as EventListener);
  pad.addEventListener('pointermove', onPointer('move') as EventListener);
  pad.addEventListener('pointerup', onPointer('up') as EventListener);
  pad.addEventListener('pointercancel', onPointer('up') as EventListener);

  doc.getElementById('reconnect')?.addEventListener('click', () => {
    socket?.close();
    connect();
  });
  doc.getElementById('mute')?.addEventListener('change', (ev) => {
    feedback.options.mute = (ev.target as HTMLInputElement).checked;
  });
  doc.getElementById('labels')?.addEventListener('change', (ev) => {
    showLabels = (ev.target as HTMLInputElement).checked;
    if (lastModel) renderScreen(doc, pad, lastModel, showLabels);
  });

  connect();
}
