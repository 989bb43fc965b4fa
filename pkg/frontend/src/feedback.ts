// Sensory output for server frames: vibration (device + visual pulse),
// speech via the browser synthesizer, and an always-on caption log.

import { ServerFrame } from './protocol.js';

// Visual pulse length scales linearly with the requested duration so a
// 120 ms vibration is visibly longer than a 40 ms one.
export const PULSE_SCALE = 4;
export const PULSE_MIN_MS = 80;

export function pulseDurationMs(vibrateMs: number): number {
  return Math.max(PULSE_MIN_MS, vibrateMs * PULSE_SCALE);
}

export interface FeedbackOptions {
  mute: boolean;
  maxCaptions?: number;
}

export class FeedbackPlayer {
  captions: string[] = [];
  private maxCaptions: number;

  constructor(
    private doc: Document,
    public options: FeedbackOptions = { mute: false },
  ) {
    this.maxCaptions = options.maxCaptions ?? 50;
  }

  play(frame: ServerFrame): void {
    if (frame.type === 'vibrate' && typeof frame.ms === 'number') {
      this.vibrate(frame.ms);
    } else if (frame.type === 'speak' && typeof frame.text === 'string') {
      this.speakText(frame.text);
    } else if (frame.type === 'fired') {
      const text = `${frame.kind}: ${frame.text} (${frame.outcome})`;
      this.banner(text);
      this.speakText(text);
    }
  }

  private vibrate(ms: number): void {
    const nav = this.doc.defaultView?.navigator as Navigator | undefined;
    nav?.vibrate?.(ms);
    const pulse = this.doc.getElementById('pulse');
    if (pulse) {
      const duration = pulseDurationMs(ms);
      pulse.setAttribute('data-duration-ms', String(duration));
      pulse.classList.add('pulsing');
      (pulse as HTMLElement).style.transitionDuration = `${duration}ms`;
      this.doc.defaultView?.setTimeout(() => pulse.classList.remove('pulsing'), duration);
    }
  }

  private speakText(text: string): void {
    this.caption(text);
    if (this.options.mute) return;
    const win = this.doc.defaultView as (Window & typeof globalThis) | null;
    const synth = win?.speechSynthesis;
    if (!synth || !win) return; // captions only
    synth.speak(new win.SpeechSynthesisUtterance(text));
  }

  caption(text: string): void {
    this.captions.push(text);
    if (this.captions.length > this.maxCaptions) this.captions.shift();
    const log = this.doc.getElementById('captions');
    if (log) {
      const line = this.doc.createElement('div');
      line.textContent = text;
      log.appendChild(line);
      while (log.childNodes.length > this.maxCaptions) log.removeChild(log.firstChild!);
      (log as HTMLElement).scrollTop = (log as HTMLElement).scrollHeight;
    }
  }

  banner(text: string): void {
    const el = this.doc.getElementById('banner');
    if (el) {
      el.textContent = text;
      el.classList.add('visible');
    }
  }
}
