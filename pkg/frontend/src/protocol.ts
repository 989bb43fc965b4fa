// Wire frames, mirroring docs/protocol.md exactly.

export interface TouchFrame {
  type: 'touch';
  kind: 'down' | 'move' | 'up';
  x: number;
  y: number;
  t: number;
}

export interface FlushFrame {
  type: 'flush';
  t: number;
}

export interface TextInputFrame {
  type: 'text_input';
  text: string;
}

export interface ClockFrame {
  type: 'clock';
  now: string;
}

export type ClientFrame = TouchFrame | FlushFrame | TextInputFrame | ClockFrame;

export interface ScreenModel {
  screen: string;
  layout: 'MENU3' | 'MENU2' | 'DOT6' | 'TEXT' | string;
  labels: string[];
  dots: boolean[] | null;
  status: string;
}

export interface ServerFrame {
  type: string;
  ms?: number;
  text?: string;
  model?: ScreenModel;
  // fired frames
  kind?: string;
  at?: string;
  outcome?: string;
  // error frames
  code?: string;
  message?: string;
  [key: string]: unknown;
}

export function encodeFrame(frame: ClientFrame): string {
  return JSON.stringify(frame);
}

export function decodeFrame(raw: string): ServerFrame | null {
  try {
    const obj = JSON.parse(raw);
    if (obj && typeof obj.type === 'string') return obj as ServerFrame;
  } catch {
    // fall through
  }
  return null;
}
