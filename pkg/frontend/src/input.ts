// Local input becomes protocol messages: the pointer stands in for the
// tracked hand, keys L/R simulate the arm-raise gestures. Timestamps come
// from a session-relative monotonic counter so the engine, not the wall
// clock, owns time.

import type { ClientMessage, GestureName } from "./protocol.js";

export interface StageRect {
  left: number;
  top: number;
  width: number;
  height: number;
}

export const MAX_POINTER_RATE_HZ = 60;
const MIN_POINTER_INTERVAL_MS = 1000 / MAX_POINTER_RATE_HZ;

const KEY_GESTURES: Record<string, GestureName> = {
  l: "RaiseLeftArm",
  r: "RaiseRightArm",
};

function clamp01(value: number): number {
  return value < 0 ? 0 : value > 1 ? 1 : value;
}

export class InputEmitter {
  private readonly now: () => number;
  private readonly startedAt: number;
  private lastPointerAt = -Infinity;
  private lastT = 0;

  constructor(now: () => number = () => performance.now()) {
    this.now = now;
    this.startedAt = now();
  }

  private stamp(): number {
    // session-relative, integral, never decreasing
    const t = Math.max(this.lastT, Math.round(this.now() - this.startedAt));
    this.lastT = t;
    return t;
  }

  pointerMoved(clientX: number, clientY: number, stage: StageRect): ClientMessage | null {
    const at = this.now();
    if (at - this.lastPointerAt < MIN_POINTER_INTERVAL_MS) {
      return null; // keep pointer traffic at or under 60 messages per second
    }
    this.lastPointerAt = at;
    return {
      type: "pointer",
      u: clamp01((clientX - stage.left) / stage.width),
      v: clamp01((clientY - stage.top) / stage.height),
      t: this.stamp(),
    };
  }

  keyPressed(key: string): ClientMessage | null {
    const gesture = KEY_GESTURES[key.toLowerCase()];
    if (!gesture) return null;
    return { type: "gesture", name: gesture, t: this.stamp() };
  }

  tick(): ClientMessage {
    return { type: "tick", t: this.stamp() };
  }
}
