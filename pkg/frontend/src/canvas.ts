// Browser painter: draws a frame description on a 2D canvas and plays its
// tone. Everything decided elsewhere; this layer only executes drawings.

import type { ElementDrawing, FrameDescription } from "./render.js";

export class CanvasPainter {
  private readonly ctx: CanvasRenderingContext2D;
  private readonly canvas: HTMLCanvasElement;
  private audio: AudioContext | null = null;
  private lastToneSequence = 0;

  constructor(canvas: HTMLCanvasElement) {
    const ctx = canvas.getContext("2d");
    if (!ctx) throw new Error("2d canvas unavailable");
    this.canvas = canvas;
    this.ctx = ctx;
  }

  paint(frame: FrameDescription): void {
    const { width, height } = this.canvas;
    const ctx = this.ctx;
    ctx.fillStyle = frame.background;
    ctx.fillRect(0, 0, width, height);

    for (const el of frame.elements) {
      this.paintElement(el, width, height);
    }
    if (frame.cameraPane.visible) {
      this.paintCameraPane(frame.cameraPane.trail, width, height);
    }
    if (frame.glyph) {
      this.paintGlyph(frame.glyph, width, height);
    }
    if (frame.instructions?.visual) {
      ctx.fillStyle = "#ffffff";
      ctx.font = "20px sans-serif";
      ctx.fillText("Follow the prompt", 16, 28);
    }
    if (frame.progress) {
      ctx.fillStyle = "#ffffff";
      ctx.font = "16px sans-serif";
      ctx.fillText(
        `repetition ${frame.progress.repetition} · errors ${frame.progress.errors}`,
        16, height - 16);
    }
    if (frame.banner) {
      ctx.fillStyle = "#b33";
      ctx.fillRect(0, 0, width, 36);
      ctx.fillStyle = "#fff";
      ctx.font = "18px sans-serif";
      ctx.fillText(frame.banner, 16, 24);
    }
    if (frame.tone && frame.tone.sequence !== this.lastToneSequence) {
      this.lastToneSequence = frame.tone.sequence;
      this.playTone(frame.tone.frequencyHz, frame.tone.durationMs);
    }
  }

  private paintElement(el: ElementDrawing, width: number, height: number): void {
    const ctx = this.ctx;
    const x = el.u * width;
    const y = el.v * height;
    const r = el.radius * Math.min(width, height);
    ctx.beginPath();
    if (el.shape === "square") {
      ctx.rect(x - r, y - r, 2 * r, 2 * r);
    } else {
      ctx.arc(x, y, r, 0, Math.PI * 2);
    }
    if (el.shape === "ring") {
      ctx.lineWidth = 6;
      ctx.strokeStyle = el.fill;
      ctx.stroke();
    } else {
      ctx.fillStyle = el.fill;
      ctx.fill();
    }
    if (el.outline) {
      ctx.lineWidth = 4;
      ctx.strokeStyle = el.outline;
      ctx.beginPath();
      ctx.arc(x, y, r + 6, 0, Math.PI * 2);
      ctx.stroke();
    }
    if (el.badge) {
      ctx.fillStyle = "#ffffff";
      ctx.font = "12px sans-serif";
      ctx.fillText(el.badge, x + r + 4, y - r);
    }
  }

  private paintGlyph(glyph: "smiley" | "sad", width: number, height: number): void {
    const ctx = this.ctx;
    const x = width - 70;
    const y = 70;
    ctx.beginPath();
    ctx.arc(x, y, 40, 0, Math.PI * 2);
    ctx.fillStyle = glyph === "smiley" ? "#ffd400" : "#9fb4c7";
    ctx.fill();
    ctx.fillStyle = "#222";
    ctx.beginPath();
    ctx.arc(x - 14, y - 10, 5, 0, Math.PI * 2);
    ctx.arc(x + 14, y - 10, 5, 0, Math.PI * 2);
    ctx.fill();
    ctx.beginPath();
    ctx.lineWidth = 4;
    ctx.strokeStyle = "#222";
    if (glyph === "smiley") {
      ctx.arc(x, y + 6, 18, 0.15 * Math.PI, 0.85 * Math.PI);
    } else {
      ctx.arc(x, y + 28, 18, 1.15 * Math.PI, 1.85 * Math.PI);
    }
    ctx.stroke();
  }

  private paintCameraPane(trail: { u: number; v: number }[], width: number, height: number): void {
    const ctx = this.ctx;
    const paneW = width * 0.22;
    const paneH = height * 0.22;
    const left = width - paneW - 12;
    const top = height - paneH - 12;
    ctx.fillStyle = "rgba(20, 20, 20, 0.8)";
    ctx.fillRect(left, top, paneW, paneH);
    ctx.strokeStyle = "#888";
    ctx.strokeRect(left, top, paneW, paneH);
    ctx.strokeStyle = "#7fd77f";
    ctx.lineWidth = 2;
    ctx.beginPath();
    trail.forEach((p, i) => {
      const x = left + p.u * paneW;
      const y = top + p.v * paneH;
      if (i === 0) ctx.moveTo(x, y);
      else ctx.lineTo(x, y);
    });
    ctx.stroke();
  }

  private playTone(frequencyHz: number, durationMs: number): void {
    try {
      this.audio = this.audio ?? new AudioContext();
      const osc = this.audio.createOscillator();
      const gain = this.audio.createGain();
      osc.frequency.value = frequencyHz;
      gain.gain.value = 0.06;
      osc.connect(gain).connect(this.audio.destination);
      osc.start();
      osc.stop(this.audio.currentTime + durationMs / 1000);
    } catch {
      // no audio device; visual channel still works
    }
  }
}
