// Pure view: ViewModel in, plain-data frame description out. The canvas
// painter and tone player consume the description; nothing here touches the
// DOM, the clock or the network, so identical models yield identical frames.

import type { ViewModel } from "./viewModel.js";

export interface ElementDrawing {
  id: string;
  u: number;
  v: number;
  radius: number;
  shape: "circle" | "ring" | "square";
  fill: string;
  outline: string | null;
  badge: string | null; // pictogram identifier rendered beside the element
}

export interface FrameDescription {
  background: string;
  banner: string | null;
  instructions: { visual: boolean; audio: boolean } | null;
  elements: ElementDrawing[];
  glyph: "smiley" | "sad" | null;
  tone: { frequencyHz: number; durationMs: number; sequence: number } | null;
  cameraPane: { visible: boolean; trail: { u: number; v: number }[] };
  progress: { repetition: number; errors: number } | null;
  doneSummary: ViewModel["doneSummary"];
  error: string | null;
}

export const BACKGROUND_BLACK = "#000000";
export const BACKGROUND_IMAGE = "#355e82";
export const HIGH_CONTRAST_YELLOW = "#ffd400";
export const SELECTION_OUTLINE = "#ffd400";

const NORMAL_FILLS: Record<string, string> = {
  Option: "#4f86c6",
  Target: "#6fbf73",
  Ball: "#e08830",
  Basket: "#8a6ccc",
  Prompt: "#e8e8e8",
};

export const POSITIVE_TONE_HZ = 880;
export const NEGATIVE_TONE_HZ = 220;
export const TONE_DURATION_MS = 300;

function shapeFor(role: string): ElementDrawing["shape"] {
  if (role === "Basket") return "ring";
  if (role === "Prompt") return "square";
  return "circle";
}

export function renderScene(vm: ViewModel): FrameDescription {
  const config = vm.config;
  const yellow = config?.objectColorScheme === "Yellow";

  const elements: ElementDrawing[] = vm.elements.map((el) => ({
    id: el.id,
    u: el.u,
    v: el.v,
    radius: el.radius,
    shape: shapeFor(el.role),
    fill: yellow ? HIGH_CONTRAST_YELLOW : NORMAL_FILLS[el.role] ?? "#cccccc",
    outline: vm.selectedElementId === el.id ? SELECTION_OUTLINE : null,
    badge: config?.showPictograms && el.pictogramId ? el.pictogramId : null,
  }));

  let glyph: FrameDescription["glyph"] = null;
  let tone: FrameDescription["tone"] = null;
  let instructions: FrameDescription["instructions"] = null;
  const feedback = vm.lastFeedback;
  if (feedback) {
    if (feedback.kind === "Instructions") {
      instructions = {
        visual: feedback.modalities.includes("Visual"),
        audio: feedback.modalities.includes("Audio"),
      };
    } else {
      if (feedback.modalities.includes("Visual")) {
        glyph = feedback.kind === "Positive" ? "smiley" : "sad";
      }
      if (feedback.modalities.includes("Audio")) {
        tone = {
          frequencyHz: feedback.kind === "Positive" ? POSITIVE_TONE_HZ : NEGATIVE_TONE_HZ,
          durationMs: TONE_DURATION_MS,
          sequence: feedback.sequence,
        };
      }
    }
  }

  return {
    background: config?.backgroundStyle === "Black" ? BACKGROUND_BLACK : BACKGROUND_IMAGE,
    banner: vm.connected ? null : "disconnected",
    instructions,
    elements,
    glyph,
    tone,
    cameraPane: {
      visible: vm.rgbMirror,
      trail: vm.rgbMirror ? [...vm.pointerTrail] : [],
    },
    progress: vm.progress ? { ...vm.progress } : null,
    doneSummary: vm.doneSummary,
    error: vm.lastError,
  };
}
