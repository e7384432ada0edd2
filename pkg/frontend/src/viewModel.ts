// The player's entire display state. It changes only here: inbound server
// messages via applyServerMessage, local pointer motion via trackLocalPointer,
// channel state via setConnected. Rendering reads it and never writes it.

import type {
  ActivityConfigMsg,
  FeedbackMsg,
  SceneElementMsg,
  ServerMessage,
} from "./protocol.js";

export interface Feedback {
  kind: FeedbackMsg["kind"];
  modalities: FeedbackMsg["modalities"];
  sequence: number; // distinguishes repeated identical feedback
}

export interface ViewModel {
  connected: boolean;
  config: ActivityConfigMsg | null;
  elements: SceneElementMsg[];
  rgbMirror: boolean;
  selectedElementId: string | null;
  lastFeedback: Feedback | null;
  progress: { repetition: number; errors: number } | null;
  doneSummary: DoneSummary | null;
  lastError: string | null;
  pointerTrail: { u: number; v: number }[];
}

export type DoneSummary = Extract<ServerMessage, { type: "done" }>["summary"];

export const POINTER_TRAIL_LENGTH = 24;

export function initialViewModel(): ViewModel {
  return {
    connected: false,
    config: null,
    elements: [],
    rgbMirror: false,
    selectedElementId: null,
    lastFeedback: null,
    progress: null,
    doneSummary: null,
    lastError: null,
    pointerTrail: [],
  };
}

export function setConnected(vm: ViewModel, connected: boolean): void {
  vm.connected = connected;
}

export function trackLocalPointer(vm: ViewModel, u: number, v: number): void {
  vm.pointerTrail.push({ u, v });
  if (vm.pointerTrail.length > POINTER_TRAIL_LENGTH) {
    vm.pointerTrail.shift();
  }
}

export function applyServerMessage(vm: ViewModel, msg: ServerMessage): void {
  switch (msg.type) {
    case "config":
      vm.config = msg;
      break;
    case "scene":
      vm.elements = msg.elements;
      vm.rgbMirror = msg.rgbMirror;
      vm.selectedElementId = null;
      break;
    case "selection":
      vm.selectedElementId = msg.elementId;
      break;
    case "feedback":
      vm.lastFeedback = {
        kind: msg.kind,
        modalities: msg.modalities,
        sequence: (vm.lastFeedback?.sequence ?? 0) + 1,
      };
      if (msg.kind !== "Instructions") {
        vm.selectedElementId = null;
      }
      break;
    case "progress":
      vm.progress = { repetition: msg.repetition, errors: msg.errors };
      break;
    case "done":
      vm.doneSummary = msg.summary;
      break;
    case "error":
      vm.lastError = msg.reason;
      break;
  }
}
