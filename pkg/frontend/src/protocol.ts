// Wire records spoken with the session service. Field names are normative.

export interface ActivityConfigMsg {
  type: "config";
  instructionModality: "Audio" | "Visual" | "AudioAndVisual";
  backgroundStyle: "Black" | "Image";
  objectColorScheme: "Yellow" | "Normal";
  interactionMode: "Collision" | "Gestures" | "DragAndDrop";
  feedbackModality: "Audio" | "Visual" | "AudioAndVisual";
  showPictograms: boolean;
  elementSpacing: "Standard" | "Reduced";
  trackedArm: "Left" | "Right";
}

export interface SceneElementMsg {
  id: string;
  u: number;
  v: number;
  radius: number;
  role: "Option" | "Target" | "Ball" | "Basket" | "Prompt";
  pictogramId?: string;
}

export interface SceneMsg {
  type: "scene";
  elements: SceneElementMsg[];
  rgbMirror: boolean;
}

export interface SelectionMsg {
  type: "selection";
  elementId: string;
}

export interface FeedbackMsg {
  type: "feedback";
  kind: "Positive" | "Negative" | "Instructions";
  modalities: ("Audio" | "Visual")[];
}

export interface ProgressMsg {
  type: "progress";
  repetition: number;
  errors: number;
}

export interface DoneMsg {
  type: "done";
  summary: {
    repetitions: number;
    totalErrors: number;
    results: { repetition: number; durationSeconds: number; errors: number }[];
  };
}

export interface ErrorMsg {
  type: "error";
  reason: string;
}

export type ServerMessage =
  | ActivityConfigMsg
  | SceneMsg
  | SelectionMsg
  | FeedbackMsg
  | ProgressMsg
  | DoneMsg
  | ErrorMsg;

export type GestureName = "RaiseLeftArm" | "RaiseRightArm";

export type ClientMessage =
  | { type: "hello"; profileId: string }
  | { type: "start"; activity: string }
  | { type: "pointer"; u: number; v: number; t: number }
  | { type: "gesture"; name: GestureName; t: number }
  | { type: "tick"; t: number };

export function parseServerMessage(line: string): ServerMessage | null {
  let record: unknown;
  try {
    record = JSON.parse(line);
  } catch {
    return null;
  }
  if (typeof record !== "object" || record === null) return null;
  const type = (record as { type?: unknown }).type;
  if (typeof type !== "string") return null;
  switch (type) {
    case "config":
    case "scene":
    case "selection":
    case "feedback":
    case "progress":
    case "done":
    case "error":
      return record as ServerMessage;
    default:
      return null;
  }
}
