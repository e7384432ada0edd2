"""Live session endpoint and teacher-console profile CRUD.

The session protocol is transport-independent: `SessionProtocol.handle`
turns one inbound record into the outbound records it provokes, with every
timestamp taken from the client stream so behavior is replayable. A thin
websocket layer pumps JSON lines through it; plain HTTP endpoints cover
profile and content management.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from fastapi import FastAPI, WebSocket, WebSocketDisconnect
from fastapi.responses import JSONResponse

from .activities import (
    ActivityInput,
    ActivitySpec,
    ActivityState,
    CursorMoved,
    FeedbackEvent,
    FeedbackKind,
    GestureRecognized,
    InputAfterDoneError,
    NonMonotonicInputError,
    Phase,
    RepetitionResult,
    SceneElement,
    Tick,
    apply_input,
    start_activity,
)
from .analytics import SessionLog
from .gestures import GestureId
from .models import DeviceInteractionModel, UserProfile, validate_profile
from .rules import ActivityConfig
from .storage import DataStore, StorageError, UnknownUserError, profile_to_record, record_to_profile, content_to_record


def serialize_config(config: ActivityConfig) -> dict:
    return {
        "instructionModality": config.instruction_modality.value,
        "backgroundStyle": config.background_style.value,
        "objectColorScheme": config.object_color_scheme.value,
        "interactionMode": config.interaction_mode.value,
        "feedbackModality": config.feedback_modality.value,
        "showPictograms": config.show_pictograms,
        "elementSpacing": config.element_spacing.value,
        "trackedArm": config.tracked_arm.value,
    }


def serialize_element(element: SceneElement) -> dict:
    record = {
        "id": element.id,
        "u": element.u,
        "v": element.v,
        "radius": element.radius,
        "role": element.role.value,
    }
    if element.pictogram_id is not None:
        record["pictogramId"] = element.pictogram_id
    return record


def _modalities(event: FeedbackEvent) -> list[str]:
    return sorted(m.value for m in event.modalities)


class ProtocolError(Exception):
    pass


@dataclass
class SessionProtocol:
    """One client's ordered message stream against one live activity."""

    store: DataStore
    profile: UserProfile | None = None
    device: DeviceInteractionModel | None = None
    config: ActivityConfig | None = None
    state: ActivityState | None = None
    spec: ActivitySpec | None = None
    results: list[RepetitionResult] = field(default_factory=list)
    done: bool = False

    def handle(self, message: dict) -> list[dict]:
        """Process one inbound record; malformed input never kills the session."""
        try:
            return self._dispatch(message)
        except ProtocolError as exc:
            return [{"type": "error", "reason": str(exc)}]
        except (InputAfterDoneError, NonMonotonicInputError) as exc:
            return [{"type": "error", "reason": str(exc)}]
        except StorageError as exc:
            return [{"type": "error", "reason": str(exc)}]

    def handle_line(self, line: str) -> list[str]:
        try:
            message = json.loads(line)
        except json.JSONDecodeError:
            return [json.dumps({"type": "error", "reason": "invalid record"},
                               separators=(",", ":"))]
        if not isinstance(message, dict):
            message = {"type": None}
        return [json.dumps(reply, separators=(",", ":")) for reply in self.handle(message)]

    # -- dispatch ---------------------------------------------------------

    def _dispatch(self, message: dict) -> list[dict]:
        kind = message.get("type")
        if kind == "hello":
            return self._hello(message)
        if kind == "start":
            return self._start(message)
        if kind in ("pointer", "gesture", "tick"):
            return self._input(kind, message)
        raise ProtocolError(f"unknown message type {kind!r}")

    def _hello(self, message: dict) -> list[dict]:
        profile_id = message.get("profileId")
        if not isinstance(profile_id, str):
            raise ProtocolError("hello needs a profileId")
        self.profile, self.device = self.store.get_profile(profile_id)
        return []

    def _start(self, message: dict) -> list[dict]:
        if self.profile is None:
            raise ProtocolError("hello first")
        if self.state is not None:
            raise ProtocolError("activity already started")
        activity = message.get("activity")
        if not isinstance(activity, str):
            raise ProtocolError("start needs an activity")
        try:
            self.spec = ActivitySpec.parse(activity)
        except ValueError as exc:
            raise ProtocolError(str(exc)) from None
        try:
            self.config, self.state, events = start_activity(
                self.profile, self.device, self.spec, self.store.load_content())
        except Exception as exc:
            self.spec = None
            raise ProtocolError(str(exc)) from None
        replies = [{"type": "config", **serialize_config(self.config)}]
        replies.extend(self._event_messages(events))
        return replies

    def _parse_input(self, kind: str, message: dict) -> ActivityInput:
        t = message.get("t")
        if not isinstance(t, int) or isinstance(t, bool) or t < 0:
            raise ProtocolError(f"{kind} needs an integer t")
        if kind == "pointer":
            u, v = message.get("u"), message.get("v")
            if not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in (u, v)):
                raise ProtocolError("pointer needs numeric u and v")
            return CursorMoved(min(1.0, max(0.0, float(u))), min(1.0, max(0.0, float(v))), t)
        if kind == "gesture":
            name = message.get("name")
            try:
                gesture = GestureId(name)
            except ValueError:
                raise ProtocolError(f"unknown gesture {name!r}") from None
            return GestureRecognized(gesture, t)
        return Tick(t)

    def _input(self, kind: str, message: dict) -> list[dict]:
        if self.state is None:
            raise ProtocolError("start an activity first")
        inp = self._parse_input(kind, message)
        self.state, events, result = apply_input(self.state, self.config, inp)
        replies = self._event_messages(events)
        if result is not None:
            self.results.append(result)
            replies.append({
                "type": "progress",
                "repetition": result.repetition_index,
                "errors": result.errors,
            })
        if self.state.phase is Phase.DONE and not self.done:
            self.done = True
            log = self._session_log()
            self.store.append_session(log)
            replies.append({
                "type": "done",
                "summary": {
                    "repetitions": len(self.results),
                    "totalErrors": sum(r.errors for r in self.results),
                    "results": [
                        {
                            "repetition": r.repetition_index,
                            "durationSeconds": r.duration_seconds,
                            "errors": r.errors,
                        }
                        for r in self.results
                    ],
                },
            })
        return replies

    def _session_log(self) -> SessionLog:
        return SessionLog(
            user_id=self.profile.id,
            disability=self.profile.disability,
            iteration=1,
            session_index=1,
            activity_kind=self.spec.format(),
            results=tuple(self.results),
            incomplete=self.state.phase is not Phase.DONE,
        )

    def _event_messages(self, events: list[FeedbackEvent]) -> list[dict]:
        messages = []
        for event in events:
            if event.kind is FeedbackKind.SCENE_CHANGED:
                messages.append({
                    "type": "scene",
                    "elements": [serialize_element(el) for el in self.state.elements],
                    "rgbMirror": self.device.rgb_camera_active,
                })
            elif event.kind is FeedbackKind.SELECTION_FRAME:
                messages.append({"type": "selection", "elementId": event.element_id})
            else:
                messages.append({
                    "type": "feedback",
                    "kind": event.kind.value,
                    "modalities": _modalities(event),
                })
        return messages


# -- HTTP/websocket wiring ------------------------------------------------------


def create_app(store: DataStore, static_dir=None) -> FastAPI:
    """Build the FastAPI application serving the session and console endpoints."""
    app = FastAPI(title="adapta")

    @app.websocket("/session")
    async def session(ws: WebSocket):
        await ws.accept()
        protocol = SessionProtocol(store)
        try:
            while True:
                line = await ws.receive_text()
                for reply in protocol.handle_line(line):
                    await ws.send_text(reply)
        except WebSocketDisconnect:
            pass

    @app.get("/profiles")
    def list_profiles():
        return [profile_to_record(p, d) for p, d in store.load_profiles()]

    @app.post("/profiles")
    def create_profile(record: dict):
        try:
            profile, device = record_to_profile(record)
        except StorageError as exc:
            return JSONResponse({"error": str(exc)}, status_code=422)
        check = validate_profile(profile)
        if not check.ok:
            return JSONResponse({"error": "invalid profile",
                                 "violations": list(check.violations)}, status_code=422)
        try:
            store.add_profile(profile, device)
        except StorageError as exc:
            return JSONResponse({"error": str(exc)}, status_code=409)
        return profile_to_record(profile, device)

    @app.put("/profiles/{profile_id}")
    def update_profile(profile_id: str, record: dict):
        record = {**record, "id": profile_id}
        try:
            profile, device = record_to_profile(record)
        except StorageError as exc:
            return JSONResponse({"error": str(exc)}, status_code=422)
        check = validate_profile(profile)
        if not check.ok:
            return JSONResponse({"error": "invalid profile",
                                 "violations": list(check.violations)}, status_code=422)
        try:
            store.update_profile(profile, device)
        except UnknownUserError as exc:
            return JSONResponse({"error": str(exc)}, status_code=404)
        return profile_to_record(profile, device)

    @app.delete("/profiles/{profile_id}")
    def delete_profile(profile_id: str):
        try:
            store.delete_profile(profile_id)
        except UnknownUserError as exc:
            return JSONResponse({"error": str(exc)}, status_code=404)
        return {"deleted": profile_id}

    @app.get("/content")
    def get_content():
        return [content_to_record(item) for item in store.load_content()]

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app


def run_server(store: DataStore, port: int, static_dir=None) -> None:
    import uvicorn

    uvicorn.run(create_app(store, static_dir), host="127.0.0.1", port=port)
