"""Drive a full activity session from a recorded skeleton trace."""

from __future__ import annotations

from pathlib import Path

from .activities import (
    ActivityInput,
    ActivitySpec,
    CursorMoved,
    GestureRecognized,
    Phase,
    apply_input,
    start_activity,
)
from .analytics import SessionLog
from .gestures import GestureRecognizer
from .models import DeviceInteractionModel, Posture, UserProfile
from .rules import ActivityConfig, InteractionMode, derive_config
from .skeleton import Trace, filter_joints_for_posture, load_trace, map_hand_to_cursor
from .storage import DataStore


def trace_to_inputs(
    trace: Trace, config: ActivityConfig, posture: Posture
) -> list[ActivityInput]:
    """Convert a trace into activity inputs under a derived configuration.

    Gesture configurations engage the recognizer; every other mode maps the
    tracked hand to a cursor path, frame by frame.
    """
    frames = [filter_joints_for_posture(frame, posture) for frame in trace]
    inputs: list[ActivityInput] = []
    if config.interaction_mode is InteractionMode.GESTURES:
        recognizer = GestureRecognizer()
        for frame in frames:
            for event in recognizer.advance(frame):
                inputs.append(GestureRecognized(event.gesture_id, event.end_ms))
    else:
        for frame in frames:
            cursor = map_hand_to_cursor(frame, config.tracked_arm)
            inputs.append(CursorMoved(cursor.u, cursor.v, frame.timestamp_ms))
    return inputs


def run_session(
    profile: UserProfile,
    device: DeviceInteractionModel,
    spec: ActivitySpec,
    inputs: list[ActivityInput],
    content=None,
    iteration: int = 1,
    session_index: int = 1,
) -> SessionLog:
    """Apply an input sequence from a fresh activity and collect the session log."""
    config, state, _ = start_activity(profile, device, spec, content)
    results = []
    for inp in inputs:
        state, _, result = apply_input(state, config, inp)
        if result is not None:
            results.append(result)
        if state.phase is Phase.DONE:
            break
    return SessionLog(
        user_id=profile.id,
        disability=profile.disability,
        iteration=iteration,
        session_index=session_index,
        activity_kind=spec.format(),
        results=tuple(results),
        incomplete=state.phase is not Phase.DONE,
    )


def run_replay(
    store: DataStore,
    profile_id: str,
    spec: ActivitySpec,
    trace_path: str | Path,
    iteration: int = 1,
    session_index: int = 1,
) -> SessionLog:
    """Replay a trace for a stored profile; deterministic for identical inputs."""
    profile, device = store.get_profile(profile_id)
    trace = load_trace(trace_path)
    config = derive_config(profile, device)
    inputs = trace_to_inputs(trace, config, device.posture)
    return run_session(
        profile, device, spec, inputs,
        content=store.load_content(),
        iteration=iteration, session_index=session_index,
    )
