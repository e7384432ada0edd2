"""Finite-state gesture recognition for arm raises.

A gesture is an ordered list of pose states (initial, intermediate..., final).
Checking only the endpoints would accept any trajectory that happens to start
low and end high, so every intermediate state must be entered, in order,
within the gesture's time window. The listener is always armed: whenever a
frame satisfies a gesture's initial pose while that gesture is idle, its
window opens.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .models import Side
from .skeleton import HAND_JOINT, SHOULDER_JOINT, JointId, SkeletonFrame, Trace


class GestureId(str, Enum):
    RAISE_LEFT_ARM = "RaiseLeftArm"
    RAISE_RIGHT_ARM = "RaiseRightArm"


class PoseBand(str, Enum):
    HAND_BELOW_SHOULDER = "HandBelowShoulder"
    HAND_BETWEEN_SHOULDER_AND_HEAD = "HandBetweenShoulderAndHead"
    HAND_ABOVE_HEAD = "HandAboveHead"


# Dead band around each height threshold, metres. Poses inside a band satisfy
# no predicate (transit frames), which keeps the three bands of an arm
# mutually exclusive and immune to sensor jitter at the thresholds.
POSE_DEAD_BAND_M = 0.03

DEFAULT_MAX_DURATION_MS = 1500


@dataclass(frozen=True)
class PosePredicate:
    band: PoseBand
    arm: Side

    def holds(self, frame: SkeletonFrame) -> bool:
        hand = frame.joint(HAND_JOINT[self.arm]).y
        shoulder = frame.joint(SHOULDER_JOINT[self.arm]).y
        eps = POSE_DEAD_BAND_M
        if self.band is PoseBand.HAND_BELOW_SHOULDER:
            return hand < shoulder - eps
        head = frame.joint(JointId.HEAD).y
        if self.band is PoseBand.HAND_BETWEEN_SHOULDER_AND_HEAD:
            return shoulder + eps < hand < head - eps
        return hand > head + eps

    def describe(self) -> str:
        hand = HAND_JOINT[self.arm].value
        shoulder = SHOULDER_JOINT[self.arm].value
        if self.band is PoseBand.HAND_BELOW_SHOULDER:
            return f"{hand}.y < {shoulder}.y - {POSE_DEAD_BAND_M}"
        if self.band is PoseBand.HAND_BETWEEN_SHOULDER_AND_HEAD:
            return f"{shoulder}.y + {POSE_DEAD_BAND_M} < {hand}.y < Head.y - {POSE_DEAD_BAND_M}"
        return f"{hand}.y > Head.y + {POSE_DEAD_BAND_M}"


@dataclass(frozen=True)
class GestureDefinition:
    gesture_id: GestureId
    states: tuple[PosePredicate, ...]
    max_duration_ms: int = DEFAULT_MAX_DURATION_MS

    def __post_init__(self) -> None:
        if len(self.states) < 3:
            raise ValueError("a gesture needs initial, intermediate and final states")
        if self.max_duration_ms <= 0:
            raise ValueError("max duration must be positive")


def _raise_arm(gesture_id: GestureId, arm: Side) -> GestureDefinition:
    return GestureDefinition(
        gesture_id,
        (
            PosePredicate(PoseBand.HAND_BELOW_SHOULDER, arm),
            PosePredicate(PoseBand.HAND_BETWEEN_SHOULDER_AND_HEAD, arm),
            PosePredicate(PoseBand.HAND_ABOVE_HEAD, arm),
        ),
    )


BUILTIN_GESTURES: tuple[GestureDefinition, ...] = (
    _raise_arm(GestureId.RAISE_LEFT_ARM, Side.LEFT),
    _raise_arm(GestureId.RAISE_RIGHT_ARM, Side.RIGHT),
)


@dataclass(frozen=True)
class GestureEvent:
    gesture_id: GestureId
    start_ms: int
    end_ms: int


@dataclass
class _Progress:
    next_state: int = 0
    started_ms: int = 0

    @property
    def idle(self) -> bool:
        return self.next_state == 0

    def reset(self) -> None:
        self.next_state = 0
        self.started_ms = 0


@dataclass
class GestureRecognizer:
    """Per-gesture progress through the pose states; one instance per session."""

    definitions: tuple[GestureDefinition, ...] = BUILTIN_GESTURES
    _progress: dict[GestureId, _Progress] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self._progress = {d.gesture_id: _Progress() for d in self.definitions}

    def reset(self) -> None:
        for p in self._progress.values():
            p.reset()

    def advance(self, frame: SkeletonFrame) -> list[GestureEvent]:
        """Feed one frame; gestures progress independently of each other.

        The recognizer commits to the earliest frame that satisfies a
        gesture's initial pose. Overrunning the window silently resets that
        gesture to idle, and the very frame that broke the window may open a
        fresh one. Frames matching no expected pose are transit frames and
        change nothing.
        """
        events: list[GestureEvent] = []
        for definition in self.definitions:
            progress = self._progress[definition.gesture_id]
            if (not progress.idle
                    and frame.timestamp_ms - progress.started_ms > definition.max_duration_ms):
                progress.reset()
            if progress.idle:
                if definition.states[0].holds(frame):
                    progress.next_state = 1
                    progress.started_ms = frame.timestamp_ms
            elif definition.states[progress.next_state].holds(frame):
                progress.next_state += 1
                if progress.next_state == len(definition.states):
                    events.append(GestureEvent(
                        definition.gesture_id, progress.started_ms, frame.timestamp_ms))
                    progress.reset()
        return events


def recognize_trace(
    trace: Trace, definitions: tuple[GestureDefinition, ...] = BUILTIN_GESTURES
) -> list[GestureEvent]:
    """Fold the recognizer over a whole trace; events come back ordered by end time."""
    recognizer = GestureRecognizer(definitions)
    events: list[GestureEvent] = []
    for frame in trace:
        events.extend(recognizer.advance(frame))
    return events


def describe_gestures(
    definitions: tuple[GestureDefinition, ...] = BUILTIN_GESTURES
) -> str:
    lines = []
    for d in definitions:
        lines.append(f"{d.gesture_id.value} (complete within {d.max_duration_ms} ms):")
        labels = ["initial"] + ["intermediate"] * (len(d.states) - 2) + ["final"]
        for label, state in zip(labels, d.states):
            lines.append(f"  {label:12s} {state.band.value}: {state.describe()}")
    return "\n".join(lines)
