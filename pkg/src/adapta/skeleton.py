"""Skeleton frames, trace files and hand-to-cursor mapping.

Frames arrive already skeletonized (25 named joints in sensor camera space,
x right / y up / z away from the sensor). Traces replace the live sensor:
one JSON record per line, replayed in timestamp order.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable, Iterator, Mapping

from .models import Posture, Side


class JointId(str, Enum):
    HEAD = "Head"
    NECK = "Neck"
    SPINE_SHOULDER = "SpineShoulder"
    SPINE_MID = "SpineMid"
    SPINE_BASE = "SpineBase"
    SHOULDER_LEFT = "ShoulderLeft"
    SHOULDER_RIGHT = "ShoulderRight"
    ELBOW_LEFT = "ElbowLeft"
    ELBOW_RIGHT = "ElbowRight"
    WRIST_LEFT = "WristLeft"
    WRIST_RIGHT = "WristRight"
    HAND_LEFT = "HandLeft"
    HAND_RIGHT = "HandRight"
    HAND_TIP_LEFT = "HandTipLeft"
    HAND_TIP_RIGHT = "HandTipRight"
    THUMB_LEFT = "ThumbLeft"
    THUMB_RIGHT = "ThumbRight"
    HIP_LEFT = "HipLeft"
    HIP_RIGHT = "HipRight"
    KNEE_LEFT = "KneeLeft"
    KNEE_RIGHT = "KneeRight"
    ANKLE_LEFT = "AnkleLeft"
    ANKLE_RIGHT = "AnkleRight"
    FOOT_LEFT = "FootLeft"
    FOOT_RIGHT = "FootRight"


LOWER_BODY_JOINTS = frozenset({
    JointId.HIP_LEFT, JointId.HIP_RIGHT,
    JointId.KNEE_LEFT, JointId.KNEE_RIGHT,
    JointId.ANKLE_LEFT, JointId.ANKLE_RIGHT,
    JointId.FOOT_LEFT, JointId.FOOT_RIGHT,
})

UPPER_BODY_JOINTS = frozenset(JointId) - LOWER_BODY_JOINTS

HAND_JOINT = {Side.LEFT: JointId.HAND_LEFT, Side.RIGHT: JointId.HAND_RIGHT}
SHOULDER_JOINT = {Side.LEFT: JointId.SHOULDER_LEFT, Side.RIGHT: JointId.SHOULDER_RIGHT}

# Shoulder-relative reach box, metres: a hand half a reach from the shoulder
# sits on the cursor's screen edge regardless of where the user stands.
HAND_REACH_M = 0.5


class MissingJointError(Exception):
    def __init__(self, joint: JointId):
        super().__init__(f"frame is missing joint {joint.value}")
        self.joint = joint


@dataclass(frozen=True)
class JointPosition:
    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        for c in (self.x, self.y, self.z):
            if not math.isfinite(c):
                raise ValueError("joint coordinates must be finite")


@dataclass(frozen=True)
class SkeletonFrame:
    timestamp_ms: int
    joints: Mapping[JointId, JointPosition]

    def joint(self, joint: JointId) -> JointPosition:
        try:
            return self.joints[joint]
        except KeyError:
            raise MissingJointError(joint) from None


@dataclass(frozen=True)
class Trace:
    frames: tuple[SkeletonFrame, ...]

    def __iter__(self) -> Iterator[SkeletonFrame]:
        return iter(self.frames)

    def __len__(self) -> int:
        return len(self.frames)


@dataclass(frozen=True)
class CursorPosition:
    """Normalized screen coordinates, u right / v down, clamped to [0, 1]."""

    u: float
    v: float


def filter_joints_for_posture(frame: SkeletonFrame, posture: Posture) -> SkeletonFrame:
    """Seated users get upper-body tracking only; standing frames pass through."""
    if posture is Posture.STANDING:
        return frame
    kept = {j: p for j, p in frame.joints.items() if j in UPPER_BODY_JOINTS}
    return SkeletonFrame(frame.timestamp_ms, kept)


def _clamp01(value: float) -> float:
    return 0.0 if value < 0.0 else 1.0 if value > 1.0 else value


def map_hand_to_cursor(frame: SkeletonFrame, tracked_arm: Side) -> CursorPosition:
    """Map the tracked hand into screen space, relative to the same-side shoulder.

    Depth (z) plays no part in cursor placement; it is assessed separately
    against the recommended sensor distance.
    """
    hand = frame.joint(HAND_JOINT[tracked_arm])
    shoulder = frame.joint(SHOULDER_JOINT[tracked_arm])
    u = (hand.x - shoulder.x) / HAND_REACH_M + 0.5
    v = (shoulder.y - hand.y) / HAND_REACH_M + 0.5
    return CursorPosition(_clamp01(u), _clamp01(v))


class TraceError(Exception):
    pass


class MalformedLineError(TraceError):
    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no


class NonMonotonicTimestampError(TraceError):
    def __init__(self, line_no: int):
        super().__init__(f"line {line_no}: timestamp does not increase")
        self.line_no = line_no


class IncompleteFirstFrameError(TraceError):
    def __init__(self, missing: Iterable[JointId]):
        names = ", ".join(sorted(j.value for j in missing))
        super().__init__(f"first frame is missing joints: {names}")


def _parse_frame_record(record: object, line_no: int) -> tuple[int, dict[JointId, JointPosition]]:
    if not isinstance(record, dict):
        raise MalformedLineError(line_no, "record is not an object")
    t = record.get("t")
    if not isinstance(t, int) or isinstance(t, bool) or t < 0:
        raise MalformedLineError(line_no, "t must be a non-negative integer")
    raw = record.get("joints")
    if not isinstance(raw, dict):
        raise MalformedLineError(line_no, "joints must be an object")
    joints: dict[JointId, JointPosition] = {}
    for name, coords in raw.items():
        try:
            joint = JointId(name)
        except ValueError:
            raise MalformedLineError(line_no, f"unknown joint {name!r}") from None
        if (not isinstance(coords, list) or len(coords) != 3
                or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in coords)):
            raise MalformedLineError(line_no, f"joint {name} needs [x, y, z] numbers")
        x, y, z = (float(c) for c in coords)
        if not all(math.isfinite(c) for c in (x, y, z)) or z <= 0:
            raise MalformedLineError(line_no, f"joint {name} coordinates out of range")
        joints[joint] = JointPosition(x, y, z)
    return t, joints


def load_trace(source: str | Path | Iterable[str]) -> Trace:
    """Read a trace, forward-filling joints that drop out after the first frame."""
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    else:
        lines = [line.rstrip("\n") for line in source]

    frames: list[SkeletonFrame] = []
    last_joints: dict[JointId, JointPosition] = {}
    last_t = -1
    for line_no, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise MalformedLineError(line_no, f"invalid record: {exc.msg}") from None
        t, joints = _parse_frame_record(record, line_no)
        if t <= last_t:
            raise NonMonotonicTimestampError(line_no)
        if not frames:
            missing = set(JointId) - joints.keys()
            if missing:
                raise IncompleteFirstFrameError(missing)
        merged = {**last_joints, **joints}
        frames.append(SkeletonFrame(t, merged))
        last_joints = merged
        last_t = t
    return Trace(tuple(frames))


def save_trace(trace: Trace, dest: str | Path) -> None:
    """Write one full-precision record per frame; load_trace reads it back verbatim."""
    with open(dest, "w", encoding="utf-8", newline="\n") as fh:
        for frame in trace.frames:
            record = {
                "t": frame.timestamp_ms,
                "joints": {
                    j.value: [p.x, p.y, p.z]
                    for j, p in sorted(frame.joints.items(), key=lambda kv: kv[0].value)
                },
            }
            fh.write(json.dumps(record, separators=(",", ":")) + "\n")
