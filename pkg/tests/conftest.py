"""Shared builders: profiles, devices, skeleton frames and cursor-path traces."""

from __future__ import annotations

import pytest

from adapta.models import (
    ArmMobility,
    DeviceInteractionModel,
    Disability,
    LateralityProblem,
    Posture,
    Sex,
    Side,
    UserProfile,
)
from adapta.skeleton import (
    HAND_JOINT,
    HAND_REACH_M,
    JointId,
    JointPosition,
    SkeletonFrame,
    Trace,
)

# Plausible standing skeleton, metres, sensor 2 m away.
BASE_JOINTS: dict[JointId, tuple[float, float, float]] = {
    JointId.HEAD: (0.0, 1.6, 2.0),
    JointId.NECK: (0.0, 1.5, 2.0),
    JointId.SPINE_SHOULDER: (0.0, 1.45, 2.0),
    JointId.SPINE_MID: (0.0, 1.15, 2.0),
    JointId.SPINE_BASE: (0.0, 0.9, 2.0),
    JointId.SHOULDER_LEFT: (-0.2, 1.4, 2.0),
    JointId.SHOULDER_RIGHT: (0.2, 1.4, 2.0),
    JointId.ELBOW_LEFT: (-0.3, 1.15, 2.0),
    JointId.ELBOW_RIGHT: (0.3, 1.15, 2.0),
    JointId.WRIST_LEFT: (-0.32, 1.0, 2.0),
    JointId.WRIST_RIGHT: (0.32, 1.0, 2.0),
    JointId.HAND_LEFT: (-0.33, 0.95, 2.0),
    JointId.HAND_RIGHT: (0.33, 0.95, 2.0),
    JointId.HAND_TIP_LEFT: (-0.34, 0.9, 2.0),
    JointId.HAND_TIP_RIGHT: (0.34, 0.9, 2.0),
    JointId.THUMB_LEFT: (-0.3, 0.95, 2.0),
    JointId.THUMB_RIGHT: (0.3, 0.95, 2.0),
    JointId.HIP_LEFT: (-0.1, 0.9, 2.0),
    JointId.HIP_RIGHT: (0.1, 0.9, 2.0),
    JointId.KNEE_LEFT: (-0.1, 0.5, 2.0),
    JointId.KNEE_RIGHT: (0.1, 0.5, 2.0),
    JointId.ANKLE_LEFT: (-0.1, 0.1, 2.0),
    JointId.ANKLE_RIGHT: (0.1, 0.1, 2.0),
    JointId.FOOT_LEFT: (-0.1, 0.05, 2.1),
    JointId.FOOT_RIGHT: (0.1, 0.05, 2.1),
}

# Hand heights hitting each pose band of the default skeleton
# (shoulders at y=1.4, head at y=1.6, dead band 0.03).
HAND_Y_BELOW = 0.95
HAND_Y_DEAD_LOW = 1.40
HAND_Y_BETWEEN = 1.50
HAND_Y_DEAD_HIGH = 1.60
HAND_Y_ABOVE = 1.80

SHOULDER_POS = {Side.LEFT: (-0.2, 1.4), Side.RIGHT: (0.2, 1.4)}


def make_frame(t_ms: int, overrides: dict[JointId, tuple[float, float, float]] | None = None,
               drop: set[JointId] | None = None) -> SkeletonFrame:
    joints = dict(BASE_JOINTS)
    if overrides:
        joints.update(overrides)
    if drop:
        for j in drop:
            joints.pop(j, None)
    return SkeletonFrame(t_ms, {j: JointPosition(*c) for j, c in joints.items()})


def pose_frame(t_ms: int, left_y: float = HAND_Y_BELOW, right_y: float = HAND_Y_BELOW) -> SkeletonFrame:
    """Frame with each hand at a chosen height; everything else at rest."""
    return make_frame(t_ms, {
        JointId.HAND_LEFT: (-0.33, left_y, 2.0),
        JointId.HAND_RIGHT: (0.33, right_y, 2.0),
    })


def cursor_frame(t_ms: int, u: float, v: float, arm: Side = Side.RIGHT) -> SkeletonFrame:
    """Frame whose tracked hand maps exactly to cursor (u, v)."""
    sx, sy = SHOULDER_POS[arm]
    hand = (sx + (u - 0.5) * HAND_REACH_M, sy - (v - 0.5) * HAND_REACH_M, 2.0)
    return make_frame(t_ms, {HAND_JOINT[arm]: hand})


def cursor_trace(path: list[tuple[int, float, float]], arm: Side = Side.RIGHT) -> Trace:
    return Trace(tuple(cursor_frame(t, u, v, arm) for t, u, v in path))


def raise_arm_frames(start_ms: int, side: Side, step_ms: int = 150) -> list[SkeletonFrame]:
    """Three frames walking one arm below -> between -> above."""
    heights = (HAND_Y_BELOW, HAND_Y_BETWEEN, HAND_Y_ABOVE)
    frames = []
    for i, y in enumerate(heights):
        t = start_ms + i * step_ms
        if side is Side.LEFT:
            frames.append(pose_frame(t, left_y=y))
        else:
            frames.append(pose_frame(t, right_y=y))
    return frames


def make_profile(
    disability: Disability = Disability.VISUAL,
    laterality: LateralityProblem = LateralityProblem.NONE,
    profile_id: str = "student-1",
    age: int = 11,
) -> UserProfile:
    return UserProfile(profile_id, "Test Student", age, Sex.OTHER, laterality, disability)


def make_device(
    posture: Posture = Posture.STANDING,
    arms: ArmMobility | None = None,
    rgb: bool = False,
    depth: float = 2.0,
) -> DeviceInteractionModel:
    return DeviceInteractionModel(
        posture, rgb, depth, arms or ArmMobility.both(Side.RIGHT))


@pytest.fixture
def visual_profile() -> UserProfile:
    return make_profile(Disability.VISUAL)


@pytest.fixture
def standing_device() -> DeviceInteractionModel:
    return make_device()
