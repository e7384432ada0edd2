"""User profiles and the device-interaction facts that drive adaptation."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


class Disability(str, Enum):
    VISUAL = "Visual"
    HEARING = "Hearing"
    PHYSICAL = "Physical"
    AUTISM = "Autism"


class LateralityProblem(str, Enum):
    NONE = "None"
    CANNOT_RECOGNIZE_LEFT = "CannotRecognizeLeft"
    CANNOT_RECOGNIZE_RIGHT = "CannotRecognizeRight"


class Sex(str, Enum):
    F = "F"
    M = "M"
    OTHER = "Other"


class Side(str, Enum):
    LEFT = "Left"
    RIGHT = "Right"

    def opposite(self) -> Side:
        return Side.RIGHT if self is Side.LEFT else Side.LEFT


class Posture(str, Enum):
    STANDING = "Standing"
    SEATED = "Seated"


class ArmUse(str, Enum):
    BOTH = "BothArms"
    RIGHT_ONLY = "RightArmOnly"
    LEFT_ONLY = "LeftArmOnly"


@dataclass(frozen=True)
class ArmMobility:
    """Which arms the student can move. `dominant` is set only for BothArms."""

    use: ArmUse
    dominant: Side | None = None

    def __post_init__(self) -> None:
        if self.use is ArmUse.BOTH and self.dominant is None:
            raise ValueError("BothArms requires a dominant side")
        if self.use is not ArmUse.BOTH and self.dominant is not None:
            raise ValueError(f"{self.use.value} does not take a dominant side")

    @classmethod
    def both(cls, dominant: Side) -> ArmMobility:
        return cls(ArmUse.BOTH, dominant)

    @classmethod
    def right_only(cls) -> ArmMobility:
        return cls(ArmUse.RIGHT_ONLY)

    @classmethod
    def left_only(cls) -> ArmMobility:
        return cls(ArmUse.LEFT_ONLY)

    @property
    def tracked_side(self) -> Side:
        """The arm the sensor should follow: the only usable one, else the dominant."""
        if self.use is ArmUse.RIGHT_ONLY:
            return Side.RIGHT
        if self.use is ArmUse.LEFT_ONLY:
            return Side.LEFT
        assert self.dominant is not None
        return self.dominant


@dataclass(frozen=True)
class UserProfile:
    id: str
    full_name: str
    age: int
    sex: Sex
    laterality: LateralityProblem
    disability: Disability


@dataclass(frozen=True)
class DeviceInteractionModel:
    """How this user meets the sensor: posture, camera mirror, distance, usable arms."""

    posture: Posture
    rgb_camera_active: bool
    depth_distance_m: float
    arm_mobility: ArmMobility

    def __post_init__(self) -> None:
        if not math.isfinite(self.depth_distance_m) or self.depth_distance_m <= 0:
            raise ValueError("depth distance must be finite and positive")


@dataclass(frozen=True)
class ValidationResult:
    """Field names of violated constraints; empty means the profile is acceptable."""

    violations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_profile(profile: UserProfile) -> ValidationResult:
    """Check profile constraints. Violations are data, not faults; never raises."""
    violations = []
    if not profile.id:
        violations.append("id")
    if not profile.full_name:
        violations.append("fullName")
    if not 0 < profile.age < 120:
        violations.append("age")
    return ValidationResult(tuple(violations))


# Sensor-recommended operating distance, metres, both ends inclusive.
RECOMMENDED_DEPTH_RANGE_M = (1.2, 3.5)


@dataclass(frozen=True)
class DepthAssessment:
    within_recommended: bool
    measured_m: float


def validate_depth_distance(model: DeviceInteractionModel) -> DepthAssessment:
    """Advisory check only: distances outside the recommended band are reported, not rejected."""
    lo, hi = RECOMMENDED_DEPTH_RANGE_M
    within = lo <= model.depth_distance_m <= hi
    return DepthAssessment(within, model.depth_distance_m)
