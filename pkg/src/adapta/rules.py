"""Rule-driven activity configuration.

Eight a-priori rules map (disability, arm mobility, posture) to a complete
presentation and interaction setup. Rules 1-4 pick the per-disability base row,
rules 6-8 refine the tracked arm for physical disabilities, rule 5 reduces
element spacing for seated (wheelchair) users.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .models import (
    ArmUse,
    DeviceInteractionModel,
    Disability,
    Posture,
    Side,
    UserProfile,
)


class InstructionModality(str, Enum):
    AUDIO = "Audio"
    VISUAL = "Visual"
    AUDIO_AND_VISUAL = "AudioAndVisual"


class BackgroundStyle(str, Enum):
    BLACK = "Black"
    IMAGE = "Image"


class ObjectColorScheme(str, Enum):
    YELLOW = "Yellow"
    NORMAL = "Normal"


class InteractionMode(str, Enum):
    COLLISION = "Collision"
    GESTURES = "Gestures"
    DRAG_AND_DROP = "DragAndDrop"


class FeedbackModality(str, Enum):
    AUDIO = "Audio"
    VISUAL = "Visual"
    AUDIO_AND_VISUAL = "AudioAndVisual"


class ElementSpacing(str, Enum):
    STANDARD = "Standard"
    REDUCED = "Reduced"


@dataclass(frozen=True)
class ActivityConfig:
    instruction_modality: InstructionModality
    background_style: BackgroundStyle
    object_color_scheme: ObjectColorScheme
    interaction_mode: InteractionMode
    feedback_modality: FeedbackModality
    show_pictograms: bool
    element_spacing: ElementSpacing
    tracked_arm: Side


class _TrackedArm(Enum):
    """Placeholders for the motion-detection column before arm resolution."""

    DOMINANT = "dominant"   # follow the usable/dominant arm
    DEFER = "defer"         # leave the choice to the mobility rules


@dataclass(frozen=True)
class AdaptationRule:
    rule_id: int
    summary: str
    applies: Callable[[UserProfile, DeviceInteractionModel], bool]
    effects: dict


def _is(disability: Disability):
    return lambda p, d: p.disability is disability


RULES: tuple[AdaptationRule, ...] = (
    AdaptationRule(
        1,
        "Visual impairment: audio instructions, black background, yellow objects, "
        "collision interaction, audio feedback",
        _is(Disability.VISUAL),
        {
            "instruction_modality": InstructionModality.AUDIO,
            "background_style": BackgroundStyle.BLACK,
            "object_color_scheme": ObjectColorScheme.YELLOW,
            "interaction_mode": InteractionMode.COLLISION,
            "feedback_modality": FeedbackModality.AUDIO,
            "show_pictograms": False,
            "element_spacing": ElementSpacing.STANDARD,
            "tracked_arm": _TrackedArm.DOMINANT,
        },
    ),
    AdaptationRule(
        2,
        "Hearing loss: visual instructions, gesture interaction, visual feedback",
        _is(Disability.HEARING),
        {
            "instruction_modality": InstructionModality.VISUAL,
            "background_style": BackgroundStyle.IMAGE,
            "object_color_scheme": ObjectColorScheme.NORMAL,
            "interaction_mode": InteractionMode.GESTURES,
            "feedback_modality": FeedbackModality.VISUAL,
            "show_pictograms": False,
            "element_spacing": ElementSpacing.STANDARD,
            "tracked_arm": _TrackedArm.DOMINANT,
        },
    ),
    AdaptationRule(
        3,
        "Physical disability: audio instructions, collision interaction, "
        "audio+visual feedback; arm chosen by the mobility rules",
        _is(Disability.PHYSICAL),
        {
            "instruction_modality": InstructionModality.AUDIO,
            "background_style": BackgroundStyle.IMAGE,
            "object_color_scheme": ObjectColorScheme.NORMAL,
            "interaction_mode": InteractionMode.COLLISION,
            "feedback_modality": FeedbackModality.AUDIO_AND_VISUAL,
            "show_pictograms": False,
            "element_spacing": ElementSpacing.STANDARD,
            "tracked_arm": _TrackedArm.DEFER,
        },
    ),
    AdaptationRule(
        4,
        "Autism: audio instructions, drag&drop interaction, pictogram badges, "
        "audio+visual feedback",
        _is(Disability.AUTISM),
        {
            "instruction_modality": InstructionModality.AUDIO,
            "background_style": BackgroundStyle.IMAGE,
            "object_color_scheme": ObjectColorScheme.NORMAL,
            "interaction_mode": InteractionMode.DRAG_AND_DROP,
            "feedback_modality": FeedbackModality.AUDIO_AND_VISUAL,
            "show_pictograms": True,
            "element_spacing": ElementSpacing.STANDARD,
            "tracked_arm": _TrackedArm.DOMINANT,
        },
    ),
    AdaptationRule(
        5,
        "Physical disability, seated (wheelchair): reduce the distance between elements",
        lambda p, d: p.disability is Disability.PHYSICAL and d.posture is Posture.SEATED,
        {"element_spacing": ElementSpacing.REDUCED},
    ),
    AdaptationRule(
        6,
        "Physical disability, only the right arm moves: track the right arm",
        lambda p, d: p.disability is Disability.PHYSICAL
        and d.arm_mobility.use is ArmUse.RIGHT_ONLY,
        {"tracked_arm": Side.RIGHT},
    ),
    AdaptationRule(
        7,
        "Physical disability, only the left arm moves: track the left arm",
        lambda p, d: p.disability is Disability.PHYSICAL
        and d.arm_mobility.use is ArmUse.LEFT_ONLY,
        {"tracked_arm": Side.LEFT},
    ),
    AdaptationRule(
        8,
        "Physical disability, both arms move: track the dominant arm",
        lambda p, d: p.disability is Disability.PHYSICAL
        and d.arm_mobility.use is ArmUse.BOTH,
        {"tracked_arm": _TrackedArm.DOMINANT},
    ),
)


def derive_config(profile: UserProfile, device: DeviceInteractionModel) -> ActivityConfig:
    """Apply the rule table in order and resolve the tracked arm.

    Total over the input domain: exactly one base rule fires for every
    disability, and the mobility rules cover every arm configuration.
    """
    fields: dict = {}
    for rule in RULES:
        if rule.applies(profile, device):
            fields.update(rule.effects)
    arm = fields["tracked_arm"]
    if isinstance(arm, _TrackedArm):
        # DEFER only occurs for physical disabilities, where rules 6-8 always
        # override it before we get here; DOMINANT resolves through mobility.
        fields["tracked_arm"] = device.arm_mobility.tracked_side
    return ActivityConfig(**fields)


def rule_table_text() -> str:
    """Render the rule base as an audit table, one row per rule."""
    headers = (
        "#", "Condition", "Instructions", "Background", "Objects",
        "Interaction", "Feedback", "Gestures", "Icons", "Spacing", "Tracked arm",
    )
    conditions = {
        1: "Visual",
        2: "Hearing",
        3: "Physical",
        4: "Autism",
        5: "Physical (wheelchair)",
        6: "Physical (mov. right arm)",
        7: "Physical (mov. left arm)",
        8: "Physical (mov. both arms)",
    }

    def cell(rule: AdaptationRule, key: str) -> str:
        value = rule.effects.get(key)
        if value is None:
            return "-"
        if value is _TrackedArm.DOMINANT:
            return "Dominant arm"
        if value is _TrackedArm.DEFER:
            return "-"
        if isinstance(value, bool):
            return "Yes" if value else "No"
        return value.value

    rows = [headers]
    for rule in RULES:
        mode = rule.effects.get("interaction_mode")
        rows.append((
            str(rule.rule_id),
            conditions[rule.rule_id],
            cell(rule, "instruction_modality"),
            cell(rule, "background_style"),
            cell(rule, "object_color_scheme"),
            cell(rule, "interaction_mode"),
            cell(rule, "feedback_modality"),
            "-" if mode is None else ("Yes" if mode is InteractionMode.GESTURES else "No"),
            cell(rule, "show_pictograms"),
            cell(rule, "element_spacing"),
            cell(rule, "tracked_arm"),
        ))
    widths = [max(len(row[i]) for row in rows) for i in range(len(headers))]
    lines = []
    for n, row in enumerate(rows):
        lines.append("  ".join(col.ljust(w) for col, w in zip(row, widths)).rstrip())
        if n == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines)
