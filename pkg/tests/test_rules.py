import dataclasses
import itertools

import pytest

from adapta.models import ArmMobility, Disability, Posture, Side
from adapta.rules import (
    ActivityConfig,
    BackgroundStyle,
    ElementSpacing,
    FeedbackModality,
    InstructionModality,
    InteractionMode,
    ObjectColorScheme,
    RULES,
    derive_config,
    rule_table_text,
)
from conftest import make_device, make_profile

ALL_MOBILITIES = (
    ArmMobility.both(Side.LEFT),
    ArmMobility.both(Side.RIGHT),
    ArmMobility.left_only(),
    ArmMobility.right_only(),
)


def config_for(disability, mobility=None, posture=Posture.STANDING) -> ActivityConfig:
    return derive_config(
        make_profile(disability),
        make_device(posture=posture, arms=mobility or ArmMobility.both(Side.RIGHT)),
    )


class TestRowFidelity:
    def test_visual_row(self):
        config = config_for(Disability.VISUAL, ArmMobility.both(Side.RIGHT))
        assert config == ActivityConfig(
            InstructionModality.AUDIO, BackgroundStyle.BLACK, ObjectColorScheme.YELLOW,
            InteractionMode.COLLISION, FeedbackModality.AUDIO, False,
            ElementSpacing.STANDARD, Side.RIGHT)

    def test_hearing_row(self):
        config = config_for(Disability.HEARING, ArmMobility.both(Side.LEFT))
        assert config == ActivityConfig(
            InstructionModality.VISUAL, BackgroundStyle.IMAGE, ObjectColorScheme.NORMAL,
            InteractionMode.GESTURES, FeedbackModality.VISUAL, False,
            ElementSpacing.STANDARD, Side.LEFT)

    def test_physical_seated_left_arm_row(self):
        config = config_for(Disability.PHYSICAL, ArmMobility.left_only(), Posture.SEATED)
        assert config == ActivityConfig(
            InstructionModality.AUDIO, BackgroundStyle.IMAGE, ObjectColorScheme.NORMAL,
            InteractionMode.COLLISION, FeedbackModality.AUDIO_AND_VISUAL, False,
            ElementSpacing.REDUCED, Side.LEFT)

    def test_autism_row(self):
        config = config_for(Disability.AUTISM, ArmMobility.both(Side.RIGHT))
        assert config == ActivityConfig(
            InstructionModality.AUDIO, BackgroundStyle.IMAGE, ObjectColorScheme.NORMAL,
            InteractionMode.DRAG_AND_DROP, FeedbackModality.AUDIO_AND_VISUAL, True,
            ElementSpacing.STANDARD, Side.RIGHT)

    def test_physical_arm_refinements(self):
        assert config_for(Disability.PHYSICAL, ArmMobility.right_only()).tracked_arm is Side.RIGHT
        assert config_for(Disability.PHYSICAL, ArmMobility.left_only()).tracked_arm is Side.LEFT
        assert config_for(Disability.PHYSICAL, ArmMobility.both(Side.LEFT)).tracked_arm is Side.LEFT

    def test_standing_physical_keeps_standard_spacing(self):
        assert config_for(
            Disability.PHYSICAL, posture=Posture.STANDING
        ).element_spacing is ElementSpacing.STANDARD


def check_invariants(config: ActivityConfig, disability, posture):
    if disability is Disability.VISUAL:
        assert config.background_style is BackgroundStyle.BLACK
        assert config.object_color_scheme is ObjectColorScheme.YELLOW
        assert config.feedback_modality is FeedbackModality.AUDIO
        assert config.interaction_mode is InteractionMode.COLLISION
    if disability is Disability.HEARING:
        assert config.instruction_modality is InstructionModality.VISUAL
        assert config.interaction_mode is InteractionMode.GESTURES
        assert config.feedback_modality is FeedbackModality.VISUAL
    if disability is Disability.AUTISM:
        assert config.interaction_mode is InteractionMode.DRAG_AND_DROP
        assert config.show_pictograms is True
        assert config.feedback_modality is FeedbackModality.AUDIO_AND_VISUAL
    if disability is Disability.PHYSICAL:
        assert config.interaction_mode is InteractionMode.COLLISION
        assert config.feedback_modality is FeedbackModality.AUDIO_AND_VISUAL
        if posture is Posture.SEATED:
            assert config.element_spacing is ElementSpacing.REDUCED
    assert config.show_pictograms == (disability is Disability.AUTISM)


class TestTotality:
    def test_all_32_inputs_yield_valid_configs(self):
        for disability, mobility, posture in itertools.product(
                Disability, ALL_MOBILITIES, Posture):
            config = config_for(disability, mobility, posture)
            check_invariants(config, disability, posture)

    def test_seated_changes_only_spacing(self):
        # non-physical seated users keep Standard spacing: a chosen default,
        # since only the wheelchair rule mentions posture at all
        for disability, mobility in itertools.product(Disability, ALL_MOBILITIES):
            standing = config_for(disability, mobility, Posture.STANDING)
            seated = config_for(disability, mobility, Posture.SEATED)
            assert dataclasses.replace(
                standing, element_spacing=seated.element_spacing) == seated

    def test_non_physical_mobility_only_moves_tracked_arm(self):
        for disability in (Disability.VISUAL, Disability.HEARING, Disability.AUTISM):
            configs = [config_for(disability, m) for m in ALL_MOBILITIES]
            for mobility, config in zip(ALL_MOBILITIES, configs):
                assert config.tracked_arm is mobility.tracked_side
            stripped = {dataclasses.replace(c, tracked_arm=Side.LEFT) for c in configs}
            assert len(stripped) == 1

    def test_deterministic(self):
        a = config_for(Disability.PHYSICAL, ArmMobility.both(Side.LEFT), Posture.SEATED)
        b = config_for(Disability.PHYSICAL, ArmMobility.both(Side.LEFT), Posture.SEATED)
        assert a == b


class TestRuleTable:
    def test_eight_rules(self):
        assert [r.rule_id for r in RULES] == list(range(1, 9))

    def test_dump_layout(self):
        text = rule_table_text()
        lines = text.splitlines()
        assert len(lines) == 10  # header + separator + 8 rows
        assert "Dominant arm" in text
        assert "Reduced" in text
        assert "DragAndDrop" in text
