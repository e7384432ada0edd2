"""Deterministic state machines for the two activities.

Concept association: a prompt names a concept; the student answers by cursor
collision (with a revisable confirm window), by arm-raise gesture (left/right
option, committed immediately), or by dragging an option onto its matching
target. Laterality: a ball starts mid-screen and advances toward the trained
side on each hit until it reaches the goal band; the autism variant drags the
ball into a basket that steps outward each repetition.

All behavior is a pure function of the input sequence; timestamps come from
the inputs, never from a clock.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Union

from .content import ContentItem, Topic, items_for_topic
from .gestures import GestureId
from .models import (
    DeviceInteractionModel,
    LateralityProblem,
    Side,
    UserProfile,
    validate_profile,
)
from .rules import (
    ActivityConfig,
    ElementSpacing,
    FeedbackModality,
    InstructionModality,
    InteractionMode,
    derive_config,
)

# Normalized scene geometry. Collision reach is the sum of the two radii.
OPTION_RADIUS = 0.08
CURSOR_RADIUS = 0.04
BALL_RADIUS = 0.06
BASKET_RADIUS = 0.10
PROMPT_RADIUS = 0.06

COLLISION_OPTION_US = (0.2, 0.5, 0.8)
GESTURE_OPTION_US = (0.25, 0.75)
OPTION_ROW_V = 0.5
DND_OPTION_U = 0.2
DND_TARGET_U = 0.8
DND_ROW_VS = (0.25, 0.5, 0.75)
PROMPT_POS = (0.5, 0.12)
BALL_START = (0.5, 0.5)

CONFIRM_WINDOW_MS = 2000

# Laterality: per-hit ball shift and the goal band the ball must reach.
BALL_SHIFT_STANDARD = 0.10
BALL_SHIFT_REDUCED = 0.05
GOAL_BAND = 0.10
BASKET_START_STEPS = 2

DEFAULT_REPETITIONS = 10


class ActivityKind(str, Enum):
    CONCEPT_ASSOCIATION = "concept"
    LATERALITY = "laterality"


class SpecMismatchError(Exception):
    pass


class InputAfterDoneError(Exception):
    pass


class NonMonotonicInputError(Exception):
    pass


@dataclass(frozen=True)
class ActivitySpec:
    kind: ActivityKind
    topic: Topic | None = None
    side: Side | None = None
    repetitions: int = DEFAULT_REPETITIONS

    def __post_init__(self) -> None:
        if self.repetitions <= 0:
            raise ValueError("repetitions must be positive")
        if self.kind is ActivityKind.CONCEPT_ASSOCIATION and self.topic is None:
            raise ValueError("concept association needs a topic")
        if self.kind is ActivityKind.LATERALITY and self.side is None:
            raise ValueError("laterality needs a side")

    @classmethod
    def concept(cls, topic: Topic, repetitions: int = DEFAULT_REPETITIONS) -> ActivitySpec:
        return cls(ActivityKind.CONCEPT_ASSOCIATION, topic=topic, repetitions=repetitions)

    @classmethod
    def laterality(cls, side: Side, repetitions: int = DEFAULT_REPETITIONS) -> ActivitySpec:
        return cls(ActivityKind.LATERALITY, side=side, repetitions=repetitions)

    @classmethod
    def parse(cls, text: str, repetitions: int = DEFAULT_REPETITIONS) -> ActivitySpec:
        """Parse the CLI/protocol spelling: concept:animals, laterality:right, ..."""
        kind, _, arg = text.partition(":")
        if kind == ActivityKind.CONCEPT_ASSOCIATION.value:
            return cls.concept(Topic(arg), repetitions)
        if kind == ActivityKind.LATERALITY.value:
            return cls.laterality(Side(arg.capitalize()), repetitions)
        raise ValueError(f"unknown activity {text!r}")

    def format(self) -> str:
        if self.kind is ActivityKind.CONCEPT_ASSOCIATION:
            return f"{self.kind.value}:{self.topic.value}"
        return f"{self.kind.value}:{self.side.value.lower()}"


class ElementRole(str, Enum):
    OPTION = "Option"
    TARGET = "Target"
    BALL = "Ball"
    BASKET = "Basket"
    PROMPT = "Prompt"


@dataclass
class SceneElement:
    id: str
    u: float
    v: float
    radius: float
    role: ElementRole
    pictogram_id: str | None = None


class Modality(str, Enum):
    AUDIO = "Audio"
    VISUAL = "Visual"


def feedback_modalities(modality: FeedbackModality) -> frozenset[Modality]:
    if modality is FeedbackModality.AUDIO:
        return frozenset({Modality.AUDIO})
    if modality is FeedbackModality.VISUAL:
        return frozenset({Modality.VISUAL})
    return frozenset({Modality.AUDIO, Modality.VISUAL})


def instruction_modalities(modality: InstructionModality) -> frozenset[Modality]:
    if modality is InstructionModality.AUDIO:
        return frozenset({Modality.AUDIO})
    if modality is InstructionModality.VISUAL:
        return frozenset({Modality.VISUAL})
    return frozenset({Modality.AUDIO, Modality.VISUAL})


class FeedbackKind(str, Enum):
    POSITIVE = "Positive"
    NEGATIVE = "Negative"
    SELECTION_FRAME = "SelectionFrame"
    INSTRUCTIONS = "Instructions"
    SCENE_CHANGED = "SceneChanged"


@dataclass(frozen=True)
class FeedbackEvent:
    kind: FeedbackKind
    modalities: frozenset[Modality] = frozenset()
    element_id: str | None = None


@dataclass(frozen=True)
class RepetitionResult:
    repetition_index: int
    duration_seconds: int
    errors: int


class Phase(str, Enum):
    AWAITING_INPUT = "AwaitingInput"
    CONFIRM_WINDOW = "ConfirmWindow"
    DONE = "Done"


@dataclass(frozen=True)
class CursorMoved:
    u: float
    v: float
    t_ms: int


@dataclass(frozen=True)
class GestureRecognized:
    gesture: GestureId
    t_ms: int


@dataclass(frozen=True)
class Tick:
    t_ms: int


ActivityInput = Union[CursorMoved, GestureRecognized, Tick]


@dataclass
class ActivityState:
    """Owned by one session and mutated only by its ordered input stream."""

    spec: ActivitySpec
    repetition_index: int
    elements: list[SceneElement]
    prompt_target_id: str | None
    goal_side: Side | None
    content_items: tuple[ContentItem, ...]
    option_targets: dict[str, str]
    dragging: str | None = None
    repetition_start_ms: int = 0
    errors_this_repetition: int = 0
    phase: Phase = Phase.AWAITING_INPUT
    confirm_element_id: str | None = None
    confirm_deadline_ms: int = 0
    last_input_ms: int = 0
    # Edge tracking, so a parked cursor does not re-trigger every frame:
    # which option the cursor already sits on, plus the last cursor position
    # (the ball moves, so ball hits compare against the previous cursor).
    hover_element_id: str | None = None
    last_cursor: tuple[float, float] | None = None

    def element(self, element_id: str) -> SceneElement:
        for el in self.elements:
            if el.id == element_id:
                return el
        raise KeyError(element_id)


def _q(value: float) -> float:
    """Quantize generated coordinates so repeated shift arithmetic stays exact."""
    return round(value, 6)


def _reduced(u: float) -> float:
    return _q(0.5 + (u - 0.5) * 0.5)


def _concept_scene(
    config: ActivityConfig, items: tuple[ContentItem, ...]
) -> tuple[list[SceneElement], dict[str, str]]:
    reduce_spacing = config.element_spacing is ElementSpacing.REDUCED
    picto = config.show_pictograms

    def place(item: ContentItem, u: float, v: float) -> SceneElement:
        return SceneElement(
            item.option_id, _reduced(u) if reduce_spacing else u, v, OPTION_RADIUS,
            ElementRole.OPTION, item.pictogram_id if picto else None)

    elements: list[SceneElement] = []
    targets: dict[str, str] = {}
    if config.interaction_mode is InteractionMode.GESTURES:
        for item, u in zip(items, GESTURE_OPTION_US):
            elements.append(place(item, u, OPTION_ROW_V))
    elif config.interaction_mode is InteractionMode.COLLISION:
        for item, u in zip(items, COLLISION_OPTION_US):
            elements.append(place(item, u, OPTION_ROW_V))
    else:
        for item, v in zip(items, DND_ROW_VS):
            elements.append(place(item, DND_OPTION_U, v))
            u = _reduced(DND_TARGET_U) if reduce_spacing else DND_TARGET_U
            elements.append(SceneElement(
                item.matches_target_id, u, v, OPTION_RADIUS, ElementRole.TARGET,
                item.pictogram_id if picto else None))
            targets[item.option_id] = item.matches_target_id
    elements.append(SceneElement(
        "prompt", PROMPT_POS[0], PROMPT_POS[1], PROMPT_RADIUS, ElementRole.PROMPT))
    return elements, targets


def _ball_shift(config: ActivityConfig) -> float:
    if config.element_spacing is ElementSpacing.REDUCED:
        return BALL_SHIFT_REDUCED
    return BALL_SHIFT_STANDARD


def _laterality_scene(
    config: ActivityConfig, spec: ActivitySpec, repetition: int
) -> list[SceneElement]:
    elements = [SceneElement("ball", BALL_START[0], BALL_START[1], BALL_RADIUS, ElementRole.BALL)]
    if config.interaction_mode is InteractionMode.DRAG_AND_DROP:
        # The basket starts two shift-steps out and walks one step per
        # repetition, never past the goal band.
        steps = BASKET_START_STEPS + (repetition - 1)
        offset = min(_q(steps * _ball_shift(config)), 0.5 - GOAL_BAND)
        u = _q(0.5 + offset) if spec.side is Side.RIGHT else _q(0.5 - offset)
        elements.append(SceneElement("basket", u, OPTION_ROW_V, BASKET_RADIUS, ElementRole.BASKET))
    return elements


def _prompt_for(state: ActivityState) -> str:
    options = [el.id for el in state.elements if el.role is ElementRole.OPTION]
    return options[(state.repetition_index - 1) % len(options)]


def start_activity(
    profile: UserProfile,
    device: DeviceInteractionModel,
    spec: ActivitySpec,
    content: tuple[ContentItem, ...] | None = None,
) -> tuple[ActivityConfig, ActivityState, list[FeedbackEvent]]:
    """Derive the configuration, lay out the initial scene and announce it."""
    result = validate_profile(profile)
    if not result.ok:
        raise ValueError(f"invalid profile: {', '.join(result.violations)}")
    if spec.kind is ActivityKind.LATERALITY:
        trained = {
            LateralityProblem.CANNOT_RECOGNIZE_LEFT: Side.LEFT,
            LateralityProblem.CANNOT_RECOGNIZE_RIGHT: Side.RIGHT,
        }.get(profile.laterality)
        if trained is None:
            raise SpecMismatchError("profile has no laterality problem to train")
        if trained is not spec.side:
            raise SpecMismatchError(
                f"profile trains the {trained.value} side, not {spec.side.value}")

    config = derive_config(profile, device)
    state = ActivityState(
        spec=spec,
        repetition_index=1,
        elements=[],
        prompt_target_id=None,
        goal_side=spec.side,
        content_items=(),
        option_targets={},
    )
    if spec.kind is ActivityKind.CONCEPT_ASSOCIATION:
        items = items_for_topic(spec.topic) if content is None else items_for_topic(spec.topic, content)
        state.content_items = items
        state.elements, state.option_targets = _concept_scene(config, items)
        state.prompt_target_id = _prompt_for(state)
    else:
        state.elements = _laterality_scene(config, spec, 1)
    events = [
        FeedbackEvent(FeedbackKind.INSTRUCTIONS, instruction_modalities(config.instruction_modality)),
        FeedbackEvent(FeedbackKind.SCENE_CHANGED),
    ]
    return config, state, events


# Strict-inequality collision with a guard against float noise: a point
# mathematically on the reach circle (e.g. a cursor left exactly one ball
# shift behind) must reliably count as outside it.
_REACH_EPS = 1e-9


def _overlap(u: float, v: float, element: SceneElement, reach: float) -> bool:
    return math.hypot(u - element.u, v - element.v) < reach - _REACH_EPS


def _nearest_hit(
    u: float, v: float, elements: list[SceneElement], role: ElementRole, reach_radius: float
) -> SceneElement | None:
    best = None
    best_d = math.inf
    for el in elements:
        if el.role is not role:
            continue
        d = math.hypot(u - el.u, v - el.v)
        if d < reach_radius + el.radius - _REACH_EPS and d < best_d:
            best, best_d = el, d
    return best


def _round_half_up_seconds(duration_ms: int) -> int:
    return int(math.floor(duration_ms / 1000 + 0.5))


class _Engine:
    """Applies one input to the state; collects events and a completed result."""

    def __init__(self, state: ActivityState, config: ActivityConfig):
        self.state = state
        self.config = config
        self.events: list[FeedbackEvent] = []
        self.result: RepetitionResult | None = None

    # -- shared outcomes ---------------------------------------------------

    def positive(self, at_ms: int) -> None:
        state = self.state
        self.events.append(FeedbackEvent(
            FeedbackKind.POSITIVE, feedback_modalities(self.config.feedback_modality)))
        self.result = RepetitionResult(
            state.repetition_index,
            _round_half_up_seconds(at_ms - state.repetition_start_ms),
            state.errors_this_repetition,
        )
        if state.repetition_index >= state.spec.repetitions:
            state.phase = Phase.DONE
            return
        state.repetition_index += 1
        state.errors_this_repetition = 0
        state.repetition_start_ms = at_ms
        state.phase = Phase.AWAITING_INPUT
        state.dragging = None
        state.hover_element_id = None
        state.confirm_element_id = None
        if state.spec.kind is ActivityKind.CONCEPT_ASSOCIATION:
            self.reset_concept_scene()
            state.prompt_target_id = _prompt_for(state)
        else:
            state.elements = _laterality_scene(self.config, state.spec, state.repetition_index)
        self.events.append(FeedbackEvent(FeedbackKind.SCENE_CHANGED))

    def negative(self) -> None:
        state = self.state
        state.errors_this_repetition += 1
        state.phase = Phase.AWAITING_INPUT
        state.confirm_element_id = None
        self.events.append(FeedbackEvent(
            FeedbackKind.NEGATIVE, feedback_modalities(self.config.feedback_modality)))

    def reset_concept_scene(self) -> None:
        state = self.state
        state.elements, state.option_targets = _concept_scene(self.config, state.content_items)

    # -- concept association -------------------------------------------------

    def commit_selection(self, element_id: str, at_ms: int) -> None:
        if element_id == self.state.prompt_target_id:
            self.positive(at_ms)
        else:
            self.negative()

    def concept_cursor(self, inp: CursorMoved) -> None:
        state = self.state
        if self.config.interaction_mode is InteractionMode.COLLISION:
            hit = _nearest_hit(inp.u, inp.v, state.elements, ElementRole.OPTION, CURSOR_RADIUS)
            hit_id = hit.id if hit else None
            fresh = hit_id is not None and hit_id != state.hover_element_id
            state.hover_element_id = hit_id
            if fresh and (state.phase is Phase.AWAITING_INPUT
                          or hit_id != state.confirm_element_id):
                state.phase = Phase.CONFIRM_WINDOW
                state.confirm_element_id = hit_id
                state.confirm_deadline_ms = inp.t_ms + CONFIRM_WINDOW_MS
                self.events.append(FeedbackEvent(
                    FeedbackKind.SELECTION_FRAME, frozenset({Modality.VISUAL}),
                    element_id=hit_id))
        else:  # drag & drop
            if state.dragging is None:
                hit = _nearest_hit(inp.u, inp.v, state.elements, ElementRole.OPTION, CURSOR_RADIUS)
                if hit is not None:
                    state.dragging = hit.id
            if state.dragging is not None:
                dragged = state.element(state.dragging)
                dragged.u, dragged.v = inp.u, inp.v
                self.events.append(FeedbackEvent(FeedbackKind.SCENE_CHANGED))
                target = _nearest_hit(
                    inp.u, inp.v, state.elements, ElementRole.TARGET, dragged.radius)
                if target is not None:
                    dropped = state.dragging
                    state.dragging = None
                    if state.option_targets.get(dropped) == target.id:
                        self.positive(inp.t_ms)
                    else:
                        self.reset_concept_scene()
                        self.negative()
                        self.events.append(FeedbackEvent(FeedbackKind.SCENE_CHANGED))

    def concept_gesture(self, inp: GestureRecognized) -> None:
        options = sorted(
            (el for el in self.state.elements if el.role is ElementRole.OPTION),
            key=lambda el: el.u)
        index = 0 if inp.gesture is GestureId.RAISE_LEFT_ARM else len(options) - 1
        self.commit_selection(options[index].id, inp.t_ms)

    # -- laterality -----------------------------------------------------------

    def _ball_at_goal(self, ball: SceneElement) -> bool:
        if self.state.goal_side is Side.RIGHT:
            return ball.u >= 1.0 - GOAL_BAND
        return ball.u <= GOAL_BAND

    def shift_ball(self, at_ms: int) -> None:
        state = self.state
        ball = state.element("ball")
        delta = _ball_shift(self.config)
        if state.goal_side is Side.RIGHT:
            ball.u = min(1.0, _q(ball.u + delta))
        else:
            ball.u = max(0.0, _q(ball.u - delta))
        self.events.append(FeedbackEvent(FeedbackKind.SCENE_CHANGED))
        if self._ball_at_goal(ball):
            self.positive(at_ms)

    def laterality_cursor(self, inp: CursorMoved) -> None:
        state = self.state
        ball = state.element("ball")
        if self.config.interaction_mode is InteractionMode.DRAG_AND_DROP:
            if state.dragging is None and _overlap(
                    inp.u, inp.v, ball, CURSOR_RADIUS + ball.radius):
                state.dragging = ball.id
            if state.dragging is not None:
                # One-way ratchet: the dragged ball only advances toward the
                # trained side; pulling back cannot undo progress.
                if state.goal_side is Side.RIGHT:
                    ball.u = max(ball.u, min(1.0, inp.u))
                else:
                    ball.u = min(ball.u, max(0.0, inp.u))
                ball.v = min(1.0, max(0.0, inp.v))
                self.events.append(FeedbackEvent(FeedbackKind.SCENE_CHANGED))
                basket = state.element("basket")
                if _overlap(ball.u, ball.v, basket, ball.radius + basket.radius):
                    state.dragging = None
                    self.positive(inp.t_ms)
        else:
            over = _overlap(inp.u, inp.v, ball, CURSOR_RADIUS + ball.radius)
            was_over = state.last_cursor is not None and _overlap(
                state.last_cursor[0], state.last_cursor[1], ball, CURSOR_RADIUS + ball.radius)
            state.last_cursor = (inp.u, inp.v)
            if over and not was_over:
                self.shift_ball(inp.t_ms)

    def laterality_gesture(self, inp: GestureRecognized) -> None:
        gesture_side = Side.LEFT if inp.gesture is GestureId.RAISE_LEFT_ARM else Side.RIGHT
        if gesture_side is self.state.goal_side:
            self.shift_ball(inp.t_ms)
        else:
            self.negative()


def apply_input(
    state: ActivityState, config: ActivityConfig, inp: ActivityInput
) -> tuple[ActivityState, list[FeedbackEvent], RepetitionResult | None]:
    """Advance the activity by one input; inputs must arrive in timestamp order."""
    if state.phase is Phase.DONE:
        raise InputAfterDoneError("activity already completed")
    if inp.t_ms < state.last_input_ms:
        raise NonMonotonicInputError(
            f"input at {inp.t_ms} ms after one at {state.last_input_ms} ms")
    state.last_input_ms = inp.t_ms

    engine = _Engine(state, config)

    # An expired confirm window commits at its deadline before the new input
    # acts; the selection was only revisable while the window was open.
    if state.phase is Phase.CONFIRM_WINDOW and inp.t_ms >= state.confirm_deadline_ms:
        selected = state.confirm_element_id
        deadline = state.confirm_deadline_ms
        state.hover_element_id = None
        engine.commit_selection(selected, deadline)
        if state.phase is Phase.DONE:
            return state, engine.events, engine.result

    gestures_mode = config.interaction_mode is InteractionMode.GESTURES
    if state.spec.kind is ActivityKind.CONCEPT_ASSOCIATION:
        if isinstance(inp, CursorMoved) and not gestures_mode:
            engine.concept_cursor(inp)
        elif isinstance(inp, GestureRecognized) and gestures_mode:
            engine.concept_gesture(inp)
    else:
        if isinstance(inp, CursorMoved) and not gestures_mode:
            engine.laterality_cursor(inp)
        elif isinstance(inp, GestureRecognized) and gestures_mode:
            engine.laterality_gesture(inp)

    return state, engine.events, engine.result
