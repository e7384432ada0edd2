"""Concept-association content: what the options are and which target each matches."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Topic(str, Enum):
    ANIMALS = "animals"
    VEHICLES = "vehicles"


@dataclass(frozen=True)
class ContentItem:
    topic: Topic
    option_id: str
    label: str
    pictogram_id: str
    matches_target_id: str


DEFAULT_CONTENT: tuple[ContentItem, ...] = (
    ContentItem(Topic.ANIMALS, "egg", "Egg", "picto-egg", "hen"),
    ContentItem(Topic.ANIMALS, "puppy", "Puppy", "picto-puppy", "dog"),
    ContentItem(Topic.ANIMALS, "kitten", "Kitten", "picto-kitten", "cat"),
    ContentItem(Topic.VEHICLES, "wheel", "Wheel", "picto-wheel", "car"),
    ContentItem(Topic.VEHICLES, "sail", "Sail", "picto-sail", "boat"),
    ContentItem(Topic.VEHICLES, "wing", "Wing", "picto-wing", "plane"),
)


def items_for_topic(
    topic: Topic, content: tuple[ContentItem, ...] = DEFAULT_CONTENT
) -> tuple[ContentItem, ...]:
    items = tuple(item for item in content if item.topic is topic)
    if not items:
        raise ValueError(f"no content for topic {topic.value}")
    return items
