"""Brute-force reference recognizer, independent of the incremental machine.

Searches the frame list directly: commit to the earliest frame satisfying a
gesture's initial pose, then scan forward for the remaining poses in order;
a frame past the time window kills the attempt and the scan resumes at that
very frame.
"""

from __future__ import annotations

from adapta.gestures import GestureDefinition, GestureEvent
from adapta.skeleton import SkeletonFrame


def oracle_events_for(frames: list[SkeletonFrame], definition: GestureDefinition) -> list[GestureEvent]:
    events: list[GestureEvent] = []
    n = len(frames)
    i = 0
    while i < n:
        if not definition.states[0].holds(frames[i]):
            i += 1
            continue
        start = frames[i].timestamp_ms
        next_state = 1
        j = i + 1
        resumed = None
        while j < n:
            if frames[j].timestamp_ms - start > definition.max_duration_ms:
                resumed = j  # window broken; this frame may open a new attempt
                break
            if definition.states[next_state].holds(frames[j]):
                next_state += 1
                if next_state == len(definition.states):
                    events.append(GestureEvent(
                        definition.gesture_id, start, frames[j].timestamp_ms))
                    resumed = j + 1
                    break
            j += 1
        if resumed is None:
            break  # trace ended mid-attempt
        i = resumed
    return events


def oracle_events(
    frames: list[SkeletonFrame], definitions: tuple[GestureDefinition, ...]
) -> list[GestureEvent]:
    merged: list[GestureEvent] = []
    for definition in definitions:
        merged.extend(oracle_events_for(frames, definition))
    order = {d.gesture_id: i for i, d in enumerate(definitions)}
    merged.sort(key=lambda e: (e.end_ms, order[e.gesture_id]))
    return merged
