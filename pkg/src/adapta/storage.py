"""File-backed data store: profiles, content, traces and the session log.

One directory per store. Profiles and content are single JSON documents;
the session log is append-only, one JSON record per line, UTF-8 with LF
endings and full-precision numbers.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path

from .activities import RepetitionResult
from .analytics import SessionLog
from .content import ContentItem, DEFAULT_CONTENT, Topic
from .models import (
    ArmMobility,
    ArmUse,
    DeviceInteractionModel,
    Disability,
    LateralityProblem,
    Posture,
    Sex,
    Side,
    UserProfile,
)

PROFILES_FILE = "profiles.json"
CONTENT_FILE = "content.json"
SESSIONS_FILE = "sessions.jsonl"
TRACES_DIR = "traces"


class StorageError(Exception):
    pass


class UnknownUserError(StorageError):
    def __init__(self, user_id: str):
        super().__init__(f"unknown user {user_id!r}")
        self.user_id = user_id


class StorageFailure(StorageError):
    pass


class DuplicateProfileError(StorageError):
    def __init__(self, profile_id: str):
        super().__init__(f"profile {profile_id!r} already exists")
        self.profile_id = profile_id


# -- record serialization ------------------------------------------------------


def profile_to_record(profile: UserProfile, device: DeviceInteractionModel) -> dict:
    mobility: dict = {"use": device.arm_mobility.use.value}
    if device.arm_mobility.dominant is not None:
        mobility["dominant"] = device.arm_mobility.dominant.value
    return {
        "id": profile.id,
        "fullName": profile.full_name,
        "age": profile.age,
        "sex": profile.sex.value,
        "laterality": profile.laterality.value,
        "disability": profile.disability.value,
        "device": {
            "posture": device.posture.value,
            "rgbCameraActive": device.rgb_camera_active,
            "depthDistance": device.depth_distance_m,
            "armMobility": mobility,
        },
    }


def record_to_profile(record: dict) -> tuple[UserProfile, DeviceInteractionModel]:
    try:
        profile = UserProfile(
            id=record["id"],
            full_name=record["fullName"],
            age=record["age"],
            sex=Sex(record["sex"]),
            laterality=LateralityProblem(record["laterality"]),
            disability=Disability(record["disability"]),
        )
        dev = record["device"]
        mobility = dev["armMobility"]
        dominant = mobility.get("dominant")
        device = DeviceInteractionModel(
            posture=Posture(dev["posture"]),
            rgb_camera_active=bool(dev["rgbCameraActive"]),
            depth_distance_m=float(dev["depthDistance"]),
            arm_mobility=ArmMobility(
                ArmUse(mobility["use"]),
                Side(dominant) if dominant is not None else None,
            ),
        )
    except (KeyError, ValueError, TypeError) as exc:
        raise StorageFailure(f"malformed profile record: {exc}") from exc
    return profile, device


def session_log_to_record(log: SessionLog) -> dict:
    return {
        "userId": log.user_id,
        "disability": log.disability.value,
        "iteration": log.iteration,
        "sessionIndex": log.session_index,
        "activityKind": log.activity_kind,
        "incomplete": log.incomplete,
        "results": [
            {
                "repetition": r.repetition_index,
                "durationSeconds": r.duration_seconds,
                "errors": r.errors,
            }
            for r in log.results
        ],
    }


def record_to_session_log(record: dict) -> SessionLog:
    try:
        return SessionLog(
            user_id=record["userId"],
            disability=Disability(record["disability"]),
            iteration=record["iteration"],
            session_index=record["sessionIndex"],
            activity_kind=record["activityKind"],
            incomplete=bool(record.get("incomplete", False)),
            results=tuple(
                RepetitionResult(r["repetition"], r["durationSeconds"], r["errors"])
                for r in record["results"]
            ),
        )
    except (KeyError, ValueError, TypeError) as exc:
        raise StorageFailure(f"malformed session record: {exc}") from exc


def session_log_line(log: SessionLog) -> str:
    """Canonical single-line serialization; stable byte-for-byte."""
    return json.dumps(session_log_to_record(log), separators=(",", ":"))


def content_to_record(item: ContentItem) -> dict:
    return {
        "topic": item.topic.value,
        "optionId": item.option_id,
        "label": item.label,
        "pictogramId": item.pictogram_id,
        "matchesTargetId": item.matches_target_id,
    }


def record_to_content(record: dict) -> ContentItem:
    try:
        return ContentItem(
            topic=Topic(record["topic"]),
            option_id=record["optionId"],
            label=record["label"],
            pictogram_id=record["pictogramId"],
            matches_target_id=record["matchesTargetId"],
        )
    except (KeyError, ValueError, TypeError) as exc:
        raise StorageFailure(f"malformed content record: {exc}") from exc


# -- the store -----------------------------------------------------------------


@dataclass
class DataStore:
    root: Path

    def __init__(self, root: str | Path):
        self.root = Path(root)

    @property
    def profiles_path(self) -> Path:
        return self.root / PROFILES_FILE

    @property
    def content_path(self) -> Path:
        return self.root / CONTENT_FILE

    @property
    def sessions_path(self) -> Path:
        return self.root / SESSIONS_FILE

    @property
    def traces_path(self) -> Path:
        return self.root / TRACES_DIR

    def initialize(self) -> None:
        """Create the directory skeleton and default content if absent."""
        try:
            self.root.mkdir(parents=True, exist_ok=True)
            self.traces_path.mkdir(exist_ok=True)
            if not self.profiles_path.exists():
                self._write_profiles([])
            if not self.content_path.exists():
                self.save_content(list(DEFAULT_CONTENT))
        except OSError as exc:
            raise StorageFailure(f"cannot initialize store: {exc}") from exc

    # profiles

    def load_profiles(self) -> list[tuple[UserProfile, DeviceInteractionModel]]:
        if not self.profiles_path.exists():
            return []
        try:
            document = json.loads(self.profiles_path.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise StorageFailure(f"cannot read profiles: {exc}") from exc
        return [record_to_profile(r) for r in document.get("profiles", [])]

    def _write_profiles(self, pairs: list[tuple[UserProfile, DeviceInteractionModel]]) -> None:
        document = {"profiles": [profile_to_record(p, d) for p, d in pairs]}
        try:
            self.root.mkdir(parents=True, exist_ok=True)
            self.profiles_path.write_text(
                json.dumps(document, indent=2) + "\n", encoding="utf-8")
        except OSError as exc:
            raise StorageFailure(f"cannot write profiles: {exc}") from exc

    def add_profile(self, profile: UserProfile, device: DeviceInteractionModel) -> None:
        pairs = self.load_profiles()
        if any(p.id == profile.id for p, _ in pairs):
            raise DuplicateProfileError(profile.id)
        pairs.append((profile, device))
        self._write_profiles(pairs)

    def update_profile(self, profile: UserProfile, device: DeviceInteractionModel) -> None:
        pairs = self.load_profiles()
        for index, (existing, _) in enumerate(pairs):
            if existing.id == profile.id:
                pairs[index] = (profile, device)
                self._write_profiles(pairs)
                return
        raise UnknownUserError(profile.id)

    def delete_profile(self, profile_id: str) -> None:
        pairs = self.load_profiles()
        remaining = [(p, d) for p, d in pairs if p.id != profile_id]
        if len(remaining) == len(pairs):
            raise UnknownUserError(profile_id)
        self._write_profiles(remaining)

    def get_profile(self, profile_id: str) -> tuple[UserProfile, DeviceInteractionModel]:
        for pair in self.load_profiles():
            if pair[0].id == profile_id:
                return pair
        raise UnknownUserError(profile_id)

    # content

    def load_content(self) -> tuple[ContentItem, ...]:
        if not self.content_path.exists():
            return DEFAULT_CONTENT
        try:
            document = json.loads(self.content_path.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise StorageFailure(f"cannot read content: {exc}") from exc
        return tuple(record_to_content(r) for r in document.get("items", []))

    def save_content(self, items: list[ContentItem]) -> None:
        document = {"items": [content_to_record(i) for i in items]}
        try:
            self.content_path.write_text(
                json.dumps(document, indent=2) + "\n", encoding="utf-8")
        except OSError as exc:
            raise StorageFailure(f"cannot write content: {exc}") from exc

    # sessions

    def append_session(self, log: SessionLog) -> None:
        """Durably append one session record; the log's user must exist."""
        self.get_profile(log.user_id)
        line = session_log_line(log)
        try:
            with open(self.sessions_path, "a", encoding="utf-8", newline="\n") as fh:
                fh.write(line + "\n")
                fh.flush()
                os.fsync(fh.fileno())
        except OSError as exc:
            raise StorageFailure(f"cannot append session: {exc}") from exc

    def read_sessions(self) -> list[SessionLog]:
        if not self.sessions_path.exists():
            return []
        try:
            lines = self.sessions_path.read_text(encoding="utf-8").splitlines()
        except OSError as exc:
            raise StorageFailure(f"cannot read sessions: {exc}") from exc
        logs = []
        for line in lines:
            if not line.strip():
                continue
            try:
                logs.append(record_to_session_log(json.loads(line)))
            except json.JSONDecodeError as exc:
                raise StorageFailure(f"corrupt session record: {exc}") from exc
        return logs
