"""Session-log statistics: per-user descriptives and group learning curves."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .activities import RepetitionResult
from .models import Disability


@dataclass(frozen=True)
class SessionLog:
    user_id: str
    disability: Disability
    iteration: int
    session_index: int
    activity_kind: str
    results: tuple[RepetitionResult, ...]
    incomplete: bool = False

    def __post_init__(self) -> None:
        if self.iteration not in (1, 2):
            raise ValueError("iteration must be 1 or 2")
        if not 1 <= self.session_index <= 3:
            raise ValueError("session index must be within 1..3")


class EmptyInputError(Exception):
    pass


class MissingDataError(Exception):
    def __init__(self, user_id: str, session_index: int, repetition: int | None = None):
        where = f"user {user_id}, session {session_index}"
        if repetition is not None:
            where += f", repetition {repetition}"
        super().__init__(f"missing data: {where}")
        self.user_id = user_id
        self.session_index = session_index
        self.repetition = repetition


@dataclass(frozen=True)
class DescriptiveStats:
    mean: float
    sample_sd: float
    cv: float


def descriptive_stats(values: list[float] | tuple[float, ...]) -> DescriptiveStats:
    """Mean, sample (n-1) standard deviation and coefficient of variation."""
    if not values:
        raise EmptyInputError("no values")
    n = len(values)
    mean = sum(values) / n
    if n == 1:
        return DescriptiveStats(mean, 0.0, 0.0)
    variance = sum((v - mean) ** 2 for v in values) / (n - 1)
    sd = math.sqrt(variance)
    cv = sd / mean if mean > 0 else 0.0
    return DescriptiveStats(mean, sd, cv)


def _durations(log: SessionLog) -> list[float]:
    return [r.duration_seconds for r in log.results]


def user_iteration_stats(logs: list[SessionLog], user_id: str, iteration: int) -> DescriptiveStats:
    """Descriptives over every repetition time a user produced in one iteration."""
    values: list[float] = []
    for log in sorted(
            (l for l in logs if l.user_id == user_id and l.iteration == iteration),
            key=lambda l: l.session_index):
        values.extend(_durations(log))
    if not values:
        raise EmptyInputError(f"no sessions for user {user_id}, iteration {iteration}")
    return descriptive_stats(values)


def _sessions_by_user(
    logs: list[SessionLog], iteration: int, repetitions: int
) -> dict[str, dict[int, SessionLog]]:
    by_user: dict[str, dict[int, SessionLog]] = {}
    for log in logs:
        if log.iteration == iteration:
            by_user.setdefault(log.user_id, {})[log.session_index] = log
    for user_id, sessions in by_user.items():
        for session_index in (1, 2, 3):
            log = sessions.get(session_index)
            if log is None:
                raise MissingDataError(user_id, session_index)
            if len(log.results) < repetitions:
                raise MissingDataError(user_id, session_index, len(log.results) + 1)
    return by_user


def group_repetition_means(logs: list[SessionLog], iteration: int) -> list[list[float]]:
    """Mean time per (session, repetition) across all users of one iteration.

    Returns three series of ten means, indexed [session-1][repetition-1].
    """
    repetitions = 10
    by_user = _sessions_by_user(logs, iteration, repetitions)
    users = sorted(by_user)
    series: list[list[float]] = []
    for session_index in (1, 2, 3):
        row = []
        for rep in range(repetitions):
            row.append(sum(
                by_user[u][session_index].results[rep].duration_seconds for u in users
            ) / len(users))
        series.append(row)
    return series


def group_error_means(logs: list[SessionLog], iteration: int) -> tuple[float, float, float]:
    """Mean per-session error totals across all users of one iteration, unrounded."""
    by_user = _sessions_by_user(logs, iteration, repetitions=1)
    users = sorted(by_user)
    means = []
    for session_index in (1, 2, 3):
        total = sum(
            sum(r.errors for r in by_user[u][session_index].results) for u in users)
        means.append(total / len(users))
    return tuple(means)


@dataclass(frozen=True)
class UserStatsRow:
    disability: Disability
    user_id: str
    iteration: int
    stats: DescriptiveStats


def per_user_stats_table(logs: list[SessionLog]) -> list[UserStatsRow]:
    """One row per (user, iteration), grouped by disability, for reporting."""
    seen: dict[tuple[str, int], Disability] = {}
    for log in logs:
        seen[(log.user_id, log.iteration)] = log.disability
    rows = [
        UserStatsRow(disability, user_id, iteration,
                     user_iteration_stats(logs, user_id, iteration))
        for (user_id, iteration), disability in seen.items()
    ]
    rows.sort(key=lambda r: (r.disability.value, r.user_id, r.iteration))
    return rows
