"""Bundled evaluation dataset from the twelve-participant study.

Per-repetition completion times (seconds) for three participants per
disability group, two iterations of three sessions each, ten repetitions per
session; per-session error totals; and the five tutors' questionnaire answers.
Exposed both as raw tables and as ready-made session logs.
"""

from __future__ import annotations

from .activities import RepetitionResult
from .analytics import SessionLog
from .models import Disability
from .ueq import UeqResponse

PARTICIPANTS_PER_GROUP = 3
SESSIONS_PER_ITERATION = 3
REPETITIONS_PER_SESSION = 10


STUDY_TIMES: dict[Disability, dict[int, dict[int, tuple[tuple[int, ...], ...]]]] = {
    Disability.AUTISM: {
        1: {
            1: (
                (14, 9, 7, 8, 7, 11, 12, 10, 13, 9),
                (48, 18, 22, 18, 19, 13, 12, 13, 16, 12),
                (10, 14, 10, 10, 10, 10, 10, 10, 10, 10),
            ),
            2: (
                (12, 12, 12, 12, 12, 12, 25, 13, 11, 12),
                (13, 14, 14, 13, 13, 14, 13, 13, 13, 18),
                (7, 13, 7, 8, 7, 7, 7, 6, 7, 12),
            ),
        },
        2: {
            1: (
                (70, 85, 6, 16, 19, 43, 11, 21, 21, 56),
                (10, 10, 18, 13, 10, 13, 13, 13, 13, 12),
                (40, 27, 14, 25, 14, 33, 33, 22, 15, 18),
            ),
            2: (
                (10, 14, 12, 13, 14, 13, 19, 14, 16, 19),
                (14, 18, 20, 12, 48, 15, 12, 13, 13, 15),
                (13, 15, 16, 11, 11, 14, 14, 15, 11, 14),
            ),
        },
        3: {
            1: (
                (20, 20, 16, 20, 22, 22, 22, 18, 7, 28),
                (18, 17, 17, 19, 17, 26, 17, 20, 18, 18),
                (19, 13, 12, 42, 20, 13, 14, 14, 12, 13),
            ),
            2: (
                (22, 16, 15, 15, 15, 17, 13, 13, 15, 16),
                (9, 11, 12, 13, 12, 14, 13, 16, 17, 20),
                (12, 12, 13, 20, 13, 24, 15, 15, 16, 17),
            ),
        },
    },
    Disability.HEARING: {
        1: {
            1: (
                (47, 17, 14, 8, 19, 6, 19, 17, 15, 18),
                (27, 4, 12, 60, 12, 10, 10, 12, 12, 13),
                (12, 11, 12, 11, 11, 11, 13, 20, 14, 12),
            ),
            2: (
                (11, 20, 31, 22, 17, 16, 13, 15, 12, 39),
                (12, 12, 13, 12, 13, 15, 13, 16, 13, 12),
                (12, 20, 13, 10, 17, 19, 10, 10, 10, 10),
            ),
        },
        2: {
            1: (
                (17, 50, 10, 10, 14, 14, 15, 28, 27, 32),
                (14, 15, 15, 13, 14, 13, 16, 12, 20, 13),
                (40, 17, 13, 40, 17, 13, 13, 12, 14, 18),
            ),
            2: (
                (17, 41, 12, 19, 12, 14, 16, 12, 13, 13),
                (21, 27, 17, 13, 13, 18, 19, 12, 16, 18),
                (12, 15, 14, 11, 15, 16, 15, 14, 10, 15),
            ),
        },
        3: {
            1: (
                (27, 28, 17, 17, 16, 15, 18, 19, 20, 22),
                (15, 18, 18, 13, 20, 22, 14, 15, 15, 13),
                (17, 17, 33, 20, 14, 14, 13, 11, 12, 12),
            ),
            2: (
                (23, 19, 21, 18, 14, 15, 17, 25, 15, 14),
                (27, 26, 23, 24, 28, 26, 22, 24, 24, 23),
                (18, 15, 15, 16, 15, 14, 20, 13, 13, 17),
            ),
        },
    },
    Disability.PHYSICAL: {
        1: {
            1: (
                (12, 24, 15, 7, 10, 15, 7, 10, 18, 16),
                (7, 64, 12, 15, 7, 16, 14, 18, 18, 7),
                (7, 12, 8, 7, 7, 7, 23, 15, 14, 7),
            ),
            2: (
                (10, 7, 30, 10, 7, 10, 11, 11, 19, 13),
                (8, 7, 10, 13, 22, 15, 10, 24, 10, 11),
                (7, 7, 9, 7, 7, 15, 18, 9, 9, 7),
            ),
        },
        2: {
            1: (
                (14, 16, 65, 12, 32, 23, 18, 22, 39, 8),
                (69, 7, 30, 22, 6, 28, 54, 7, 8, 10),
                (7, 7, 7, 54, 8, 17, 12, 12, 13, 7),
            ),
            2: (
                (75, 12, 20, 7, 11, 12, 30, 15, 6, 10),
                (12, 8, 7, 6, 7, 9, 7, 9, 7, 7),
                (15, 9, 9, 17, 9, 7, 7, 50, 7, 39),
            ),
        },
        3: {
            1: (
                (20, 27, 18, 32, 25, 30, 61, 40, 24, 57),
                (8, 6, 7, 6, 11, 15, 19, 5, 10, 7),
                (7, 9, 10, 39, 9, 13, 14, 7, 10, 9),
            ),
            2: (
                (10, 8, 12, 10, 11, 8, 15, 9, 10, 8),
                (10, 9, 12, 22, 11, 23, 24, 24, 34, 11),
                (12, 27, 7, 8, 11, 9, 7, 9, 7, 7),
            ),
        },
    },
    Disability.VISUAL: {
        1: {
            1: (
                (6, 7, 14, 13, 14, 14, 14, 12, 9, 13),
                (10, 7, 7, 7, 7, 7, 9, 7, 7, 8),
                (7, 10, 6, 10, 10, 9, 10, 7, 9, 7),
            ),
            2: (
                (13, 10, 7, 10, 15, 7, 7, 8, 26, 14),
                (12, 7, 7, 12, 9, 7, 10, 8, 8, 7),
                (7, 10, 13, 18, 9, 7, 9, 7, 21, 10),
            ),
        },
        2: {
            1: (
                (25, 22, 27, 32, 24, 24, 18, 21, 23, 30),
                (21, 17, 18, 24, 16, 14, 12, 23, 22, 25),
                (19, 13, 14, 15, 16, 16, 14, 12, 14, 14),
            ),
            2: (
                (9, 12, 10, 7, 9, 34, 9, 26, 12, 8),
                (17, 9, 12, 7, 9, 8, 8, 10, 7, 8),
                (7, 7, 7, 7, 7, 7, 9, 19, 7, 16),
            ),
        },
        3: {
            1: (
                (28, 33, 32, 32, 32, 25, 27, 28, 29, 30),
                (21, 22, 24, 33, 23, 27, 26, 20, 21, 22),
                (25, 23, 21, 23, 24, 23, 20, 19, 20, 20),
            ),
            2: (
                (18, 20, 22, 15, 23, 15, 17, 17, 21, 20),
                (11, 16, 14, 23, 13, 17, 20, 14, 11, 11),
                (14, 15, 11, 13, 15, 15, 10, 9, 12, 10),
            ),
        },
    },
}

# Per-session error totals (sessions 1-3) per iteration.
STUDY_ERRORS: dict[Disability, dict[int, dict[int, tuple[int, int, int]]]] = {
    Disability.AUTISM: {
        1: {1: (0, 2, 0), 2: (2, 0, 0)},
        2: {1: (2, 1, 0), 2: (1, 1, 0)},
        3: {1: (1, 0, 2), 2: (1, 0, 0)},
    },
    Disability.HEARING: {
        1: {1: (2, 3, 1), 2: (2, 2, 1)},
        2: {1: (6, 5, 1), 2: (4, 7, 5)},
        3: {1: (4, 3, 3), 2: (3, 3, 2)},
    },
    Disability.PHYSICAL: {
        1: {1: (5, 4, 4), 2: (5, 2, 5)},
        2: {1: (4, 7, 4), 2: (6, 2, 4)},
        3: {1: (3, 6, 6), 2: (8, 3, 4)},
    },
    Disability.VISUAL: {
        1: {1: (7, 3, 2), 2: (2, 2, 1)},
        2: {1: (5, 5, 3), 2: (3, 4, 4)},
        3: {1: (8, 7, 4), 2: (5, 4, 2)},
    },
}

# Raw answers, one row per item (1-26), one column per tutor (1-5).
TUTOR_ANSWER_ROWS: tuple[tuple[int, ...], ...] = (
    (6, 7, 6, 5, 6),
    (5, 5, 7, 5, 6),
    (3, 5, 3, 3, 1),
    (5, 3, 1, 2, 1),
    (2, 4, 3, 2, 2),
    (4, 6, 5, 5, 5),
    (6, 5, 6, 5, 6),
    (7, 6, 6, 7, 7),
    (3, 5, 4, 2, 3),
    (1, 2, 1, 3, 1),
    (6, 7, 6, 5, 6),
    (1, 1, 1, 2, 1),
    (5, 6, 6, 6, 7),
    (6, 6, 7, 5, 6),
    (7, 6, 6, 5, 7),
    (4, 5, 6, 6, 6),
    (2, 2, 3, 1, 1),
    (3, 4, 2, 2, 1),
    (2, 2, 3, 2, 2),
    (5, 6, 5, 5, 6),
    (3, 2, 2, 6, 1),
    (7, 6, 6, 6, 6),
    (2, 1, 2, 1, 1),
    (1, 1, 1, 2, 1),
    (1, 2, 2, 2, 2),
    (7, 6, 6, 5, 6),
)


def tutor_responses() -> list[UeqResponse]:
    """The five tutors' questionnaires as response objects."""
    return [
        UeqResponse(tuple(row[p] for row in TUTOR_ANSWER_ROWS))
        for p in range(len(TUTOR_ANSWER_ROWS[0]))
    ]


def study_user_id(disability: Disability, participant: int) -> str:
    return f"{disability.value.lower()}-{participant}"


def study_session_logs(iteration: int | None = None) -> list[SessionLog]:
    """The study data as session logs.

    The source charts publish per-session error totals, not per-repetition
    counts, so each session's total is recorded on its first repetition;
    every statistic reproduced from this dataset depends only on the totals.
    """
    logs: list[SessionLog] = []
    iterations = (1, 2) if iteration is None else (iteration,)
    for disability, participants in STUDY_TIMES.items():
        for participant, by_iteration in participants.items():
            for it in iterations:
                for session_index, durations in enumerate(by_iteration[it], start=1):
                    errors = STUDY_ERRORS[disability][participant][it][session_index - 1]
                    results = tuple(
                        RepetitionResult(rep, duration, errors if rep == 1 else 0)
                        for rep, duration in enumerate(durations, start=1)
                    )
                    logs.append(SessionLog(
                        user_id=study_user_id(disability, participant),
                        disability=disability,
                        iteration=it,
                        session_index=session_index,
                        activity_kind="concept:animals",
                        results=results,
                    ))
    return logs
