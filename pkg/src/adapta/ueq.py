"""User Experience Questionnaire scoring.

26 semantic-differential items answered 1..7, recentered to -3..+3 with the
positive adjective's side deciding the sign, averaged into six scales, and
classified against the published per-scale benchmark borders.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from enum import Enum

ITEM_COUNT = 26


class UeqScale(str, Enum):
    ATTRACTIVENESS = "Attractiveness"
    PERSPICUITY = "Perspicuity"
    EFFICIENCY = "Efficiency"
    DEPENDABILITY = "Dependability"
    STIMULATION = "Stimulation"
    NOVELTY = "Novelty"


SCALE_ITEMS: dict[UeqScale, tuple[int, ...]] = {
    UeqScale.ATTRACTIVENESS: (1, 12, 14, 16, 24, 25),
    UeqScale.PERSPICUITY: (2, 4, 13, 21),
    UeqScale.EFFICIENCY: (9, 20, 22, 23),
    UeqScale.DEPENDABILITY: (8, 11, 17, 19),
    UeqScale.STIMULATION: (5, 6, 7, 18),
    UeqScale.NOVELTY: (3, 10, 15, 26),
}

# (left adjective, right adjective) per item, in questionnaire order.
ITEM_ADJECTIVES: tuple[tuple[str, str], ...] = (
    ("annoying", "enjoyable"),
    ("not understandable", "understandable"),
    ("creative", "dull"),
    ("easy to learn", "difficult to learn"),
    ("valuable", "inferior"),
    ("boring", "exciting"),
    ("not interesting", "interesting"),
    ("unpredictable", "predictable"),
    ("fast", "slow"),
    ("inventive", "conventional"),
    ("obstructive", "supportive"),
    ("good", "bad"),
    ("complicated", "easy"),
    ("unlikable", "pleasing"),
    ("usual", "leading edge"),
    ("unpleasant", "pleasant"),
    ("secure", "not secure"),
    ("motivating", "demotivating"),
    ("meets expectations", "does not meet expectations"),
    ("inefficient", "efficient"),
    ("clear", "confusing"),
    ("impractical", "practical"),
    ("organized", "cluttered"),
    ("attractive", "unattractive"),
    ("friendly", "unfriendly"),
    ("conservative", "innovative"),
)

# Items whose positive adjective sits on the LEFT of the questionnaire row;
# answering 1 there means +3.
LEFT_POSITIVE_ITEMS = frozenset({3, 4, 5, 9, 10, 12, 17, 18, 19, 21, 23, 24, 25})


class OutOfRangeError(Exception):
    def __init__(self, item: int):
        super().__init__(f"item {item} answer outside 1..7")
        self.item = item


class TooFewResponsesError(Exception):
    pass


@dataclass(frozen=True)
class UeqResponse:
    """One participant's 26 raw answers, each in 1..7."""

    items: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.items) != ITEM_COUNT:
            raise ValueError(f"expected {ITEM_COUNT} items, got {len(self.items)}")
        for index, value in enumerate(self.items, start=1):
            if not isinstance(value, int) or not 1 <= value <= 7:
                raise OutOfRangeError(index)


def transform_response(response: UeqResponse) -> tuple[int, ...]:
    """Recenter raw answers to -3..+3, positive adjective positive."""
    out = []
    for item, value in enumerate(response.items, start=1):
        out.append(4 - value if item in LEFT_POSITIVE_ITEMS else value - 4)
    return tuple(out)


def untransform_item(item: int, score: int) -> int:
    """Inverse of transform_response for a single item."""
    return 4 - score if item in LEFT_POSITIVE_ITEMS else score + 4


def participant_scale_scores(response: UeqResponse) -> dict[UeqScale, float]:
    transformed = transform_response(response)
    return {
        scale: sum(transformed[i - 1] for i in items) / len(items)
        for scale, items in SCALE_ITEMS.items()
    }


class BenchmarkCategory(str, Enum):
    EXCELLENT = "Excellent"
    GOOD = "Good"
    ABOVE_AVERAGE = "AboveAverage"
    BELOW_AVERAGE = "BelowAverage"
    BAD = "Bad"


# Lower borders per scale, inclusive; below the last one is Bad.
BENCHMARK_BORDERS: dict[UeqScale, tuple[tuple[BenchmarkCategory, float], ...]] = {
    UeqScale.ATTRACTIVENESS: (
        (BenchmarkCategory.EXCELLENT, 1.75), (BenchmarkCategory.GOOD, 1.52),
        (BenchmarkCategory.ABOVE_AVERAGE, 1.17), (BenchmarkCategory.BELOW_AVERAGE, 0.7),
    ),
    UeqScale.PERSPICUITY: (
        (BenchmarkCategory.EXCELLENT, 1.78), (BenchmarkCategory.GOOD, 1.47),
        (BenchmarkCategory.ABOVE_AVERAGE, 0.98), (BenchmarkCategory.BELOW_AVERAGE, 0.54),
    ),
    UeqScale.EFFICIENCY: (
        (BenchmarkCategory.EXCELLENT, 1.9), (BenchmarkCategory.GOOD, 1.56),
        (BenchmarkCategory.ABOVE_AVERAGE, 1.08), (BenchmarkCategory.BELOW_AVERAGE, 0.64),
    ),
    UeqScale.DEPENDABILITY: (
        (BenchmarkCategory.EXCELLENT, 1.65), (BenchmarkCategory.GOOD, 1.48),
        (BenchmarkCategory.ABOVE_AVERAGE, 1.14), (BenchmarkCategory.BELOW_AVERAGE, 0.78),
    ),
    UeqScale.STIMULATION: (
        (BenchmarkCategory.EXCELLENT, 1.55), (BenchmarkCategory.GOOD, 1.31),
        (BenchmarkCategory.ABOVE_AVERAGE, 0.99), (BenchmarkCategory.BELOW_AVERAGE, 0.5),
    ),
    UeqScale.NOVELTY: (
        (BenchmarkCategory.EXCELLENT, 1.4), (BenchmarkCategory.GOOD, 1.05),
        (BenchmarkCategory.ABOVE_AVERAGE, 0.71), (BenchmarkCategory.BELOW_AVERAGE, 0.3),
    ),
}


def classify_benchmark(scale_mean: float, scale: UeqScale) -> BenchmarkCategory:
    for category, lower in BENCHMARK_BORDERS[scale]:
        if scale_mean >= lower:
            return category
    return BenchmarkCategory.BAD


@dataclass(frozen=True)
class ScaleStats:
    mean: float
    sample_variance: float
    benchmark: BenchmarkCategory


@dataclass(frozen=True)
class ScaleReport:
    scales: dict[UeqScale, ScaleStats]
    participants: int


def aggregate_scales(responses: list[UeqResponse]) -> ScaleReport:
    """Mean and n-1 variance of per-participant scale means, with benchmark."""
    if len(responses) < 2:
        raise TooFewResponsesError("need at least two responses for a variance")
    per_participant = [participant_scale_scores(r) for r in responses]
    n = len(responses)
    scales: dict[UeqScale, ScaleStats] = {}
    for scale in UeqScale:
        values = [scores[scale] for scores in per_participant]
        mean = sum(values) / n
        variance = sum((v - mean) ** 2 for v in values) / (n - 1)
        scales[scale] = ScaleStats(mean, variance, classify_benchmark(mean, scale))
    return ScaleReport(scales, n)


def five_number_summary(values: list[float]) -> tuple[float, float, float, float, float]:
    """(min, lower quartile, median, upper quartile, max), inclusive-median quartiles."""
    if not values:
        raise ValueError("no values")
    s = sorted(values)

    def median(xs: list[float]) -> float:
        m = len(xs) // 2
        return xs[m] if len(xs) % 2 else (xs[m - 1] + xs[m]) / 2

    half = (len(s) + 1) // 2
    return (s[0], median(s[:half]), median(s), median(s[-half:]), s[-1])


def scale_five_number_summaries(
    responses: list[UeqResponse],
) -> dict[UeqScale, tuple[float, float, float, float, float]]:
    per_participant = [participant_scale_scores(r) for r in responses]
    return {
        scale: five_number_summary([scores[scale] for scores in per_participant])
        for scale in UeqScale
    }


def parse_ueq_table(text: str) -> list[UeqResponse]:
    """Read a delimiter-separated answer table, one participant per column or row.

    Column layout starts its header with an "item" cell; row layout has one
    header cell per item. The delimiter (comma, semicolon or tab) is sniffed.
    """
    sample = text[:2048]
    try:
        dialect = csv.Sniffer().sniff(sample, delimiters=",;\t")
    except csv.Error:
        dialect = csv.excel
    rows = [row for row in csv.reader(io.StringIO(text), dialect) if any(cell.strip() for cell in row)]
    if not rows:
        raise ValueError("empty table")
    header = [cell.strip().lower() for cell in rows[0]]

    def to_int(cell: str, where: str) -> int:
        try:
            return int(cell.strip())
        except ValueError:
            raise ValueError(f"non-integer answer at {where}: {cell!r}") from None

    if header and header[0] in ("item", "items", "#"):
        # participants as columns
        participants = len(rows[0]) - 1
        if participants < 1:
            raise ValueError("no participant columns")
        values = [[0] * ITEM_COUNT for _ in range(participants)]
        if len(rows) - 1 != ITEM_COUNT:
            raise ValueError(f"expected {ITEM_COUNT} item rows, got {len(rows) - 1}")
        for row in rows[1:]:
            item = to_int(row[0], "item column")
            if not 1 <= item <= ITEM_COUNT:
                raise ValueError(f"item index {item} outside 1..{ITEM_COUNT}")
            if len(row) - 1 != participants:
                raise ValueError(f"item {item} has {len(row) - 1} answers, expected {participants}")
            for p, cell in enumerate(row[1:]):
                values[p][item - 1] = to_int(cell, f"item {item}")
        return [UeqResponse(tuple(v)) for v in values]

    # participants as rows: header names the items, first column names the participant
    item_columns = [i for i, cell in enumerate(header) if cell.lstrip("item").strip().isdigit()]
    if len(item_columns) != ITEM_COUNT:
        raise ValueError(
            f"cannot detect layout: expected an 'item' first column or {ITEM_COUNT} item columns")
    responses = []
    for row in rows[1:]:
        responses.append(UeqResponse(tuple(
            to_int(row[i], f"column {i + 1}") for i in item_columns)))
    if not responses:
        raise ValueError("no participant rows")
    return responses
