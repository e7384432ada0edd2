import random

import pytest

from adapta.studydata import TUTOR_ANSWER_ROWS, tutor_responses
from adapta.ueq import (
    BenchmarkCategory,
    ITEM_ADJECTIVES,
    LEFT_POSITIVE_ITEMS,
    OutOfRangeError,
    SCALE_ITEMS,
    TooFewResponsesError,
    UeqResponse,
    UeqScale,
    aggregate_scales,
    classify_benchmark,
    five_number_summary,
    parse_ueq_table,
    participant_scale_scores,
    scale_five_number_summaries,
    transform_response,
    untransform_item,
)


def flat_response(value=4):
    return UeqResponse((value,) * 26)


def random_response(rng):
    return UeqResponse(tuple(rng.randint(1, 7) for _ in range(26)))


class TestTransform:
    def test_right_positive_item(self):
        resp = flat_response()
        resp = UeqResponse(resp.items[:0] + (6,) + resp.items[1:])
        assert transform_response(resp)[0] == 2  # item 1: enjoyable side

    def test_left_positive_item(self):
        items = list(flat_response().items)
        items[11] = 1  # item 12: good/bad
        assert transform_response(UeqResponse(tuple(items)))[11] == 3

    def test_midpoint_maps_to_zero(self):
        assert transform_response(flat_response(4)) == (0,) * 26

    def test_inverse_recovers_raw_values(self):
        rng = random.Random(5)
        for _ in range(100):
            resp = random_response(rng)
            transformed = transform_response(resp)
            recovered = tuple(
                untransform_item(i + 1, t) for i, t in enumerate(transformed))
            assert recovered == resp.items

    def test_reversal_negates_scores(self):
        rng = random.Random(6)
        for _ in range(50):
            resp = random_response(rng)
            reversed_resp = UeqResponse(tuple(8 - v for v in resp.items))
            direct = participant_scale_scores(resp)
            mirrored = participant_scale_scores(reversed_resp)
            for scale in UeqScale:
                assert mirrored[scale] == pytest.approx(-direct[scale])

    def test_out_of_range_rejected(self):
        with pytest.raises(OutOfRangeError):
            UeqResponse((0,) + (4,) * 25)
        with pytest.raises(OutOfRangeError):
            UeqResponse((4,) * 25 + (8,))

    def test_wrong_length_rejected(self):
        with pytest.raises(ValueError):
            UeqResponse((4,) * 25)


class TestScaleScores:
    def test_first_tutor_attractiveness(self):
        scores = participant_scale_scores(tutor_responses()[0])
        assert scores[UeqScale.ATTRACTIVENESS] == pytest.approx(13 / 6)

    def test_third_tutor_perspicuity(self):
        scores = participant_scale_scores(tutor_responses()[2])
        assert scores[UeqScale.PERSPICUITY] == pytest.approx(2.5)

    def test_all_midpoint_scores_zero(self):
        scores = participant_scale_scores(flat_response())
        assert all(v == 0 for v in scores.values())

    def test_scale_items_partition_the_questionnaire(self):
        seen = sorted(i for items in SCALE_ITEMS.values() for i in items)
        assert seen == list(range(1, 27))
        assert len(ITEM_ADJECTIVES) == 26
        assert LEFT_POSITIVE_ITEMS <= set(range(1, 27))


EXPECTED_MEANS = {
    UeqScale.ATTRACTIVENESS: 2.200,
    UeqScale.PERSPICUITY: 1.600,
    UeqScale.EFFICIENCY: 1.700,
    UeqScale.DEPENDABILITY: 2.150,
    UeqScale.STIMULATION: 1.400,
    UeqScale.NOVELTY: 1.900,
}

EXPECTED_CATEGORIES = {
    UeqScale.ATTRACTIVENESS: BenchmarkCategory.EXCELLENT,
    UeqScale.PERSPICUITY: BenchmarkCategory.GOOD,
    UeqScale.EFFICIENCY: BenchmarkCategory.GOOD,
    UeqScale.DEPENDABILITY: BenchmarkCategory.EXCELLENT,
    UeqScale.STIMULATION: BenchmarkCategory.GOOD,
    UeqScale.NOVELTY: BenchmarkCategory.EXCELLENT,
}

# (median, upper quartile, lower quartile, upper whisker, lower whisker)
EXPECTED_BOXES = {
    UeqScale.ATTRACTIVENESS: (2.333, 2.333, 2.166, 2.5, 1.666),
    UeqScale.PERSPICUITY: (1.5, 2.5, 0.75, 2.75, 0.5),
    UeqScale.EFFICIENCY: (1.75, 2.0, 1.5, 2.0, 1.25),
    UeqScale.DEPENDABILITY: (2.25, 2.25, 2.25, 2.5, 1.5),
    UeqScale.STIMULATION: (1.5, 1.5, 1.25, 2.0, 0.75),
    UeqScale.NOVELTY: (2.0, 2.5, 1.25, 2.75, 1.0),
}


class TestAggregation:
    def test_tutor_scale_means(self):
        report = aggregate_scales(tutor_responses())
        for scale, expected in EXPECTED_MEANS.items():
            assert report.scales[scale].mean == pytest.approx(expected, abs=0.005)

    def test_attractiveness_variance(self):
        report = aggregate_scales(tutor_responses())
        assert report.scales[UeqScale.ATTRACTIVENESS].sample_variance == pytest.approx(
            0.10, abs=0.005)

    def test_benchmark_categories(self):
        report = aggregate_scales(tutor_responses())
        for scale, expected in EXPECTED_CATEGORIES.items():
            assert report.scales[scale].benchmark is expected

    def test_identical_responses_have_zero_variance(self):
        report = aggregate_scales([flat_response(5), flat_response(5)])
        for stats in report.scales.values():
            assert stats.sample_variance == 0

    def test_single_response_rejected(self):
        with pytest.raises(TooFewResponsesError):
            aggregate_scales([flat_response()])


class TestBenchmark:
    def test_published_examples(self):
        assert classify_benchmark(2.200, UeqScale.ATTRACTIVENESS) is BenchmarkCategory.EXCELLENT
        assert classify_benchmark(1.400, UeqScale.STIMULATION) is BenchmarkCategory.GOOD
        assert classify_benchmark(1.40, UeqScale.NOVELTY) is BenchmarkCategory.EXCELLENT

    def test_lower_borders_inclusive(self):
        assert classify_benchmark(1.75, UeqScale.ATTRACTIVENESS) is BenchmarkCategory.EXCELLENT
        assert classify_benchmark(1.52, UeqScale.ATTRACTIVENESS) is BenchmarkCategory.GOOD
        assert classify_benchmark(0.7, UeqScale.ATTRACTIVENESS) is BenchmarkCategory.BELOW_AVERAGE
        assert classify_benchmark(0.699, UeqScale.ATTRACTIVENESS) is BenchmarkCategory.BAD

    def test_whole_range_is_classified(self):
        for scale in UeqScale:
            for mean in (-3.0, -0.2, 0.31, 0.9, 1.2, 1.5, 2.0, 3.0):
                assert classify_benchmark(mean, scale) in BenchmarkCategory


class TestBoxStatistics:
    def test_five_number_summaries_match_published_chart(self):
        summaries = scale_five_number_summaries(tutor_responses())
        for scale, (median, uq, lq, uw, lw) in EXPECTED_BOXES.items():
            lo, q1, med, q3, hi = summaries[scale]
            assert med == pytest.approx(median, abs=0.005)
            assert q3 == pytest.approx(uq, abs=0.005)
            assert q1 == pytest.approx(lq, abs=0.005)
            assert hi == pytest.approx(uw, abs=0.005)
            assert lo == pytest.approx(lw, abs=0.005)

    def test_even_count_uses_inclusive_halves(self):
        assert five_number_summary([1, 2, 3, 4]) == (1, 1.5, 2.5, 3.5, 4)


def columns_csv():
    lines = ["item," + ",".join(f"P{i}" for i in range(1, 6))]
    for item, row in enumerate(TUTOR_ANSWER_ROWS, start=1):
        lines.append(f"{item}," + ",".join(str(v) for v in row))
    return "\n".join(lines)


def rows_csv(delimiter=","):
    header = "participant" + delimiter + delimiter.join(f"item{i}" for i in range(1, 27))
    lines = [header]
    for p in range(5):
        answers = [str(row[p]) for row in TUTOR_ANSWER_ROWS]
        lines.append(f"P{p + 1}" + delimiter + delimiter.join(answers))
    return "\n".join(lines)


class TestTableParsing:
    def test_participants_as_columns(self):
        responses = parse_ueq_table(columns_csv())
        assert responses == tutor_responses()

    def test_participants_as_rows(self):
        responses = parse_ueq_table(rows_csv())
        assert responses == tutor_responses()

    def test_semicolon_delimiter(self):
        responses = parse_ueq_table(rows_csv(";"))
        assert responses == tutor_responses()

    def test_missing_item_row_rejected(self):
        text = "\n".join(columns_csv().splitlines()[:-1])
        with pytest.raises(ValueError):
            parse_ueq_table(text)

    def test_non_integer_answer_rejected(self):
        text = columns_csv().replace("\n1,6", "\n1,x", 1)
        with pytest.raises(ValueError):
            parse_ueq_table(text)

    def test_empty_input_rejected(self):
        with pytest.raises(ValueError):
            parse_ueq_table("")
