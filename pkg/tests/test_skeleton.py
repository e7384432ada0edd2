import json
import random

import pytest

from adapta.models import Posture, Side
from adapta.skeleton import (
    IncompleteFirstFrameError,
    JointId,
    JointPosition,
    MalformedLineError,
    MissingJointError,
    NonMonotonicTimestampError,
    SkeletonFrame,
    Trace,
    UPPER_BODY_JOINTS,
    filter_joints_for_posture,
    load_trace,
    map_hand_to_cursor,
    save_trace,
)
from conftest import BASE_JOINTS, make_frame


class TestPostureFilter:
    def test_standing_is_identity(self):
        frame = make_frame(0)
        assert filter_joints_for_posture(frame, Posture.STANDING) is frame

    def test_seated_keeps_upper_body(self):
        frame = make_frame(0)
        filtered = filter_joints_for_posture(frame, Posture.SEATED)
        assert set(filtered.joints) == UPPER_BODY_JOINTS
        assert len(filtered.joints) == 17
        assert len(frame.joints) - len(filtered.joints) == 8

    def test_seated_is_idempotent(self):
        frame = make_frame(0)
        once = filter_joints_for_posture(frame, Posture.SEATED)
        twice = filter_joints_for_posture(once, Posture.SEATED)
        assert once.joints == twice.joints


class TestCursorMapping:
    def hand_at(self, dx, dy, arm=Side.RIGHT):
        shoulder = BASE_JOINTS[JointId.SHOULDER_RIGHT if arm is Side.RIGHT else JointId.SHOULDER_LEFT]
        hand_joint = JointId.HAND_RIGHT if arm is Side.RIGHT else JointId.HAND_LEFT
        return make_frame(0, {hand_joint: (shoulder[0] + dx, shoulder[1] + dy, shoulder[2])})

    def test_hand_at_shoulder_centers_cursor(self):
        cursor = map_hand_to_cursor(self.hand_at(0, 0), Side.RIGHT)
        assert (cursor.u, cursor.v) == (0.5, 0.5)

    def test_quarter_metre_right_reaches_edge(self):
        cursor = map_hand_to_cursor(self.hand_at(0.25, 0), Side.RIGHT)
        assert (cursor.u, cursor.v) == (1.0, 0.5)

    def test_extreme_offsets_clamp(self):
        cursor = map_hand_to_cursor(self.hand_at(-1.0, 0.6), Side.RIGHT)
        assert (cursor.u, cursor.v) == (0.0, 0.0)

    def test_translation_invariance(self):
        # equal up to float rounding of the shifted coordinates
        rng = random.Random(11)
        for _ in range(200):
            dx, dy = rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4)
            ox, oy, oz = (rng.uniform(-2, 2) for _ in range(3))
            base = self.hand_at(dx, dy)
            shifted = SkeletonFrame(0, {
                j: JointPosition(p.x + ox, p.y + oy, max(p.z + oz, 0.1))
                for j, p in base.joints.items()
            })
            a = map_hand_to_cursor(base, Side.RIGHT)
            b = map_hand_to_cursor(shifted, Side.RIGHT)
            assert a.u == pytest.approx(b.u, abs=1e-9)
            assert a.v == pytest.approx(b.v, abs=1e-9)

    def test_output_always_in_unit_square(self):
        rng = random.Random(12)
        for _ in range(300):
            frame = self.hand_at(rng.uniform(-5, 5), rng.uniform(-5, 5),
                                 rng.choice([Side.LEFT, Side.RIGHT]))
            for arm in (Side.LEFT, Side.RIGHT):
                cursor = map_hand_to_cursor(frame, arm)
                assert 0.0 <= cursor.u <= 1.0 and 0.0 <= cursor.v <= 1.0

    def test_missing_hand_raises(self):
        frame = make_frame(0, drop={JointId.HAND_RIGHT})
        with pytest.raises(MissingJointError) as exc:
            map_hand_to_cursor(frame, Side.RIGHT)
        assert exc.value.joint is JointId.HAND_RIGHT


def frame_line(t, joints=None, drop=None):
    frame = make_frame(t, joints, drop)
    return json.dumps({
        "t": t,
        "joints": {j.value: [p.x, p.y, p.z] for j, p in frame.joints.items()},
    })


class TestLoadTrace:
    def test_two_frames(self):
        trace = load_trace([frame_line(0), frame_line(33)])
        assert len(trace) == 2
        assert [f.timestamp_ms for f in trace] == [0, 33]

    def test_repeated_timestamp_rejected(self):
        with pytest.raises(NonMonotonicTimestampError) as exc:
            load_trace([frame_line(33), frame_line(33)])
        assert exc.value.line_no == 2

    def test_first_frame_must_be_complete(self):
        with pytest.raises(IncompleteFirstFrameError) as exc:
            load_trace([frame_line(0, drop={JointId.HAND_LEFT}), frame_line(33)])
        assert "HandLeft" in str(exc.value)

    def test_forward_fill(self):
        lines = [frame_line(0), frame_line(40, drop={JointId.HAND_RIGHT})]
        trace = load_trace(lines)
        assert trace.frames[1].joints[JointId.HAND_RIGHT] == trace.frames[0].joints[JointId.HAND_RIGHT]
        assert len(trace.frames[1].joints) == 25

    def test_malformed_json_names_line(self):
        with pytest.raises(MalformedLineError) as exc:
            load_trace([frame_line(0), "{not json"])
        assert exc.value.line_no == 2

    @pytest.mark.parametrize("bad", [
        '{"t": -1, "joints": {}}',
        '{"t": "x", "joints": {}}',
        '{"t": 5, "joints": {"NoSuchJoint": [0, 1, 1]}}',
        '{"t": 5, "joints": {"Head": [0, 1]}}',
        '{"t": 5, "joints": {"Head": [0, 1, 0]}}',
        '{"t": 5, "joints": {"Head": [0, 1, -2]}}',
        '[1, 2, 3]',
    ])
    def test_bad_records_rejected(self, bad):
        with pytest.raises(MalformedLineError):
            load_trace([bad])

    def test_blank_lines_skipped(self):
        trace = load_trace([frame_line(0), "", frame_line(50)])
        assert len(trace) == 2

    def test_round_trip(self, tmp_path):
        frames = [make_frame(t, {JointId.HAND_RIGHT: (0.1 * t / 33, 1.0123456789, 2.0)})
                  for t in (0, 33, 66)]
        trace = Trace(tuple(frames))
        path = tmp_path / "move.trace"
        save_trace(trace, path)
        loaded = load_trace(path)
        assert loaded == trace
        save_trace(loaded, tmp_path / "again.trace")
        assert (tmp_path / "again.trace").read_bytes() == path.read_bytes()


class TestJointPosition:
    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            JointPosition(float("nan"), 0, 1)
