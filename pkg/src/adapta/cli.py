"""Command-line entry point tying profiles, replay, analytics and scoring together."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .activities import ActivitySpec
from .analytics import (
    SessionLog,
    group_error_means,
    group_repetition_means,
    per_user_stats_table,
)
from .gestures import describe_gestures
from .models import (
    ArmMobility,
    DeviceInteractionModel,
    Disability,
    LateralityProblem,
    Posture,
    Sex,
    Side,
    UserProfile,
    validate_depth_distance,
    validate_profile,
)
from .replay import run_replay
from .rules import rule_table_text
from .storage import DataStore, session_log_to_record
from . import studydata, ueq

DATA_ENV = "ADAPTA_DATA"


class CliError(Exception):
    pass


def _store(args) -> DataStore:
    data = args.data or os.environ.get(DATA_ENV)
    if not data:
        raise CliError(f"no data directory: pass --data or set {DATA_ENV}")
    store = DataStore(data)
    store.initialize()
    return store


def _add_data_flag(parser: argparse.ArgumentParser, required: bool = False) -> None:
    parser.add_argument(
        "--data", default=None,
        help=f"store directory (default: ${DATA_ENV})")


def _cmd_rules(args) -> int:
    print(rule_table_text())
    return 0


def _cmd_gestures(args) -> int:
    print(describe_gestures())
    return 0


def _cmd_profiles_add(args) -> int:
    store = _store(args)
    if args.arms == "both":
        mobility = ArmMobility.both(Side(args.dominant))
    elif args.arms == "right":
        mobility = ArmMobility.right_only()
    else:
        mobility = ArmMobility.left_only()
    profile = UserProfile(
        id=args.id,
        full_name=args.name,
        age=args.age,
        sex=Sex(args.sex),
        laterality=LateralityProblem(args.laterality),
        disability=Disability(args.disability),
    )
    check = validate_profile(profile)
    if not check.ok:
        raise CliError(f"invalid profile: {', '.join(check.violations)}")
    device = DeviceInteractionModel(
        posture=Posture(args.posture),
        rgb_camera_active=args.rgb,
        depth_distance_m=args.depth,
        arm_mobility=mobility,
    )
    store.add_profile(profile, device)
    depth = validate_depth_distance(device)
    if not depth.within_recommended:
        print(f"note: depth distance {depth.measured_m} m is outside the "
              f"recommended sensor range", file=sys.stderr)
    print(f"added profile {profile.id}")
    return 0


def _cmd_profiles_list(args) -> int:
    store = _store(args)
    pairs = store.load_profiles()
    if not pairs:
        print("no profiles")
        return 0
    for profile, device in pairs:
        arm = device.arm_mobility
        arm_text = arm.use.value + (f"({arm.dominant.value})" if arm.dominant else "")
        print(f"{profile.id:12s} {profile.full_name:24s} age {profile.age:3d} "
              f"{profile.disability.value:9s} laterality {profile.laterality.value:20s} "
              f"{device.posture.value:8s} {arm_text}")
    return 0


def _cmd_replay(args) -> int:
    store = _store(args)
    try:
        spec = ActivitySpec.parse(args.activity, repetitions=args.repetitions)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    log = run_replay(
        store, args.profile, spec, args.trace,
        iteration=args.iteration, session_index=args.session)
    store.append_session(log)
    if args.json:
        print(json.dumps(session_log_to_record(log)))
    else:
        state = "incomplete" if log.incomplete else "complete"
        print(f"replayed {log.activity_kind} for {log.user_id}: "
              f"{len(log.results)} repetitions, {state}")
        for r in log.results:
            print(f"  repetition {r.repetition_index:2d}: {r.duration_seconds:3d} s, "
                  f"{r.errors} errors")
    return 0


def _stats_logs(args) -> list[SessionLog]:
    if args.bundled:
        return studydata.study_session_logs()
    store = _store(args)
    logs = store.read_sessions()
    if not logs:
        raise CliError("no session logs in the store")
    return logs


def _cmd_stats(args) -> int:
    logs = _stats_logs(args)
    if args.report == "table4":
        rows = per_user_stats_table(logs)
        if args.json:
            print(json.dumps([
                {
                    "disability": r.disability.value,
                    "userId": r.user_id,
                    "iteration": r.iteration,
                    "average": r.stats.mean,
                    "sd": r.stats.sample_sd,
                    "cv": r.stats.cv,
                }
                for r in rows
            ]))
        else:
            print(f"{'Disability':10s} {'User':12s} {'Iter':4s} "
                  f"{'Average':>8s} {'SD':>7s} {'CV':>6s}")
            for r in rows:
                print(f"{r.disability.value:10s} {r.user_id:12s} {r.iteration:4d} "
                      f"{r.stats.mean:8.2f} {r.stats.sample_sd:7.2f} {r.stats.cv:6.2f}")
        return 0

    if args.report == "timeseries":
        series = group_repetition_means(logs, args.iteration)
        if args.json:
            print(json.dumps({"iteration": args.iteration, "sessions": series}))
        else:
            print(f"mean completion time per repetition, iteration {args.iteration}")
            for session_index, row in enumerate(series, start=1):
                cells = " ".join(f"{v:6.2f}" for v in row)
                print(f"session {session_index}: {cells}")
        return 0

    means = group_error_means(logs, args.iteration)
    if args.json:
        print(json.dumps({"iteration": args.iteration, "sessions": list(means)}))
    else:
        print(f"mean errors per session, iteration {args.iteration}")
        for session_index, value in enumerate(means, start=1):
            print(f"session {session_index}: {value:.2f}")
    return 0


def _cmd_ueq(args) -> int:
    if args.bundled:
        responses = studydata.tutor_responses()
    elif args.input:
        try:
            text = Path(args.input).read_text(encoding="utf-8")
        except OSError as exc:
            raise CliError(f"cannot read {args.input}: {exc}") from None
        responses = ueq.parse_ueq_table(text)
    else:
        raise CliError("pass --input FILE or --bundled")
    try:
        report = ueq.aggregate_scales(responses)
    except ueq.TooFewResponsesError as exc:
        raise CliError(str(exc)) from None

    if args.json:
        payload = {
            "participants": report.participants,
            "scales": {
                scale.value: {
                    "mean": stats.mean,
                    "variance": stats.sample_variance,
                    **({"benchmark": stats.benchmark.value} if args.benchmark else {}),
                }
                for scale, stats in report.scales.items()
            },
        }
        if args.boxplot:
            payload["fiveNumberSummaries"] = {
                scale.value: list(summary)
                for scale, summary in ueq.scale_five_number_summaries(responses).items()
            }
        print(json.dumps(payload))
        return 0

    print(f"{'Scale':15s} {'Mean':>7s} {'Variance':>9s}"
          + ("  Benchmark" if args.benchmark else ""))
    for scale, stats in report.scales.items():
        line = f"{scale.value:15s} {stats.mean:7.3f} {stats.sample_variance:9.3f}"
        if args.benchmark:
            line += f"  {stats.benchmark.value}"
        print(line)
    if args.boxplot:
        print()
        print(f"{'Scale':15s} {'Min':>6s} {'Q1':>6s} {'Median':>7s} {'Q3':>6s} {'Max':>6s}")
        for scale, s in ueq.scale_five_number_summaries(responses).items():
            print(f"{scale.value:15s} {s[0]:6.3f} {s[1]:6.3f} {s[2]:7.3f} {s[3]:6.3f} {s[4]:6.3f}")
    return 0


def _cmd_serve(args) -> int:
    from .service import run_server

    store = _store(args)
    static_dir = args.ui if args.ui and Path(args.ui).is_dir() else None
    print(f"serving on 127.0.0.1:{args.port} (store: {store.root})")
    run_server(store, args.port, static_dir)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adapta",
        description="Adaptive device-interaction engine: profiles, replay, "
                    "analytics and questionnaire scoring.")
    sub = parser.add_subparsers(dest="command", required=True)

    rules = sub.add_parser("rules", help="adaptation rule table")
    rules_sub = rules.add_subparsers(dest="rules_command", required=True)
    rules_sub.add_parser("dump", help="print the rule table").set_defaults(func=_cmd_rules)

    gestures = sub.add_parser("gestures", help="gesture definitions")
    gestures_sub = gestures.add_subparsers(dest="gestures_command", required=True)
    gestures_sub.add_parser("describe", help="print states and thresholds") \
        .set_defaults(func=_cmd_gestures)

    profiles = sub.add_parser("profiles", help="manage stored profiles")
    profiles_sub = profiles.add_subparsers(dest="profiles_command", required=True)
    add = profiles_sub.add_parser("add", help="register a profile")
    _add_data_flag(add)
    add.add_argument("--id", required=True)
    add.add_argument("--name", required=True)
    add.add_argument("--age", type=int, required=True)
    add.add_argument("--sex", choices=[s.value for s in Sex], default=Sex.OTHER.value)
    add.add_argument("--laterality", choices=[l.value for l in LateralityProblem],
                     default=LateralityProblem.NONE.value)
    add.add_argument("--disability", choices=[d.value for d in Disability], required=True)
    add.add_argument("--posture", choices=[p.value for p in Posture],
                     default=Posture.STANDING.value)
    add.add_argument("--depth", type=float, default=2.0, help="sensor distance, metres")
    add.add_argument("--rgb", action=argparse.BooleanOptionalAction, default=False,
                     help="mirror the camera image on screen")
    add.add_argument("--arms", choices=["both", "right", "left"], default="both")
    add.add_argument("--dominant", choices=[s.value for s in Side], default=Side.RIGHT.value)
    add.set_defaults(func=_cmd_profiles_add)
    lst = profiles_sub.add_parser("list", help="list stored profiles")
    _add_data_flag(lst)
    lst.set_defaults(func=_cmd_profiles_list)

    replay = sub.add_parser("replay", help="drive an activity from a trace file")
    _add_data_flag(replay)
    replay.add_argument("--profile", required=True)
    replay.add_argument("--activity", required=True,
                        help="concept:animals|concept:vehicles|laterality:left|laterality:right")
    replay.add_argument("--trace", required=True)
    replay.add_argument("--iteration", type=int, choices=(1, 2), default=1)
    replay.add_argument("--session", type=int, choices=(1, 2, 3), default=1)
    replay.add_argument("--repetitions", type=int, default=10)
    replay.add_argument("--json", action="store_true", help="machine-readable output")
    replay.set_defaults(func=_cmd_replay)

    stats = sub.add_parser("stats", help="session-log statistics")
    _add_data_flag(stats)
    stats.add_argument("--bundled", action="store_true",
                       help="use the bundled twelve-participant dataset")
    stats.add_argument("--report", choices=["table4", "timeseries", "errors"], required=True)
    stats.add_argument("--iteration", type=int, choices=(1, 2), default=1)
    stats.add_argument("--json", action="store_true", help="machine-readable output")
    stats.set_defaults(func=_cmd_stats)

    ueq_cmd = sub.add_parser("ueq", help="score questionnaire answers")
    ueq_cmd.add_argument("--input", help="delimiter-separated answer table")
    ueq_cmd.add_argument("--bundled", action="store_true",
                         help="use the bundled tutors' answers")
    ueq_cmd.add_argument("--benchmark", action="store_true",
                         help="attach benchmark categories")
    ueq_cmd.add_argument("--boxplot", action="store_true",
                         help="print five-number summaries")
    ueq_cmd.add_argument("--json", action="store_true", help="machine-readable output")
    ueq_cmd.set_defaults(func=_cmd_ueq)

    serve = sub.add_parser("serve", help="run the live session service")
    _add_data_flag(serve)
    serve.add_argument("--port", type=int, default=8765)
    serve.add_argument("--ui", help="static frontend directory to serve")
    serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # storage, trace and activity errors share one exit path
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
