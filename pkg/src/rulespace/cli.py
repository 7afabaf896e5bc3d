"""Command-line interface.

    rulespace score <password|-> [--config PATH] [--json]
    rulespace evaluate --estimator ID --set PATH [--config PATH] [--json]
    rulespace serve [--config PATH] [--bind HOST:PORT]

Passing '-' reads the password from stdin so it stays out of shell history.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .config import default_engine, load_engine
from .engine import Engine, canonical_record_json
from .errors import ValidationError
from .evaluation import evaluate, length_threshold_estimator
from .oracle import ExperimentSpec, fnv1a_64
from .rules import load_wordlist


def _engine_from_args(args) -> Engine:
    if args.config:
        return load_engine(args.config)
    return default_engine()


def _cmd_score(args) -> int:
    engine = _engine_from_args(args)
    password = args.password
    if password == "-":
        password = sys.stdin.readline().rstrip("\n")
    result = engine.score(
        password,
        adversary_id=args.adversary,
        protection_id=args.protection,
        threshold_seconds=args.t_seconds,
        year=args.year,
    )
    if args.json:
        print(canonical_record_json(result.to_record()))
    else:
        print(result.complexity.to_text())
        verdict = result.verdict
        label = "FAT-strong (H1)" if verdict.hypothesis == "H1" else "not FAT-strong (H0)"
        print(f"verdict            : {label}")
        print(f"time to crack      : {verdict.to_record()['estimated_ttc_display']}")
    return 0


def _oracle_spec(engine: Engine) -> ExperimentSpec:
    return ExperimentSpec(
        alphabet=engine.alphabet,
        protection=engine.resolve_protection(None),
        transform=fnv1a_64,
        adversary=engine.resolve_adversary(None),
        threshold_seconds=engine.threshold_seconds,
        year=engine.evaluation_year,
    )


def _cmd_evaluate(args) -> int:
    engine = _engine_from_args(args)
    estimators = {
        "engine": engine.self_estimator(),
        "length8": length_threshold_estimator(8),
    }
    if args.estimator not in estimators:
        raise ValidationError(
            f"unknown estimator {args.estimator!r} (have: {sorted(estimators)})",
            field="estimator",
        )
    test_set = load_wordlist(args.set)
    if not test_set:
        raise ValidationError("test set is empty", field="set")
    report = evaluate(
        estimators[args.estimator],
        test_set,
        _oracle_spec(engine),
        trials=args.trials,
    )
    if args.json:
        print(canonical_record_json(report.to_record()))
    else:
        print(report.summary_table())
    return 0 if report.accurate else 1


def _cmd_serve(args) -> int:
    from .service import serve_forever

    engine = _engine_from_args(args)
    serve_forever(engine, bind=args.bind)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rulespace",
        description="rule-based password complexity and strength engine",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_score = sub.add_parser("score", help="score one password")
    p_score.add_argument("password", help="the password, or '-' to read from stdin")
    p_score.add_argument("--config", help="engine config JSON")
    p_score.add_argument("--json", action="store_true", help="emit the machine-readable record")
    p_score.add_argument("--adversary", help="adversary preset id")
    p_score.add_argument("--protection", help="protection preset id")
    p_score.add_argument("--t-seconds", dest="t_seconds", help="acceptable time-to-crack")
    p_score.add_argument("--year", type=int, help="evaluation year")
    p_score.set_defaults(func=_cmd_score)

    p_eval = sub.add_parser("evaluate", help="evaluate an estimator against the oracle")
    p_eval.add_argument("--estimator", required=True, help="estimator id (engine, length8)")
    p_eval.add_argument("--set", required=True, help="test-set path (wordlist format)")
    p_eval.add_argument("--config", help="engine config JSON")
    p_eval.add_argument("--trials", type=int, default=1, help="oracle trials per password")
    p_eval.add_argument("--json", action="store_true", help="emit the machine-readable record")
    p_eval.set_defaults(func=_cmd_evaluate)

    p_serve = sub.add_parser("serve", help="run the scoring HTTP service")
    p_serve.add_argument("--config", help="engine config JSON")
    p_serve.add_argument("--bind", default="127.0.0.1:8750", help="HOST:PORT")
    p_serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
