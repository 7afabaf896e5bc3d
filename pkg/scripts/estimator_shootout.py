#!/usr/bin/env python3
"""Compare estimators against the cracking-experiment oracle.

Builds a desk-scale setup (3-digit class rule + 20-word list, budget 2000
guesses), labels a 50-password mixed set with the simulator, and reports
reliability/inclusion/accuracy for the engine's own strength test and for
the length>=8 baseline.
"""

import sys
import tempfile
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from rulespace.config import build_engine
from rulespace.evaluation import evaluate, length_threshold_estimator
from rulespace.oracle import ExperimentSpec, fnv1a_64


def main() -> None:
    workdir = Path(tempfile.mkdtemp(prefix="rulespace-eval-"))
    weak_words = [f"longword{i:02d}" for i in range(20)]  # 10 chars, all crackable
    (workdir / "words.txt").write_text("\n".join(weak_words) + "\n")

    engine = build_engine(
        {
            "alphabet": {"builtin": "alnum62"},
            "bounds": {"min_length": 1, "max_length": 8},
            "rules": [
                {"id": "digits", "kind": "char_class", "characters": "0123456789",
                 "min_length": 1, "max_length": 3},
                {"id": "words", "kind": "wordlist", "path": "words.txt"},
            ],
            "topology": ["digits", "words"],
            "adversaries": [{"id": "desk", "baseline_year": 2015, "baseline_guess_rate": 1}],
            "defaults": {"adversary": "desk", "protection": "fast_hash",
                         "t_seconds": 2000, "year": 2015},
        },
        base_dir=workdir,
    )
    strong = [f"Qz{c}{d}Xw" for c in "abcde" for d in "12345"]  # 25 unmatched strings
    test_set = weak_words + ["7", "55", "123", "9", "808"] + strong

    spec = ExperimentSpec(
        alphabet=engine.alphabet,
        protection=engine.resolve_protection(None),
        transform=fnv1a_64,
        adversary=engine.resolve_adversary(None),
        threshold_seconds=engine.threshold_seconds,
        year=engine.evaluation_year,
    )
    for estimator in (engine.self_estimator(), length_threshold_estimator(8)):
        report = evaluate(estimator, test_set, spec)
        print(report.summary_table())
        print()


if __name__ == "__main__":
    main()
