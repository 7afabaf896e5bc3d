#!/usr/bin/env python3
"""Score the flagship multipart password under the demo configuration.

Builds the demo setup (single-digit rule + 20K wordlist containing Love
and Soccer), scores 1LoveSoccer, and prints the complexity breakdown and
verdicts under both adversary presets.
"""

import sys
import tempfile
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from rulespace.config import load_engine
from rulespace.demo import write_demo_config
from rulespace.engine import canonical_record_json


def main() -> None:
    workdir = Path(tempfile.mkdtemp(prefix="rulespace-demo-"))
    engine = load_engine(write_demo_config(workdir))
    password = "1LoveSoccer"

    print(f"scoring {password!r} under {workdir}/demo_config.json\n")
    result = engine.score(password)
    print(result.complexity.to_text())
    print()
    for adversary in ("everyday", "gpu_rig"):
        verdict = engine.score(password, adversary_id=adversary).verdict
        label = "H1 (strong)" if verdict.hypothesis == "H1" else "H0 (not strong)"
        display = verdict.to_record()["estimated_ttc_display"]
        print(f"{adversary:>9}: {label:16} time-to-crack {display}")
    print("\nmachine-readable record:")
    print(canonical_record_json(result.to_record()))


if __name__ == "__main__":
    main()
