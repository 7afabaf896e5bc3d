"""Reproducible demo setup: a single-digit rule plus a 20,000-entry
wordlist containing "Love" and "Soccer", the configuration under which
"1LoveSoccer" prices at 31.8974 bits via the parsing 1|Love|Soccer.

Ships two adversary presets a decade of hardware apart (10**3 vs 10**12
guesses/second) so preset switching flips borderline verdicts.
"""

from __future__ import annotations

import json
from pathlib import Path

WORDLIST_SIZE = 20_000


def demo_wordlist_entries(size: int = WORDLIST_SIZE) -> list[str]:
    entries = [f"word{i:05d}" for i in range(size)]
    entries[100] = "Love"
    entries[200] = "Soccer"
    return entries


def write_demo_config(directory: str | Path, wordlist_size: int = WORDLIST_SIZE) -> Path:
    """Write wordlist + config into ``directory``; returns the config path."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    wordlist_path = directory / "demo_words.txt"
    wordlist_path.write_text(
        "# demo wordlist\n" + "\n".join(demo_wordlist_entries(wordlist_size)) + "\n",
        encoding="utf-8",
    )
    config = {
        "alphabet": {"builtin": "alnum62"},
        "bounds": {"min_length": 1, "max_length": 16},
        "rules": [
            {
                "id": "digit",
                "kind": "char_class",
                "characters": "0123456789",
                "min_length": 1,
                "max_length": 1,
            },
            {"id": "words", "kind": "wordlist", "path": wordlist_path.name},
            {
                # the brute-force reference case: 26**8 eight-letter passwords
                "id": "lower8",
                "kind": "char_class",
                "characters": "abcdefghijklmnopqrstuvwxyz",
                "min_length": 8,
                "max_length": 8,
            },
        ],
        "topology": ["digit", "words"],
        "adversaries": [
            {"id": "everyday", "baseline_year": 2015, "baseline_guess_rate": 10**3},
            {"id": "gpu_rig", "baseline_year": 2015, "baseline_guess_rate": 10**12},
        ],
        "defaults": {
            "adversary": "everyday",
            "protection": "fast_hash",
            "t_seconds": 90 * 24 * 3600,
            "year": 2015,
        },
        "limits": {"max_segments": 16, "max_parsings": 2**20},
    }
    config_path = directory / "demo_config.json"
    config_path.write_text(json.dumps(config, indent=2) + "\n", encoding="utf-8")
    return config_path
