#!/usr/bin/env python3
"""Write the demo wordlist and config into a directory (default: ./demo).

The web meter's integration tests and `rulespace serve` both consume the
resulting demo_config.json.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from rulespace.demo import write_demo_config


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="demo", help="target directory")
    args = parser.parse_args()
    config_path = write_demo_config(args.out)
    print(config_path)


if __name__ == "__main__":
    main()
