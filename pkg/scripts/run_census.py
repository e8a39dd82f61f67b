#!/usr/bin/env python3
"""Print the full census for a curve config: one line per divisor class with
its infinity pattern and type, followed by the tally and the shape checks.

Usage: python scripts/run_census.py configs/F13-x5-x.cfg
"""

import sys

from jaccube.cube import census
from jaccube.curve import load_curve_config


def main(argv) -> int:
    if len(argv) != 1:
        print(__doc__.strip(), file=sys.stderr)
        return 2
    with open(argv[0], "r", encoding="utf-8") as handle:
        curve = load_curve_config(handle.read())
    result = census(curve)
    for line in result.report_lines():
        print(line)
    print(f"classes = {result.group_order}")
    for name, ok, detail in result.checks():
        print(f"{'PASS' if ok else 'FAIL'} {name} {detail}")
    return 0 if all(ok for _, ok, _ in result.checks()) else 1


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
