#!/usr/bin/env python3
"""Run the registered theorem-replay suites and print one report per suite.

Usage: python scripts/run_suites.py [SUITE_ID ...]
Without arguments runs every suite except the long transform sweeps;
pass `all` to include those too.
"""

import sys

from quord import suite_ids, theorem_replay

SLOW = {"thm2.13-transform-n4", "thm2.16-posets-n5"}


def main(argv: list[str]) -> int:
    if argv and argv != ["all"]:
        chosen = argv
    elif argv == ["all"]:
        chosen = list(suite_ids())
    else:
        chosen = [s for s in suite_ids() if s not in SLOW]
    worst = 0
    for suite in chosen:
        report = theorem_replay(suite)
        status = "ok" if report.passed else "FAIL"
        seed = f" seed={report.seed}" if report.seed is not None else ""
        print(
            f"{status:4s} {suite:32s} {report.instances:>7d} instances, "
            f"{len(report.failures)} failures, {report.elapsed:6.2f}s{seed}"
        )
        for failure in report.failures[:5]:
            print(f"     - {failure}")
        worst = max(worst, 0 if report.passed else 1)
    return worst


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
