"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Every check is exact (discrete); the stated wall-clock budgets are
asserted too.  Run with `pytest tests/test_acceptance.py -v -s` to see
the per-criterion lines.
"""

import time

from quord.oracles import (
    check_box_roundtrip,
    check_dimension_laws,
    check_enumeration_counts,
    check_extension_postconditions,
    check_flagship_dimensions,
    check_halfspace_criteria_agree,
    check_hsdim_bound_and_monotonicity,
    check_product_classification,
    check_transform_constructions,
    check_transform_random,
    verify_separation_counterexample,
)


def report(number: int, label: str, budget: float, instances: int, failures: list[str], elapsed: float):
    ok = not failures and elapsed < budget
    verdict = "PASS" if ok else "FAIL"
    print(
        f"criterion {number:02d} [{verdict}] {label}: "
        f"{instances} instances, {len(failures)} failures, {elapsed:.1f}s (< {budget:.0f}s)"
    )
    assert not failures, failures[:5]
    assert elapsed < budget, f"criterion {number} exceeded its {budget:.0f}s budget: {elapsed:.1f}s"


def timed(fn):
    start = time.perf_counter()
    instances, failures = fn()
    return instances, failures, time.perf_counter() - start


def test_criterion_01_halfspace_criteria_equivalence():
    instances, failures, elapsed = timed(lambda: check_halfspace_criteria_agree((3, 4)))
    assert instances == 29 + 355
    report(1, "four half-space criteria agree on n=3,4", 5.0, instances, failures, elapsed)


def test_criterion_02_box_roundtrip():
    instances, failures, elapsed = timed(lambda: check_box_roundtrip(5))
    report(2, "box decomposition round trips, n<=5", 30.0, instances, failures, elapsed)


def test_criterion_03_flagship_numbers():
    instances, failures, elapsed = timed(check_flagship_dimensions)
    report(3, "diamond (1,2) and standard example (3,3)", 5.0, instances, failures, elapsed)


def test_criterion_04_dimension_theorems():
    def run():
        i1, f1 = check_dimension_laws((0, 1, 2, 3, 4, 5), posets_only=True)
        i2, f2 = check_dimension_laws((0, 1, 2, 3, 4), posets_only=False)
        return i1 + i2, f1 + f2

    instances, failures, elapsed = timed(run)
    report(4, "dimension laws: posets n<=5 and quasiorders n<=4", 600.0, instances, failures, elapsed)


def test_criterion_05_realizer_transforms():
    def run():
        i1, f1 = check_transform_constructions(4, per_target_cap=500)
        i2, f2 = check_transform_random(5, 1000)
        return i1 + i2, f1 + f2

    instances, failures, elapsed = timed(run)
    report(5, "both realizer transforms, realizers over n<=4 plus random n=5", 600.0,
           instances, failures, elapsed)


def test_criterion_06_extension_postconditions():
    instances, failures, elapsed = timed(
        lambda: check_extension_postconditions(3, (4, 5), samples_per_op=2000)
    )
    assert instances >= 10_000
    report(6, "tighten/linearize/two-order contracts, exhaustive n<=3 sampled n=4,5", 300.0,
           instances, failures, elapsed)


def test_criterion_07_product_classification():
    instances, failures, elapsed = timed(lambda: check_product_classification(12))
    report(7, "structural product verdict matches direct check, size<=12", 120.0,
           instances, failures, elapsed)


def test_criterion_08_separation_counterexample():
    start = time.perf_counter()
    verdict = verify_separation_counterexample()
    elapsed = time.perf_counter() - start
    failures = [] if verdict else ["a separating pair was found"]
    report(8, "4-element instance admits no separating pair", 1.0, 1, failures, elapsed)


def test_criterion_09_enumeration_counts():
    instances, failures, elapsed = timed(
        lambda: check_enumeration_counts((0, 1, 2, 3, 4), (0, 1, 2, 3))
    )
    report(9, "filter and generative enumerations agree with known counts", 10.0,
           instances, failures, elapsed)


def test_criterion_10_bound_and_monotonicity():
    instances, failures, elapsed = timed(lambda: check_hsdim_bound_and_monotonicity(4))
    report(10, "hs-dim bounded by quotient dim and monotone under restriction, n<=4", 300.0,
           instances, failures, elapsed)
