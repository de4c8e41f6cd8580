"""Acceptance gate.

Each test runs one numbered acceptance criterion through its full (non-fast)
verification and enforces the stated time budget.  Every criterion prints a
single PASS/FAIL line; run with `pytest -s tests/test_acceptance.py` to see
the report as it executes.
"""

import time

from polarwords import verify


def _run(number, budget, fn, **kwargs):
    start = time.monotonic()
    result = fn(**kwargs)
    elapsed = time.monotonic() - start
    status = "PASS" if result.ok else "FAIL"
    print(f"{status} criterion-{number} {result.name} [{elapsed:.2f}s] {result.details}")
    assert result.ok, f"criterion {number} ({result.name}): {result.details}"
    assert elapsed < budget, f"criterion {number} took {elapsed:.1f}s, budget {budget}s"
    return result


def test_criterion_1_g_sequence():
    _run(1, 1.0, verify.check_g_sequence)


def test_criterion_2_language_counts():
    _run(2, 10.0, verify.check_language_counts)


def test_criterion_3_word_case_tables():
    _run(3, 10.0, verify.check_case_tables)


def test_criterion_4_family_counts():
    _run(4, 60.0, verify.check_family_counts)


def test_criterion_5_case_partition():
    _run(5, 60.0, verify.check_case_partition)


def test_criterion_6_polar_dimensions():
    # split budget: the three small geometries are quick, the rank-4 one
    # (2295 points) gets its own allowance
    start = time.monotonic()
    small = verify.check_polar_dimensions(fast=True)
    small_elapsed = time.monotonic() - start
    assert small.ok, small.details
    assert small_elapsed < 5.0, f"small geometries took {small_elapsed:.1f}s"
    _run(6, 300.0, verify.check_polar_dimensions)


def test_criterion_7_strata_facts():
    _run(7, 60.0, verify.check_strata)


def test_criterion_8_bijection():
    _run(8, 120.0, verify.check_bijection)


def test_criterion_9_quotient_certificates():
    _run(9, 10.0, verify.check_quotient_certificates)
