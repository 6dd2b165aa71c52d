"""Acceptance criteria, one test each, at full scale and with time bounds.

Run ``pytest tests/test_acceptance.py -s`` to see the PASS/FAIL table.
Each criterion line is printed even when output capture is on.
"""
import subprocess
import sys
import time

import pytest

from gf2fourier.verify import (
    failures,
    run_suite,
    verify_cdn_restrictions,
    verify_oracle_equivalence,
    verify_parity,
    verify_symlrank,
)


def _check(capsys, number, title, bound_s, fn):
    start = time.perf_counter()
    reports = fn()
    elapsed = time.perf_counter() - start
    bad = failures(reports)
    ok = not bad and elapsed < bound_s
    with capsys.disabled():
        status = "PASS" if ok else "FAIL"
        print(f"\n[{status}] criterion {number}: {title} "
              f"({len(reports)} checks, {len(bad)} violations, {elapsed:.2f} s / {bound_s} s)")
    assert not bad, [r.to_dict() for r in bad[:5]]
    assert elapsed < bound_s


def test_01_linear_rank_table(capsys):
    _check(capsys, 1, "linear rank of C(d,n) matches closed form, n <= 8", 60, lambda: verify_symlrank(8))


def test_02_explicit_restrictions(capsys):
    _check(capsys, 2, "explicit restrictions drop degree with formula size, n <= 12", 5,
           lambda: verify_cdn_restrictions(12))


def test_03_oracle_equivalence(capsys):
    _check(capsys, 3, "cover formula equals Walsh-Hadamard spectrum", 120,
           lambda: verify_oracle_equivalence(range(4, 13), count=1000, seed=0, exhaustive_max=3))


def test_04_complete_sparsity(capsys):
    _check(capsys, 4, "complete uniform sparsity and restricted granularity", 60,
           lambda: run_suite("complete", trials=50, seed=0))


def test_05_disjoint_sparsity(capsys):
    _check(capsys, 5, "disjoint maxonomials sparsity and top granularity", 60,
           lambda: run_suite("disjoint", trials=20, seed=0))


def test_06_grid_lines(capsys):
    _check(capsys, 6, "grid lines partition counts and sparsity", 120,
           lambda: run_suite("grid", trials=10, seed=0))


def test_07_granularity_bound(capsys):
    _check(capsys, 7, "granularity bound for degree-d polynomials, n <= 12", 60,
           lambda: run_suite("granularity", trials=100, seed=0))


def test_08_preliminaries(capsys):
    _check(capsys, 8, "preliminary facts on 200 random trials, n <= 10", 60,
           lambda: run_suite("preliminaries", trials=200, seed=0))


def test_09_parity(capsys):
    _check(capsys, 9, "binomial parity utilities", 1, lambda: verify_parity(40))


def test_10_determinism(capsys):
    cmd = [sys.executable, "-m", "gf2fourier", "verify", "--suite", "all", "--seed", "0"]
    start = time.perf_counter()
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    elapsed = time.perf_counter() - start
    ok = first.returncode == second.returncode == 0 and first.stdout == second.stdout and first.stdout
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] criterion 10: two full verify runs give byte-identical JSON "
              f"({len(first.stdout)} bytes, {elapsed:.2f} s)")
    assert first.returncode == 0, first.stderr.decode()
    assert first.stdout == second.stdout
