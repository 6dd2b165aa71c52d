import json

import pytest

from gf2fourier.errors import DomainError
from gf2fourier.verify import (
    Report,
    SUITES,
    failures,
    lower_parts,
    run_suite,
    verify_complete_sparsity,
    verify_disjoint_sparsity,
    verify_granularity_bound,
    verify_grid_sparsity,
    verify_oracle_equivalence,
    verify_parity,
    verify_preliminaries,
    verify_symlrank,
)


def test_report_relations():
    assert Report("x", {}, ">=", 3, 4).passed
    assert not Report("x", {}, "<=", 3, 4).passed
    r = Report("x", {"n": 1}, "==", 1, 1, runtime_ms=2.5)
    assert "runtime_ms" not in r.to_dict()
    assert r.to_dict(timings=True)["runtime_ms"] == 2.5


def test_lower_parts_begin_with_extremes():
    parts = list(lower_parts(2, 4, 3, 0))
    assert [kind for _, kind, _ in parts] == ["zero", "full", "random", "random", "random"]
    assert parts[0][2].is_zero()
    assert len(parts[1][2].monomials) == 5


def test_symlrank_small():
    reports = verify_symlrank(6)
    assert len(reports) == 21 and not failures(reports)


def test_symlrank_cap():
    with pytest.raises(DomainError):
        verify_symlrank(11)


def test_complete_small():
    reports = verify_complete_sparsity(2, 6, trials=3, seed=1)
    assert reports and not failures(reports)
    assert {r.claim_id for r in reports} >= {"complete_sparsity.spar", "complete_sparsity.restricted_gran"}


@pytest.mark.parametrize("d", [1, 3, 6])
def test_complete_needs_power_of_two(d):
    with pytest.raises(DomainError):
        verify_complete_sparsity(d, 6, trials=1)


def test_disjoint_small():
    assert not failures(verify_disjoint_sparsity(2, 6, trials=3))
    with pytest.raises(DomainError):
        verify_disjoint_sparsity(4, 6, trials=1)


def test_grid_small():
    reports = verify_grid_sparsity(3, 9, trials=2)
    assert not failures(reports)
    assert reports[0].claim_id == "grid.partitions" and reports[0].observed == 3


def test_granularity_small():
    assert not failures(verify_granularity_bound(2, 6, trials=10))
    assert not failures(verify_granularity_bound(3, 7, trials=10))


def test_preliminaries_small():
    reports = verify_preliminaries(5, trials=20, seed=3)
    assert reports and not failures(reports)


def test_oracle_small():
    reports = verify_oracle_equivalence(range(4, 6), count=20, exhaustive_max=2)
    assert not failures(reports)


def test_parity():
    assert not failures(verify_parity())


def test_run_suite_names():
    assert "symlrank" in SUITES
    with pytest.raises(DomainError):
        run_suite("bogus")


def test_deterministic():
    a = run_suite("granularity", d=2, n=6, trials=5, seed=9)
    b = run_suite("granularity", d=2, n=6, trials=5, seed=9)
    dump = lambda rs: json.dumps([r.to_dict() for r in rs], sort_keys=True)
    assert dump(a) == dump(b)
