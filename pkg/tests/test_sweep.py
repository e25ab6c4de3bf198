import pytest

from hessgkm.combinatorics import HessenbergFunction, Permutation, h_inversions, hessenberg_functions, inversions
from hessgkm.errors import CapExceeded
from hessgkm.sweep import (
    FAILED,
    PASSED,
    SKIPPED,
    SweepConfig,
    check_h2,
    check_inversion_lemma,
    run_sweep,
)
from hessgkm.cohomology import GradedCohomology


def test_tiny_sweep_passes():
    summary = run_sweep(SweepConfig(2))
    assert summary.passed
    assert summary.sizes == {1: 1, 2: 2}
    assert summary.to_json()["functions_by_size"] == {"1": 1, "2": 2}


def test_sweep_with_degrees():
    summary = run_sweep(SweepConfig(4, degrees=(2, 3)))
    assert summary.passed
    assert summary.by_check()["h2d_character"][PASSED] > 0


def test_over_budget_is_skipped_not_passed():
    h = HessenbergFunction.parse("3,3,4,5,5")
    results = check_h2(h, 1000, GradedCohomology(h, 1000))
    status = {r.check: r.status for r in results}
    assert status["h2_presentation"] == PASSED
    assert status["h2_character"] == SKIPPED
    assert FAILED not in status.values()


def test_parallel_matches_serial():
    cfg = SweepConfig(4, degrees=(2,))
    a = run_sweep(cfg).to_json()
    b = run_sweep(cfg, jobs=2).to_json()
    assert a == b


def test_cap():
    with pytest.raises(CapExceeded):
        run_sweep(SweepConfig(4, cap=3))


def test_inversion_lemma_passes_for_small_n():
    for n in range(2, 5):
        for h in hessenberg_functions(n):
            assert check_inversion_lemma(h).status in (PASSED, SKIPPED)


def test_inversion_lemma_needs_the_gap_condition():
    # (2,3,3) fails h(1) >= 1 + 2, and w = 312 has l_h(w) = 1 < 2 while l(w) = 2
    h, w = HessenbergFunction.parse("2,3,3"), Permutation.parse("312")
    assert not h.satisfies_gap(2)
    assert h_inversions(h, w) == 1 and inversions(w) == 2
