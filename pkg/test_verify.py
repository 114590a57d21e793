"""
Tests for the verification suites
"""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dedekind_symbols.exact_core import in_gamma0, in_gamma0_plus
from dedekind_symbols.exceptions import DedekindError
from dedekind_symbols.verify import SUITES, Check, random_gamma0, random_plus, run_verify

seeds = st.integers(min_value=0, max_value=2**32 - 1)


@given(seeds, st.sampled_from([1, 11, 37]))
def test_random_gamma0_is_in_the_group(seed, N):
    rng = np.random.default_rng(seed)
    assert in_gamma0(random_gamma0(rng, N, 10**8), N)


@given(seeds, st.sampled_from([2, 6, 37]))
def test_random_plus_is_in_the_group(seed, N):
    rng = np.random.default_rng(seed)
    assert in_gamma0_plus(random_plus(rng, N, 10**4), N)


def test_check_tally():
    check = Check("law")
    check.exact(True)
    check.close(1e-3, 1e-9, "too far")
    result = check.result()
    assert not result.passed
    assert result.cases == 2
    assert result.detail == "too far"

    note = Check("note", informational=True)
    note.exact(False, "recorded")
    assert note.result().passed


@pytest.mark.parametrize("suite", [name for name in SUITES if name != "numerics"])
def test_exact_suites_pass(suite):
    report = run_verify(suite, seed=7, count=12, jobs=1)
    assert report.checks
    assert report.passed, [c.detail for c in report.failures]


def test_numerics_suite_passes():
    report = run_verify("numerics", seed=7, count=10, jobs=1)
    assert report.passed, [c.detail for c in report.failures]


def test_reports_are_reproducible():
    first = run_verify("higher", seed=3, count=6)
    second = run_verify("higher", seed=3, count=6)
    assert first.model_dump() == second.model_dump()


def test_process_pool_keeps_suite_order():
    report = run_verify("all", seed=5, count=4, jobs=2)
    serial = run_verify("all", seed=5, count=4, jobs=1)
    assert [c.name for c in report.checks] == [c.name for c in serial.checks]


def test_unknown_suite():
    with pytest.raises(DedekindError):
        run_verify("nope")


def test_phase_suite_covers_scaled_matrices():
    report = run_verify("phase", seed=11, count=25, jobs=1)
    scaled = [c for c in report.checks if c.name == "phase factor laws on Gamma_0(37)+"]
    assert len(scaled) == 1
    assert scaled[0].passed
    assert scaled[0].cases == 75
