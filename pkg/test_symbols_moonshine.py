"""
Tests for the Gamma_0(N)+ symbols
"""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dedekind_symbols.exact_core import S_MATRIX, T_MATRIX, ScaledMat, mat_mul, tau
from dedekind_symbols.exceptions import ArgumentError, MembershipError
from dedekind_symbols.phase import omega_petersson
from dedekind_symbols.presets import get_preset
from dedekind_symbols.symbols_classical import S_sl2z
from dedekind_symbols.symbols_moonshine import S_plus, S_plus_on_congruence, S_plus_prime, eta_multiplier_plus
from dedekind_symbols.verify import random_gamma0, random_plus

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def test_level_37_generator_table():
    preset = get_preset("gamma0-37plus")
    expected = {
        "A": Fraction(1, 6),
        "B": Fraction(-7, 12),
        "E1": Fraction(1, 4),
        "E2": Fraction(1, 4),
        "E3": Fraction(1, 3),
        "E4": Fraction(-1, 4),
        "Pinf": Fraction(-19, 12),
    }
    for name, value in expected.items():
        M = preset.generators[name]
        assert S_plus(37, M) == value, name
        assert S_plus_prime(37, M) == value, name


def test_divisor_average_on_congruence_elements():
    assert S_plus_on_congruence(37, ScaledMat(20, -13, 37, -24)) == Fraction(-7, 12)
    assert S_plus_on_congruence(37, ScaledMat(1, -1, 0, 1)) == Fraction(-19, 12)
    assert S_plus_on_congruence(1, S_MATRIX) == S_sl2z(S_MATRIX)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13, 37])
def test_fricke_involution_value(p):
    assert S_plus(p, tau(p)) == Fraction(-1, 4)
    assert S_plus_prime(p, tau(p)) == Fraction(-1, 4)


def test_translation_on_prime_level():
    # (p+1)/24 per unit translation
    assert S_plus(11, T_MATRIX) == Fraction(1, 2)
    assert S_plus(23, T_MATRIX) == 1


def test_domain_errors():
    with pytest.raises(ArgumentError):
        S_plus(12, T_MATRIX)
    with pytest.raises(ArgumentError):
        S_plus_prime(15, T_MATRIX)
    with pytest.raises(MembershipError):
        S_plus(37, S_MATRIX)
    with pytest.raises(MembershipError):
        S_plus_prime(37, ScaledMat(2, 1, 0, 1, 2))


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 37])
@settings(max_examples=60)
@given(seed=seeds)
def test_prime_closed_form_matches_divisor_average(p, seed):
    rng = np.random.default_rng(seed)
    M = random_gamma0(rng, p, 10**6)
    assert S_plus(p, M) == S_plus_prime(p, M)
    W = mat_mul(M, tau(p))
    assert S_plus(p, W) == S_plus_prime(p, W)


@settings(max_examples=150)
@given(seeds)
def test_cocycle_on_level_37(seed):
    rng = np.random.default_rng(seed)
    M, K = random_plus(rng, 37, 10**5), random_plus(rng, 37, 10**5)
    assert S_plus(37, mat_mul(M, K)) == S_plus(37, M) + S_plus(37, K) + omega_petersson(M, K)


@pytest.mark.parametrize("N", [2, 3, 5, 6, 37])
@settings(max_examples=40)
@given(seed=seeds)
def test_denominator_divides_48(N, seed):
    rng = np.random.default_rng(seed)
    g = random_plus(rng, N, 10**5)
    assert (48 * S_plus(N, g)).denominator == 1
    assert 96 % eta_multiplier_plus(N, g).order == 0
