"""
Tests for the phase factor omega and the branch marker rho
"""

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dedekind_symbols.exact_core import NEG_I, S_MATRIX, T_MATRIX, ScaledMat, mat_inv, mat_mul, mat_pow, tau
from dedekind_symbols.numerics import log_conj_residual, omega_float
from dedekind_symbols.phase import omega_cases, omega_petersson, omega_self, rho
from dedekind_symbols.verify import random_gamma0, random_plus

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def test_known_values():
    assert omega_petersson(S_MATRIX, S_MATRIX) == 0
    assert omega_petersson(NEG_I, NEG_I) == 1
    assert omega_self(NEG_I) == 1
    for k in (-3, 1, 4):
        M = ScaledMat(-7, -1, 22, 3)
        assert omega_petersson(mat_pow(T_MATRIX, k), M) == 0


@pytest.mark.parametrize("M,expected", [(NEG_I, 1), (T_MATRIX, 0), (S_MATRIX, 0), (ScaledMat(-1, 5, 0, -1), 1)])
def test_rho(M, expected):
    assert rho(M) == expected


@settings(max_examples=300)
@given(seeds)
def test_three_evaluations_agree(seed):
    rng = np.random.default_rng(seed)
    M, N = random_gamma0(rng, 1, 40), random_gamma0(rng, 1, 40)
    exact = omega_petersson(M, N)
    assert exact in (-1, 0, 1)
    assert exact == omega_cases(M, N) == omega_float(M, N)


@settings(max_examples=300)
@given(seeds)
def test_inverse_self_and_cocycle(seed):
    rng = np.random.default_rng(seed)
    M, N, K = (random_gamma0(rng, 1, 10**5) for _ in range(3))
    assert omega_petersson(M, mat_inv(M)) == rho(M)
    assert omega_self(M) == omega_petersson(M, M)
    lhs = omega_petersson(M, N) + omega_petersson(mat_mul(M, N), K)
    rhs = omega_petersson(M, mat_mul(N, K)) + omega_petersson(N, K)
    assert lhs == rhs


@given(seeds, st.floats(-3, 3), st.floats(0.05, 3))
def test_log_of_conjugate_automorphy_factor(seed, x, y):
    rng = np.random.default_rng(seed)
    M = random_gamma0(rng, 1, 40)
    assert abs(log_conj_residual(M, complex(x, y))) < 1e-9


@settings(max_examples=200)
@given(seeds, st.sampled_from([6, 11, 37]))
def test_scaled_matrices_from_the_fricke_extension(seed, N):
    rng = np.random.default_rng(seed)
    M, K, L = (random_plus(rng, N, 30) for _ in range(3))
    exact = omega_petersson(M, K)
    assert exact == omega_cases(M, K) == omega_float(M, K)
    assert omega_petersson(M, mat_inv(M)) == rho(M)
    assert omega_self(M) == omega_petersson(M, M)
    lhs = exact + omega_petersson(mat_mul(M, K), L)
    rhs = omega_petersson(M, mat_mul(K, L)) + omega_petersson(K, L)
    assert lhs == rhs


@pytest.mark.parametrize("N", [2, 11, 37])
def test_products_with_the_fricke_matrix(N):
    t = tau(N)
    mats = [t, mat_inv(t), T_MATRIX, NEG_I, mat_mul(t, T_MATRIX), mat_mul(T_MATRIX, t), ScaledMat(1, 0, -N, 1)]
    assert omega_petersson(t, t) == 0
    for M, K in itertools.product(mats, repeat=2):
        assert omega_petersson(M, K) == omega_cases(M, K) == omega_float(M, K)
