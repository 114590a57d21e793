"""
Tests for the exact arithmetic core
Matrices, rationals modulo Z, arithmetic data and group ids
"""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dedekind_symbols.exact_core import (
    IDENTITY,
    NEG_I,
    S_MATRIX,
    T_MATRIX,
    Cusp,
    GroupData,
    GroupId,
    ModZ,
    ScaledMat,
    arith,
    central_binomial_check,
    ell_N,
    format_matrix,
    identity,
    in_gamma0,
    in_gamma0_plus,
    mat_inv,
    mat_mul,
    mat_neg,
    mat_pow,
    mobius,
    parse_group,
    parse_matrix,
    tau,
)
from dedekind_symbols.exceptions import ArgumentError, MatrixFormatError
from dedekind_symbols.verify import random_gamma0

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def test_modz_normalizes_into_unit_interval():
    assert ModZ(Fraction(-1, 10)).value == Fraction(9, 10)
    assert ModZ(Fraction(7, 3)).value == Fraction(1, 3)
    assert (ModZ(Fraction(3, 2)) + ModZ(Fraction(1, 2))).is_zero()
    assert -ModZ(Fraction(1, 4)) == ModZ(Fraction(3, 4))
    assert ModZ(Fraction(1, 3)) * 3 == ModZ(Fraction(0))
    assert str(ModZ(Fraction(9, 10))) == "9/10 (mod 1)"


def test_scaled_matrix_normalizes_common_factor():
    assert ScaledMat(2, 0, 0, 2, 4) == IDENTITY
    assert ScaledMat(-11, 0, 0, -11, 121) == NEG_I
    # 2 divides every entry but 4 does not divide the scale
    assert ScaledMat(2, 0, 0, 1, 2).e == 2


def test_scaled_matrix_rejects_wrong_determinant():
    with pytest.raises(ArgumentError):
        ScaledMat(1, 1, 0, 1, 2)
    with pytest.raises(ArgumentError):
        ScaledMat(1, 0, 0, -1, -1)


def test_parse_and_format():
    assert parse_matrix(" -7, -1, 22, 3 ") == ScaledMat(-7, -1, 22, 3)
    assert parse_matrix("0,-1,11,0;11") == tau(11)
    assert format_matrix(tau(11)) == "0,-1,11,0;11"
    assert format_matrix(ScaledMat(4, 1, -33, -8)) == "4,1,-33,-8"


@pytest.mark.parametrize("text", ["1,2,3", "a,b,c,d", "1,1,1,1", "1,0,0,1;0", ""])
def test_parse_rejects_malformed(text):
    with pytest.raises(MatrixFormatError):
        parse_matrix(text)


def test_fricke_matrix_squares_to_minus_identity():
    assert mat_mul(tau(11), tau(11)) == NEG_I
    assert mat_mul(tau(37), mat_inv(tau(37))) == IDENTITY


def test_generator_relations_of_sl2z():
    assert mat_pow(S_MATRIX, 2) == NEG_I
    assert mat_pow(mat_mul(S_MATRIX, T_MATRIX), 3) == NEG_I
    assert mat_pow(T_MATRIX, -5) == ScaledMat(1, -5, 0, 1)
    assert mat_pow(T_MATRIX, 0) == IDENTITY


def test_membership():
    A = ScaledMat(-7, -1, 22, 3)
    assert in_gamma0(A, 11)
    assert not in_gamma0(A, 37)
    assert in_gamma0_plus(tau(37), 37)
    assert in_gamma0_plus(A, 11)
    assert not in_gamma0(tau(37), 37)
    with pytest.raises(ArgumentError):
        in_gamma0_plus(A, 4)


def test_arith_level_11():
    data = arith(11)
    assert data.divisors == (1, 11)
    assert data.psi == 12
    assert data.volume_gamma0 == 4
    assert data.volume_plus == 2
    assert data.alpha == Fraction(11, 10)
    assert data.beta == Fraction(12, 11)
    assert data.mobius == {1: 1, 11: -1}


def test_arith_volumes():
    assert arith(37).volume_plus == Fraction(19, 3)
    assert arith(1).volume_gamma0 == Fraction(1, 3)
    assert arith(12).volume_plus is None
    assert not arith(12).squarefree


@pytest.mark.parametrize("n,expected", [(1, 1), (2, -1), (6, 1), (12, 0), (30, -1)])
def test_mobius(n, expected):
    assert mobius(n) == expected


def test_cusps():
    assert Cusp(2, -4) == Cusp(-1, 2)
    assert str(Cusp(-1, 2)) == "-1/2"
    assert Cusp(5, 0).is_infinity()
    assert str(Cusp.of_matrix(IDENTITY)) == "inf"
    assert str(Cusp.of_matrix(tau(11))) == "0"


def test_gauss_bonnet():
    assert GroupData(genus=0, cusps=1, elliptic_orders=(2, 3)).volume == Fraction(1, 3)
    assert GroupData(genus=1, cusps=2, volume=arith(11).volume_gamma0).gauss_bonnet_ok()
    assert GroupData(genus=1, cusps=1, elliptic_orders=(2, 2, 2, 3), volume=arith(37).volume_plus).gauss_bonnet_ok()
    assert not GroupData(genus=1, cusps=1, volume=Fraction(3)).gauss_bonnet_ok()


@pytest.mark.parametrize("n", range(31))
def test_central_binomial_identity(n):
    assert central_binomial_check(n)


def test_parse_group():
    assert parse_group("sl2z") == GroupId("sl2z")
    assert parse_group("gamma0-11") == GroupId("gamma0", 11)
    assert parse_group("gamma0-37plus") == GroupId("gamma0_plus", 37)
    assert str(parse_group("gamma0-37plus")) == "gamma0-37plus"
    with pytest.raises(ArgumentError):
        parse_group("gamma0-12plus")
    with pytest.raises(ArgumentError):
        parse_group("gamma1-5")


@settings(max_examples=200)
@given(seeds)
def test_inverse_and_associativity(seed):
    rng = np.random.default_rng(seed)
    M, N, K = (random_gamma0(rng, 1, 10**6) for _ in range(3))
    assert mat_mul(M, mat_inv(M)) == IDENTITY
    assert mat_mul(mat_mul(M, N), K) == mat_mul(M, mat_mul(N, K))
    assert M.psl_key() == (-M).psl_key()


@given(seeds)
def test_scaled_products_stay_normalized(seed):
    rng = np.random.default_rng(seed)
    M = mat_mul(random_gamma0(rng, 37, 10**4), tau(37))
    assert M.e == 37
    assert mat_mul(M, M).e == 1


def test_small_helpers():
    assert identity() == IDENTITY
    assert mat_neg(T_MATRIX) == ScaledMat(-1, -1, 0, -1)
    assert ell_N(2) == 8
    assert ell_N(6) == 2
    assert ell_N(37) == 12
    with pytest.raises(ArgumentError):
        ell_N(12)
