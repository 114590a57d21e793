"""
Tests for words, the SL(2,Z) decomposition and the generator search
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dedekind_symbols.exact_core import IDENTITY, NEG_I, T_MATRIX, ScaledMat
from dedekind_symbols.exceptions import AlphabetError, MembershipError, SearchBudgetExceeded
from dedekind_symbols.presets import get_preset
from dedekind_symbols.verify import random_gamma0
from dedekind_symbols.words import (
    Letter,
    Word,
    eval_word,
    exponent_sums,
    parse_word,
    random_word,
    sl2z_word,
    solve_word,
)

seeds = st.integers(min_value=0, max_value=2**32 - 1)


@pytest.fixture
def p11():
    return get_preset("gamma0-11")


@pytest.fixture
def p37():
    return get_preset("gamma0-37plus")


def test_parse_and_print(p11):
    w = parse_word(p11, "A B^-1  P0 P0")
    assert w.letters == (Letter("A"), Letter("B", -1), Letter("P0"), Letter("P0"))
    assert str(w) == "A B^-1 P0^2"
    assert str(w.inverse()) == "P0^-2 B A^-1"
    assert parse_word(p11, "") == p11.word([])
    with pytest.raises(AlphabetError):
        parse_word(p11, "A Q")


def test_compressed_cancels_blocks():
    w = Word((Letter("A"), Letter("A", -1), Letter("B", 2), Letter("B")))
    assert w.compressed().letters == (Letter("B", 3),)


def test_eval_word(p11):
    assert eval_word(p11, p11.word([])) == IDENTITY
    assert eval_word(p11, parse_word(p11, "A A^-1")) == IDENTITY
    assert eval_word(p11, parse_word(p11, "A B")) == ScaledMat(5, 1, -11, -2)
    assert eval_word(p11, parse_word(p11, "A B A^-1 B^-1 P0 Pinf")) == IDENTITY


def test_eval_rejects_foreign_words(p11, p37):
    with pytest.raises(AlphabetError):
        eval_word(p11, parse_word(p37, "E1"))


def test_exponent_sums(p11):
    assert exponent_sums(parse_word(p11, "A B A^-1"), ("A", "B")) == (0, 1)
    assert exponent_sums(parse_word(p11, "A A B^-1"), ("A", "B")) == (2, -1)
    assert exponent_sums(parse_word(p11, "A B A^-1 B^-1 P0 Pinf"), ("A", "B")) == (0, 0)


@pytest.mark.parametrize("name", ["sl2z", "gamma0-11", "gamma0-37plus"])
def test_preset_relations_hold(name):
    preset = get_preset(name)
    for letters, expected in preset.relations:
        assert eval_word(preset, preset.word(letters)) == expected


def test_random_words(p11):
    assert len(random_word(p11, 0, 1)) == 0
    w = random_word(p11, 30, 7)
    assert w == random_word(p11, 30, 7)
    assert len(w) == 30
    assert all(a != b.inverse() for a, b in zip(w.letters, w.letters[1:]))
    assert all(letter.name != "-I" for letter in w.letters)


def test_sl2z_word_small_cases():
    sl2z = get_preset("sl2z")
    assert sl2z_word(T_MATRIX).letters == (Letter("T"),)
    for M in (ScaledMat(1, 0, 1, 1), ScaledMat(-7, -1, 22, 3), NEG_I):
        assert eval_word(sl2z, sl2z_word(M)) == M
    with pytest.raises(MembershipError):
        sl2z_word(ScaledMat(0, -1, 11, 0, 11))


@settings(max_examples=300)
@given(seeds)
def test_sl2z_word_on_large_matrices(seed):
    rng = np.random.default_rng(seed)
    M = random_gamma0(rng, 1, 10**18)
    assert eval_word(get_preset("sl2z"), sl2z_word(M)) == M


@pytest.mark.parametrize("name", ["gamma0-11", "gamma0-37plus"])
def test_generators_solve_to_single_letters(name):
    preset = get_preset(name)
    for gen in preset.search_alphabet:
        w = solve_word(preset, preset.generators[gen])
        assert eval_word(preset, w) == preset.generators[gen]
        assert len(w.compressed()) <= 2


def test_minus_identity_on_level_37(p37):
    w = solve_word(p37, NEG_I)
    assert str(w) == "E1^2"
    assert eval_word(p37, w) == NEG_I


@pytest.mark.parametrize("name", ["gamma0-11", "gamma0-37plus"])
@settings(max_examples=40, deadline=None)
@given(seed=seeds, length=st.integers(0, 40))
def test_solve_word_round_trip(name, seed, length):
    preset = get_preset(name)
    M = eval_word(preset, random_word(preset, length, seed))
    assert eval_word(preset, solve_word(preset, M)) == M


def test_search_errors(p11):
    with pytest.raises(MembershipError):
        solve_word(p11, ScaledMat(0, -1, 1, 0))
    with pytest.raises(SearchBudgetExceeded):
        solve_word(p11, eval_word(p11, parse_word(p11, "A B")), budget=1)


def test_zero_budget_is_honoured(p11):
    A = p11.generators["A"]
    with pytest.raises(SearchBudgetExceeded):
        solve_word(p11, A, budget=0)
    assert eval_word(p11, solve_word(p11, A)) == A
