"""
Word problems
Words over generator alphabets, the Euclidean decomposition on SL(2,Z), and best-first search over preset generators
"""

from __future__ import annotations

import heapq
import itertools
import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from .config import get_config
from .exact_core import (
    IDENTITY,
    GroupData,
    ScaledMat,
    format_matrix,
    in_gamma0,
    in_gamma0_plus,
    is_sl2z,
    mat_mul,
    mat_pow,
)
from .exceptions import AlphabetError, ArgumentError, MembershipError, SearchBudgetExceeded

logger = logging.getLogger(__name__)

_TOKEN_RE = re.compile(r"^(.+?)(?:\^([+-]?\d+))?$")


@dataclass(frozen=True)
class Letter:
    """A generator raised to a non-zero power"""
    name: str
    power: int = 1

    def inverse(self) -> "Letter":
        return Letter(self.name, -self.power)

    def __str__(self) -> str:
        return self.name if self.power == 1 else f"{self.name}^{self.power}"


@dataclass(frozen=True)
class Word:
    letters: Tuple[Letter, ...] = ()
    alphabet: str = ""

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters, self.alphabet or other.alphabet)

    def inverse(self) -> "Word":
        return Word(tuple(letter.inverse() for letter in reversed(self.letters)), self.alphabet)

    def compressed(self) -> "Word":
        """Merge runs of the same generator into power blocks"""
        merged: List[Letter] = []
        for letter in self.letters:
            if merged and merged[-1].name == letter.name:
                power = merged[-1].power + letter.power
                merged.pop()
                if power:
                    merged.append(Letter(letter.name, power))
            else:
                merged.append(letter)
        return Word(tuple(merged), self.alphabet)

    def __str__(self) -> str:
        return " ".join(str(letter) for letter in self.compressed().letters)


@dataclass(frozen=True)
class GroupPreset:
    """A group given by generator matrices together with its symbol tables"""
    name: str
    description: str
    membership: str
    level: int
    generators: Dict[str, ScaledMat]
    group: GroupData
    orders: Dict[str, int] = field(default_factory=dict)
    homology: Dict[str, Tuple[int, int]] = field(default_factory=dict)
    homology_pair: Optional[Tuple[str, str]] = None
    symbols: Dict[str, Fraction] = field(default_factory=dict)
    # cusp name -> generator -> AffineModZ
    star: Dict[str, Dict[str, object]] = field(default_factory=dict)
    kappa: Optional[Fraction] = None
    negation: Tuple[Letter, ...] = ()
    relations: Tuple[Tuple[Tuple[Letter, ...], ScaledMat], ...] = ()
    base_point: Tuple[Fraction, Fraction] = (Fraction(1, 2), Fraction(6, 5))

    @property
    def search_alphabet(self) -> Tuple[str, ...]:
        """Generators used by the search and by random words; the negation letter is central"""
        negation_names = {letter.name for letter in self.negation} if len(self.negation) == 1 else set()
        return tuple(name for name in self.generators if name not in negation_names)

    def contains(self, M: ScaledMat) -> bool:
        if self.membership == "sl2z":
            return is_sl2z(M)
        if self.membership == "gamma0":
            return in_gamma0(M, self.level)
        if self.membership == "gamma0_plus":
            return in_gamma0_plus(M, self.level)
        raise ArgumentError(f"unknown membership predicate {self.membership!r}")

    def word(self, letters) -> Word:
        return Word(tuple(letters), self.name)


def parse_word(preset: GroupPreset, text: str) -> Word:
    """Parse 'A B^-1 P0' into a word over the preset alphabet"""
    letters = []
    for token in (text or "").split():
        match = _TOKEN_RE.match(token)
        name, power = match.group(1), int(match.group(2)) if match.group(2) else 1
        if name not in preset.generators:
            raise AlphabetError(f"unknown generator {name!r} for preset {preset.name}")
        if power:
            letters.append(Letter(name, power))
    return preset.word(letters)


def _check_alphabet(preset: GroupPreset, w: Word) -> None:
    if w.alphabet and w.alphabet != preset.name:
        raise AlphabetError(f"word over {w.alphabet!r} used with preset {preset.name!r}")
    for letter in w.letters:
        if letter.name not in preset.generators:
            raise AlphabetError(f"unknown generator {letter.name!r} for preset {preset.name}")


def eval_word(preset: GroupPreset, w: Word) -> ScaledMat:
    _check_alphabet(preset, w)
    result = IDENTITY
    for letter in w.letters:
        result = mat_mul(result, mat_pow(preset.generators[letter.name], letter.power))
    return result


def exponent_sums(w: Word, pair: Tuple[str, str]) -> Tuple[int, int]:
    first, second = pair
    m = sum(letter.power for letter in w.letters if letter.name == first)
    n = sum(letter.power for letter in w.letters if letter.name == second)
    return m, n


def random_word(preset: GroupPreset, length: int, seed: int) -> Word:
    """Uniform letters over alphabet x {+1,-1} with no immediate cancellation"""
    if length < 0:
        raise ArgumentError(f"word length must be non-negative, got {length}")
    rng = np.random.default_rng(seed)
    names = preset.search_alphabet
    letters: List[Letter] = []
    while len(letters) < length:
        letter = Letter(names[int(rng.integers(len(names)))], 1 if rng.integers(2) else -1)
        if letters and letters[-1] == letter.inverse():
            continue
        letters.append(letter)
    return preset.word(letters)


def sl2z_word(M: ScaledMat, alphabet: str = "sl2z") -> Word:
    """
    Continued-fraction decomposition M = [-I] T^q1 S T^q2 S ... T^k.

    Each round peels T^q S off the left with q = floor(a/c), which replaces
    the lower-left entry by minus the remainder of a modulo c.
    """
    if not is_sl2z(M):
        raise MembershipError(f"{format_matrix(M)} is not in SL(2,Z)")
    letters: List[Letter] = []
    a, b, c, d = M.a, M.b, M.c, M.d
    while c != 0:
        q = a // c
        if q:
            letters.append(Letter("T", q))
        letters.append(Letter("S", 1))
        a, b, c, d = c, d, -(a - q * c), -(b - q * d)
    negate = d < 0
    shift = b * d
    if shift:
        letters.append(Letter("T", shift))
    if negate:
        letters.insert(0, Letter("-I", 1))
    return Word(tuple(letters), alphabet)


def displacement_key(X: ScaledMat, base_point: Tuple[Fraction, Fraction], scale: int) -> int:
    """
    Integer monotone in the hyperbolic displacement d(X z0, z0).

    cosh d = 1 + |c z0^2 - (a - d) z0 - b|^2 / (2 e y0^2), cleared of
    denominators; scale is a common multiple of every scale e in the group.
    """
    x0, y0 = base_point
    den = x0.denominator * y0.denominator
    xn, yn = int(x0 * den), int(y0 * den)
    trace_gap = X.a - X.d
    re = X.c * (xn * xn - yn * yn) - trace_gap * xn * den - X.b * den * den
    im = 2 * X.c * xn * yn - trace_gap * yn * den
    return (re * re + im * im) * (scale // X.e)


def solve_word(preset: GroupPreset, M: ScaledMat, budget: Optional[int] = None) -> Word:
    """Find a word over the preset generators evaluating exactly to M"""
    if not preset.contains(M):
        raise MembershipError(f"{format_matrix(M)} is not in the group of preset {preset.name}")
    if preset.membership == "sl2z":
        return sl2z_word(M, preset.name)

    if budget is None:
        budget = get_config().search.budget
    scale = preset.level if preset.membership == "gamma0_plus" else 1
    moves = []
    for name in preset.search_alphabet:
        g = preset.generators[name]
        for power in (1, -1):
            moves.append((Letter(name, power), mat_pow(g, -power)))

    counter = itertools.count()
    start_key = M.psl_key()
    parents: Dict[tuple, Tuple[Optional[tuple], Optional[Letter]]] = {start_key: (None, None)}
    heap = [(displacement_key(M, preset.base_point, scale), next(counter), start_key, M)]
    expanded = 0

    while heap:
        _, _, key, X = heapq.heappop(heap)
        if X.is_scalar():
            word = _rebuild(preset, parents, key)
            logger.debug("solve_word %s: %d letters after %d expansions", format_matrix(M), len(word), expanded)
            return _fix_sign(preset, word, M)
        expanded += 1
        if expanded > budget:
            break
        for letter, multiplier in moves:
            Y = mat_mul(multiplier, X)
            child_key = Y.psl_key()
            if child_key in parents:
                continue
            parents[child_key] = (key, letter)
            heapq.heappush(heap, (displacement_key(Y, preset.base_point, scale), next(counter), child_key, Y))

    logger.warning("solve_word %s: budget of %d nodes exhausted", format_matrix(M), budget)
    raise SearchBudgetExceeded(
        f"no word for {format_matrix(M)} in preset {preset.name} within {budget} nodes"
    )


def _rebuild(preset: GroupPreset, parents, key) -> Word:
    letters: List[Letter] = []
    while True:
        parent, letter = parents[key]
        if parent is None:
            break
        letters.append(letter)
        key = parent
    letters.reverse()
    return preset.word(letters)


def _fix_sign(preset: GroupPreset, word: Word, M: ScaledMat) -> Word:
    value = eval_word(preset, word)
    if value == M:
        return word
    fixed = preset.word(preset.negation) + word
    assert eval_word(preset, fixed) == M, f"word search produced {fixed} for {format_matrix(M)}"
    return fixed
