"""
Classical Dedekind sums
Sawtooth definition and the reciprocity algorithm
"""

import math
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from .exceptions import ArgumentError

_HALF = Fraction(1, 2)
_QUARTER = Fraction(1, 4)


def sawtooth(x) -> Fraction:
    """((x)) = x - floor(x) - 1/2 off the integers, 0 on them"""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - math.floor(x) - _HALF


def _check_args(h: int, k: int) -> None:
    if k <= 0:
        raise ArgumentError(f"Dedekind sum needs k >= 1, got k={k}")
    if math.gcd(h, k) != 1:
        raise ArgumentError(f"Dedekind sum needs gcd(h,k)=1, got h={h}, k={k}")


def s_naive(h: int, k: int) -> Fraction:
    _check_args(h, k)
    return sum((sawtooth(Fraction(h * m, k)) * sawtooth(Fraction(m, k)) for m in range(k)), Fraction(0))


def dedekind_sum_steps(h: int, k: int) -> Tuple[Fraction, int]:
    """
    Dedekind sum s(h, k) by Euclidean descent, together with the number of
    reciprocity steps taken.

    Each step uses s(h,k) + s(k,h) = -1/4 + (h/k + k/h + 1/(hk))/12 with
    0 < h < k, then replaces (h, k) by (k mod h, h). The sign bookkeeping
    collects the alternating contributions.
    """
    _check_args(h, k)
    h %= k
    total = Fraction(0)
    sign = 1
    steps = 0
    while k > 1 and h != 0:
        # k == 1 ends the descent; h == 0 only occurs together with k == 1
        if 2 * h > k:
            # oddness keeps the partial quotients small
            h = k - h
            sign = -sign
        total += sign * (-_QUARTER + (Fraction(h, k) + Fraction(k, h) + Fraction(1, h * k)) / 12)
        sign = -sign
        h, k = k % h, h
        steps += 1
    return total, steps


@lru_cache(maxsize=65536)
def s_fast(h: int, k: int) -> Fraction:
    return dedekind_sum_steps(h, k)[0]


def dedekind_sum(h: int, k: int) -> Fraction:
    """s(h, k) for coprime h and k >= 1"""
    return s_fast(h, k)
