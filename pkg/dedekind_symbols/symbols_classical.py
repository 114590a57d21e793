"""
Classical modular Dedekind symbol
S on SL(2,Z), Rademacher's Phi, R and Psi, and the eta multiplier as a root of unity
"""

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .dedekind_sum import s_fast
from .exact_core import ScaledMat, format_matrix, is_sl2z
from .exceptions import MembershipError
from .phase import sgn


@dataclass(frozen=True)
class RootOfUnity:
    """exp(pi i num/den), with num reduced modulo 2 den"""
    numerator: int
    denominator: int

    def __post_init__(self):
        frac = Fraction(self.numerator, self.denominator)
        num, den = frac.numerator, frac.denominator
        object.__setattr__(self, "numerator", num % (2 * den))
        object.__setattr__(self, "denominator", den)

    @classmethod
    def from_exponent(cls, exponent: Fraction) -> "RootOfUnity":
        """The root exp(pi i exponent)"""
        exponent = Fraction(exponent)
        return cls(exponent.numerator, exponent.denominator)

    @property
    def order(self) -> int:
        return Fraction(self.numerator, 2 * self.denominator).denominator

    def to_complex(self) -> complex:
        return cmath.exp(1j * math.pi * self.numerator / self.denominator)

    def __str__(self) -> str:
        if self.numerator == 0:
            return "1"
        return f"exp(pi*i*{self.numerator}/{self.denominator})"


def _require_sl2z(M: ScaledMat) -> None:
    if not is_sl2z(M):
        raise MembershipError(f"{format_matrix(M)} is not in SL(2,Z)")


def S_sl2z(M: ScaledMat) -> Fraction:
    _require_sl2z(M)
    a, b, c, d = M.a, M.b, M.c, M.d
    if c != 0:
        return Fraction(a + d, 12 * c) - sgn(c) * (Fraction(1, 4) + s_fast(d, abs(c)))
    return Fraction(b, 12 * d) + Fraction(sgn(d) - 1, 4)


def rademacher_R(M: ScaledMat) -> int:
    _require_sl2z(M)
    return sgn(M.c) if M.c != 0 else sgn(M.d) - 1


def rademacher_Phi(M: ScaledMat) -> int:
    """
    Rademacher's Phi. For c != 0 this is 12 (S + R/4); for c = 0 it is b*d.
    """
    if M.c == 0:
        _require_sl2z(M)
        # not 12 (S + R/4), which gives -12 at -I; b*d keeps Phi(-I) = 0 and Phi(-M) = Phi(M)
        return M.b * M.d
    value = 12 * (S_sl2z(M) + Fraction(rademacher_R(M), 4))
    assert value.denominator == 1, f"non-integral Phi {value} for {format_matrix(M)}"
    return int(value)


def rademacher_Psi(M: ScaledMat) -> int:
    return rademacher_Phi(M) - 3 * sgn(M.c * M.trace)


def eta_multiplier(M: ScaledMat) -> RootOfUnity:
    return RootOfUnity.from_exponent(S_sl2z(M))
