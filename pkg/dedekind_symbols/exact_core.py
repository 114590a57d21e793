"""
Exact arithmetic core
Rationals modulo Z, scaled integer matrices, arithmetic functions and group volume data
"""

from __future__ import annotations

import math
import operator
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional, Tuple

from sympy import divisors, factorint

from .exceptions import ArgumentError, MatrixFormatError

_MATRIX_RE = re.compile(r"^([+-]?\d+),([+-]?\d+),([+-]?\d+),([+-]?\d+)(?:;([+-]?\d+))?$")


@dataclass(frozen=True)
class ModZ:
    """A rational number in R/Z, represented in [0, 1)"""
    value: Fraction

    def __post_init__(self):
        v = Fraction(self.value)
        object.__setattr__(self, "value", v - math.floor(v))

    def __add__(self, other):
        if isinstance(other, ModZ):
            return ModZ(self.value + other.value)
        if isinstance(other, (int, Fraction)):
            return ModZ(self.value + other)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, ModZ):
            return ModZ(self.value - other.value)
        if isinstance(other, (int, Fraction)):
            return ModZ(self.value - other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return ModZ(other - self.value)
        return NotImplemented

    def __neg__(self) -> "ModZ":
        return ModZ(-self.value)

    def __mul__(self, k):
        if isinstance(k, int) and not isinstance(k, bool):
            return ModZ(self.value * k)
        return NotImplemented

    __rmul__ = __mul__

    @property
    def denominator(self) -> int:
        return self.value.denominator

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self) -> str:
        return f"{self.value} (mod 1)"


def _normalize(a: int, b: int, c: int, d: int, e: int) -> Tuple[int, int, int, int, int]:
    # largest g dividing every entry with g^2 | e
    g = math.gcd(math.gcd(a, b), math.gcd(c, d))
    t = math.gcd(g, e)
    if t == 1:
        return a, b, c, d, e
    best = max(x for x in divisors(t) if e % (x * x) == 0)
    return a // best, b // best, c // best, d // best, e // (best * best)


@dataclass(frozen=True)
class ScaledMat:
    """
    The real matrix (1/sqrt(e)) * (a b; c d) of determinant one.

    Entries are integers with a*d - b*c = e > 0. The stored form is normalized,
    so two instances are equal exactly when they represent the same real matrix.
    """
    a: int
    b: int
    c: int
    d: int
    e: int = 1

    def __post_init__(self):
        try:
            a, b, c, d, e = (operator.index(getattr(self, name)) for name in ("a", "b", "c", "d", "e"))
        except TypeError:
            raise ArgumentError(f"matrix entries must be integers: {self.a},{self.b},{self.c},{self.d};{self.e}") from None
        if e <= 0:
            raise ArgumentError(f"matrix scale must be positive, got {e}")
        if a * d - b * c != e:
            raise ArgumentError(f"determinant of {a},{b},{c},{d} is {a * d - b * c}, expected scale {e}")
        for name, value in zip(("a", "b", "c", "d", "e"), _normalize(a, b, c, d, e)):
            object.__setattr__(self, name, value)

    @property
    def trace(self) -> int:
        """Integer trace; the real trace is this divided by sqrt(e)"""
        return self.a + self.d

    def __matmul__(self, other: "ScaledMat") -> "ScaledMat":
        return mat_mul(self, other)

    def __neg__(self) -> "ScaledMat":
        return ScaledMat(-self.a, -self.b, -self.c, -self.d, self.e)

    def inverse(self) -> "ScaledMat":
        return mat_inv(self)

    def is_scalar(self) -> bool:
        """True for I and -I"""
        return self.b == 0 and self.c == 0 and self.a == self.d

    def psl_key(self) -> Tuple[int, int, int, int, int]:
        """Key identifying the matrix up to sign"""
        if self.c < 0 or (self.c == 0 and self.d < 0):
            return (-self.a, -self.b, -self.c, -self.d, self.e)
        return (self.a, self.b, self.c, self.d, self.e)

    def act(self, z: complex) -> complex:
        """Mobius action on the upper half plane"""
        return (self.a * z + self.b) / (self.c * z + self.d)

    def j(self, z: complex) -> complex:
        """Automorphy factor c z + d of the real matrix"""
        return (self.c * z + self.d) / math.sqrt(self.e)

    def __str__(self) -> str:
        return format_matrix(self)


IDENTITY = ScaledMat(1, 0, 0, 1)
NEG_I = ScaledMat(-1, 0, 0, -1)
S_MATRIX = ScaledMat(0, -1, 1, 0)
T_MATRIX = ScaledMat(1, 1, 0, 1)


def identity() -> ScaledMat:
    return IDENTITY


def tau(N: int) -> ScaledMat:
    """Fricke matrix (0 -1; N 0)/sqrt(N)"""
    if N <= 0:
        raise ArgumentError(f"level must be positive, got {N}")
    return ScaledMat(0, -1, N, 0, N)


def mat_mul(x: ScaledMat, y: ScaledMat) -> ScaledMat:
    return ScaledMat(
        x.a * y.a + x.b * y.c,
        x.a * y.b + x.b * y.d,
        x.c * y.a + x.d * y.c,
        x.c * y.b + x.d * y.d,
        x.e * y.e,
    )


def mat_inv(x: ScaledMat) -> ScaledMat:
    return ScaledMat(x.d, -x.b, -x.c, x.a, x.e)


def mat_pow(x: ScaledMat, k: int) -> ScaledMat:
    if k < 0:
        x, k = mat_inv(x), -k
    result = IDENTITY
    while k:
        if k & 1:
            result = mat_mul(result, x)
        x = mat_mul(x, x)
        k >>= 1
    return result


def mat_neg(x: ScaledMat) -> ScaledMat:
    return -x


def parse_matrix(text: str) -> ScaledMat:
    """Parse 'a,b,c,d' or 'a,b,c,d;e' (whitespace ignored)"""
    compact = re.sub(r"\s+", "", text or "")
    match = _MATRIX_RE.match(compact)
    if not match:
        raise MatrixFormatError(f"malformed matrix {text!r}: expected 'a,b,c,d' or 'a,b,c,d;e'")
    a, b, c, d = (int(match.group(i)) for i in range(1, 5))
    e = int(match.group(5)) if match.group(5) is not None else 1
    try:
        return ScaledMat(a, b, c, d, e)
    except ArgumentError as exc:
        raise MatrixFormatError(f"invalid matrix {text!r}: {exc}") from None


def format_matrix(x: ScaledMat) -> str:
    body = f"{x.a},{x.b},{x.c},{x.d}"
    return body if x.e == 1 else f"{body};{x.e}"


def is_sl2z(x: ScaledMat) -> bool:
    return x.e == 1


def in_gamma0(x: ScaledMat, N: int) -> bool:
    return x.e == 1 and x.c % N == 0


def squarefree(N: int) -> bool:
    if N <= 0:
        raise ArgumentError(f"level must be positive, got {N}")
    return all(exp == 1 for exp in factorint(N).values())


def in_gamma0_plus(x: ScaledMat, N: int) -> bool:
    if not squarefree(N):
        raise ArgumentError(f"Gamma_0(N)+ needs a squarefree level, got {N}")
    e = x.e
    return N % e == 0 and x.a % e == 0 and x.d % e == 0 and x.c % N == 0


def mobius(n: int) -> int:
    exponents = factorint(n).values()
    if any(exp > 1 for exp in exponents):
        return 0
    return -1 if len(exponents) % 2 else 1


_GROUP_RE = re.compile(r"^gamma0-(\d+)(plus)?$")


@dataclass(frozen=True)
class GroupId:
    """Parsed group id: 'sl2z', 'gamma0-N' or 'gamma0-Nplus'"""
    membership: str
    level: int = 1

    def contains(self, x: ScaledMat) -> bool:
        if self.membership == "sl2z":
            return is_sl2z(x)
        if self.membership == "gamma0":
            return in_gamma0(x, self.level)
        return in_gamma0_plus(x, self.level)

    def __str__(self) -> str:
        if self.membership == "sl2z":
            return "sl2z"
        suffix = "plus" if self.membership == "gamma0_plus" else ""
        return f"gamma0-{self.level}{suffix}"


def parse_group(text: str) -> GroupId:
    if text == "sl2z":
        return GroupId("sl2z")
    match = _GROUP_RE.match(text or "")
    if not match or int(match.group(1)) < 1:
        raise ArgumentError(f"unknown group {text!r}; use sl2z, gamma0-N or gamma0-Nplus")
    level = int(match.group(1))
    if match.group(2):
        if not squarefree(level):
            raise ArgumentError(f"Gamma_0(N)+ needs a squarefree level, got {level}")
        return GroupId("gamma0_plus", level)
    return GroupId("gamma0", level)


@dataclass(frozen=True)
class Cusp:
    """A cusp p/q in lowest terms; q = 0 is infinity"""
    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if p == 0 and q == 0:
            raise ArgumentError("0/0 is not a cusp")
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        g = math.gcd(p, q)
        object.__setattr__(self, "p", p // g)
        object.__setattr__(self, "q", q // g)

    @classmethod
    def of_matrix(cls, sigma: ScaledMat) -> "Cusp":
        """The cusp sigma * infinity"""
        return cls(sigma.a, sigma.c)

    def is_infinity(self) -> bool:
        return self.q == 0

    def __str__(self) -> str:
        if self.q == 0:
            return "inf"
        return str(self.p) if self.q == 1 else f"{self.p}/{self.q}"


@dataclass(frozen=True)
class GroupData:
    """Signature of a Fuchsian group; volume is the coefficient of pi"""
    genus: int
    cusps: int
    elliptic_orders: Tuple[int, ...] = ()
    volume: Optional[Fraction] = None

    def __post_init__(self):
        object.__setattr__(self, "elliptic_orders", tuple(self.elliptic_orders))
        if self.volume is None:
            object.__setattr__(self, "volume", 2 * self.euler_characteristic())
        else:
            object.__setattr__(self, "volume", Fraction(self.volume))

    def euler_characteristic(self) -> Fraction:
        """2g - 2 + c + sum(1 - 1/m)"""
        total = Fraction(2 * self.genus - 2 + self.cusps)
        for m in self.elliptic_orders:
            total += 1 - Fraction(1, m)
        return total

    def gauss_bonnet_ok(self) -> bool:
        return self.volume / 2 == self.euler_characteristic()


@dataclass(frozen=True)
class ArithData:
    """Arithmetic data of a level N"""
    n: int
    divisors: Tuple[int, ...]
    mobius: Dict[int, int]
    prime_factors: Tuple[int, ...]
    sigma: int
    alpha: Fraction
    beta: Fraction
    psi: int
    volume_gamma0: Fraction
    volume_plus: Optional[Fraction]
    ell: Optional[int]

    @property
    def squarefree(self) -> bool:
        return self.volume_plus is not None


@lru_cache(maxsize=256)
def arith(N: int) -> ArithData:
    if N <= 0:
        raise ArgumentError(f"level must be positive, got {N}")
    factors = factorint(N)
    primes = tuple(sorted(factors))
    divs = tuple(divisors(N))
    alpha = Fraction(1)
    beta = Fraction(1)
    psi = Fraction(N)
    for p in primes:
        alpha *= Fraction(p, p - 1)
        beta *= 1 + Fraction(1, p)
        psi *= 1 + Fraction(1, p)
    volume_gamma0 = psi / 3
    is_squarefree = all(exp == 1 for exp in factors.values())
    sigma = sum(divs)
    return ArithData(
        n=N,
        divisors=divs,
        mobius={v: mobius(v) for v in divs},
        prime_factors=primes,
        sigma=sigma,
        alpha=alpha,
        beta=beta,
        psi=int(psi),
        volume_gamma0=volume_gamma0,
        volume_plus=volume_gamma0 / 2 ** len(primes) if is_squarefree else None,
        ell=_ell(len(primes), sigma) if is_squarefree else None,
    )


def _ell(r: int, sigma: int) -> int:
    # root-of-unity order attached to Gamma_0(N)+; recorded, never asserted
    inner = Fraction(2) ** (r - 1) * Fraction(24, math.gcd(24, sigma))
    value = Fraction(2) ** (1 - r) * math.lcm(4, int(inner))
    assert value.denominator == 1
    return int(value)


def ell_N(N: int) -> int:
    data = arith(N)
    if data.ell is None:
        raise ArgumentError(f"Gamma_0(N)+ needs a squarefree level, got {N}")
    return data.ell


def central_binomial_check(n: int) -> bool:
    if n < 0:
        raise ArgumentError(f"n must be non-negative, got {n}")
    total = sum((2 * j + 1) * math.comb(2 * j, j) * math.comb(2 * (n - j), n - j) for j in range(n + 1))
    return total == (n + 1) * 4 ** n
