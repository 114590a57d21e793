"""
Higher-order modular Dedekind symbols
S* modulo Z from generator tables and the homology pairing, theta = S* - S, and the Gamma_0(p) to Gamma_0(p)+ transfer
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from sympy import isprime

from .exact_core import IDENTITY, GroupId, ModZ, ScaledMat, format_matrix, in_gamma0, mat_inv, mat_mul, tau
from .exceptions import AlphabetError, ArgumentError, MembershipError
from .phase import omega_petersson, rho
from .symbols_classical import S_sl2z
from .symbols_congruence import S_cusp0, S_cusp_pair, S_elliptic, S_gamma0, _parabolic_branch, iota, parabolic_form
from .symbols_moonshine import S_plus
from .words import GroupPreset, Letter, Word, eval_word, exponent_sums, solve_word

_HALF = Fraction(1, 2)


@dataclass(frozen=True, eq=False)
class AffineModZ:
    """q + n X_B in R/Z, where X_B stands for an undetermined generator value"""
    q: ModZ
    n: int = 0

    def __add__(self, other):
        if isinstance(other, AffineModZ):
            return AffineModZ(self.q + other.q, self.n + other.n)
        if isinstance(other, (ModZ, int, Fraction)):
            return AffineModZ(self.q + other, self.n)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, AffineModZ):
            return AffineModZ(self.q - other.q, self.n - other.n)
        if isinstance(other, (ModZ, int, Fraction)):
            return AffineModZ(self.q - other, self.n)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self) -> "AffineModZ":
        return AffineModZ(-self.q, -self.n)

    def __mul__(self, k):
        if isinstance(k, int) and not isinstance(k, bool):
            return AffineModZ(self.q * k, self.n * k)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, AffineModZ):
            return self.q == other.q and self.n == other.n
        if isinstance(other, ModZ):
            return self.n == 0 and self.q == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.q) if self.n == 0 else hash((self.q, self.n))

    def collapse(self) -> Union[ModZ, "AffineModZ"]:
        return self.q if self.n == 0 else self

    def substitute(self, x_b) -> ModZ:
        return self.q + ModZ(Fraction(x_b)) * self.n

    def __str__(self) -> str:
        if self.n == 0:
            return str(self.q)
        return f"{self.q.value} + {self.n}*X_B (mod 1)"


StarValue = Union[ModZ, AffineModZ]

ZERO = AffineModZ(ModZ(Fraction(0)))


def as_affine(value) -> AffineModZ:
    if isinstance(value, AffineModZ):
        return value
    if isinstance(value, ModZ):
        return AffineModZ(value)
    return AffineModZ(ModZ(Fraction(value)))


@dataclass
class SymbolAccumulator:
    """Left fold of S* over the letters of a word, tracking the homology class"""
    preset: GroupPreset
    cusp: str = "inf"
    value: AffineModZ = ZERO
    m: int = 0
    n: int = 0
    table: dict = field(init=False, repr=False)

    def __post_init__(self):
        if self.preset.kappa is None or self.cusp not in self.preset.star:
            raise ArgumentError(f"preset {self.preset.name} has no higher-order table at cusp {self.cusp!r}")
        self.table = self.preset.star[self.cusp]

    def push(self, letter: Letter) -> None:
        if letter.name not in self.table:
            raise AlphabetError(f"unknown generator {letter.name!r} for preset {self.preset.name}")
        mg, ng = self.preset.homology.get(letter.name, (0, 0))
        k = letter.power
        # a block g^k adds k S*(g) + k kappa (m n_g - n m_g); the pairing inside the block vanishes
        self.value = self.value + self.table[letter.name] * k + self.preset.kappa * k * (self.m * ng - self.n * mg)
        self.m += k * mg
        self.n += k * ng

    def result(self) -> StarValue:
        return self.value.collapse()


def pairing(preset: GroupPreset, w1: Word, w2: Word) -> Fraction:
    if preset.kappa is None or preset.homology_pair is None:
        raise ArgumentError(f"preset {preset.name} carries no pairing constant")
    for w in (w1, w2):
        if w.alphabet and w.alphabet != preset.name:
            raise AlphabetError(f"word over {w.alphabet!r} used with preset {preset.name!r}")
    m1, n1 = exponent_sums(w1, preset.homology_pair)
    m2, n2 = exponent_sums(w2, preset.homology_pair)
    return preset.kappa * (m1 * n2 - n1 * m2)


def S_star(preset: GroupPreset, w: Word, cusp: str = "inf") -> StarValue:
    if w.alphabet and w.alphabet != preset.name:
        raise AlphabetError(f"word over {w.alphabet!r} used with preset {preset.name!r}")
    acc = SymbolAccumulator(preset, cusp)
    for letter in w.letters:
        acc.push(letter)
    return acc.result()


def group_symbol(group: GroupId, M: ScaledMat, cusp: str = "inf") -> Fraction:
    """First-order symbol S of a group at the cusp inf, or at 0 for Gamma_0(N)"""
    if cusp == "inf":
        if group.membership == "sl2z":
            return S_sl2z(M)
        if group.membership == "gamma0":
            return S_gamma0(group.level, M)
        return S_plus(group.level, M)
    if cusp == "0" and group.membership == "gamma0":
        return S_cusp0(group.level, M)
    raise ArgumentError(f"no exact symbol for {group} at cusp {cusp!r}")


def exact_symbol(preset: GroupPreset, M: ScaledMat, cusp: str = "inf") -> Fraction:
    """First-order symbol of the preset group at one of its cusps"""
    return group_symbol(GroupId(preset.membership, preset.level), M, cusp)


def theta(preset: GroupPreset, w: Word, cusp: str = "inf") -> StarValue:
    """theta = S* - S, reduced modulo 1"""
    star = as_affine(S_star(preset, w, cusp))
    return (star - exact_symbol(preset, eval_word(preset, w), cusp)).collapse()


def S_star_parabolic(gamma: ScaledMat, sigma: ScaledMat = IDENTITY) -> Fraction:
    """S* of a parabolic element; zero when sigma^-1 gamma sigma = (1 h; 0 1)"""
    return _parabolic_branch(gamma, sigma)


def S_star_elliptic(E: ScaledMat, r: int) -> Fraction:
    return S_elliptic(E, r)


def theta_parabolic(volume: Fraction, same_cusp: bool, gamma: ScaledMat, sigma: ScaledMat = IDENTITY) -> Fraction:
    _, h = parabolic_form(gamma, sigma)
    return -Fraction(volume) * h / 4 if same_cusp else Fraction(0)


def _require_prime_gamma0(p: int, M: ScaledMat) -> None:
    if not isprime(p):
        raise ArgumentError(f"transfer needs a prime level, got {p}")
    if not in_gamma0(M, p):
        raise MembershipError(f"{format_matrix(M)} is not in Gamma_0({p})")


def transfer_plus(p: int, M: ScaledMat, s_star_on_gamma0):
    """S* on Gamma_0(p)+ from S* on Gamma_0(p) at infinity, via the sign table"""
    _require_prime_gamma0(p, M)
    a, b, c = M.a, M.b, M.c
    if c >= 0 and a <= 0 and b > 0:
        return s_star_on_gamma0 + _HALF
    if c < 0 and a <= 0 and b <= 0:
        return s_star_on_gamma0 - _HALF
    return s_star_on_gamma0


def transfer_plus_phase(p: int, M: ScaledMat) -> Fraction:
    """The same shift from phase factors: (omega(t^-1, M) - omega(t^-1 M t, t^-1))/2"""
    _require_prime_gamma0(p, M)
    t = tau(p)
    t_inv = mat_inv(t)
    conjugate = mat_mul(mat_mul(t_inv, M), t)
    return Fraction(omega_petersson(t_inv, M) - omega_petersson(conjugate, t_inv), 2)


def first_order_mean_gap(p: int, M: ScaledMat) -> Fraction:
    """S_p+(M) minus the mean of S at infinity and S_{infinity 0}; informational"""
    _require_prime_gamma0(p, M)
    s_inf = S_gamma0(p, M)
    s_inf_zero = S_cusp_pair(s_inf, M, tau(p))
    return S_plus(p, M) - (s_inf + s_inf_zero) / 2


def iota_star_check(preset: GroupPreset, w: Word, cusp: str = "inf", budget: Optional[int] = None) -> bool:
    M = eval_word(preset, w)
    image = iota(M)
    if not preset.contains(image):
        raise MembershipError(f"preset {preset.name} is not preserved by iota at {format_matrix(M)}")
    mirrored = solve_word(preset, image, budget)
    lhs = as_affine(S_star(preset, mirrored, cusp))
    rhs = -as_affine(S_star(preset, w, cusp)) - rho(M)
    return lhs == rhs
