"""
Modular Dedekind symbols for Gamma_0(N)
Symbols at the cusps infinity and 0, parabolic and elliptic laws, and the involutions iota, Fricke, Atkin-Lehner
"""

import math
from fractions import Fraction
from typing import Tuple

from .dedekind_sum import s_fast
from .exact_core import (
    IDENTITY,
    ScaledMat,
    arith,
    format_matrix,
    in_gamma0,
    mat_inv,
    mat_mul,
    tau,
)
from .exceptions import ArgumentError, MembershipError
from .phase import omega_petersson, sgn
from .symbols_classical import RootOfUnity


def _require_gamma0(N: int, M: ScaledMat) -> None:
    if N <= 0:
        raise ArgumentError(f"level must be positive, got {N}")
    if not in_gamma0(M, N):
        raise MembershipError(f"{format_matrix(M)} is not in Gamma_0({N})")


def S_gamma0(N: int, M: ScaledMat) -> Fraction:
    """Symbol of Gamma_0(N) at the cusp infinity"""
    _require_gamma0(N, M)
    data = arith(N)
    a, b, c, d = M.a, M.b, M.c, M.d
    if c == 0:
        return Fraction(N * b, 12 * d) * data.beta + Fraction(sgn(d) - 1, 4)
    total = Fraction(N * (a + d), 12 * c) * data.beta - Fraction(sgn(c), 4)
    correction = Fraction(0)
    for v in data.divisors:
        mu = data.mobius[v]
        if mu:
            correction += Fraction(mu, v) * s_fast(d, v * abs(c) // N)
    return total - sgn(c) * data.alpha * correction


def eta_multiplier_gamma0(N: int, M: ScaledMat) -> RootOfUnity:
    return RootOfUnity.from_exponent(S_gamma0(N, M))


def iota(M: ScaledMat) -> ScaledMat:
    return ScaledMat(M.a, -M.b, -M.c, M.d, M.e)


def fricke(N: int, M: ScaledMat) -> ScaledMat:
    """w_N(M) = tau_N M tau_N^-1"""
    _require_gamma0(N, M)
    return ScaledMat(M.d, -(M.c // N), -M.b * N, M.a)


def S_cusp_pair(s_a: Fraction, gamma: ScaledMat, sigma_b: ScaledMat) -> Fraction:
    """
    Move the second cusp of a symbol: from S_a(gamma) to S_ab(gamma), where
    sigma_b is a scaling matrix of the cusp b.
    """
    sigma_inv = mat_inv(sigma_b)
    gamma_b = mat_mul(mat_mul(sigma_inv, gamma), sigma_b)
    return s_a + omega_petersson(sigma_inv, gamma) - omega_petersson(gamma_b, sigma_inv)


def S_cusp0(N: int, M: ScaledMat) -> Fraction:
    """Symbol of Gamma_0(N) at the cusp 0, with scaling matrix tau_N"""
    w = fricke(N, M)
    return S_cusp_pair(S_gamma0(N, w), w, tau(N))


def parabolic_form(gamma: ScaledMat, sigma: ScaledMat = IDENTITY) -> Tuple[ScaledMat, int]:
    """
    Conjugate gamma by its cusp's scaling matrix and read off the width h from
    sigma^-1 gamma sigma = +-(1 h; 0 1).
    """
    gamma_b = mat_mul(mat_mul(mat_inv(sigma), gamma), sigma)
    if gamma_b.e != 1 or gamma_b.c != 0 or gamma_b.a != gamma_b.d or abs(gamma_b.d) != 1:
        raise ArgumentError(f"{format_matrix(gamma)} does not fix the cusp of the given scaling matrix")
    return gamma_b, gamma_b.b * gamma_b.d


def _parabolic_branch(gamma: ScaledMat, sigma: ScaledMat) -> Fraction:
    # -Log j(gamma_b, i)/(2 pi i) and the two phase corrections
    gamma_b, _ = parabolic_form(gamma, sigma)
    sigma_inv = mat_inv(sigma)
    log_term = Fraction(-1, 2) if gamma_b.d < 0 else Fraction(0)
    return log_term - omega_petersson(sigma_inv, gamma) + omega_petersson(gamma_b, sigma_inv)


def S_parabolic(volume: Fraction, same_cusp: bool, gamma: ScaledMat, sigma: ScaledMat = IDENTITY) -> Fraction:
    """
    Symbol of a parabolic element from the group volume (coefficient of pi).
    For sigma^-1 gamma sigma = (1 h; 0 1) and sigma = I this is delta V h/(4 pi).
    """
    _, h = parabolic_form(gamma, sigma)
    delta = Fraction(volume) * h / 4 if same_cusp else Fraction(0)
    return delta + _parabolic_branch(gamma, sigma)


def S_elliptic(E: ScaledMat, r: int) -> Fraction:
    if r <= 0:
        raise ArgumentError(f"order must be positive, got {r}")
    powers = [E]
    for _ in range(r - 1):
        powers.append(mat_mul(powers[-1], E))
    if powers[-1] != IDENTITY:
        raise ArgumentError(f"{format_matrix(E)} does not satisfy E^{r} = I")
    total = sum(omega_petersson(powers[k - 1], E) for k in range(1, r))
    return Fraction(-total, r)


def atkin_lehner_matrix(N: int, v: int) -> ScaledMat:
    """
    An Atkin-Lehner matrix (1/sqrt v)(a v, b; N c, v d) with a d v^2 - N c b = v.
    v = N gives tau_N and v = 1 the identity; otherwise a = c = 1 and b is the
    smallest non-negative solution.
    """
    cofactor = _check_hall_divisor(N, v)
    if v == 1:
        return IDENTITY
    if v == N:
        return tau(N)
    b = (-pow(cofactor, -1, v)) % v
    d = (1 + b * cofactor) // v
    return ScaledMat(v, b, N, v * d, v)


def cusp_scaling(N: int, v: int) -> ScaledMat:
    """Scaling matrix (1/sqrt v1)(v1, b; N, d v1) of the cusp 1/v, v1 = N/v"""
    v1 = _check_hall_divisor(N, v)
    b = (-pow(v, -1, v1)) % v1
    d = (1 + v * b) // v1
    return ScaledMat(v1, b, N, d * v1, v1)


def _check_hall_divisor(N: int, v: int) -> int:
    if N <= 0 or v <= 0 or N % v:
        raise ArgumentError(f"{v} is not a divisor of {N}")
    cofactor = N // v
    if math.gcd(v, cofactor) != 1:
        raise ArgumentError(f"gcd({v}, {cofactor}) != 1 for level {N}")
    return cofactor
