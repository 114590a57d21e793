"""
Modular Dedekind symbols for the moonshine groups Gamma_0(N)+
Divisor average on Gamma_0(N), the squaring route for Atkin-Lehner cosets, and the closed form at prime level
"""

from fractions import Fraction

from sympy import isprime

from .dedekind_sum import s_fast
from .exact_core import ScaledMat, arith, format_matrix, in_gamma0, in_gamma0_plus, mat_mul, squarefree
from .exceptions import ArgumentError, MembershipError
from .phase import omega_petersson, sgn
from .symbols_classical import RootOfUnity, S_sl2z


def _require_squarefree(N: int) -> None:
    if N <= 0 or not squarefree(N):
        raise ArgumentError(f"Gamma_0(N)+ needs a squarefree level, got {N}")


def S_plus_on_congruence(N: int, M: ScaledMat) -> Fraction:
    """(1/2^r) sum over v | N of S(gamma_v), gamma_v = (a, b v; c/v, d)"""
    _require_squarefree(N)
    if not in_gamma0(M, N):
        raise MembershipError(f"{format_matrix(M)} is not in Gamma_0({N})")
    data = arith(N)
    total = sum(
        (S_sl2z(ScaledMat(M.a, M.b * v, M.c // v, M.d)) for v in data.divisors),
        Fraction(0),
    )
    return total / 2 ** len(data.prime_factors)


def S_plus(N: int, M: ScaledMat) -> Fraction:
    _require_squarefree(N)
    if not in_gamma0_plus(M, N):
        raise MembershipError(f"{format_matrix(M)} is not in Gamma_0({N})+")
    if M.e == 1:
        return S_plus_on_congruence(N, M)
    square = mat_mul(M, M)
    return (S_plus_on_congruence(N, square) - omega_petersson(M, M)) / 2


def eta_multiplier_plus(N: int, M: ScaledMat) -> RootOfUnity:
    return RootOfUnity.from_exponent(S_plus(N, M))


def S_plus_prime(p: int, M: ScaledMat) -> Fraction:
    """Closed form on Gamma_0(p)+ for the two cosets v = 1 and v = p"""
    if not isprime(p):
        raise ArgumentError(f"closed form needs a prime level, got {p}")
    if M.e == 1:
        if M.c % p:
            raise MembershipError(f"{format_matrix(M)} is not in Gamma_0({p})")
        return _plus_prime_trivial_coset(p, M.a, M.b, M.c // p, M.d)
    if M.e == p and M.a % p == 0 and M.c % p == 0 and M.d % p == 0:
        return _plus_prime_fricke_coset(p, M.a // p, M.b, M.c // p, M.d // p)
    raise MembershipError(f"{format_matrix(M)} is not of the shape (a p, b; c p, d p; p) or (a, b; c p, d)")


def _plus_prime_trivial_coset(p: int, a: int, b: int, c: int, d: int) -> Fraction:
    if c == 0:
        return Fraction(b * (p + 1), 24 * d) + Fraction(sgn(d) - 1, 4)
    sc = sgn(c)
    return (
        Fraction((a + d) * (p + 1), 24 * c * p)
        - Fraction(sc, 4)
        - Fraction(sc, 2) * (s_fast(d, abs(c)) + s_fast(d, abs(c * p)))
    )


def _plus_prime_fricke_coset(p: int, a: int, b: int, c: int, d: int) -> Fraction:
    # a d p - b c = 1 for the matrix (a p, b; c p, d p)/sqrt(p)
    if d == 0:
        return Fraction(a * (p + 1), 24 * c) - Fraction(sgn(c), 4)
    sd = sgn(d)
    value = (
        Fraction((b - c) * (p + 1), 24 * d * p)
        + Fraction(sd, 4)
        + Fraction(sd, 2) * (s_fast(c, abs(d)) + s_fast(c, abs(d * p)))
    )
    if d < 0 and c < 0:
        return value + Fraction(3, 4)
    return value - Fraction(1, 4)
