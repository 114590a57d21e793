"""
q-series numerics
Eta logarithms, eta products, cusp-form and Eisenstein periods, L-values and floating phase factors
"""

from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import numpy as np

from .config import get_config
from .exact_core import GroupId, ScaledMat, arith, format_matrix, in_gamma0, mat_mul, parse_group
from .exceptions import ArgumentError, ConvergenceError, MembershipError
from .higher_order import group_symbol
from .phase import rho

logger = logging.getLogger(__name__)

TWO_PI = 2 * math.pi
TWO_PI_I = 2j * math.pi

# W_11 eigenvalue of eta(z)^2 eta(11z)^2
F11_EPSILON = -1

# Gamma_0(37)+ newform and its period lattice
F37_PLUS_COEFFICIENTS = (1, -2, -3, 2, -2, 6, -1, 0, 6)
OMEGA_1_37 = 2.993458644
OMEGA_2_37 = 2.451389381j

# bound on |c_n / n| and whether it grows like log n
TAIL_POLICIES = {
    "weight2-cusp": (2.0, False),
    "weight2-eisenstein": (4.8, True),
    "eta-log": (1.0, True),
}


def _tail(policy: str, r: float, T: int) -> float:
    const, grows = TAIL_POLICIES[policy]
    bound = 2 * const * r ** (T + 1) / (1 - r)
    return bound * (1 + math.log(max(T, 1))) if grows else bound


def terms_needed(policy: str, y: float, tol: float, cap: int) -> int:
    """Smallest T whose tail bound at Im z = y is below tol"""
    r = math.exp(-TWO_PI * y)
    if _tail(policy, r, 0) < tol:
        return 0
    T = max(1, int(math.ceil(math.log(tol * (1 - r) / 2) / math.log(r))))
    while _tail(policy, r, T) >= tol:
        T = int(T * 1.1) + 1
        if T > cap:
            raise ConvergenceError(f"series at Im z = {y:.3g} needs more than {cap} terms for tolerance {tol:g}")
    if T > cap:
        raise ConvergenceError(f"series at Im z = {y:.3g} needs {T} terms, budget is {cap}")
    return T


@lru_cache(maxsize=8)
def _divisor_table(size: int, power: int) -> np.ndarray:
    table = np.zeros(size + 1)
    for d in range(1, size + 1):
        table[d::d] += float(d) ** power
    return table


def sigma_table(T: int, power: int) -> np.ndarray:
    """sigma_power(k) for k = 0..T as floats (index 0 is unused)"""
    size = 1 << max(T, 1).bit_length()
    return _divisor_table(size, power)[: T + 1]


def _exp_series(weights: np.ndarray, z: complex, T: int) -> complex:
    """sum_{k=1}^T weights[k] e(k z), with the real part of z reduced modulo 1"""
    if T == 0:
        return 0j
    k = np.arange(1, T + 1)
    x = z.real - math.floor(z.real)
    phases = np.exp(TWO_PI_I * k * x - TWO_PI * k * z.imag)
    return complex(np.dot(weights[1 : T + 1], phases))


def log_eta(z: complex, tol: Optional[float] = None) -> complex:
    """pi i z/12 - sum sigma_{-1}(k) e(k z)"""
    z = complex(z)
    if z.imag <= 0:
        raise ArgumentError(f"log eta needs Im z > 0, got {z}")
    settings = get_config().numerics
    tol = tol or settings.series_tol
    T = terms_needed("eta-log", z.imag, tol, settings.max_terms)
    return 1j * math.pi * z / 12 - _exp_series(sigma_table(T, -1), z, T)


def log_eta_N(N: int, z: complex, tol: Optional[float] = None) -> complex:
    data = arith(N)
    total = sum(Fraction(v, N) * data.mobius[N // v] * log_eta(v * z, tol) for v in data.divisors if data.mobius[N // v])
    return float(data.alpha) * total


def log_eta_plus(N: int, z: complex, tol: Optional[float] = None) -> complex:
    data = arith(N)
    if not data.squarefree:
        raise ArgumentError(f"Gamma_0(N)+ needs a squarefree level, got {N}")
    total = sum(log_eta(v * z, tol) for v in data.divisors)
    return total / 2 ** len(data.prime_factors)


def group_log_eta(group: GroupId, z: complex, tol: Optional[float] = None) -> complex:
    """Logarithm of the eta analogue attached to the group"""
    if group.membership == "sl2z":
        return log_eta(z, tol)
    if group.membership == "gamma0":
        return log_eta_N(group.level, z, tol)
    return log_eta_plus(group.level, z, tol)


def eta_residual(group: str, gamma: ScaledMat, z: complex, tol: Optional[float] = None) -> complex:
    """log eta(gamma z) - log eta(z) - Log j(gamma, z)/2 - pi i S(gamma) for the group's eta analogue"""
    group_id = parse_group(group)
    if not group_id.contains(gamma):
        raise MembershipError(f"{format_matrix(gamma)} is not in {group_id}")
    z = complex(z)
    symbol = group_symbol(group_id, gamma)
    return (
        group_log_eta(group_id, gamma.act(z), tol)
        - group_log_eta(group_id, z, tol)
        - 0.5 * cmath.log(gamma.j(z))
        - 1j * math.pi * float(symbol)
    )


@dataclass(frozen=True)
class QSeries:
    """Truncated q-expansion c_0 + c_1 q + ... + c_T q^T"""
    coefficients: np.ndarray
    tail_policy: str = "weight2-cusp"

    @property
    def terms(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, n: int):
        return self.coefficients[n]

    def terms_needed(self, y: float, tol: float) -> int:
        T = terms_needed(self.tail_policy, y, tol, get_config().numerics.symbol_max_terms)
        if T > self.terms:
            raise ConvergenceError(f"series holds {self.terms} terms, {T} needed at Im z = {y:.3g}")
        return T

    def antiderivative(self, z: complex, T: int) -> complex:
        """2 pi i c_0 z + sum c_n/n e(n z); its derivative is 2 pi i times the series"""
        n = np.arange(1, T + 1)
        weights = np.zeros(T + 1, dtype=complex)
        weights[1:] = self.coefficients[1 : T + 1] / n
        return TWO_PI_I * complex(self.coefficients[0]) * z + _exp_series(weights, z, T)


def _pentagonal(T: int) -> np.ndarray:
    """prod (1 - q^n) up to q^T"""
    coeffs = np.zeros(T + 1, dtype=np.int64)
    k = 0
    while True:
        hit = False
        for j in ((k, -k) if k else (0,)):
            exponent = j * (3 * j - 1) // 2
            if exponent <= T:
                coeffs[exponent] += -1 if j % 2 else 1
                hit = True
        if not hit:
            break
        k += 1
    return coeffs


def _truncated_product(x: np.ndarray, y: np.ndarray, T: int) -> np.ndarray:
    return np.convolve(x, y)[: T + 1]


def _stretch(coeffs: np.ndarray, factor: int, T: int) -> np.ndarray:
    out = np.zeros(T + 1, dtype=coeffs.dtype)
    source = coeffs[: T // factor + 1]
    out[: len(source) * factor : factor] = source
    return out


@lru_cache(maxsize=8)
def f11_coefficients(T: int) -> QSeries:
    """eta(z)^2 eta(11z)^2 = q prod (1 - q^n)^2 (1 - q^11n)^2, coefficients a(0..T)"""
    if T < 1:
        raise ArgumentError(f"need at least one coefficient, got T={T}")
    euler = _pentagonal(T)
    square = _truncated_product(euler, euler, T)
    product = _truncated_product(square, _stretch(square, 11, T), T)
    coeffs = np.zeros(T + 1, dtype=np.int64)
    coeffs[1:] = product[:T]
    return QSeries(coeffs.astype(float), "weight2-cusp")


def _chi12(n: int) -> int:
    r = n % 12
    if r in (1, 11):
        return 1
    if r in (5, 7):
        return -1
    return 0


def f11_coefficients_chi(T: int) -> np.ndarray:
    """
    Integer coefficients a(0..T) of eta(z)^2 eta(11z)^2 from eta(z) = sum chi_12(n) q^(n^2/24).
    Exponents are tracked in units of 1/24.
    """
    size = 24 * T
    theta = np.zeros(size + 1, dtype=np.int64)
    n = 1
    while n * n <= size:
        theta[n * n] = _chi12(n)
        n += 1
    square = _truncated_product(theta, theta, size)
    product = _truncated_product(square, _stretch(square, 11, size), size)
    return product[::24].copy()


def _base_point(gamma: ScaledMat) -> complex:
    # j(gamma, z0) has modulus one, so Im z0 = Im gamma z0 = sqrt(e)/|c|
    return complex(-gamma.d / gamma.c, math.sqrt(gamma.e) / abs(gamma.c))


def modular_symbol(gamma: ScaledMat, series: QSeries, tol: float = 1e-9) -> complex:
    """<gamma, f> = F(gamma z0) - F(z0)"""
    if gamma.c == 0:
        return 0j
    z0 = _base_point(gamma)
    T = series.terms_needed(z0.imag, tol)
    return series.antiderivative(gamma.act(z0), T) - series.antiderivative(z0, T)


def L1(series: QSeries, N: int, eigenvalue: int, tol: float = 1e-12) -> float:
    """L(1, f) = (1 - eps) sum a(n)/n exp(-2 pi n / sqrt N)"""
    if eigenvalue not in (1, -1):
        raise ArgumentError(f"Fricke eigenvalue must be +1 or -1, got {eigenvalue}")
    if eigenvalue == 1:
        logger.warning("eigenvalue +1: the rapidly convergent formula vanishes identically")
        return 0.0
    y = 1 / math.sqrt(N)
    T = series.terms_needed(y, tol)
    n = np.arange(1, T + 1)
    return float(2 * np.sum(series.coefficients[1 : T + 1] / n * np.exp(-TWO_PI * n * y)))


@lru_cache(maxsize=8)
def eisenstein_difference(N: int, T: int) -> QSeries:
    """
    g = -(E_2(z) - N E_2(N z))/(N - 1) for prime N, the weight-2 Eisenstein
    series with constant term 1 at infinity and -1 at 0.
    """
    sigma1 = sigma_table(T, 1)
    coeffs = np.zeros(T + 1)
    coeffs[0] = 1.0
    coeffs[1:] = sigma1[1:]
    coeffs[N::N] -= N * sigma1[1 : T // N + 1]
    coeffs[1:] *= 24.0 / (N - 1)
    return QSeries(coeffs, "weight2-eisenstein")


def e2_period(gamma: ScaledMat, N: int = 11, tol: float = 1e-9) -> complex:
    """<gamma, g> = G(gamma z0) - G(z0) for the Eisenstein series g of level N"""
    if not in_gamma0(gamma, N):
        raise MembershipError(f"{format_matrix(gamma)} is not in Gamma_0({N})")
    series = eisenstein_difference(N, get_config().numerics.symbol_max_terms)
    if gamma.c == 0:
        # translation z -> z + b/d moves only the linear term
        return TWO_PI_I * series[0] * gamma.b / gamma.d
    z0 = _base_point(gamma)
    T = series.terms_needed(z0.imag, tol)
    return series.antiderivative(gamma.act(z0), T) - series.antiderivative(z0, T)


def omega_float(M: ScaledMat, N: ScaledMat, z: complex = 2j) -> int:
    """Phase factor from principal logarithms of automorphy factors"""
    value = (-cmath.log(mat_mul(M, N).j(z)) + cmath.log(M.j(N.act(z))) + cmath.log(N.j(z))) / TWO_PI_I
    nearest = round(value.real)
    if abs(value - nearest) > 1e-6:
        raise ConvergenceError(f"phase factor {value} is not close to an integer")
    return int(nearest)


def log_conj_residual(M: ScaledMat, z: complex) -> complex:
    """Log(conj j(M,z)) - conj Log j(M,z) - 2 pi i rho(M)"""
    j = M.j(complex(z))
    # adding 0j clears a negative zero, so Log(conj j) stays on the principal branch for real j < 0
    return cmath.log(j.conjugate() + 0j) - cmath.log(j).conjugate() - TWO_PI_I * rho(M)


def pairing_volume(symbol_a: complex, symbol_b: complex) -> float:
    """V_f from kappa = 1/2: V_f = pi / Im(<A,f> conj <B,f>)"""
    return math.pi / (symbol_a * symbol_b.conjugate()).imag


def homology_symbol(m: int, n: int, symbol_a: complex, symbol_b: complex) -> complex:
    """<gamma, f> from the homology coordinates of gamma"""
    return m * symbol_a + n * symbol_b


def distance_to_integer(x: float) -> float:
    return abs(x - round(x))


def cusp_change_residual(star_inf, star_zero, symbol: complex, l_value: float, volume: float) -> float:
    """
    Distance to Z of S*_inf - S*_0 - (V_f/pi) L(1,f) Im<gamma,f>.
    The inputs star_inf and star_zero are values modulo 1.
    """
    gap = float(star_inf.value - star_zero.value)
    return distance_to_integer(gap - volume / math.pi * l_value * symbol.imag)


def petersson_norm_37plus() -> float:
    """||f||^2 = omega_1 omega_2 / (4 pi^2 i) for the Gamma_0(37)+ newform"""
    return (OMEGA_1_37 * OMEGA_2_37 / (4 * math.pi ** 2 * 1j)).real
