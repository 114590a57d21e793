"""
Verification suites
Randomized exact and numerical checks of every symbol law, run in-process or over a process pool
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional

import numpy as np

from .config import get_config
from .dedekind_sum import s_fast, s_naive
from .exact_core import (
    NEG_I,
    S_MATRIX,
    T_MATRIX,
    Cusp,
    ModZ,
    ScaledMat,
    arith,
    central_binomial_check,
    ell_N,
    in_gamma0,
    mat_inv,
    mat_mul,
    mat_pow,
    tau,
)
from .exceptions import ConvergenceError, DedekindError
from .higher_order import (
    S_star,
    S_star_parabolic,
    as_affine,
    exact_symbol,
    first_order_mean_gap,
    iota_star_check,
    theta,
    theta_parabolic,
    transfer_plus,
    transfer_plus_phase,
)
from .numerics import (
    F11_EPSILON,
    L1,
    cusp_change_residual,
    e2_period,
    eta_residual,
    f11_coefficients,
    f11_coefficients_chi,
    homology_symbol,
    log_conj_residual,
    modular_symbol,
    omega_float,
    pairing_volume,
    petersson_norm_37plus,
)
from .phase import omega_cases, omega_petersson, omega_self, rho, sgn
from .presets import get_preset
from .schemas import CheckResult, VerifyReport
from .symbols_classical import S_sl2z, eta_multiplier, rademacher_Phi
from .symbols_congruence import S_cusp0, S_elliptic, S_gamma0, S_parabolic, atkin_lehner_matrix, cusp_scaling, iota
from .symbols_moonshine import S_plus, S_plus_prime
from .words import Word, eval_word, exponent_sums, parse_word, random_word, sl2z_word, solve_word

logger = logging.getLogger(__name__)

CONGRUENCE_LEVELS = (11, 14, 15, 17, 19, 21, 37)
PRIME_LEVELS = (2, 3, 5, 7, 11, 37)
PLUS_LEVELS = (2, 3, 5, 6, 37)


@dataclass
class Check:
    """Running tally of one named law over a corpus"""
    name: str
    cases: int = 0
    failed: int = 0
    max_residual: float = 0.0
    detail: str = ""
    informational: bool = False

    def record(self, ok: bool, residual: float = 0.0, detail: str = "") -> None:
        self.cases += 1
        self.max_residual = max(self.max_residual, float(residual))
        if not ok:
            self.failed += 1
            if not self.detail:
                self.detail = detail

    def exact(self, ok: bool, detail: str = "") -> None:
        self.record(ok, 0.0 if ok else 1.0, detail)

    def close(self, residual: float, tol: float, detail: str = "") -> None:
        self.record(residual < tol, residual, detail)

    def result(self) -> CheckResult:
        passed = self.informational or self.failed == 0
        detail = self.detail if self.failed else (self.detail or f"{self.cases} cases")
        return CheckResult(
            name=self.name, passed=passed, max_residual=self.max_residual, cases=self.cases, detail=detail
        )


@dataclass
class SuiteContext:
    rng: np.random.Generator
    seed: int
    count: int
    tol: float

    def word(self, preset, max_length: int) -> Word:
        length = int(self.rng.integers(0, max_length + 1))
        return random_word(preset, length, int(self.rng.integers(2**31)))


def random_gamma0(rng: np.random.Generator, N: int, bound: int) -> ScaledMat:
    """Random element of Gamma_0(N) with |c|, |d| up to about bound"""
    k = int(rng.integers(-(bound // N) - 1, bound // N + 2))
    c = N * k
    if c == 0:
        h = int(rng.integers(-bound, bound + 1))
        M = ScaledMat(1, h, 0, 1)
        return -M if rng.integers(2) else M
    while True:
        d = int(rng.integers(-bound, bound + 1))
        if math.gcd(c, d) == 1:
            break
    a = pow(d, -1, abs(c)) if abs(c) > 1 else 0
    b = (a * d - 1) // c
    t = int(rng.integers(-3, 4))
    return ScaledMat(a + t * c, b + t * d, c, d)


def random_plus(rng: np.random.Generator, N: int, bound: int) -> ScaledMat:
    """Random element of Gamma_0(N)+: a Gamma_0(N) element times a random Atkin-Lehner matrix"""
    v = int(rng.choice(arith(N).divisors))
    return mat_mul(random_gamma0(rng, N, bound), atkin_lehner_matrix(N, v))


def suite_sums(ctx: SuiteContext) -> List[Check]:
    oracle = Check("s_fast equals s_naive")
    bound = min(300, max(30, ctx.count // 3))
    for k in range(2, bound + 1):
        for h in range(1, k):
            if math.gcd(h, k) == 1:
                oracle.exact(s_fast(h, k) == s_naive(h, k), f"s({h},{k})")

    reciprocity = Check("Dedekind reciprocity")
    for _ in range(ctx.count):
        h, k = (int(x) for x in ctx.rng.integers(1, 10**6, size=2))
        if math.gcd(h, k) != 1:
            continue
        expected = (Fraction(h, k) + Fraction(k, h) + Fraction(1, h * k)) / 12 - Fraction(1, 4)
        reciprocity.exact(s_fast(h, k) + s_fast(k, h) == expected, f"s({h},{k}) + s({k},{h})")

    binomial = Check("central binomial identity")
    for n in range(31):
        binomial.exact(central_binomial_check(n), f"n={n}")
    return [oracle, reciprocity, binomial]


def suite_phase(ctx: SuiteContext) -> List[Check]:
    agreement = Check("phase factor: five cases, sign table and logarithms agree")
    inverse = Check("omega(M, M^-1) = rho(M)")
    self_check = Check("omega_self(M) = omega(M, M)")
    cocycle = Check("phase factor cocycle")
    conj = Check("Log of a conjugate automorphy factor")
    for _ in range(ctx.count):
        M, N, K = (random_gamma0(ctx.rng, 1, 40) for _ in range(3))
        exact = omega_petersson(M, N)
        agreement.exact(exact == omega_cases(M, N) == omega_float(M, N), f"{M} and {N}")
        inverse.exact(omega_petersson(M, mat_inv(M)) == rho(M), str(M))
        self_check.exact(omega_self(M) == omega_petersson(M, M), str(M))
        lhs = exact + omega_petersson(mat_mul(M, N), K)
        rhs = omega_petersson(M, mat_mul(N, K)) + omega_petersson(N, K)
        cocycle.exact(lhs == rhs, f"{M}, {N}, {K}")
        z = complex(float(ctx.rng.uniform(-3, 3)), float(ctx.rng.uniform(0.05, 3)))
        conj.close(abs(log_conj_residual(M, z)), ctx.tol, f"{M} at z={z}")

    scaled = Check("phase factor laws on Gamma_0(37)+")
    for _ in range(ctx.count):
        M, N, K = (random_plus(ctx.rng, 37, 30) for _ in range(3))
        exact = omega_petersson(M, N)
        scaled.exact(exact == omega_cases(M, N) == omega_float(M, N), f"{M} and {N}")
        scaled.exact(omega_petersson(M, mat_inv(M)) == rho(M), str(M))
        lhs = exact + omega_petersson(mat_mul(M, N), K)
        rhs = omega_petersson(M, mat_mul(N, K)) + omega_petersson(N, K)
        scaled.exact(lhs == rhs, f"{M}, {N}, {K}")
    return [agreement, inverse, self_check, cocycle, conj, scaled]


def suite_classical(ctx: SuiteContext) -> List[Check]:
    values = Check("classical generator values")
    values.exact(S_sl2z(T_MATRIX) == Fraction(1, 12), "S(T)")
    values.exact(S_sl2z(S_MATRIX) == Fraction(-1, 4), "S(S)")
    values.exact(S_sl2z(NEG_I) == Fraction(-1, 2), "S(-I)")
    values.exact(rademacher_Phi(T_MATRIX) == 1 and rademacher_Phi(S_MATRIX) == 0, "Phi(T), Phi(S)")

    integral = Check("12 S is an integer")
    cocycle = Check("classical cocycle")
    multiplier = Check("eta multiplier is a 24th root of unity")
    phi = Check("Rademacher Phi composition")
    for _ in range(ctx.count):
        M, N = random_gamma0(ctx.rng, 1, 10**6), random_gamma0(ctx.rng, 1, 10**6)
        MN = mat_mul(M, N)
        integral.exact((12 * S_sl2z(M)).denominator == 1, str(M))
        cocycle.exact(S_sl2z(MN) == S_sl2z(M) + S_sl2z(N) + omega_petersson(M, N), f"{M} and {N}")
        multiplier.exact(24 % eta_multiplier(M).order == 0, str(M))
        if M.c and N.c and MN.c:
            expected = rademacher_Phi(M) + rademacher_Phi(N) - 3 * sgn(M.c * N.c * MN.c)
            phi.exact(rademacher_Phi(MN) == expected, f"{M} and {N}")

    swap = Check("reciprocity through the swapped matrix")
    for _ in range(ctx.count // 10 + 1):
        M = random_gamma0(ctx.rng, 1, 10**4)
        if M.c > 0 and M.d > 0:
            swapped = ScaledMat(M.b, -M.a, M.d, -M.c)
            swap.exact(S_sl2z(swapped) == S_sl2z(M) - Fraction(1, 4), str(M))

    parabolic = Check("S(T^h) = h/12")
    for h in range(-12, 13):
        Th = mat_pow(T_MATRIX, h)
        parabolic.exact(S_sl2z(Th) == Fraction(h, 12) == S_parabolic(Fraction(1, 3), True, Th), f"h={h}")
    return [values, integral, cocycle, multiplier, phi, swap, parabolic]


def suite_congruence(ctx: SuiteContext) -> List[Check]:
    preset = get_preset("gamma0-11")
    table = Check("Gamma_0(11) generator values")
    for name, expected in preset.symbols.items():
        table.exact(S_gamma0(11, preset.generators[name]) == expected, name)

    cocycle = Check("Gamma_0(N) cocycle at infinity")
    per_level = max(1, ctx.count // len(CONGRUENCE_LEVELS))
    for N in CONGRUENCE_LEVELS:
        for _ in range(per_level):
            M, K = random_gamma0(ctx.rng, N, 10**4), random_gamma0(ctx.rng, N, 10**4)
            lhs = S_gamma0(N, mat_mul(M, K))
            cocycle.exact(lhs == S_gamma0(N, M) + S_gamma0(N, K) + omega_petersson(M, K), f"N={N}: {M}, {K}")

    cusp0 = Check("Gamma_0(11) cocycle at 0")
    symmetry = Check("iota symmetry")
    denominators = Check("60 S_11 is an integer")
    for _ in range(ctx.count):
        M, K = random_gamma0(ctx.rng, 11, 10**4), random_gamma0(ctx.rng, 11, 10**4)
        lhs = S_cusp0(11, mat_mul(M, K))
        cusp0.exact(lhs == S_cusp0(11, M) + S_cusp0(11, K) + omega_petersson(M, K), f"{M}, {K}")
        symmetry.exact(S_gamma0(11, iota(M)) == -S_gamma0(11, M) - rho(M), str(M))
        g = random_gamma0(ctx.rng, 1, 10**4)
        symmetry.exact(S_sl2z(iota(g)) == -S_sl2z(g) - rho(g), str(g))
        word = ctx.word(preset, 12)
        denominators.exact((60 * S_gamma0(11, eval_word(preset, word))).denominator == 1, str(word))

    elliptic = Check("elliptic generators match the direct formulas")
    for name in ("sl2z", "gamma0-11", "gamma0-37plus"):
        current = get_preset(name)
        for gen, order in current.orders.items():
            E = current.generators[gen]
            elliptic.exact(S_elliptic(E, order) == exact_symbol(current, E), f"{name}: {gen}")
    elliptic.exact(S_elliptic(S_MATRIX, 4) == S_sl2z(S_MATRIX), "S")
    ST = mat_mul(S_MATRIX, T_MATRIX)
    elliptic.exact(S_elliptic(ST, 6) == S_sl2z(ST), "ST")

    parabolic = Check("parabolic law at infinity")
    volume = arith(11).volume_gamma0
    for h in range(-5, 6):
        P = mat_pow(T_MATRIX, h)
        parabolic.exact(S_gamma0(11, P) == S_parabolic(volume, True, P), f"T^{h}")

    normalizer = Check("Atkin-Lehner matrices normalize Gamma_0(N)")
    for N in (6, 14, 15, 21, 37):
        for v in arith(N).divisors:
            m = atkin_lehner_matrix(N, v)
            square = mat_mul(m, m)
            normalizer.exact(square.e == 1 and in_gamma0(square, N), f"m_{v}^2 at N={N}")
            normalizer.exact(Cusp.of_matrix(cusp_scaling(N, v)) == Cusp(1, v), f"sigma_1/{v} at N={N}")
            for _ in range(max(1, ctx.count // 100)):
                g = random_gamma0(ctx.rng, N, 10**3)
                conjugate = mat_mul(mat_mul(m, g), mat_inv(m))
                normalizer.exact(conjugate.e == 1 and in_gamma0(conjugate, N), f"N={N}, v={v}: {g}")
    return [table, cocycle, cusp0, symmetry, denominators, elliptic, parabolic, normalizer]


def suite_moonshine(ctx: SuiteContext) -> List[Check]:
    preset = get_preset("gamma0-37plus")
    table = Check("Gamma_0(37)+ generator values through both routes")
    for name, expected in preset.symbols.items():
        M = preset.generators[name]
        table.exact(S_plus(37, M) == expected == S_plus_prime(37, M), name)

    routes = Check("divisor average agrees with the prime closed form")
    per_level = max(1, ctx.count // len(PRIME_LEVELS))
    for p in PRIME_LEVELS:
        for _ in range(per_level):
            M = random_gamma0(ctx.rng, p, 10**4)
            if ctx.rng.integers(2):
                M = mat_mul(M, tau(p))
            routes.exact(S_plus(p, M) == S_plus_prime(p, M), f"p={p}: {M}")

    cocycle = Check("Gamma_0(37)+ cocycle")
    integral = Check("12 S_37+ is an integer")
    forty_eight = Check("48 S_N+ is an integer")
    for _ in range(ctx.count):
        M, K = random_plus(ctx.rng, 37, 10**4), random_plus(ctx.rng, 37, 10**4)
        lhs = S_plus(37, mat_mul(M, K))
        cocycle.exact(lhs == S_plus(37, M) + S_plus(37, K) + omega_petersson(M, K), f"{M}, {K}")
        word = ctx.word(preset, 12)
        integral.exact((12 * S_plus(37, eval_word(preset, word))).denominator == 1, str(word))
        N = int(ctx.rng.choice(PLUS_LEVELS))
        g = random_plus(ctx.rng, N, 10**4)
        forty_eight.exact((48 * S_plus(N, g)).denominator == 1, f"N={N}: {g}")

    order = Check("root-of-unity order l_N", informational=True)
    order.detail = ", ".join(f"l_{N}={ell_N(N)}" for N in PLUS_LEVELS)
    return [table, routes, cocycle, integral, forty_eight, order]


def suite_words(ctx: SuiteContext) -> List[Check]:
    round_trip = Check("solve_word round trip")
    for name in ("sl2z", "gamma0-11", "gamma0-37plus"):
        preset = get_preset(name)
        for _ in range(ctx.count):
            word = ctx.word(preset, 40)
            M = eval_word(preset, word)
            try:
                solved = solve_word(preset, M)
            except DedekindError as exc:
                round_trip.exact(False, f"{name}: {word}: {exc}")
                continue
            round_trip.exact(eval_word(preset, solved) == M, f"{name}: {word}")

    euclid = Check("sl2z_word on large matrices")
    sl2z = get_preset("sl2z")
    for _ in range(ctx.count * 10):
        M = random_gamma0(ctx.rng, 1, 10**18)
        euclid.exact(eval_word(sl2z, sl2z_word(M)) == M, str(M))

    relations = Check("preset relations")
    for name in ("sl2z", "gamma0-11", "gamma0-37plus"):
        preset = get_preset(name)
        for letters, expected in preset.relations:
            relations.exact(eval_word(preset, preset.word(letters)) == expected, f"{name}: {preset.word(letters)}")

    determinism = Check("random words are reproducible")
    preset = get_preset("gamma0-11")
    determinism.exact(random_word(preset, 25, ctx.seed) == random_word(preset, 25, ctx.seed), f"seed {ctx.seed}")
    return [round_trip, euclid, relations, determinism]


def _third_order(fn, preset, w1: Word, w2: Word, w3: Word):
    return (
        as_affine(fn(preset, w1 + w2 + w3))
        - as_affine(fn(preset, w1 + w2))
        - as_affine(fn(preset, w1 + w3))
        - as_affine(fn(preset, w2 + w3))
        + as_affine(fn(preset, w1))
        + as_affine(fn(preset, w2))
        + as_affine(fn(preset, w3))
    ).collapse()


def suite_higher(ctx: SuiteContext) -> List[Check]:
    p11 = get_preset("gamma0-11")
    p37 = get_preset("gamma0-37plus")
    zero = ModZ(Fraction(0))
    half = Fraction(1, 2)

    well_defined = Check("S* depends only on the matrix")
    tenths = Check("10 S* is an integer on Gamma_0(11)")
    third = Check("third-order identity for S*")
    third_theta = Check("third-order identity for theta")
    inversion = Check("S* and theta under inversion and negation")
    symmetry = Check("iota symmetry of S*")
    unknown = Check("X_B coefficient equals the B exponent sum")

    for _ in range(ctx.count):
        w = ctx.word(p11, 20)
        M = eval_word(p11, w)
        solved = solve_word(p11, M)
        negated = p11.word(p11.negation) + w
        for cusp in ("inf", "0"):
            value = S_star(p11, w, cusp)
            well_defined.exact(value == S_star(p11, solved, cusp), f"{cusp}: {w}")
            tenths.exact(10 % value.denominator == 0, f"{cusp}: {w}")
            inversion.exact(as_affine(S_star(p11, w.inverse(), cusp)) == -as_affine(value), f"inverse at {cusp}: {w}")
            inversion.exact(as_affine(S_star(p11, negated, cusp)) == as_affine(value) - half, f"negation at {cusp}: {w}")
            t = theta(p11, w, cusp)
            inversion.exact(theta(p11, w.inverse(), cusp) == -t, f"theta inverse at {cusp}: {w}")
            inversion.exact(theta(p11, negated, cusp) == t, f"theta negation at {cusp}: {w}")
        symmetry.exact(iota_star_check(p11, w), str(w))

        w1, w2, w3 = (ctx.word(p11, 8) for _ in range(3))
        third.exact(_third_order(S_star, p11, w1, w2, w3) == zero, f"{w1} | {w2} | {w3}")
        third_theta.exact(_third_order(theta, p11, w1, w2, w3) == zero, f"{w1} | {w2} | {w3}")

        v = ctx.word(p37, 12)
        star = as_affine(S_star(p37, v))
        _, n = exponent_sums(v, p37.homology_pair)
        unknown.exact(star.n == n and 24 % star.q.denominator == 0, str(v))
        v_solved = solve_word(p37, eval_word(p37, v))
        well_defined.exact(star == as_affine(S_star(p37, v_solved)), f"gamma0-37plus: {v}")
        u1, u2, u3 = (ctx.word(p37, 6) for _ in range(3))
        third.exact(_third_order(S_star, p37, u1, u2, u3) == zero, f"{u1} | {u2} | {u3}")

    laws = Check("parabolic and elliptic evaluations")
    volume = arith(11).volume_gamma0
    P = p11.generators["Pinf"]
    laws.exact(S_star_parabolic(P) == 0, "S*(Pinf)")
    laws.exact(theta_parabolic(volume, True, P) == -1, "theta(Pinf)")
    laws.exact(theta(p11, p11.word(p11.negation)) == zero, "theta(-I)")
    for gen, order in p37.orders.items():
        laws.exact(p37.star["inf"][gen] == ModZ(S_elliptic(p37.generators[gen], order)), gen)

    transfer = Check("transfer table agrees with phase factors")
    gaps = Check("first-order mean gap at level 37", informational=True)
    seen = set()
    for _ in range(ctx.count):
        p = int(ctx.rng.choice((11, 37)))
        M = random_gamma0(ctx.rng, p, 10**4)
        transfer.exact(transfer_plus(p, M, Fraction(0)) == transfer_plus_phase(p, M), f"p={p}: {M}")
        if p == 37:
            seen.add(first_order_mean_gap(37, M))
    gaps.cases = len(seen)
    gaps.detail = "distinct values: " + ", ".join(str(v) for v in sorted(seen)[:12])
    return [well_defined, tenths, third, third_theta, inversion, symmetry, unknown, laws, transfer, gaps]


def _short_word(ctx: SuiteContext, preset, max_length: int, max_c: int) -> Word:
    while True:
        word = ctx.word(preset, max_length)
        if abs(eval_word(preset, word).c) <= max_c:
            return word


def _sample_point(ctx: SuiteContext, M: ScaledMat) -> complex:
    u = float(ctx.rng.uniform(-0.5, 0.5))
    t = float(ctx.rng.uniform(0.7, 1.4))
    if M.c == 0:
        return complex(u, t)
    return complex(-M.d / M.c + u / abs(M.c), t * math.sqrt(M.e) / abs(M.c))


def suite_numerics(ctx: SuiteContext) -> List[Check]:
    settings = get_config().numerics
    p11 = get_preset("gamma0-11")
    tol = ctx.tol

    residuals = Check("eta transformation residuals")
    samples = max(1, ctx.count // 10)
    for group, preset_name in (("sl2z", "sl2z"), ("gamma0-11", "gamma0-11"), ("gamma0-37plus", "gamma0-37plus")):
        preset = get_preset(preset_name)
        for _ in range(samples):
            word = _short_word(ctx, preset, 4, 400)
            M = eval_word(preset, word)
            z = _sample_point(ctx, M)
            residuals.close(abs(eta_residual(group, M, z)), tol, f"{group}: {word} at {z}")

    phases = Check("floating phase factors")
    for _ in range(ctx.count):
        M, N = random_gamma0(ctx.rng, 1, 40), random_gamma0(ctx.rng, 1, 40)
        phases.exact(omega_float(M, N) == omega_petersson(M, N), f"{M} and {N}")

    coefficients = Check("newform coefficients from two expansions")
    f = f11_coefficients(settings.symbol_max_terms)
    chi = f11_coefficients_chi(200)
    coefficients.exact(list(f.coefficients[1:8]) == [1, -2, -1, 2, 1, 2, -2], "a(1..7)")
    coefficients.exact(bool(np.array_equal(f.coefficients[:201].astype(np.int64), chi)), "n <= 200")

    A, B = p11.generators["A"], p11.generators["B"]
    symbol_a, symbol_b = modular_symbol(A, f), modular_symbol(B, f)
    l_value = L1(f, 11, F11_EPSILON)
    manin = Check("Manin identity and L(1,f)")
    manin.close(abs(symbol_a + symbol_b + 5 * l_value), 1e-6, "<A,f> + <B,f> + 5 L(1,f)")
    manin.close(abs(l_value + 0.4 * symbol_a.real), 1e-5, "L(1,f) + (2/5) Re<A,f>")

    volume = pairing_volume(symbol_a, symbol_b)
    cusp_change = Check("cusp change of S*")
    homology = Check("periods from homology coordinates")
    e2 = Check("Eisenstein periods give S_inf - S_0")
    corpus = [p11.word([]), parse_word(p11, "A"), parse_word(p11, "B")]
    corpus += [_short_word(ctx, p11, 3, 300) for _ in range(20)]
    for word in corpus:
        M = eval_word(p11, word)
        direct = modular_symbol(M, f)
        m, n = exponent_sums(word, p11.homology_pair)
        homology.close(abs(direct - homology_symbol(m, n, symbol_a, symbol_b)), 1e-6, str(word))
        residual = cusp_change_residual(
            S_star(p11, word, "inf"), S_star(p11, word, "0"), direct, l_value, volume
        )
        cusp_change.close(residual, 1e-5, str(word))
        try:
            period = e2_period(M, 11)
        except ConvergenceError as exc:
            e2.exact(False, f"{word}: {exc}")
            continue
        exact = S_gamma0(11, M) - S_cusp0(11, M)
        e2.close(abs(period / (2j * math.pi) - float(exact)), 1e-5, str(word))

    constants = Check("level-37 period constants", informational=True)
    constants.cases = 1
    constants.detail = f"V_f(11) = {volume:.9f}, ||f_37+||^2 = {petersson_norm_37plus():.9f}"
    return [residuals, phases, coefficients, manin, homology, cusp_change, e2, constants]


SUITES: Dict[str, Callable[[SuiteContext], List[Check]]] = {
    "sums": suite_sums,
    "phase": suite_phase,
    "classical": suite_classical,
    "congruence": suite_congruence,
    "moonshine": suite_moonshine,
    "words": suite_words,
    "higher": suite_higher,
    "numerics": suite_numerics,
}


def _run_suite(name: str, seed: int, count: int, tol: float) -> List[CheckResult]:
    index = list(SUITES).index(name)
    ctx = SuiteContext(np.random.default_rng([seed, index]), seed, count, tol)
    logger.info("suite %s: seed=%d count=%d", name, seed, count)
    checks = [check.result() for check in SUITES[name](ctx)]
    logger.info("suite %s: %d of %d checks passed", name, sum(c.passed for c in checks), len(checks))
    return checks


def run_verify(
    suite: str = "all",
    seed: Optional[int] = None,
    count: Optional[int] = None,
    tol: Optional[float] = None,
    jobs: Optional[int] = None,
) -> VerifyReport:
    """Run one suite or all of them; results are ordered by suite then check"""
    settings = get_config().verify
    seed = settings.seed if seed is None else seed
    count = settings.count if count is None else count
    tol = settings.tol if tol is None else tol
    jobs = settings.jobs if jobs is None else jobs

    if suite == "all":
        names = list(SUITES)
    elif suite in SUITES:
        names = [suite]
    else:
        raise DedekindError(f"unknown suite {suite!r}; available: {', '.join(['all', *SUITES])}")

    if jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(_run_suite, names, [seed] * len(names), [count] * len(names), [tol] * len(names)))
    else:
        batches = [_run_suite(name, seed, count, tol) for name in names]

    checks = [check for batch in batches for check in batch]
    return VerifyReport(suite=suite, seed=seed, count=count, passed=all(c.passed for c in checks), checks=checks)
