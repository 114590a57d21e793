"""
Phase factors
Exact omega(M, N) and the branch marker rho(M) for determinant-one matrices
"""

from .exact_core import ScaledMat, mat_mul


def sgn(x: int) -> int:
    return (x > 0) - (x < 0)


def rho(M: ScaledMat) -> int:
    """1 when c = 0 and d < 0, else 0"""
    return 1 if M.c == 0 and M.d < 0 else 0


def omega_petersson(M: ScaledMat, N: ScaledMat) -> int:
    """Five-case evaluation of the phase factor from the signs of c and d"""
    MN = mat_mul(M, N)
    cm, cn, cmn = sgn(M.c), sgn(N.c), sgn(MN.c)
    dm, dn = sgn(M.d), sgn(N.d)

    if cm and cn and cmn:
        four = cm + cn - cmn - cm * cn * cmn
    elif cm and cn:
        four = (cm - 1) * (1 - cn)
    elif cn and cmn:
        four = (1 - dm) * (1 + cn)
    elif cm and cmn:
        four = (1 + cm) * (1 - dn)
    else:
        # c_M = c_N = c_MN = 0; two zeros with one non-zero cannot happen
        assert not (cm or cn or cmn), f"impossible sign pattern for {M} and {N}"
        four = (1 - dm) * (1 - dn)

    assert four % 4 == 0, f"phase numerator {four} not divisible by 4"
    value = four // 4
    assert value in (-1, 0, 1)
    return value


def omega_cases(M: ScaledMat, N: ScaledMat) -> int:
    """Sign-triple table for the phase factor"""
    triple = (sgn(M.c), sgn(N.c), sgn(mat_mul(M, N).c))
    if triple in ((1, 1, -1), (0, 1, -1), (1, 0, -1)):
        return 1
    if triple == (0, 0, 0) and M.d < 0 and N.d < 0:
        return 1
    if triple in ((-1, -1, 1), (-1, -1, 0)):
        return -1
    return 0


def omega_self(M: ScaledMat) -> int:
    """omega(M, M) from the signs of c, the trace and d"""
    c, trace = sgn(M.c), sgn(M.trace)
    if c > 0 and trace < 0:
        return 1
    if c == 0 and M.d < 0:
        return 1
    if c < 0 and trace >= 0:
        return -1
    return 0
