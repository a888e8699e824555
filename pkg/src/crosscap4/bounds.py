"""Lower bounds on the nonorientable four-ball genus, and the exact-rational
audit of the inequality chain behind them.

Two bound families per framing n (e(F) = 2n): the signature bound
|sigma(K) - n| and the d-invariant bound n - 2*d(-1 surgery).  Their max
over n, minimized, reproduces the closed-form absolute bound
max(1, sigma/2 - d) taken over both chiralities.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ConsistencyError, OutOfRange
from .heegaard import d_b_circle_bundle, d_pm1
from .torus import mirror, signature


def framed_lower(K, n):
    """Lower bound for b1 of a surface bounding K with normal Euler
    number 2n: max of the signature and d-invariant obstructions."""
    dm1, _ = d_pm1(K)
    return max(abs(signature(K) - n), n - 2 * dm1, 0)


def gamma4_lower(K):
    """Absolute lower bound max(1, sigma/2 - d(-1-surgery)), maximized over
    the two mirrors (the genus is mirror-invariant, the formula is not).
    Never below 1: every nonorientable surface has b1 >= 1."""
    best = 1
    for Kc in (K, mirror(K)):
        s = signature(Kc)
        if s % 2:
            raise ConsistencyError("odd signature for %s" % (Kc,))
        dm1, _ = d_pm1(Kc)
        best = max(best, s // 2 - dm1)
    return best


def minmax_over_framings(K, n_lo, n_hi):
    """Brute-force counterpart of gamma4_lower: for each chirality, minimize
    framed_lower over every framing in [n_lo, n_hi], floor at 1, then take
    the max of the two chiralities."""
    if n_lo > n_hi:
        raise ValueError("empty framing window [%d, %d]" % (n_lo, n_hi))
    n = np.arange(n_lo, n_hi + 1, dtype=np.int64)
    best = 1
    for Kc in (K, mirror(K)):
        s = signature(Kc)
        dm1, _ = d_pm1(Kc)
        vals = np.maximum(np.abs(s - n), n - 2 * dm1)
        np.maximum(vals, 0, out=vals)
        best = max(best, int(vals.min()))
    return best


@dataclass(frozen=True)
class FramedProfile:
    knot: object
    rows: tuple  # of (n, sig_bound, d_bound, combined)


def framed_profile(K, n_lo, n_hi):
    """Per-framing obstruction landscape over a contiguous n-interval."""
    if n_lo > n_hi:
        raise ValueError("empty framing window [%d, %d]" % (n_lo, n_hi))
    s = signature(K)
    dm1, _ = d_pm1(K)
    rows = []
    for n in range(n_lo, n_hi + 1):
        sig_bound = abs(s - n)
        d_bound = n - 2 * dm1
        rows.append((n, sig_bound, d_bound, max(sig_bound, d_bound, 0)))
    return FramedProfile(knot=K, rows=tuple(rows))


@dataclass(frozen=True)
class AuditRecord:
    g: int
    m: int
    n: int
    a: int
    sign: int
    c1sq_direct: Fraction
    c1sq_reduced: Fraction
    pairing: int
    eq2_lhs: Fraction
    eq2_rhs: Fraction
    consistent: bool


# Intersection form of the handle picture: a (-1)-sphere plus a hyperbolic
# pair.
_Q = ((-1, 0, 0), (0, 0, 1), (0, 1, 0))


def _q_pair(v, w):
    return sum(v[i] * _Q[i][j] * w[j] for i in range(3) for j in range(3))


def obstruction_audit(g, m, d):
    """Exact-rational replay of the cobordism inequality for a closed
    genus-g surface of square n = 4m-1 and a knot with d(-1-surgery) = d.

    Verifies, with exact arithmetic: exactly one sign choice makes the
    spin-c parameter a integral; the two expressions for c1^2 agree; the
    pairing of c1 with the surface class equals n - 2g; and the definite-
    cobordism inequality reduces identically to e(F)/2 <= 2d + b1(F).
    """
    if g < 0 or m < 1 or d < 0:
        raise ValueError("need g >= 0, m >= 1, d >= 0")
    n = 4 * m - 1
    if n <= 2 * g:
        raise OutOfRange("need n = 4m-1 > 2g (got n=%d, g=%d)" % (n, g))

    # 2(m-g)-1 is odd, so exactly one of +-1 lands it on a multiple of 4.
    choices = [s for s in (1, -1) if (2 * (m - g) - 1 + s) % 4 == 0]
    if len(choices) != 1:
        raise ConsistencyError("sign choice for a is not unique")
    sign = choices[0]
    a = (2 * (m - g) - 1 + sign) // 4

    c1sq_direct = Fraction(-1 + 8 * a) - Fraction((n - 2 * g) ** 2, n)
    c1sq_reduced = Fraction(-2 + 2 * sign) - Fraction(4 * g * g, n)
    if c1sq_direct != c1sq_reduced:
        raise ConsistencyError("c1^2 expressions disagree")

    pd_c1 = (sign, 2, 2 * a)
    sigma_class = (1, 2, m)
    pairing = _q_pair(pd_c1, sigma_class)
    if pairing != n - 2 * g:
        raise ConsistencyError("c1 pairing %d != n - 2g = %d"
                               % (pairing, n - 2 * g))
    if _q_pair(pd_c1, pd_c1) != -1 + 8 * a:
        raise ConsistencyError("c1 self-pairing disagrees with -1 + 8a")

    eq2_lhs = Fraction(n - 1, 2)
    eq2_rhs = Fraction(2 * d + 2 * g + 1)

    # The cobordism inequality: c1^2 + b2^- <= 4*d_b + 4*d + 2*b1(bundle).
    # Its slack must equal 1 - n + 4d + 4g - 2*sign exactly (the g^2/n terms
    # cancel), and with the unfavorable sign -1 it is twice the slack of
    # e(F)/2 <= 2d + b1(F).
    db = d_b_circle_bundle(g, n)
    for s in (sign, -1):
        c1sq_s = Fraction(-2 + 2 * s) - Fraction(4 * g * g, n)
        gap = (4 * db + 4 * d + 2 * (2 * g)) - (c1sq_s + 2)
        if gap != 1 - n + 4 * d + 4 * g - 2 * s:
            raise ConsistencyError("inequality chain failed to reduce")
        if s == -1 and gap != 2 * (eq2_rhs - eq2_lhs):
            raise ConsistencyError("reduction does not match e/2 <= 2d + b1")

    return AuditRecord(
        g=g, m=m, n=n, a=a, sign=sign,
        c1sq_direct=c1sq_direct, c1sq_reduced=c1sq_reduced,
        pairing=pairing, eq2_lhs=eq2_lhs, eq2_rhs=eq2_rhs,
        consistent=eq2_lhs <= eq2_rhs,
    )
