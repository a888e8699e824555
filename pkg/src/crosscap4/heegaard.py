"""Heegaard-Floer correction terms used by the genus bounds.

Torus knots admit positive lens space surgeries, so the d-invariants of
their 0- and (+-1)-surgeries are read off from the torsion coefficient t0
of the Alexander polynomial.  Rationals are exact (fractions.Fraction).
"""

from fractions import Fraction
from functools import lru_cache

from .errors import ConsistencyError, OddSignature, OutOfRange
from .torus import Hand, alexander


@lru_cache(maxsize=None)
def t0(p, q):
    """Torsion coefficient sum j*a_j of the Alexander polynomial of T(p,q)."""
    return alexander(p, q).t0()


def d_zero_surgery(p, q):
    """d-invariants of 0-surgery on T(p,q) in its two spin-c structures.

    Returns (d at -1/2 grading, d at +1/2 grading) =
    (-1/2, 1/2 - 2*t0).
    """
    t = t0(p, q)
    return Fraction(-1, 2), Fraction(1, 2) - 2 * t


def d_pm1(K):
    """d-invariants (d of -1-surgery, d of +1-surgery) of the knot K.

    For a right-handed torus knot these are (0, -2*t0); mirroring swaps
    and negates.  Both values are even integers here; evenness is asserted
    rather than assumed.
    """
    if K.is_unknot:
        return 0, 0
    t = t0(K.p, K.q)
    if K.hand is Hand.RIGHT:
        pair = (0, -2 * t)
    else:
        pair = (2 * t, 0)
    for v in pair:
        if v % 2:
            raise ConsistencyError("odd d-invariant %r for %s" % (v, K))
    return pair


def d_minus1_alternating(sigma):
    """d of -1-surgery on an alternating knot with the given signature.

    Equals max(0, 2*ceil(sigma/4)); the signature must be even.
    """
    if sigma % 2:
        raise OddSignature("knot signatures are even, got %d" % sigma)
    return max(0, 2 * (-((-sigma) // 4)))


def d_b_circle_bundle(g, n):
    """Bottom correction term of the Euler-number -n circle bundle over a
    genus-g surface: 1/4 - g^2/n - n/4, valid only for n > 2g."""
    if g < 0 or n < 1:
        raise ValueError("need g >= 0 and n >= 1")
    if n <= 2 * g:
        raise OutOfRange("formula requires n > 2g (got n=%d, g=%d)" % (n, g))
    return Fraction(1, 4) - Fraction(g * g, n) - Fraction(n, 4)
