"""Torus knot classes, Murasugi signatures, and Alexander polynomials.

Sign conventions live here and nowhere else: RIGHT denotes the positive
torus knot T(p,q), whose signature is negative (e.g. the right trefoil has
signature -2); LEFT denotes its mirror.  sigma_rec and sigma_lattice both
compute the nonnegative quantity -signature(T(p,q)) and cross-validate each
other.
"""

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .errors import ConsistencyError, NotCoprime, NotPrimitive, ZeroClass
from .laurent import LaurentPoly


class Hand(Enum):
    RIGHT = "right"
    LEFT = "left"


@dataclass(frozen=True)
class TorusKnotClass:
    p: int
    q: int
    hand: Hand = Hand.RIGHT

    @property
    def is_unknot(self):
        return self.q <= 1

    def __str__(self):
        if self.is_unknot:
            return "unknot"
        side = "" if self.hand is Hand.RIGHT else "mirror "
        return "%sT(%d,%d)" % (side, self.p, self.q)


UNKNOT = TorusKnotClass(1, 0, Hand.RIGHT)


def canonicalize(a, b, hand=Hand.RIGHT):
    """Normalize a primitive class (a, b) on the torus to canonical form.

    (a,b) ~ (-a,-b) is an orientation reversal (same knot, same hand);
    flipping the sign of exactly one coordinate mirrors the knot; (a,b) ~
    (b,a) swaps the torus factors.  Any class with min(|a|,|b|) <= 1 is an
    unknot and collapses to the canonical (1, 0, RIGHT).
    """
    if a == 0 and b == 0:
        raise ZeroClass("class (0, 0) is not a knot")
    if math.gcd(abs(a), abs(b)) != 1:
        raise NotPrimitive("class (%d, %d) is not primitive" % (a, b))
    if a < 0 and b < 0:
        a, b = -a, -b
    elif a < 0:
        a = -a
        hand = Hand.LEFT if hand is Hand.RIGHT else Hand.RIGHT
    elif b < 0:
        b = -b
        hand = Hand.LEFT if hand is Hand.RIGHT else Hand.RIGHT
    if b > a:
        a, b = b, a
    if min(a, b) <= 1:
        return UNKNOT
    return TorusKnotClass(a, b, hand)


def mirror(K):
    """Reflect the knot; the unknot is its own mirror."""
    if K.is_unknot:
        return K
    flipped = Hand.LEFT if K.hand is Hand.RIGHT else Hand.RIGHT
    return TorusKnotClass(K.p, K.q, flipped)


def _check_coprime(p, q):
    if math.gcd(p, q) != 1:
        raise NotCoprime("(%d, %d) are not coprime" % (p, q))


@lru_cache(maxsize=None)
def sigma_rec(p, q):
    """Murasugi's signature recursion, giving -signature(T(p,q)) >= 0.

    The recursion, with base cases first:
        sigma(p, q) = sigma(q, p)                        if q > p
        sigma(p, 1) = 0;  sigma(p, 2) = p - 1
        sigma(p, q) = sigma(p-2q, q) + q^2 - [q odd]     if 2q < p
        sigma(p, q) = -sigma(2q-p, q) + q^2 - 2 + [q odd]  if q < p < 2q
    Runs iteratively (batched descent), so stack depth never grows.
    """
    if p < 0 or q < 0:
        raise ValueError("sigma_rec expects nonnegative arguments")
    _check_coprime(p, q)
    total = 0
    sign = 1
    while True:
        if q > p:
            p, q = q, p
        if q <= 1:
            base = 0
            break
        if q == 2:
            base = p - 1
            break
        if 2 * q < p:
            # batch all sigma(p-2q, q) descents at once
            r = p % (2 * q)
            steps = (p - r) // (2 * q)
            if r == 0:
                raise ConsistencyError("descent hit a non-coprime pair")
            total += sign * steps * (q * q - (q % 2))
            p = r
        elif p < 2 * q:
            total += sign * (q * q - 2 + (q % 2))
            sign = -sign
            p = 2 * q - p
        else:
            raise ConsistencyError("p = 2q cannot occur for coprime q >= 2")
    result = total + sign * base
    if result % 2:
        raise ConsistencyError("odd signature value for (%d, %d)" % (p, q))
    return result


def sigma_lattice(p, q):
    """Independent lattice-point count of the same signature.

    Counts grid points (i, j), 1 <= i < p, 1 <= j < q, with
    p*q < 2(i*q + j*p) < 3*p*q and returns 2*N_in - (p-1)(q-1).  All
    comparisons are exact; boundary equalities are impossible by
    coprimality and are asserted against.
    """
    if p < 2 and q >= 2:
        p, q = q, p
    _check_coprime(p, q)
    if q < 1 or p < 2:
        raise ValueError("sigma_lattice expects p >= 2, q >= 1")
    if q == 1:
        return 0
    i = np.arange(1, p, dtype=np.int64) * q
    j = np.arange(1, q, dtype=np.int64) * p
    vals = 2 * np.add.outer(i, j)
    lo = p * q
    hi = 3 * p * q
    if np.any(vals == lo) or np.any(vals == hi):
        raise ConsistencyError("boundary lattice point for (%d, %d)" % (p, q))
    n_in = int(np.count_nonzero((vals > lo) & (vals < hi)))
    return 2 * n_in - (p - 1) * (q - 1)


def signature(K):
    """Signature of the knot; negative for positive (RIGHT) torus knots."""
    if K.is_unknot:
        return 0
    s = sigma_rec(K.p, K.q)
    return -s if K.hand is Hand.RIGHT else s


def alexander(p, q):
    """Alexander polynomial of T(p,q), in symmetric Laurent form.

    Computed from the product formula
        T^{-(p-1)(q-1)/2} (1-T)(1-T^{pq}) / ((1-T^p)(1-T^q)),
    exactly, by integer long division.  Returns 1 for unknots (q <= 1).
    """
    if q > p:
        p, q = q, p
    _check_coprime(p, q)
    if q <= 1:
        return LaurentPoly.one()
    num = LaurentPoly.one_minus_power(1) * LaurentPoly.one_minus_power(p * q)
    den = LaurentPoly.one_minus_power(p) * LaurentPoly.one_minus_power(q)
    quot = num.exact_div(den)
    return quot.shift(-((p - 1) * (q - 1) // 2))


def alexander_family(k):
    """Closed form of the Alexander polynomial of T(2k, 2k-1), k >= 2.

    The constant term is 1; each block j = 1..k-1 contributes the four
    symmetric monomials at exponents +-j(2k-1) and -+(j(2k-1)-(k-j)).
    Must agree with alexander(2k, 2k-1) exactly.
    """
    if k < 2:
        raise ValueError("family formula needs k >= 2")
    terms = {0: 1}
    for j in range(1, k):
        top = j * (2 * k - 1)
        terms[top] = 1
        terms[top - (k - j)] = -1
        terms[-top] = 1
        terms[-top + (k - j)] = -1
    return LaurentPoly(terms)


def seifert_genus(p, q):
    """Orientable genus (p-1)(q-1)/2 of the torus knot's Seifert surface."""
    if q > p:
        p, q = q, p
    _check_coprime(p, q)
    if q <= 1:
        return 0
    return (p - 1) * (q - 1) // 2
