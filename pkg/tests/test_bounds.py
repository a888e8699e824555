import math
from fractions import Fraction

import pytest

from crosscap4.bounds import (framed_lower, framed_profile, gamma4_lower,
                              minmax_over_framings, obstruction_audit)
from crosscap4.errors import OutOfRange
from crosscap4.heegaard import d_pm1
from crosscap4.torus import (Hand, TorusKnotClass, canonicalize, mirror,
                             signature)


def test_framed_lower_moebius_band_tight():
    # the Mobius band bounding the right trefoil has e = -6, n = -3
    K = TorusKnotClass(3, 2, Hand.RIGHT)
    assert framed_lower(K, -3) == 1


def test_framed_lower_left_t43():
    assert framed_lower(TorusKnotClass(4, 3, Hand.LEFT), 4) == 2


def test_framed_lower_at_signature_framing():
    for K in [TorusKnotClass(5, 3, Hand.LEFT),
              TorusKnotClass(7, 2, Hand.RIGHT)]:
        s = signature(K)
        dm1, _ = d_pm1(K)
        assert framed_lower(K, s) == max(0, s - 2 * dm1)


def test_gamma4_lower_values():
    assert gamma4_lower(canonicalize(4, 3)) == 1
    assert gamma4_lower(TorusKnotClass(4, 3, Hand.LEFT)) == 1
    assert gamma4_lower(canonicalize(6, 5)) == 2
    assert gamma4_lower(canonicalize(8, 7)) == 3
    assert gamma4_lower(canonicalize(3, 2)) == 1


def test_gamma4_lower_family():
    for k in range(2, 26):
        assert gamma4_lower(canonicalize(2 * k, 2 * k - 1)) == k - 1


def test_gamma4_lower_mirror_invariant():
    for p, q in [(3, 2), (6, 5), (7, 3), (9, 4)]:
        K = canonicalize(p, q)
        assert gamma4_lower(K) == gamma4_lower(mirror(K))


def test_minmax_matches_closed_form():
    assert minmax_over_framings(canonicalize(6, 5), -100, 100) == 2
    assert minmax_over_framings(canonicalize(3, 2), -20, 20) == 1


def test_minmax_window_exclusion_negative_control():
    assert minmax_over_framings(canonicalize(6, 5), 50, 60) > 2


def test_minmax_equals_closed_form_sweep():
    for p in range(3, 25):
        for q in range(2, p):
            if math.gcd(p, q) != 1:
                continue
            K = canonicalize(p, q)
            s = abs(signature(K))
            B = (p - 1) * (q - 1)
            for Kc in (K, mirror(K)):
                assert gamma4_lower(Kc) == \
                    minmax_over_framings(Kc, s - 4 * B, s + 4 * B), (p, q)


def test_framed_profile_rows():
    K = TorusKnotClass(4, 3, Hand.LEFT)
    prof = framed_profile(K, 3, 5)
    assert [r[0] for r in prof.rows] == [3, 4, 5]
    n, sig_b, d_b, comb = prof.rows[1]
    assert (sig_b, d_b, comb) == (2, 0, 2)


class TestObstructionAudit:
    def test_replay_g0(self):
        rec = obstruction_audit(0, 1, 0)
        assert (rec.n, rec.sign, rec.a) == (3, -1, 0)
        assert rec.c1sq_direct == Fraction(-4)
        assert rec.pairing == 3
        assert rec.eq2_lhs == 1 and rec.eq2_rhs == 1
        assert rec.consistent

    def test_replay_g1(self):
        rec = obstruction_audit(1, 2, 0)
        assert (rec.n, rec.sign, rec.a) == (7, -1, 0)
        assert rec.c1sq_direct == Fraction(-32, 7)
        assert rec.pairing == 5
        assert rec.eq2_lhs == 3 and rec.eq2_rhs == 3
        assert rec.consistent

    def test_out_of_range_guard(self):
        with pytest.raises(OutOfRange):
            obstruction_audit(2, 1, 0)  # n = 3 <= 2g = 4

    def test_boundary_case_succeeds(self):
        # n = 3 > 2g = 2, so the formula applies
        rec = obstruction_audit(1, 1, 0)
        assert rec.sign == 1
        assert rec.pairing == 1

    def test_sweep(self):
        for g in range(0, 21):
            for m in range(1, 41):
                if 4 * m - 1 <= 2 * g:
                    continue
                rec = obstruction_audit(g, m, 0)
                assert rec.c1sq_direct == rec.c1sq_reduced
                assert rec.pairing == rec.n - 2 * g
