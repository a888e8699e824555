"""Assembled per-knot certificates and their JSON/CSV serialization."""

import json
import math
from dataclasses import dataclass
from typing import Optional

from .bounds import gamma4_lower
from .errors import ConsistencyError, NotCoprime
from .heegaard import d_pm1, t0
from .pinch import GAMMA4, gamma3_upper, gamma4_upper, pinch_sequence
from .torus import Hand, TorusKnotClass, canonicalize, mirror, signature

CSV_HEADER = ("p,q,sigma_right,sigma_left,t0,d_minus1_right,d_minus1_left,"
              "gamma4_lower,gamma4_upper,exact,gamma3_upper")


@dataclass(frozen=True)
class BoundReport:
    p: int
    q: int
    sigma_right: int
    sigma_left: int
    t0: int
    d_minus1_right: int
    d_minus1_left: int
    gamma4_lower: int
    gamma4_upper: int
    exact: bool
    gamma3_upper: Optional[int]
    pinch_trace: tuple  # (p, q) pairs, starting class included


def report(p, q):
    """Certificate for T(p,q): signature, t0, d-invariants, lower and upper
    genus bounds, exactness flag, and the pinch trace behind the upper
    bound.  The input pair is canonicalized first."""
    if p < 1 or q < 1:
        raise NotCoprime("need p, q >= 1, got (%d, %d)" % (p, q))
    if math.gcd(p, q) != 1:
        raise NotCoprime("(%d, %d) are not coprime" % (p, q))
    K = canonicalize(p, q)
    Km = mirror(K)
    right, left = (K, Km) if K.hand is Hand.RIGHT else (Km, K)

    sigma_right = signature(right)
    sigma_left = signature(left)
    t0_val = t0(K.p, K.q)
    d_right, _ = d_pm1(right)
    d_left, _ = d_pm1(left)
    lower = gamma4_lower(K)
    upper = gamma4_upper(K)
    if lower > upper:
        raise ConsistencyError("lower bound %d exceeds upper %d for %s"
                               % (lower, upper, K))

    seq = pinch_sequence(K, GAMMA4)
    trace = [(K.p, K.q)]
    for step in seq.steps:
        r, s = step.raw_to
        r, s = abs(r), abs(s)
        trace.append((max(r, s), min(r, s)))

    g3 = gamma3_upper(K) if (K.p * K.q) % 2 == 0 else None

    return BoundReport(
        p=K.p, q=K.q,
        sigma_right=sigma_right, sigma_left=sigma_left,
        t0=t0_val,
        d_minus1_right=d_right, d_minus1_left=d_left,
        gamma4_lower=lower, gamma4_upper=upper,
        exact=(lower == upper),
        gamma3_upper=g3,
        pinch_trace=tuple(trace),
    )


def family_table(k_max):
    """Reports for the family T(2k, 2k-1), k = 2..k_max."""
    if k_max < 2:
        raise ValueError("need k_max >= 2")
    return [report(2 * k, 2 * k - 1) for k in range(2, k_max + 1)]


def _report_dict(r):
    return {
        "p": r.p,
        "q": r.q,
        "sigma_right": r.sigma_right,
        "sigma_left": r.sigma_left,
        "t0": r.t0,
        "d_minus1_right": r.d_minus1_right,
        "d_minus1_left": r.d_minus1_left,
        "gamma4_lower": r.gamma4_lower,
        "gamma4_upper": r.gamma4_upper,
        "exact": r.exact,
        "gamma3_upper": r.gamma3_upper,
        "pinch_trace": [list(pair) for pair in r.pinch_trace],
    }


def emit_json(report_or_table):
    """Deterministic JSON text for one report or a list of them."""
    if isinstance(report_or_table, BoundReport):
        payload = _report_dict(report_or_table)
    else:
        payload = [_report_dict(r) for r in report_or_table]
    return json.dumps(payload, indent=2)


def _csv_row(r):
    g3 = "" if r.gamma3_upper is None else str(r.gamma3_upper)
    return "%d,%d,%d,%d,%d,%d,%d,%d,%d,%s,%s" % (
        r.p, r.q, r.sigma_right, r.sigma_left, r.t0,
        r.d_minus1_right, r.d_minus1_left,
        r.gamma4_lower, r.gamma4_upper,
        "true" if r.exact else "false", g3)


def emit_csv(table):
    """CSV text with a fixed header; gamma3_upper is empty when absent."""
    lines = [CSV_HEADER]
    lines.extend(_csv_row(r) for r in table)
    return "\n".join(lines) + "\n"
