"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 internal consistency failure.
All success output goes to stdout; diagnostics go to stderr.
"""

import argparse
import math
import sys

from . import bounds, heegaard, pinch, reports, torus
from .errors import ConsistencyError, InputError
from .torus import Hand, TorusKnotClass, canonicalize, mirror


def _knot(args):
    K = canonicalize(args.p, args.q)
    if getattr(args, "mirror", False):
        K = torus.mirror(K)
    return K


def _cmd_report(args, out):
    r = reports.report(args.p, args.q)
    if args.json:
        print(reports.emit_json(r), file=out)
        return 0
    label = "mirror T(%d,%d)" % (r.p, r.q) if args.mirror else \
        "T(%d,%d)" % (r.p, r.q)
    print("knot: %s" % label, file=out)
    print("signature: right %d, left %d" % (r.sigma_right, r.sigma_left),
          file=out)
    print("t0: %d" % r.t0, file=out)
    print("d(-1-surgery): right %d, left %d"
          % (r.d_minus1_right, r.d_minus1_left), file=out)
    print("gamma4 lower bound: %d" % r.gamma4_lower, file=out)
    print("gamma4 upper bound: %d" % r.gamma4_upper, file=out)
    print("exact: %s" % ("true" if r.exact else "false"), file=out)
    if r.gamma3_upper is not None:
        print("gamma3 upper bound: %d" % r.gamma3_upper, file=out)
    print("pinch trace: %s"
          % " -> ".join("(%d,%d)" % pair for pair in r.pinch_trace), file=out)
    return 0


def _cmd_table(args, out):
    if args.family != "2k":
        raise InputError("unknown family %r; only '2k' is supported"
                         % args.family)
    table = reports.family_table(args.kmax)
    if args.csv:
        out.write(reports.emit_csv(table))
    elif args.json:
        print(reports.emit_json(table), file=out)
    else:
        print(reports.CSV_HEADER.replace(",", "\t"), file=out)
        for r in table:
            print(reports._csv_row(r).replace(",", "\t"), file=out)
    return 0


def _cmd_scan(args, out):
    table = []
    for p in range(3, args.max + 1):
        for q in range(2, p):
            if math.gcd(p, q) == 1:
                table.append(reports.report(p, q))
    exact = sum(1 for r in table if r.exact)
    if args.csv:
        out.write(reports.emit_csv(table))
        print("# exact %d of %d" % (exact, len(table)), file=out)
    else:
        for r in table:
            print("T(%d,%d): lower %d upper %d%s"
                  % (r.p, r.q, r.gamma4_lower, r.gamma4_upper,
                     " exact" if r.exact else ""), file=out)
        print("exact rows: %d of %d" % (exact, len(table)), file=out)
    return 0


def _cmd_pinch(args, out):
    K = canonicalize(args.p, args.q)
    mode = pinch.GAMMA3 if args.gamma3 else pinch.GAMMA4
    seq = pinch.pinch_sequence(K, mode)
    for step in seq.steps:
        print("(%d,%d) --t=%d,h=%d--> (%d,%d)"
              % (step.from_pair + (step.t, step.h) + step.raw_to), file=out)
    return 0


def _cmd_signature(args, out):
    rec = torus.sigma_rec(args.p, args.q)
    lat = torus.sigma_lattice(args.p, args.q)
    print("recursion: %d" % rec, file=out)
    print("lattice:   %d" % lat, file=out)
    if rec != lat:
        raise ConsistencyError("signature engines disagree: %d vs %d"
                               % (rec, lat))
    return 0


def _cmd_alexander(args, out):
    poly = torus.alexander(args.p, args.q)
    print(str(poly), file=out)
    print("t0 = %d" % heegaard.t0(args.p, args.q), file=out)
    return 0


def _cmd_dinv(args, out):
    K = canonicalize(args.p, args.q)
    right, left = (K, mirror(K)) if K.hand is Hand.RIGHT else (mirror(K), K)
    rm1, rp1 = heegaard.d_pm1(right)
    lm1, lp1 = heegaard.d_pm1(left)
    print("right-handed: d(-1) = %d, d(+1) = %d" % (rm1, rp1), file=out)
    print("left-handed:  d(-1) = %d, d(+1) = %d" % (lm1, lp1), file=out)
    return 0


def _cmd_profile(args, out):
    K = _knot(args)
    prof = bounds.framed_profile(K, args.n_from, args.n_to)
    if args.csv:
        print("n,sig_bound,d_bound,combined", file=out)
        for n, sig_b, d_b, comb in prof.rows:
            print("%d,%d,%d,%d" % (n, sig_b, d_b, comb), file=out)
    else:
        print("framed lower bounds for %s" % (K,), file=out)
        for n, sig_b, d_b, comb in prof.rows:
            print("n=%d: signature %d, d-invariant %d, combined %d"
                  % (n, sig_b, d_b, comb), file=out)
    return 0


def _cmd_audit(args, out):
    rec = bounds.obstruction_audit(args.g, args.m, args.d)
    print("g=%d m=%d n=%d" % (rec.g, rec.m, rec.n), file=out)
    print("sign=%+d a=%d" % (rec.sign, rec.a), file=out)
    print("c1^2 = %s (direct) = %s (reduced)"
          % (rec.c1sq_direct, rec.c1sq_reduced), file=out)
    print("pairing <c1,[S]> = %d = n - 2g" % rec.pairing, file=out)
    print("e/2 <= 2d + b1: %s <= %s -> %s"
          % (rec.eq2_lhs, rec.eq2_rhs,
             "consistent" if rec.consistent else "violated"), file=out)
    return 0


def _add_pq(sub):
    sub.add_argument("p", type=int)
    sub.add_argument("q", type=int)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="crosscap4",
        description="Certified bounds for the nonorientable four-ball genus "
                    "of torus knots.")
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("report", help="bound certificate for T(p,q)")
    _add_pq(s)
    s.add_argument("--json", action="store_true")
    s.add_argument("--mirror", action="store_true",
                   help="label the input as the left-handed knot")
    s.set_defaults(func=_cmd_report)

    s = subs.add_parser("table", help="family table")
    s.add_argument("--family", required=True, choices=["2k"])
    s.add_argument("--kmax", type=int, required=True)
    fmt = s.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true")
    fmt.add_argument("--json", action="store_true")
    s.set_defaults(func=_cmd_table)

    s = subs.add_parser("scan", help="reports for all coprime q < p <= M")
    s.add_argument("--max", type=int, required=True)
    s.add_argument("--csv", action="store_true")
    s.set_defaults(func=_cmd_scan)

    s = subs.add_parser("pinch", help="pinch-move trace")
    _add_pq(s)
    s.add_argument("--gamma3", action="store_true")
    s.set_defaults(func=_cmd_pinch)

    s = subs.add_parser("signature", help="both signature engines")
    _add_pq(s)
    s.set_defaults(func=_cmd_signature)

    s = subs.add_parser("alexander", help="Alexander polynomial and t0")
    _add_pq(s)
    s.set_defaults(func=_cmd_alexander)

    s = subs.add_parser("dinv", help="d-invariants of +-1-surgery")
    _add_pq(s)
    s.set_defaults(func=_cmd_dinv)

    s = subs.add_parser("profile", help="per-framing lower bounds")
    _add_pq(s)
    s.add_argument("--from", dest="n_from", type=int, required=True)
    s.add_argument("--to", dest="n_to", type=int, required=True)
    s.add_argument("--csv", action="store_true")
    s.add_argument("--mirror", action="store_true")
    s.set_defaults(func=_cmd_profile)

    s = subs.add_parser("audit", help="exact replay of the cobordism "
                                      "inequality chain")
    s.add_argument("--g", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.set_defaults(func=_cmd_audit)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except InputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print("internal error: %s" % exc, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
