"""Command-line front end: prime search, sequence generation, analysis,
k-error profiling, and theorem verification with machine-readable output.

Exit codes are a stable contract for CI use: 0 success, 1 usage or invalid
parameters, 2 enumeration budget exceeded, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .complexity import (
    DEFAULT_BUDGET,
    kerror_profile,
    predict_aux,
    predict_u,
    verify_theorems,
    witness_bound,
)
from .errors import CycloError
from .gfp_poly import linear_complexity
from .number_theory import enumerate_valid_primes, find_prime_params
from .sequences import (
    Triple,
    autocorrelation_profile,
    build_q,
    build_u,
    build_v,
    gate_configuration,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BUDGET = 2
EXIT_VERIFY = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits 2; the contract wants 1
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _default_jobs() -> int:
    return min(os.cpu_count() or 1, 4)


def _build_sequence(kind, params, triple):
    if kind == "u":
        return build_u(params, triple)
    if kind == "q":
        return build_q(params, triple)
    return build_v(params, triple)


def cmd_primes(args) -> int:
    try:
        found = enumerate_valid_primes(args.min, args.max, args.case)
    except (CycloError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        rows = [
            {
                "p": pr.p, "theta": pr.theta, "g": pr.g, "x": pr.x,
                "y_abs": pr.y_abs, "case1": pr.case1, "case2": pr.case2,
            }
            for pr in found
        ]
        print(json.dumps(rows))
        return EXIT_OK
    print(f"{'p':>8} {'theta':>6} {'g':>8} {'x':>6} {'y_abs':>6} {'case1':>6} {'case2':>6}")
    for pr in found:
        print(
            f"{pr.p:>8} {pr.theta:>6} {pr.g:>8} {pr.x:>6} {pr.y_abs:>6} "
            f"{str(pr.case1).lower():>6} {str(pr.case2).lower():>6}"
        )
    return EXIT_OK


def _resolve_params(args):
    triple = Triple.parse(args.triple)
    params = find_prime_params(args.p, theta_override=args.theta)
    return params, triple


def cmd_generate(args) -> int:
    try:
        params, triple = _resolve_params(args)
        seq = _build_sequence(args.kind, params, triple)
        gate = gate_configuration(params, triple)
    except (CycloError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        print(
            json.dumps(
                {
                    "p": params.p,
                    "triple": list(triple.as_tuple()),
                    "theta": params.theta,
                    "kind": args.kind,
                    "terms": list(seq.terms),
                    "gated": gate.gated,
                }
            )
        )
    elif args.kind == "v":
        # residues may exceed one digit (p - 1 encodes -1)
        print(" ".join(str(t) for t in seq.terms))
    else:
        print("".join(str(t) for t in seq.terms))
    return EXIT_OK


def cmd_analyze(args) -> int:
    try:
        params, triple = _resolve_params(args)
        u = build_u(params, triple)
        gate = gate_configuration(params, triple)
        profile = gate.profile or autocorrelation_profile(u)
    except (CycloError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(
        json.dumps(
            {
                "p": params.p,
                "triple": list(triple.as_tuple()),
                "theta": params.theta,
                "lc": linear_complexity(u),
                "autocorrelation": list(profile.values),
                "optimal": profile.optimal,
                "balanced": u.weight == params.p,
                "gated": gate.gated,
                "reason": gate.reason,
            }
        )
    )
    return EXIT_OK


def _profile_rows(args, params, triple, seq):
    """(rows, budget_hit): one row per k and method, already intersected."""
    ks = list(range(args.k_max + 1))
    p = params.p
    rows = []
    budget_hit = False
    oracle_rows = {}
    if args.method in ("oracle", "all"):
        for res in kerror_profile(seq, ks, args.budget, jobs=_default_jobs()):
            oracle_rows[res.k] = res
            budget_hit = budget_hit or res.budget_exceeded
    gated = gate_configuration(params, triple).gated if args.kind == "u" else True
    for k in ks:
        facts = []  # (lower, upper, exact_ok, method, witness_support)
        if k in oracle_rows:
            res = oracle_rows[k]
            method = "oracle-partial" if res.budget_exceeded else "oracle"
            support = None
            if res.witness is not None:
                support = [i for i, c in enumerate(res.witness.coeffs) if c]
            facts.append((res.lower, res.upper, method, support))
        if args.method in ("witness", "all") and args.kind == "u" and gated:
            wb = witness_bound(params, triple, k)
            support = [i for i, c in enumerate(wb.witness.coeffs) if c] if wb.witness else None
            facts.append((wb.lower, wb.upper, wb.method, support))
        if args.method in ("predict", "all"):
            if args.kind == "u":
                if gated:
                    pred = predict_u(params, triple, k)
                else:
                    pred = None
            else:
                pred = predict_aux(args.kind, p, k)
            if pred is not None and pred.kind != "unknown":
                facts.append((pred.lo, pred.hi, "predict:" + "+".join(pred.rules), None))
        if not facts:
            rows.append({"k": k, "lower": 0, "upper": seq.period, "exact": None,
                         "method": "none", "witness_support": None})
            continue
        lower = max(f[0] for f in facts)
        uppers = [f[1] for f in facts if f[1] is not None]
        upper = min(uppers) if uppers else seq.period
        method = facts[0][2] if len(facts) == 1 else "all"
        support = next((f[3] for f in facts if f[3] is not None), None)
        exact = lower if lower == upper else None
        rows.append({"k": k, "lower": lower, "upper": upper, "exact": exact,
                     "method": method, "witness_support": support})
    return rows, budget_hit


def cmd_kerror(args) -> int:
    try:
        params, triple = _resolve_params(args)
        seq = _build_sequence(args.kind, params, triple)
        if args.method == "witness" and args.kind != "u":
            raise ValueError("witness bounds exist only for kind u")
        rows, budget_hit = _profile_rows(args, params, triple, seq)
    except (CycloError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out == "json":
        print(
            json.dumps(
                {
                    "p": params.p,
                    "triple": list(triple.as_tuple()),
                    "theta": params.theta,
                    "kind": args.kind,
                    "rows": rows,
                }
            )
        )
    else:
        print("k,lower,upper,exact,method")
        for row in rows:
            exact = "" if row["exact"] is None else row["exact"]
            print(f"{row['k']},{row['lower']},{row['upper']},{exact},{row['method']}")
    if budget_hit and args.strict:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_verify(args) -> int:
    triple = None
    if args.triple is not None:
        try:
            triple = Triple.parse(args.triple)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    report = verify_theorems(
        args.p, triple=triple, theta=args.theta, budget=args.budget,
        seed=args.seed, jobs=_default_jobs(),
    )
    if args.format == "json":
        print(
            json.dumps(
                {
                    "p": report.p,
                    "theta": report.theta,
                    "budget_exhausted": report.budget_exhausted,
                    "checks": [
                        {"name": c.name, "status": c.status, "detail": c.detail}
                        for c in report.checks
                    ],
                }
            )
        )
    else:
        width = max((len(c.name) for c in report.checks), default=10)
        for c in report.checks:
            print(f"{c.name:<{width}}  {c.status.upper():<5}  {c.detail}")
        print(f"{'budget':<{width}}  {'USED' if report.budget_exhausted else 'OK':<5}")
    if not report.all_passed:
        return EXIT_VERIFY
    if report.budget_exhausted:
        return EXIT_BUDGET
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="cyclolc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    pp = sub.add_parser("primes", help="list accepted primes in a range")
    pp.add_argument("--min", type=int, required=True)
    pp.add_argument("--max", type=int, required=True)
    pp.add_argument("--case", choices=["1", "2", "any"], default="any")
    pp.add_argument("--format", choices=["table", "json"], default="table")
    pp.set_defaults(func=cmd_primes)

    pg = sub.add_parser("generate", help="emit one period of a sequence")
    pg.add_argument("--p", type=int, required=True)
    pg.add_argument("--triple", required=True, help="selector as m,j,l")
    pg.add_argument("--theta", type=int, default=None)
    pg.add_argument("--kind", choices=["u", "q", "v"], default="u")
    pg.add_argument("--format", choices=["bits", "json"], default="bits")
    pg.set_defaults(func=cmd_generate)

    pa = sub.add_parser("analyze", help="linear complexity and autocorrelation")
    pa.add_argument("--p", type=int, required=True)
    pa.add_argument("--triple", required=True)
    pa.add_argument("--theta", type=int, default=None)
    pa.add_argument("--format", choices=["json"], default="json")
    pa.set_defaults(func=cmd_analyze)

    pk = sub.add_parser("kerror", help="k-error complexity profile")
    pk.add_argument("--p", type=int, required=True)
    pk.add_argument("--triple", required=True)
    pk.add_argument("--theta", type=int, default=None)
    pk.add_argument("--kind", choices=["u", "q", "v"], default="u")
    pk.add_argument("--k-max", dest="k_max", type=int, required=True)
    pk.add_argument("--method", choices=["oracle", "witness", "predict", "all"], default="all")
    pk.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    pk.add_argument("--out", choices=["csv", "json"], default="csv")
    pk.add_argument("--strict", action="store_true")
    pk.set_defaults(func=cmd_kerror)

    pv = sub.add_parser("verify", help="run every cross-check for a prime")
    pv.add_argument("--p", type=int, required=True)
    pv.add_argument("--triple", default=None)
    pv.add_argument("--theta", type=int, default=None)
    pv.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    pv.add_argument("--format", choices=["table", "json"], default="table")
    pv.add_argument("--seed", type=int, default=0)
    pv.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.command == "kerror" and args.k_max < 0:
        print("error: --k-max must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
