"""Command-line front end.

    sigmalucas solve --a 3 --b 0
    sigmalucas lucas --p 1 --q -1 --kind u --k 10
    sigmalucas pell --d 5 --rhs -4 --count 3
    sigmalucas verify-identities [--scope all] | --lemma 26 --relation 3 --pp 1 --qq -1 --k 2 --l 3
    sigmalucas sigma3 --bound 10000 --mode theorem

JSON goes to stdout; values that can outgrow 64 bits are decimal strings.
Timings and warnings go to stderr. Exit codes: 0 ok, 2 bad input,
3 a cross-check failed.
"""

from __future__ import annotations

import argparse
import itertools
import json
import logging
import sys
import time

from . import arith, lucas, pell, sigma3, solver

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_INVARIANT = 3

log = logging.getLogger("sigmalucas")


def _s(n: int) -> str:
    return str(n)


# --------------------------------------------------------------------------
# serialization


def report_to_dict(report: solver.SolutionReport) -> dict:
    inst, cfg = report.instance, report.config
    return {
        "instance": {"A": _s(inst.A), "B": _s(inst.B), "sporadic_bound": _s(inst.sporadic_bound)},
        "config": {
            "brute_cap": cfg.brute_cap,
            "q_limit": cfg.q_limit,
            "P_limit": cfg.P_limit,
            "m_limit": cfg.m_limit,
            "k_limit": cfg.k_limit,
        },
        "sporadic": {
            "solutions": [_s(n) for n in report.sporadic],
            "scanned_to": _s(report.sporadic_scanned_to),
            "complete": report.sporadic_complete,
        },
        "semiprime": [{"n": _s(p * q), "p": _s(p), "q": _s(q)} for p, q in report.semiprime],
        "patterns": [
            {"theorem_id": t.theorem_id, "P": _s(t.P), "m": t.m, "label": t.label()}
            for t in report.patterns
        ],
        "families": [
            {
                "n": _s(f.n),
                "p": _s(f.p),
                "q": _s(f.q),
                "pattern": f.pattern.label(),
                "indices": list(f.indices),
                "primality": "proven" if f.proven else "probable",
            }
            for f in report.families
        ],
        "diagnostics": list(report.diagnostics),
    }


def report_to_tsv(report: solver.SolutionReport) -> str:
    rows = [("section", "n", "p", "q", "detail")]
    inst = report.instance
    rows.append(("instance", "", "", "", f"A={inst.A} B={inst.B} bound={inst.sporadic_bound}"))
    rows.append(
        ("scan", "", "", "", f"scanned_to={report.sporadic_scanned_to} complete={report.sporadic_complete}")
    )
    rows += [("sporadic", _s(n), "", "", "") for n in report.sporadic]
    rows += [("semiprime", _s(p * q), _s(p), _s(q), "") for p, q in report.semiprime]
    rows += [("pattern", "", "", "", t.label()) for t in report.patterns]
    rows += [
        ("family", _s(f.n), _s(f.p), _s(f.q), f"{f.pattern.label()} indices={f.indices[0]},{f.indices[1]}")
        for f in report.families
    ]
    return "\n".join("\t".join(r) for r in rows)


def _emit(args, payload, tsv_rows):
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join("\t".join(str(c) for c in row) for row in tsv_rows))


# --------------------------------------------------------------------------
# commands


def cmd_solve(args) -> int:
    instance = solver.EquationInstance(args.a, args.b)
    config = solver.SolveConfig(
        brute_cap=args.brute_cap,
        q_limit=args.q_limit,
        P_limit=args.p_limit,
        m_limit=args.m_limit,
        k_limit=args.k_limit,
        block_size=args.block_size,
        workers=args.workers,
    )
    t0 = time.perf_counter()
    report = solver.solve(instance, config)
    log.info("solve A=%d B=%d finished in %.3fs", args.a, args.b, time.perf_counter() - t0)
    for line in report.diagnostics:
        log.warning(line)
    if args.format == "json":
        print(json.dumps(report_to_dict(report), indent=2))
    else:
        print(report_to_tsv(report))
    return EXIT_OK


def cmd_lucas(args) -> int:
    fn = lucas.lucas_u if args.kind == "u" else lucas.lucas_v
    value = fn((args.p, args.q), args.k)
    payload = {"kind": args.kind, "P": _s(args.p), "Q": _s(args.q), "k": args.k, "value": _s(value)}
    _emit(args, payload, [(value,)])
    return EXIT_OK


def cmd_pell(args) -> int:
    shape = pell.classify(args.d)
    sols = pell.solve_pm4(shape, args.rhs, args.count)
    payload = {
        "D": _s(args.d),
        "rhs": args.rhs,
        "shape": str(shape),
        "solutions": [{"k": s.k, "x": _s(s.x), "y": _s(s.y)} for s in sols],
    }
    _emit(args, payload, [(s.k, s.x, s.y) for s in sols])
    return EXIT_OK


def _irange(pair) -> range:
    lo, hi = pair
    return range(lo, hi + 1)


def _identity_instances(args):
    """Yield (label, inputs, (lhs, rhs)) for the requested sweep or single case."""
    if args.lemma is not None:
        if args.lemma == "26":
            inputs = dict(relation=args.relation, P=args.pp, Q=args.qq, k=args.k, l=args.l)
            yield "lucas", inputs, lucas.check_lucas_relation(args.relation, (args.pp, args.qq), args.k, args.l)
        elif args.lemma == "21":
            seed = lucas.RecurrenceSeed(args.a0, args.a1, args.u, args.v)
            inputs = dict(A0=args.a0, A1=args.a1, u=args.u, v=args.v, n=args.n, r=args.r)
            yield "catalan", inputs, lucas.check_catalan(seed, args.n, args.r)
        else:
            seed = lucas.RecurrenceSeed(args.a0, args.a1, args.u, args.v)
            inputs = dict(variant=args.variant, A0=args.a0, A1=args.a1, u=args.u, v=args.v, n=args.n)
            yield "parity", inputs, lucas.check_parity_identity(args.variant, seed, args.n)
        return

    scopes = {"catalan", "parity", "lucas"} if args.scope == "all" else {args.scope}
    seeds = _irange(args.seed_range)
    if "catalan" in scopes:
        n_max = 20 if args.n_max is None else args.n_max
        for u, v in itertools.product(_irange(args.coef_range), repeat=2):
            for a0, a1 in itertools.product(seeds, repeat=2):
                seed = lucas.RecurrenceSeed(a0, a1, u, v)
                for n in range(1, n_max + 1):
                    for r in range(1, n + 1):
                        inputs = dict(A0=a0, A1=a1, u=u, v=v, n=n, r=r)
                        yield "catalan", inputs, lucas.check_catalan(seed, n, r)
    if "parity" in scopes:
        n_max = 15 if args.n_max is None else args.n_max
        for variant in lucas.PARITY_VARIANTS:
            v = -1 if variant == "v_minus1" else 1
            n_min = 0 if variant == "even_v1" else 1
            for u in range(-args.u_max, args.u_max + 1):
                for a0, a1 in itertools.product(seeds, repeat=2):
                    seed = lucas.RecurrenceSeed(a0, a1, u, v)
                    for n in range(n_min, n_max + 1):
                        inputs = dict(variant=variant, A0=a0, A1=a1, u=u, v=v, n=n)
                        yield "parity", inputs, lucas.check_parity_identity(variant, seed, n)
    if "lucas" in scopes:
        ks = _irange(args.k_range)
        for relation in range(1, 7):
            for P in _irange(args.p_range):
                for Q in (1, -1):
                    for k in ks:
                        for l in ks if relation > 2 else (0,):
                            inputs = dict(relation=relation, P=P, Q=Q, k=k, l=l)
                            yield "lucas", inputs, lucas.check_lucas_relation(relation, (P, Q), k, l)


def cmd_verify_identities(args) -> int:
    t0 = time.perf_counter()
    checked = 0
    failures = []
    last = None
    for label, inputs, (lhs, rhs) in _identity_instances(args):
        checked += 1
        last = (lhs, rhs)
        if lhs != rhs:
            failures.append({"identity": label, "inputs": inputs, "lhs": _s(lhs), "rhs": _s(rhs)})
    log.info("checked %d identity instances in %.3fs", checked, time.perf_counter() - t0)
    payload = {"checked": checked, "failed": len(failures), "failures": failures}
    if args.lemma is not None and last is not None:
        payload["lhs"], payload["rhs"] = _s(last[0]), _s(last[1])
    rows = [("checked", checked), ("failed", len(failures))]
    rows += [(f["identity"], json.dumps(f["inputs"]), f["lhs"], f["rhs"]) for f in failures]
    if "lhs" in payload:
        rows.append(("lhs", payload["lhs"]))
        rows.append(("rhs", payload["rhs"]))
    _emit(args, payload, rows)
    return EXIT_INVARIANT if failures else EXIT_OK


def cmd_sigma3(args) -> int:
    t0 = time.perf_counter()
    if args.bound < 2:
        hits_payload, rows = [], []
    elif args.mode == "theorem":
        hits = sigma3.scan_pq_alpha(args.bound, restrict_q=not args.no_restrict_q)
        hits_payload = [
            {"n": _s(h.n), "p": _s(h.p), "q": _s(h.q), "alpha": h.alpha, "even_perfect": h.even_perfect}
            for h in hits
        ]
        rows = [(h.n, h.p, h.q, h.alpha, h.even_perfect) for h in hits]
    else:
        found = sigma3.conjecture_scan(args.bound)
        hits_payload = [{"n": _s(n), "even_perfect": perfect} for n, perfect in found]
        rows = [(n, perfect) for n, perfect in found]
    log.info("sigma3 %s scan to %d in %.3fs", args.mode, args.bound, time.perf_counter() - t0)
    payload = {"mode": args.mode, "bound": _s(args.bound), "hits": hits_payload}
    _emit(args, payload, rows)
    return EXIT_OK


# --------------------------------------------------------------------------
# parser


def _pair(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition(":")
    return int(lo), int(hi)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sigmalucas", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log timings to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("json", "tsv"), default="json")

    p = sub.add_parser("solve", help="solve sigma_2(n) - n^2 = A n + B")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    defaults = solver.SolveConfig()
    p.add_argument("--brute-cap", type=int, default=defaults.brute_cap)
    p.add_argument("--q-limit", type=int, default=defaults.q_limit)
    p.add_argument("--p-limit", type=int, default=defaults.P_limit)
    p.add_argument("--m-limit", type=int, default=defaults.m_limit)
    p.add_argument("--k-limit", type=int, default=defaults.k_limit)
    p.add_argument("--block-size", type=int, default=None, help=f"default ${arith.BLOCK_SIZE_ENV} or 2^20")
    p.add_argument("--workers", type=int, default=1)
    add_format(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("lucas", help="evaluate U_k(P, Q) or V_k(P, Q)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--kind", choices=("u", "v"), required=True)
    p.add_argument("--k", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_lucas)

    p = sub.add_parser("pell", help="solutions of x^2 - D y^2 = +-4")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--rhs", type=int, choices=(4, -4), required=True)
    p.add_argument("--count", type=int, default=5)
    add_format(p)
    p.set_defaults(func=cmd_pell)

    p = sub.add_parser("verify-identities", help="check the recurrence identities")
    p.add_argument("--scope", choices=("all", "catalan", "parity", "lucas"), default="all")
    p.add_argument("--n-max", type=int, default=None, help="catalan default 20, parity default 15")
    p.add_argument("--coef-range", type=_pair, default=(-3, 3), metavar="LO:HI", help="u, v for catalan")
    p.add_argument("--seed-range", type=_pair, default=(-2, 2), metavar="LO:HI", help="A0, A1")
    p.add_argument("--u-max", type=int, default=4, help="|u| bound for parity identities")
    p.add_argument("--p-range", type=_pair, default=(-5, 5), metavar="LO:HI")
    p.add_argument("--k-range", type=_pair, default=(-10, 10), metavar="LO:HI", help="k and l")
    p.add_argument("--lemma", choices=("21", "parity", "26"), default=None, help="check one instance")
    p.add_argument("--relation", type=int, default=1)
    p.add_argument("--pp", type=int, default=1)
    p.add_argument("--qq", type=int, default=-1)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--l", type=int, default=0)
    p.add_argument("--a0", type=int, default=0)
    p.add_argument("--a1", type=int, default=1)
    p.add_argument("--u", type=int, default=1)
    p.add_argument("--v", type=int, default=1)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--variant", choices=lucas.PARITY_VARIANTS, default="even_v1")
    add_format(p)
    p.set_defaults(func=cmd_verify_identities)

    p = sub.add_parser("sigma3", help="n | sigma_3(n) with two distinct prime factors")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--mode", choices=("theorem", "conjecture"), default="theorem")
    p.add_argument("--no-restrict-q", action="store_true", help="allow q = 1 mod 3 in theorem mode")
    add_format(p)
    p.set_defaults(func=cmd_sigma3)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for h in list(log.handlers):
        log.removeHandler(h)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    log.addHandler(handler)
    log.setLevel(logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except solver.InvariantViolation as exc:
        print(f"error: invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
