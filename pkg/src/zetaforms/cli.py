"""Command-line front end.

Subcommands: decompose, worthiness, search, verify.  All output is UTF-8
JSON on stdout with every number rendered as a decimal string, so the
tool can sit in CI pipelines without float round-tripping.

Exit codes: 0 success, 1 verification or evaluation failure, 2
inadmissible vector (the violated form is named), 3 reconstruction
ambiguity, 4 degenerate asymptotics.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from itertools import product
from pathlib import Path

from . import analytic, asympt, exact, graphs, group, params

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INADMISSIBLE = 2
EXIT_AMBIGUOUS = 3
EXIT_DEGENERATE = 4


def _stringified(obj):
    """Copy a JSON tree with every int/float leaf as a decimal string."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return repr(obj)
    if isinstance(obj, dict):
        return {k: _stringified(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stringified(v) for v in obj]
    return str(obj)


def _emit(obj, json_path=None) -> None:
    text = json.dumps(_stringified(obj), indent=2, ensure_ascii=False) + "\n"
    sys.stdout.write(text)
    if json_path:
        Path(json_path).write_text(text, encoding="utf-8")


def _admissibility_gate(a, json_path) -> int | None:
    viol = params.first_violated_form(params.ParamVec8.from_seq(a))
    if viol is None:
        return None
    idx, name, value = viol
    _emit({"error": "inadmissible vector", "form": name,
           "formIndex": idx, "value": value}, json_path)
    return EXIT_INADMISSIBLE


def cmd_decompose(args) -> int:
    gate = _admissibility_gate(args.a, args.json)
    if gate is not None:
        return gate
    report = analytic.decompose(tuple(args.a), prec=args.prec)
    _emit(report.to_json(), args.json)
    return EXIT_OK


def cmd_worthiness(args) -> int:
    gate = _admissibility_gate(args.a, args.json)
    if gate is not None:
        return gate
    report = asympt.worthiness(tuple(args.a), prec=args.prec,
                               refined_l=args.refined_m)
    _emit(report.to_json(), args.json)
    return EXIT_OK


def _parse_range(spec: str) -> tuple[int, int]:
    if ":" in spec:
        lo_s, hi_s = spec.split(":", 1)
        lo, hi = int(lo_s), int(hi_s)
    else:
        lo = hi = int(spec)
    if hi < lo:
        raise ValueError("empty range %r" % spec)
    return lo, hi


def _score_orbit(job):
    """Worker for the search pool: worthiness of one representative."""
    a, prec, refined = job
    try:
        rep = asympt.worthiness(a, prec=prec, refined_l=refined)
    except (asympt.DegenerateGrowthError, ValueError) as exc:
        return {"a": list(a), "error": str(exc)}
    row = rep.to_json()
    row["sortKey"] = float(rep.gamma)
    return row


def cmd_search(args) -> int:
    ranges = [_parse_range(s) for s in args.box]
    budget = args.budget
    seen_keys = set()
    candidates = []
    exceeded = False
    for a in product(*(range(lo, hi + 1) for lo, hi in ranges)):
        vec = params.ParamVec8.from_seq(a)
        if not params.convergence_check(vec):
            continue
        if args.dedupe:
            two_s = params.to_symmetric(vec).twoS
            key = (two_s[0],) + tuple(sorted(two_s[1:]))
            if key in seen_keys:
                continue
            seen_keys.add(key)
        if len(candidates) >= budget:
            exceeded = True
            break
        candidates.append(vec)
    if args.dedupe:
        # Canonical representative: lexicographically smallest orbit
        # element that still passes the admissibility gate.  Orbits of
        # admissible vectors routinely contain inadmissible images, and
        # the score is undefined on those.
        reps = []
        for v in candidates:
            orb = group.orbit(v)
            reps.append(min(e for e in orb.elements
                            if params.convergence_check(e)))
    else:
        reps = candidates
    jobs = [(tuple(r), args.prec, args.refined_m) for r in reps]
    if args.threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.threads) as pool:
            rows = list(pool.map(_score_orbit, jobs))
    else:
        rows = [_score_orbit(j) for j in jobs]
    scored = [r for r in rows if "error" not in r]
    failed = [r for r in rows if "error" in r]
    scored.sort(key=lambda r: (-r.pop("sortKey"), r["a"]))
    if exceeded:
        print("search budget of %d reached; results are partial" % budget,
              file=sys.stderr)
    _emit({"results": scored, "skipped": failed,
           "budgetExceeded": exceeded}, args.json)
    return EXIT_OK


def _suite_group():
    checks = []
    els = group.full_group()
    checks.append(("group order 5040", len(els) == 5040, str(len(els))))
    a11 = params.ParamVec8.from_seq((8, 16, 10, 15, 12, 16, 18, 13))
    orb = group.orbit(a11)
    checks.append(("orbit size 5040", orb.size == 5040, str(orb.size)))
    checks.append(("orbit all admissible", orb.n_admissible == orb.size,
                   str(orb.n_admissible)))
    checks.append(("extended order 40320",
                   group.extended_group_order() == 40320, ""))
    sample = sorted(els, key=lambda g: g.matrix)[::504][:10]
    ok = True
    for base in (params.ParamVec8.from_seq((1,) * 8), a11):
        q0 = exact.Q_from_sum(params.a_to_pq(base))
        for g in sample:
            ratio = group.factorial_ratio(g, base)
            qg = exact.Q_from_sum(params.a_to_pq(g.apply(base)))
            if qg != q0 * ratio:
                ok = False
    checks.append(("coefficient invariance on orbit samples", ok, ""))
    return checks


def _suite_graph():
    checks = []
    g8 = graphs.build_G8()
    checks.append(("28 vertices", g8.n_vertices == 28, str(g8.n_vertices)))
    checks.append(("168 edges", g8.n_edges == 168, str(g8.n_edges)))
    checks.append(("12-regular", set(g8.degrees()) == {12}, ""))
    checks.append(("28 table identities", graphs.verify_table(), ""))
    order = graphs.automorphism_order(g8)
    checks.append(("automorphism order 40320", order == 40320, str(order)))
    rep = graphs.stabilizer_check()
    checks.append(("stabilizer correspondence", rep.ok,
                   json.dumps(rep.to_json())))
    return checks


def _suite_sequences():
    checks = []
    seqs = exact.totsym_sequences(30)
    ok = all(exact.Q_from_sum(params.a_to_pq(params.ParamVec8.from_seq((n,) * 8)))
             == seqs[n].Q for n in range(31))
    checks.append(("recursion matches double sum, n <= 30", ok, ""))
    first = [seqs[n].Q for n in range(3)]
    checks.append(("leading coefficients 1, 21, 2989",
                   first == [1, 21, 2989], str(first)))
    a_anchor = [exact.A_sum(n, n, n, n, n, n, n) for n in range(4)]
    checks.append(("companion sum anchors 1, 5, 73, 1445",
                   a_anchor == [1, 5, 73, 1445], str(a_anchor)))
    ok = True
    for a in [(1,) * 8, (2,) * 8, (3,) * 8,
              (8, 16, 10, 15, 12, 16, 18, 13),
              (15, 20, 16, 14, 18, 17, 16, 20)]:
        pq = params.a_to_pq(params.ParamVec8.from_seq(a))
        if exact.I3_leading(params.ParamVec8.from_seq(a)) != exact.Q_from_sum(pq):
            ok = False
    checks.append(("descent leading coefficient identity", ok, ""))
    dn = [exact.lcm_d(n) for n in (0, 1, 4, 10)]
    checks.append(("lcm anchors", dn == [1, 1, 12, 2520], str(dn)))
    return checks


def _suite_analytic():
    from mpmath import mp
    checks = []
    zc = analytic.zeta_constants(30)
    with mp.workdps(40):
        j = analytic.eval_J3((0,) * 7, prec=25)
        checks.append(("depth-3 integral at zero", abs(j.value - 2 * zc.zeta3) < mp.mpf(10) ** -20,
                       mp.nstr(j.value, 20)))
        f = analytic.eval_F7((0,) * 8, prec=25)
        checks.append(("series at zero", abs(f.value - 2 * zc.zeta5) < mp.mpf(10) ** -20,
                       mp.nstr(f.value, 20)))
    rep = analytic.decompose((1,) * 8, prec=30)
    from fractions import Fraction
    ok = (rep.Q == 21 and rep.phat == Fraction(101, 4)
          and rep.p == Fraction(87, 4))
    checks.append(("symmetric decomposition at n = 1", ok,
                   "%s %s %s" % (rep.Q, rep.phat, rep.p)))
    rep0 = analytic.decompose((0,) * 8, prec=25)
    checks.append(("decomposition at zero", (rep0.Q, rep0.phat, rep0.p) == (1, 0, 0),
                   "%s %s %s" % (rep0.Q, rep0.phat, rep0.p)))
    return checks


_SUITES = {
    "group": _suite_group,
    "graph": _suite_graph,
    "sequences": _suite_sequences,
    "analytic": _suite_analytic,
}


def cmd_verify(args) -> int:
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    report = {"suites": {}, "ok": True, "firstFailure": None}
    for name in names:
        checks = _SUITES[name]()
        report["suites"][name] = [
            {"name": cname, "ok": ok, "detail": detail}
            for cname, ok, detail in checks
        ]
        for cname, ok, _ in checks:
            if not ok and report["firstFailure"] is None:
                report["firstFailure"] = "%s: %s" % (name, cname)
            report["ok"] = report["ok"] and ok
    _emit(report, args.json)
    return EXIT_OK if report["ok"] else EXIT_FAIL


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zetaforms",
        description="simultaneous rational approximations to zeta(5) and zeta(3)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--prec", type=int, default=40,
                       help="working precision in decimal digits")
        p.add_argument("--json", metavar="PATH", default=None,
                       help="also write the JSON output to this file")

    p = sub.add_parser("decompose", help="exact (Q, Phat, P) of a vector")
    p.add_argument("a", nargs=8, type=int, metavar="A")
    common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("worthiness", help="growth/denominator score of a vector")
    p.add_argument("a", nargs=8, type=int, metavar="A")
    common(p)
    p.add_argument("--refined-m", type=int, default=None, metavar="L",
                   help="take L sum-type and 5-L difference-type forms")
    p.set_defaults(func=cmd_worthiness)

    p = sub.add_parser("search", help="rank admissible vectors in a box by score")
    p.add_argument("box", nargs=8, metavar="LO:HI",
                   help="inclusive integer range per coordinate, or a single value")
    common(p)
    p.add_argument("--refined-m", type=int, default=None, metavar="L")
    p.add_argument("--budget", type=int, default=500,
                   help="maximum number of candidates to score")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--no-dedupe", dest="dedupe", action="store_false",
                   help="score every vector instead of one per orbit")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="run the built-in verification suites")
    p.add_argument("--suite", choices=[*_SUITES, "all"], default="all")
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except analytic.AmbiguousReconstructionError as exc:
        _emit({"error": "reconstruction ambiguity", "detail": str(exc)})
        return EXIT_AMBIGUOUS
    except asympt.DegenerateGrowthError as exc:
        _emit({"error": "degenerate asymptotics", "detail": str(exc)})
        return EXIT_DEGENERATE
    except (analytic.QuadratureError, ValueError) as exc:
        _emit({"error": "evaluation failure", "detail": str(exc)})
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
