"""Command-line entry point: ``rrgl <subcommand> [flags]``.

Every subcommand prints a short human summary, or the full report as JSON
with ``--json``. Exit status is 0 on pass, 1 on fail, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from fractions import Fraction
from typing import Callable

from sympy import isprime

from . import ffpoly, glnq, hall_littlewood as hl, qseries
from .partitions import enumerate_partitions, kung_d, statistics
from .report import Report, decimal_str, exact, parse_rational, rational_str

SUBCOMMANDS = (
    "gordon", "lemma-product", "census", "class-sizes", "glnq-prob",
    "limit", "semisimple", "hall-littlewood", "theorem4", "all",
)


class UsageError(Exception):
    pass


def _pick(value, default):
    return default if value is None else value


def _tol(args, default: Fraction) -> Fraction:
    if args.tol is None:
        return default
    try:
        tol = Fraction(args.tol)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad --tol value {args.tol!r}") from exc
    if tol <= 0:
        raise UsageError("--tol must be positive")
    return tol


def run_gordon(k: int, i_values, trunc: int) -> tuple[bool, dict]:
    ok, cases = True, []
    for i in i_values:
        sum_side = qseries.gordon_sum_side(k, i, trunc)
        prod_side = qseries.gordon_product_side(k, i, trunc)
        case = {"k": k, "i": i, "equal": sum_side == prod_side,
                "sum_side": sum_side.to_json(), "product_side": prod_side.to_json()}
        ok &= case["equal"]
        if i == k:
            case["partition_sum_equal"] = qseries.partition_sum_side(k, trunc) == sum_side
            ok &= case["partition_sum_equal"]
        cases.append(case)
    return ok, {"trunc": trunc, "cases": cases}


def run_lemma_product(q: int, trunc: int, t_values=(1, 2, 3), t_max_values=range(1, 7)) -> tuple[bool, dict]:
    ok, fixed, telescoped = True, [], []
    u = qseries.TruncatedSeries.monomial(1, trunc)
    for t in t_values:
        got = ffpoly.verify_fixed_t_product(q, t, trunc)
        good = got == 1 - u * Fraction(1, q ** (t - 1))
        ok &= good
        fixed.append({"t": t, "equal": good, "series": got.to_json()})
    for t_max in t_max_values:
        got = ffpoly.verify_telescoped_product(q, t_max, trunc)
        good = got == (1 - u) / (1 - u * Fraction(1, q**t_max))
        residual = max(abs(c) for c in (got - (1 - u)).coeffs)
        ok &= good and residual <= Fraction(1, q**t_max)
        telescoped.append({"t_max": t_max, "equal": good, "max_residual": exact(residual)})
    return ok, {"q": q, "trunc": trunc, "fixed_t": fixed, "telescoped": telescoped}


def run_census(n: int, q: int, threads=None) -> tuple[bool, dict]:
    tally = glnq.census(n, q, threads)
    rows = [{"class": cd.to_json(), "count": cnt, "formula": glnq.class_size(cd, n, q)} for cd, cnt in tally.items()]
    ok = glnq.census_matches_formula(n, q, tally)
    return ok, {"n": n, "q": q, "group_order": glnq.gl_order(n, q), "total": sum(tally.values()),
                "num_classes": len(tally), "classes": rows}


def run_class_sizes(n: int, q: int) -> tuple[bool, dict]:
    classes = glnq.enumerate_classes(n, q)
    order = glnq.gl_order(n, q)
    rows, ok = [], True
    for c in classes:
        kung = glnq.centralizer_order(c, q, "kung")
        simple = glnq.centralizer_order(c, q, "simplified")
        ok &= kung == simple
        rows.append({"blocks": [{"degree": m, "tag": tag, "lambda": lam.to_json()} for m, tag, lam in c.entries],
                     "centralizer": simple, "size": order // simple})
    total = sum(r["size"] for r in rows)
    ok &= total == order
    return ok, {"n": n, "q": q, "group_order": order, "size_sum": total, "num_classes": len(rows), "classes": rows}


def _census_phi(q: int, m: int):
    irr = ffpoly.enumerate_monic_irreducibles(q, m)[m]
    z = ffpoly.FqPoly.z(q)
    return [f for f in irr if f != z][0]


def run_glnq_prob(n: int, q: int, k: int, m: int) -> tuple[bool, dict]:
    a = glnq.probability_by_classes(n, q, k, m)
    b = glnq.probability_by_cycle_index(n, q, k, m)
    details = {"n": n, "q": q, "k": k, "m": m, "value": rational_str(b), "decimal": exact(b)["decimal"],
               "by_classes": rational_str(a), "by_cycle_index": rational_str(b)}
    ok = a == b
    if isprime(q) and 1 <= n <= 3 and q ** (n * n) <= 10**4 and m <= n:
        by_census = glnq.census_probability(glnq.census(n, q), _census_phi(q, m), k)
        details["by_census"] = rational_str(by_census)
        ok &= by_census == b
    return ok, details


def run_limit(q: int, k: int, m: int, tol: Fraction, n_max: int) -> tuple[bool, dict]:
    interval = glnq.limit_probability(q, k, m, tol)
    finite = glnq.finite_n_probabilities(q, k, m, range(1, n_max + 1))
    distances = {}
    for n, p in finite.items():
        _, far = interval.distance_bounds(p)
        distances[n] = far
    ok = interval.width <= tol
    return ok, {"q": q, "k": k, "m": m, "interval": interval.to_json(), "width": exact(interval.width),
                "finite_n": {str(n): exact(p) for n, p in finite.items()},
                "max_distance_to_limit": {str(n): exact(d) for n, d in distances.items()}}


def run_semisimple(n: int, q: int, threads=None) -> tuple[bool, dict]:
    res = glnq.semisimple_census(n, q, threads)
    cands = glnq.semisimple_limit_candidates(q)
    return res.agree, {"n": n, "q": q, "matrices": res.total, "semisimple_by_partitions": res.by_partitions,
                       "semisimple_by_radical": res.by_radical, "proportion": exact(res.proportion),
                       "limit_display_as_printed": exact(cands["shifted"]),
                       "limit_display_exponent_r": exact(cands["unshifted"])}


def random_distinct_points(rng: random.Random, n: int, count: int) -> list[list[Fraction]]:
    out = []
    while len(out) < count:
        pt = [Fraction(rng.randint(-20, 20), rng.randint(1, 7)) for _ in range(n)]
        if len(set(pt)) == n:
            out.append(pt)
    return out


def run_hall_littlewood(max_vars: int, q_values=(2, 3), points: int = 20, seed: int = 0) -> tuple[bool, dict]:
    rng = random.Random(seed)
    ok, cases = True, []
    for lam in enumerate_partitions(4):
        for n in range(max(len(lam), 1), max_vars + 1):
            cos = hl.hl_poly_cosets(lam, n)
            full = hl.hl_poly_full_sum(lam, n)
            schur_ok = all(
                cos.evaluate(pt, 0) == hl.schur_via_alternants(lam, pt)
                for pt in random_distinct_points(rng, n, points)
            )
            case = {"lambda": lam.to_json(), "n_vars": n, "definitions_agree": cos == full,
                    "symmetric": cos.is_symmetric(), "homogeneous": cos.degrees() <= {lam.size},
                    "t0_is_schur": schur_ok, "t1_is_monomial": cos.at_t(1) == hl.monomial_symmetric(lam, n)}
            ok &= all(v for key, v in case.items() if key not in ("lambda", "n_vars"))
            cases.append(case)
    spec_rows = []
    for q in q_values:
        for lam in enumerate_partitions(3):
            if not lam.size:
                continue
            target = hl.closed_form_specialization(lam, q)
            errs = [abs(target - hl.principal_specialization(lam, q, N)) for N in range(len(lam), len(lam) + 6)]
            decreasing = all(a > b for a, b in zip(errs, errs[1:]))
            ok &= decreasing
            spec_rows.append({"q": q, "lambda": lam.to_json(), "closed_form": exact(target),
                              "errors": [exact(e)["decimal"] for e in errs], "strictly_decreasing": decreasing})
    return ok, {"cases": cases, "specialization": spec_rows}


def run_theorem4(q: int, k: int, tol: Fraction) -> tuple[bool, dict]:
    res = hl.theorem4_check(q, k, tol)
    termwise = all(
        hl.closed_form_specialization(lam, q) == qseries.partition_sum_term(lam, Fraction(1, q))
        for lam in enumerate_partitions(10, k)
    )
    return res.consistent and termwise, {
        "q": q, "k": k, "lhs_interval": res.lhs.to_json(), "rhs_interval": res.rhs.to_json(),
        "lhs_width": exact(res.lhs.width), "rhs_width": exact(res.rhs.width),
        "consistent": res.consistent, "terms_match_gordon_summands": termwise, "terms_used": res.terms_used}


def run_identities() -> tuple[bool, dict]:
    parts_ok = all(statistics(l).sum_conj_sq == l.size + 2 * statistics(l).n_lambda for l in enumerate_partitions(18))
    d_ok = all(
        kung_d(l, i) == sum(l.conjugate().parts[:i])
        for l in enumerate_partitions(12) for i in range(1, l.largest + 2)
    )
    order_ok = all(glnq.gl_order(n, q) == glnq.gl_order_via_product(n, q) for n in range(9) for q in (2, 3, 5))
    return parts_ok and d_ok and order_ok, {"conjugate_squares": parts_ok, "kung_d": d_ok, "gl_order": order_ok}


def _all_checks(threads) -> list[tuple[str, Callable[[], tuple[bool, dict]]]]:
    checks = []
    for k in (2, 3, 4):
        checks.append((f"gordon k={k}", lambda k=k: run_gordon(k, range(1, k + 1), 40)))
    for q in (2, 3, 5):
        checks.append((f"lemma-product q={q}", lambda q=q: run_lemma_product(q, 25)))
    for n, q in ((2, 2), (2, 3), (3, 2)):
        checks.append((f"census GL({n},{q})", lambda n=n, q=q: run_census(n, q, threads)))
    for n in (1, 2, 3, 4):
        for q in (2, 3):
            checks.append((f"class-sizes n={n} q={q}", lambda n=n, q=q: run_class_sizes(n, q)))

    def prob_sweep():
        rows, ok = [], True
        for n in range(0, 5):
            for q in (2, 3):
                for k in (2, 3):
                    for m in (1, 2):
                        a = glnq.probability_by_classes(n, q, k, m)
                        b = glnq.probability_by_cycle_index(n, q, k, m)
                        ok &= a == b
                        rows.append({"n": n, "q": q, "k": k, "m": m, "value": rational_str(b), "agree": a == b})
        ok &= glnq.probability_by_cycle_index(2, 2, 2, 1) == Fraction(1, 2)
        ok &= glnq.probability_by_cycle_index(2, 3, 2, 1) == Fraction(5, 6)
        return ok, {"rows": rows}

    checks.append(("glnq-prob dual path", prob_sweep))
    checks.append(("glnq-prob census n=2 q=2", lambda: run_glnq_prob(2, 2, 2, 1)))
    checks.append(("glnq-prob census n=2 q=3", lambda: run_glnq_prob(2, 3, 2, 1)))

    def limit_check():
        ok, d = run_limit(3, 2, 1, Fraction(1, 10**8), 8)
        iv = glnq.limit_probability(3, 2, 1, Fraction(1, 10**8))
        p2, p8 = glnq.probability_by_cycle_index(2, 3, 2, 1), glnq.probability_by_cycle_index(8, 3, 2, 1)
        far8 = iv.distance_bounds(p8)[1]
        near2 = iv.distance_bounds(p2)[0]
        d["p8_within_0.005"] = far8 < Fraction(5, 1000)
        d["p8_closer_than_p2"] = far8 < near2
        return ok and d["p8_within_0.005"] and d["p8_closer_than_p2"], d

    checks.append(("limit q=3 k=2 m=1", limit_check))
    for q in (2, 3, 5):
        for k in (2, 3):
            checks.append((f"theorem4 q={q} k={k}", lambda q=q, k=k: run_theorem4(q, k, Fraction(1, 10**6))))
    checks.append(("hall-littlewood", lambda: run_hall_littlewood(4)))
    checks.append(("identities", run_identities))
    for n, q in ((2, 2), (2, 3), (3, 2)):
        checks.append((f"semisimple Mat({n},{q})", lambda n=n, q=q: run_semisimple(n, q, threads)))
    return checks


def run_all(threads=None, log=None) -> tuple[bool, dict]:
    results, ok = [], True
    for name, fn in _all_checks(threads):
        start = time.perf_counter()
        passed, _ = fn()
        elapsed = (time.perf_counter() - start) * 1000
        ok &= passed
        results.append({"check": name, "status": "pass" if passed else "fail", "timing_ms": round(elapsed, 1)})
        if log:
            log(f"{'PASS' if passed else 'FAIL'}  {name}  ({elapsed:.0f} ms)")
    return ok, {"checks": results}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rrgl", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--i", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--m", type=int)
    common.add_argument("--trunc", type=int)
    common.add_argument("--tol", type=str, help="positive rational, e.g. 1/1000000 or 1e-6")
    common.add_argument("--json", action="store_true", help="emit the report as JSON")
    common.add_argument("--threads", type=int, help=f"worker processes (default ${glnq.THREADS_ENV} or 1)")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in SUBCOMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def dispatch(args) -> tuple[bool, dict, dict]:
    cmd = args.command
    if cmd == "gordon":
        k = _pick(args.k, 2)
        i_values = [args.i] if args.i is not None else list(range(1, k + 1))
        params = {"k": k, "i": i_values, "trunc": _pick(args.trunc, 40)}
        ok, det = run_gordon(k, i_values, params["trunc"])
    elif cmd == "lemma-product":
        params = {"q": _pick(args.q, 2), "trunc": _pick(args.trunc, 25)}
        ok, det = run_lemma_product(params["q"], params["trunc"])
    elif cmd == "census":
        params = {"n": _pick(args.n, 2), "q": _pick(args.q, 2)}
        ok, det = run_census(params["n"], params["q"], args.threads)
    elif cmd == "class-sizes":
        params = {"n": _pick(args.n, 2), "q": _pick(args.q, 2)}
        ok, det = run_class_sizes(params["n"], params["q"])
    elif cmd == "glnq-prob":
        params = {"n": _pick(args.n, 2), "q": _pick(args.q, 2), "k": _pick(args.k, 2), "m": _pick(args.m, 1)}
        ok, det = run_glnq_prob(**params)
    elif cmd == "limit":
        params = {"q": _pick(args.q, 3), "k": _pick(args.k, 2), "m": _pick(args.m, 1),
                  "tol": _tol(args, Fraction(1, 10**8)), "n_max": _pick(args.n, 8)}
        ok, det = run_limit(**params)
    elif cmd == "semisimple":
        params = {"n": _pick(args.n, 2), "q": _pick(args.q, 2)}
        ok, det = run_semisimple(params["n"], params["q"], args.threads)
    elif cmd == "hall-littlewood":
        params = {"max_vars": _pick(args.n, 4)}
        if args.q is not None:
            params["q_values"] = (args.q,)
        ok, det = run_hall_littlewood(**params)
    elif cmd == "theorem4":
        params = {"q": _pick(args.q, 2), "k": _pick(args.k, 2), "tol": _tol(args, Fraction(1, 10**6))}
        ok, det = run_theorem4(**params)
    else:
        params = {"threads": args.threads}
        ok, det = run_all(args.threads, log=None if args.json else print)
    return ok, det, params


def _iv_str(iv: dict) -> str:
    return f"[{decimal_str(parse_rational(iv['lo']))}, {decimal_str(parse_rational(iv['hi']))}]"


def _summary(report: Report) -> str:
    d = report.details
    head = f"{report.command}: {report.status.upper()} ({report.timing_ms:.0f} ms)"
    extra = []
    if report.command == "census":
        extra.append(f"{d['num_classes']} classes, sizes {sorted(c['count'] for c in d['classes'])}, total {d['total']}")
    elif report.command == "glnq-prob":
        extra.append(f"P = {d['value']} ~ {d['decimal']}")
    elif report.command == "limit":
        extra.append(f"limit in {_iv_str(d['interval'])}, width {d['width']['decimal']}")
    elif report.command == "theorem4":
        extra.append(f"lhs {_iv_str(d['lhs_interval'])}  rhs {_iv_str(d['rhs_interval'])}")
    elif report.command == "semisimple":
        extra.append(f"proportion {d['proportion']['exact']} ~ {d['proportion']['decimal']}")
    elif report.command == "class-sizes":
        extra.append(f"{d['num_classes']} classes, sizes sum to {d['size_sum']} = |GL| = {d['group_order']}")
    elif report.command == "gordon":
        extra.extend(f"k={c['k']} i={c['i']}: {'equal' if c['equal'] else 'DIFFER'}" for c in d["cases"])
    return "\n".join([head] + ["  " + e for e in extra])


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    params_for_report = {k: v for k, v in vars(args).items() if k not in ("command", "json") and v is not None}
    start = time.perf_counter()
    try:
        ok, details, params = dispatch(args)
    except (UsageError, ValueError) as exc:
        print(f"rrgl {args.command}: error: {exc}", file=sys.stderr)
        return 2
    report = Report(
        command=args.command,
        parameters={**params_for_report, **{k: (rational_str(v) if isinstance(v, Fraction) else v)
                                            for k, v in params.items() if not isinstance(v, range)}},
        status="pass" if ok else "fail",
        details=details,
        timing_ms=round((time.perf_counter() - start) * 1000, 1),
    )
    print(report.to_json() if args.json else _summary(report))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
