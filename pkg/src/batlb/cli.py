"""Command-line front end.

Subcommands: gen, solve, kernelize, decide, verify, stats.  Data goes to
stdout, diagnostics to stderr.  Exit codes: 0 success, 1 verification
failure, 2 parse/config error, 3 input too large for the chosen limits.
Rationals are always rendered as "p/q" strings, never decimals.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import moments, poly, solvers, weights
from .errors import BatlbError, TooLargeError
from .generators import gen_complete, gen_planted, gen_random
from .instance import Instance, parse_instance, serialize_instance
from .kernelize import is_irreducible, kernelize
from .rational import rational_str


def _read_input(path: str, dedupe: bool) -> Instance:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    return parse_instance(text, dedupe=dedupe)


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")


def cmd_gen(args) -> int:
    if args.kind == "complete":
        inst = gen_complete(args.n)
        planted = None
    elif args.kind == "random":
        inst = gen_random(args.n, args.m, args.seed)
        planted = None
    else:
        inst, arr = gen_planted(args.n, args.m, Fraction(args.noise), args.seed)
        planted = [arr[v] for v in inst.variables()]
    text = serialize_instance(inst)
    if args.format == "json":
        out = {"n": inst.n, "m": inst.m, "instance": text}
        if planted is not None:
            out["planted_arrangement"] = planted
        body = json.dumps(out, indent=2, sort_keys=True) + "\n"
    else:
        body = text
        if planted is not None:
            print("c planted arrangement: " + " ".join(map(str, planted)), file=sys.stderr)
    if args.output == "-":
        sys.stdout.write(body)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(body)
    return 0


def cmd_solve(args) -> int:
    inst = _read_input(args.input, args.dedupe)
    if inst.n <= args.dp_max or args.exact:
        result = solvers.solve_exact_dp(inst, max_n=args.dp_max)
    else:
        rough = solvers.randomized_round(inst, args.trials, args.trials, args.seed)
        result = solvers.local_search(inst, rough.arrangement)
    payload = result.to_json_dict(inst)
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for key in ("method", "best_count", "m", "lower_bound_m_over_3", "above_bound", "optimal"):
            print(f"{key}: {payload[key]}")
        print("arrangement: " + " ".join(map(str, payload["arrangement"])))
    return 0


def cmd_kernelize(args) -> int:
    inst = _read_input(args.input, args.dedupe)
    decision = kernelize(inst, args.kappa, mode=args.mode)
    payload = decision.to_json_dict()
    if decision.kernel is not None:
        kernel_text = serialize_instance(decision.kernel)
    else:
        kernel_text = None
    if args.format == "json":
        if kernel_text is not None:
            payload["kernel"] = kernel_text
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        _emit(payload, "text")
        if kernel_text is not None:
            sys.stdout.write(kernel_text)
    return 0


def cmd_decide(args) -> int:
    inst = _read_input(args.input, args.dedupe)
    decision = solvers.decide_batlb(
        inst,
        args.kappa,
        dp_n_max=args.dp_max,
        trials=args.trials,
        seed=args.seed,
        mode=args.mode,
    )
    payload = decision.to_json_dict(inst)
    kernel = decision.kernel_decision.kernel
    if args.format == "json":
        if decision.verdict == "UNDECIDED" and kernel is not None:
            payload["kernel_text"] = serialize_instance(kernel)
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"verdict: {decision.verdict}")
        print(f"existential: {decision.existential}")
        if decision.best_count is not None:
            print(f"best_count: {decision.best_count}")
        if decision.certificate is not None:
            print("certificate: " + " ".join(str(decision.certificate[v]) for v in inst.variables()))
        if decision.verdict == "UNDECIDED" and kernel is not None:
            print("kernel too large for the exact budget; kernel follows")
            sys.stdout.write(serialize_instance(kernel))
    return 0


def _verify_checks(inst: Instance | None) -> list[dict]:
    checks: list[dict] = []

    report = moments.verify_case_weights()
    checks.append(
        {
            "name": "pair-case-weights",
            "passed": report.all_match,
            "detail": {
                str(c.case): f"{rational_str(c.computed_768)} vs {c.expected_768}"
                for c in report.checks
            },
        }
    )

    case_counts = {i: 0 for i in range(1, 6)}
    case_values: dict[int, set] = {i: set() for i in range(1, 6)}
    total6 = 0
    total36 = 0
    for mid in range(4):
        for lo in range(4):
            for hi in range(4):
                case = weights.weight_case(mid, lo, hi)
                w6 = weights.weight6(mid, lo, hi)
                case_counts[case] += 1
                case_values[case].add(w6)
                total6 += w6
                total36 += w6 * w6
    expected_counts = {1: 4, 2: 12, 3: 24, 4: 8, 5: 16}
    expected_values = {1: {0}, 2: {-2}, 3: {1}, 4: {4}, 5: {-2}}
    dist_ok = (
        case_counts == expected_counts
        and case_values == expected_values
        and total6 == 0
        and Fraction(total36, 36 * 64) == Fraction(11, 96)
    )
    checks.append(
        {
            "name": "weight-distribution",
            "passed": dist_ok,
            "detail": {
                "case_counts_of_64": case_counts,
                "mean": rational_str(Fraction(total6, 6 * 64)),
                "mean_square": rational_str(Fraction(total36, 36 * 64)),
            },
        }
    )

    p = poly.weight_polynomial(moments.CASE_REPRESENTATIVES[8][0])
    poly_ok = p.degree <= 6 and p.constant_term == 0
    for q in range(64):
        eps = tuple(1 if (q >> (5 - s)) & 1 else -1 for s in range(6))
        mid, lo, hi = (q >> 4) & 3, (q >> 2) & 3, q & 3
        if p.evaluate_eps(eps) != Fraction(weights.weight6(mid, lo, hi), 6):
            poly_ok = False
            break
    checks.append(
        {
            "name": "weight-polynomial",
            "passed": poly_ok,
            "detail": {"degree": p.degree, "constant_term": rational_str(p.constant_term)},
        }
    )

    w = moments.CASE_VALUES_768
    wp = moments.CASE_SUM_WEIGHTS_768
    rules = {
        "case4": wp[1] + wp[2] + wp[4] == w[4],
        "case5": wp[2] + wp[2] + wp[5] == w[5],
        "case6": wp[3] + wp[2] + wp[6] == w[6],
        "case7": wp[3] + wp[3] + wp[7] == w[7],
        "case8": 2 * wp[3] + wp[2] + wp[7] + 2 * wp[6] + wp[8] == w[8],
    }
    checks.append(
        {"name": "case-weight-sum-rules", "passed": all(rules.values()), "detail": rules}
    )

    if inst is not None:
        closed = moments.second_moment_closed_form(inst)
        enumerated = moments.second_moment_enumerated(inst)
        agree = closed == enumerated
        direct = None
        if inst.n <= 8:
            direct = moments.second_moment_direct(inst)
            agree = agree and closed == direct
        checks.append(
            {
                "name": "second-moment-agreement",
                "passed": agree,
                "detail": {
                    "closed_form": rational_str(closed),
                    "enumerated": rational_str(enumerated),
                    "direct": rational_str(direct) if direct is not None else "skipped (n > 8)",
                },
            }
        )
        if is_irreducible(inst):
            bound_ok = closed >= Fraction(11 * inst.m, 768)
            cross_ok = moments.cross_term_lower_bound_check(inst)
            checks.append(
                {
                    "name": "second-moment-lower-bound",
                    "passed": bound_ok and cross_ok,
                    "detail": {
                        "second_moment": rational_str(closed),
                        "bound": rational_str(Fraction(11 * inst.m, 768)),
                    },
                }
            )
        else:
            checks.append(
                {
                    "name": "second-moment-lower-bound",
                    "passed": True,
                    "detail": "skipped: instance not irreducible",
                }
            )
    return checks


def cmd_verify(args) -> int:
    inst = None
    if args.input is not None:
        inst = _read_input(args.input, args.dedupe)
    checks = _verify_checks(inst)
    ok = all(c["passed"] for c in checks)
    if args.format == "json":
        print(json.dumps({"passed": ok, "checks": checks}, indent=2, sort_keys=True))
    else:
        for c in checks:
            print(f"[{'PASS' if c['passed'] else 'FAIL'}] {c['name']}")
        print(f"verify: {'all checks passed' if ok else 'FAILURES PRESENT'}")
    return 0 if ok else 1


def cmd_stats(args) -> int:
    inst = _read_input(args.input, args.dedupe)
    counts = moments.profile_counts(inst)
    closed = moments.second_moment_closed_form(inst)
    enumerated = moments.second_moment_enumerated(inst)
    mean, mean_sq = moments.monte_carlo_moments(inst, args.trials, args.seed)
    payload = {
        "n": inst.n,
        "m": inst.m,
        "irreducible": is_irreducible(inst),
        "middle_counts": {str(v): c for v, c in sorted(counts.b.items())},
        "outer_counts": {str(v): c for v, c in sorted(counts.e.items())},
        "second_moment_closed_form": rational_str(closed),
        "second_moment_enumerated": rational_str(enumerated),
        "cross_term": rational_str(moments.cross_term_closed_form(inst)),
        "monte_carlo": {
            "samples": args.trials,
            "seed": args.seed,
            "mean": rational_str(mean),
            "mean_square": rational_str(mean_sq),
        },
    }
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        _emit(payload, "text")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="batlb",
        description="Betweenness above the tight m/3 bound: generators, "
        "kernelization, exact moments, and solvers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_input=True):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--seed", type=int, default=0)
        if with_input:
            p.add_argument("input", nargs="?", default="-",
                           help="instance file, or - for stdin")
            p.add_argument("--dedupe", action="store_true",
                           help="merge duplicate constraints instead of rejecting")

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument("--kind", choices=("complete", "random", "planted"), default="random")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-m", type=int, default=0)
    p.add_argument("--noise", default="0", help="planted noise, a rational like 1/5")
    p.add_argument("-o", "--output", default="-")
    add_common(p, with_input=False)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="maximize the satisfied count")
    add_common(p)
    p.add_argument("--dp-max", dest="dp_max", type=int, default=solvers.DEFAULT_DP_MAX)
    p.add_argument("--trials", type=int, default=64)
    p.add_argument("--exact", action="store_true",
                   help="fail (exit 3) instead of falling back to heuristics")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("kernelize", help="reduce and apply the kernel threshold")
    add_common(p)
    p.add_argument("--kappa", type=int, required=True)
    p.add_argument("--mode", choices=("bound", "sharp"), default="bound")
    p.set_defaults(func=cmd_kernelize)

    p = sub.add_parser("decide", help="decide satisfied >= m/3 + kappa")
    add_common(p)
    p.add_argument("--kappa", type=int, required=True)
    p.add_argument("--mode", choices=("bound", "sharp"), default="bound")
    p.add_argument("--dp-max", dest="dp_max", type=int, default=solvers.DEFAULT_DP_MAX)
    p.add_argument("--trials", type=int, default=32)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("verify", help="re-derive the pinned tables and bounds")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("input", nargs="?", default=None,
                   help="optional instance for instance-level checks")
    p.add_argument("--dedupe", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", help="profile counts and exact moments")
    add_common(p)
    p.add_argument("--trials", type=int, default=200,
                   help="Monte Carlo sample count")
    p.set_defaults(func=cmd_stats)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (BatlbError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
