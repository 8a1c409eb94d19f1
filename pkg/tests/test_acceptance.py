"""Acceptance suite: one test per criterion, exact tolerances, one
pass/fail line each (run with -s or -v to see them)."""

import itertools
import random
import time
from fractions import Fraction
from math import comb

from batlb import (
    Constraint,
    constraint_weight,
    cross_term_closed_form,
    gen_complete,
    gen_planted,
    gen_random,
    lift_arrangement,
    meets_yes_bound,
    moments_direct,
    randomized_round,
    reduce_instance,
    satisfied_count,
    second_moment_closed_form,
    second_moment_direct,
    second_moment_enumerated,
    solve_brute,
    solve_exact_dp,
    verify_case_weights,
    weight_case,
    weight_polynomial,
    yes_threshold,
)

PASS = "PASS"


def _report(name, detail=""):
    print(f"criterion {name}: {PASS} {detail}".rstrip())


def test_criterion_1_pair_case_table():
    """Eight case representatives reproduce (12,3,-6,24,36,-18,-6,-44)/768."""
    start = time.perf_counter()
    report = verify_case_weights()
    elapsed = time.perf_counter() - start
    values = tuple(int(c.computed_768) for c in report.checks)
    assert values == (12, 3, -6, 24, 36, -18, -6, -44)
    assert report.all_match
    assert elapsed < 1.0, f"case table took {elapsed:.3f}s"
    _report("1 (pair-case table)", f"in {elapsed * 1000:.0f} ms")


def test_criterion_2_weight_distribution():
    """Case probabilities (1,3,6,2,4)/16, values (0,-1/3,1/6,2/3,-1/3),
    zero mean, second moment 11/96 -- all exact."""
    counts = {i: 0 for i in range(1, 6)}
    values = {i: set() for i in range(1, 6)}
    mean = Fraction(0)
    mean_sq = Fraction(0)
    for triple in itertools.product(range(4), repeat=3):
        case = weight_case(*triple)
        w = constraint_weight(*triple)
        counts[case] += 1
        values[case].add(w)
        mean += Fraction(1, 64) * w
        mean_sq += Fraction(1, 64) * w * w
    assert {i: Fraction(counts[i], 64) for i in counts} == {
        1: Fraction(1, 16),
        2: Fraction(3, 16),
        3: Fraction(6, 16),
        4: Fraction(2, 16),
        5: Fraction(4, 16),
    }
    assert values == {
        1: {Fraction(0)},
        2: {Fraction(-1, 3)},
        3: {Fraction(1, 6)},
        4: {Fraction(2, 3)},
        5: {Fraction(-1, 3)},
    }
    assert mean == 0
    assert mean_sq == Fraction(11, 96)
    _report("2 (weight distribution)")


def test_criterion_3_second_moment_three_way():
    """On >= 100 seeded irreducible instances (n <= 12, m <= 80):
    closed form == pair enumeration, == direct 4^n enumeration for n <= 8,
    and both lower bounds hold.  Under 2 minutes."""
    start = time.perf_counter()
    rng = random.Random(424242)
    checked = 0
    direct_checked = 0
    while checked < 100:
        n = rng.randint(3, 12)
        m = rng.randint(0, min(80, 3 * comb(n, 3)))
        inst = reduce_instance(gen_random(n, m, rng.randrange(2**31))).reduced
        closed = second_moment_closed_form(inst)
        enumerated = second_moment_enumerated(inst)
        assert closed == enumerated
        if inst.n <= 8:
            assert closed == second_moment_direct(inst)
            direct_checked += 1
        assert closed >= Fraction(11 * inst.m, 768)
        assert cross_term_closed_form(inst) >= Fraction(-77 * inst.m, 768)
        checked += 1
    elapsed = time.perf_counter() - start
    assert elapsed < 120.0, f"took {elapsed:.1f}s"
    assert direct_checked >= 20
    _report(
        "3 (second-moment agreement)",
        f"{checked} instances ({direct_checked} with direct check) in {elapsed:.1f}s",
    )


def test_criterion_4_polynomial_and_fourth_moment():
    """>= 50 random constraints: the expanded polynomial reproduces the
    weight at all 64 indicator points; E[X^4] <= 2^36 E[X^2]^2 for n <= 7."""
    rng = random.Random(7)
    for _ in range(50):
        vars3 = rng.sample(range(1, 40), 3)
        c = Constraint(vars3[0], min(vars3[1:]), max(vars3[1:]))
        p = weight_polynomial(c)
        assert p.degree <= 6
        for q in range(64):
            eps = tuple(1 if (q >> (5 - s)) & 1 else -1 for s in range(6))
            mid, lo, hi = (q >> 4) & 3, (q >> 2) & 3, q & 3
            assert p.evaluate_eps(eps) == constraint_weight(mid, lo, hi)
    checked = 0
    while checked < 30:
        n = rng.randint(1, 7)
        m = rng.randint(0, min(30, 3 * comb(n, 3)))
        inst = gen_random(n, m, rng.randrange(2**31))
        e1, e2, e4 = moments_direct(inst)
        assert e1 == 0
        assert e4 <= 2**36 * e2 * e2
        checked += 1
    _report("4 (polynomial + fourth moment)", f"50 constraints, {checked} instances")


def test_criterion_5_reduction_correctness():
    """>= 200 seeded instances (n <= 8): OPT - m/3 is invariant under
    reduction, and lifting recovers exactly the removed-triple offset."""
    rng = random.Random(515151)
    reduced_nontrivially = 0
    for _ in range(200):
        n = rng.randint(4, 8)
        m = rng.randint(3, min(40, 3 * comb(n, 3)))
        inst = gen_random(n, m, rng.randrange(2**31))
        res = reduce_instance(inst)
        if res.triples_removed:
            reduced_nontrivially += 1
        opt = solve_exact_dp(inst).best_count
        sub = solve_exact_dp(res.reduced)
        assert Fraction(opt) - Fraction(inst.m, 3) == Fraction(sub.best_count) - Fraction(
            res.reduced.m, 3
        )
        lifted = lift_arrangement(sub.arrangement, res)
        assert satisfied_count(inst, lifted) == sub.best_count + res.triples_removed
        assert opt == sub.best_count + res.triples_removed
    assert reduced_nontrivially >= 10
    _report(
        "5 (reduction correctness)",
        f"200 instances, {reduced_nontrivially} with removed triples",
    )


def test_criterion_6_tight_bound_family():
    """Complete instances are solved to exactly m/3 = C(n,3): the m/3
    lower bound is attained, hence tight."""
    for n in range(3, 8):
        inst = gen_complete(n)
        result = solve_exact_dp(inst)
        assert result.best_count == comb(n, 3)
        assert 3 * result.best_count == inst.m
    _report("6 (tight-bound family)", "n in 3..7")


def test_criterion_7_threshold_arithmetic():
    """yes_threshold is the exact ceiling for kappa in 1..1000, and the
    YES predicate flips exactly at the boundary (big-integer, no floats)."""
    scale = 768 * 2**40
    for kappa in range(1, 1001):
        m_star = yes_threshold(kappa)
        rhs = scale * kappa * kappa
        assert 11 * (m_star - 1) < rhs <= 11 * m_star
        assert meets_yes_bound(m_star, kappa)
        assert not meets_yes_bound(m_star - 1, kappa)
    assert yes_threshold(0) == 0 and meets_yes_bound(0, 0)
    _report("7 (threshold arithmetic)", "kappa 1..1000")


def test_criterion_8_solver_cross_validation():
    """>= 200 instances (n <= 8): subset DP equals brute force; the
    randomized heuristic never beats the optimum; planted noise-0
    instances solve to m."""
    rng = random.Random(828282)
    for i in range(200):
        n = rng.randint(3, 8)
        m = rng.randint(0, min(20, 3 * comb(n, 3)))
        inst = gen_random(n, m, rng.randrange(2**31))
        opt_dp = solve_exact_dp(inst).best_count
        opt_brute = solve_brute(inst).best_count
        assert opt_dp == opt_brute
        if i % 10 == 0 and inst.m:
            heur = randomized_round(inst, 4, 4, seed=i)
            assert heur.best_count <= opt_dp
    for seed in range(20):
        n = rng.randint(5, 8)
        m = rng.randint(1, comb(n, 3))
        inst, hidden = gen_planted(n, m, 0, seed=seed)
        assert satisfied_count(inst, hidden) == m
        assert solve_exact_dp(inst).best_count == m
    _report("8 (solver cross-validation)", "200 random + 20 planted instances")
