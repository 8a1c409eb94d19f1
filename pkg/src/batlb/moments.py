"""Exact moments of the total weight under a uniform random assignment.

Let X be the total instance weight when every variable independently
draws a uniform class from {0,1,2,3} (see batlb.weights).  This module
computes E[X], E[X^2] and E[X^4] exactly, by three mutually independent
routes that the test suite forces into agreement:

  * enumeration over constraint pairs (pair_expectation, memoized on the
    variable-overlap pattern);
  * a closed form driven by occurrence counts, classifying ordered pairs
    of distinct constraints into eight overlap cases;
  * direct enumeration over all 4^n assignments (backend kernel, n small).

Conventions for the occurrence counts of an instance:

    b(u)    constraints with middle u
    e(u)    constraints with u in the outer pair
    c_mid[u, v]   constraints with middle u and v among the outers
    c_out[{u, v}] constraints whose outer pair is exactly {u, v}

The eight overlap cases for an ordered pair of distinct constraints
(classification is by the highest-index case that applies):

    1  share one variable, middle in both
    2  share one variable, outer in both
    3  share one variable, middle in one and outer in the other
    4  share middle and one outer
    5  share the outer pair
    6  one's middle and one outer are the other's outer pair
    7  middle of each is an outer of the other (third variables differ)
    8  same variable 3-set

For exclusive membership in case i the pair's 768*E[X_l*X_l'] equals
CASE_VALUES_768[i].  The additive per-case weights CASE_SUM_WEIGHTS_768
make the cross term a plain sum over case sizes; lower-index cases also
contain the pairs of higher cases, which is what the test-pinned sum
rules between the two constant sets encode.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from . import backend
from .errors import CaseWeightMismatchError, NotIrreducibleError, TooLargeError
from .instance import Constraint, Instance
from .rational import rational_str
from .weights import Assignment4, weight6

# 768 * E[X_l X_l'] for a pair lying in case i and no higher case.
CASE_VALUES_768 = {1: 12, 2: 3, 3: -6, 4: 24, 5: 36, 6: -18, 7: -6, 8: -44}

# Additive weights: summing these over all case memberships of a pair
# reproduces its exclusive value above.
CASE_SUM_WEIGHTS_768 = {1: 12, 2: 3, 3: -6, 4: 9, 5: 30, 6: -15, 7: 6, 8: -11}

# Diagonal: 768 * E[X_l^2] for any single constraint.
DIAGONAL_768 = 88

# Canonical representative pair for each case, over fresh variables 1..5,
# chosen so the pair lies in its case and in no higher one.
CASE_REPRESENTATIVES = {
    1: (Constraint(1, 2, 3), Constraint(1, 4, 5)),
    2: (Constraint(2, 1, 3), Constraint(4, 1, 5)),
    3: (Constraint(1, 2, 3), Constraint(4, 1, 5)),
    4: (Constraint(1, 2, 3), Constraint(1, 2, 4)),
    5: (Constraint(3, 1, 2), Constraint(4, 1, 2)),
    6: (Constraint(1, 2, 3), Constraint(4, 1, 2)),
    7: (Constraint(1, 2, 3), Constraint(2, 1, 4)),
    8: (Constraint(1, 2, 3), Constraint(2, 1, 3)),
}


def first_moment(inst: Instance) -> Fraction:
    """E[X] by per-constraint enumeration of the 64 class triples; always 0."""
    total = 0
    for _ in inst.constraints:
        for mid, lo, hi in itertools.product(range(4), repeat=3):
            total += weight6(mid, lo, hi)
    return Fraction(total, 6 * 64)


def _pair_pattern(c1: Constraint, c2: Constraint) -> tuple[int, ...]:
    """Relabel the pair's variables by first appearance; the expectation
    depends only on this pattern."""
    slots = (c1.middle, c1.outer_lo, c1.outer_hi, c2.middle, c2.outer_lo, c2.outer_hi)
    mapping: dict[int, int] = {}
    out = []
    for v in slots:
        if v not in mapping:
            mapping[v] = len(mapping)
        out.append(mapping[v])
    return tuple(out)


_pair_cache: dict[tuple[int, ...], Fraction] = {}


def pair_expectation(c1: Constraint, c2: Constraint) -> Fraction:
    """E[X_l * X_l'] for two constraints (c1 = c2 gives E[X_l^2]).

    Enumerates the joint assignments of the union of their variables
    (at most 4^6 points), in exact scaled-integer arithmetic.
    """
    pattern = _pair_pattern(c1, c2)
    hit = _pair_cache.get(pattern)
    if hit is not None:
        return hit
    k = max(pattern) + 1
    total = 0
    for values in itertools.product(range(4), repeat=k):
        w1 = weight6(values[pattern[0]], values[pattern[1]], values[pattern[2]])
        w2 = weight6(values[pattern[3]], values[pattern[4]], values[pattern[5]])
        total += w1 * w2
    result = Fraction(total, 36 * 4**k)
    _pair_cache[pattern] = result
    return result


@dataclass(frozen=True)
class CaseCheck:
    case: int
    computed_768: Fraction
    expected_768: int

    @property
    def match(self) -> bool:
        return self.computed_768 == self.expected_768


@dataclass(frozen=True)
class CaseWeightReport:
    checks: tuple[CaseCheck, ...]

    @property
    def all_match(self) -> bool:
        return all(c.match for c in self.checks)

    def require(self) -> "CaseWeightReport":
        bad = [c for c in self.checks if not c.match]
        if bad:
            raise CaseWeightMismatchError(
                "; ".join(
                    f"case {c.case}: computed {rational_str(c.computed_768)}, "
                    f"expected {c.expected_768}"
                    for c in bad
                )
            )
        return self

    def to_json_dict(self) -> dict:
        return {
            "all_match": self.all_match,
            "cases": [
                {
                    "case": c.case,
                    "computed_768": rational_str(c.computed_768),
                    "expected_768": c.expected_768,
                    "match": c.match,
                }
                for c in self.checks
            ],
        }


def verify_case_weights() -> CaseWeightReport:
    """Recompute 768*E[X_l X_l'] for the eight case representatives.

    The enumeration route must reproduce the pinned exclusive values; a
    mismatch would mean either constant set is wrong.
    """
    checks = []
    for case in range(1, 9):
        c1, c2 = CASE_REPRESENTATIVES[case]
        computed = 768 * pair_expectation(c1, c2)
        checks.append(CaseCheck(case, computed, CASE_VALUES_768[case]))
    return CaseWeightReport(tuple(checks))


@dataclass(frozen=True)
class ProfileCounts:
    """Occurrence counts of an instance plus the derived case-set sizes."""

    m: int
    b: dict[int, int]
    e: dict[int, int]
    c_mid: dict[tuple[int, int], int]
    c_out: dict[tuple[int, int], int]
    triple_counts: dict[tuple[int, int, int], int]

    def s1(self, u: int) -> int:
        bu = self.b.get(u, 0)
        return bu * (bu - 1)

    def s2(self, u: int) -> int:
        eu = self.e.get(u, 0)
        return eu * (eu - 1)

    def s3(self, u: int) -> int:
        return 2 * self.b.get(u, 0) * self.e.get(u, 0)

    def s4(self, u: int, v: int) -> int:
        cuv = self.c_mid.get((u, v), 0)
        cvu = self.c_mid.get((v, u), 0)
        return cuv * (cuv - 1) + cvu * (cvu - 1)

    def s5(self, u: int, v: int) -> int:
        c = self.c_out.get((min(u, v), max(u, v)), 0)
        return c * (c - 1)

    def s6(self, u: int, v: int) -> int:
        c = self.c_out.get((min(u, v), max(u, v)), 0)
        return 2 * (self.c_mid.get((u, v), 0) + self.c_mid.get((v, u), 0)) * c

    def s7(self, u: int, v: int) -> int:
        return 2 * self.c_mid.get((u, v), 0) * self.c_mid.get((v, u), 0)

    def s8(self, triple: tuple[int, int, int]) -> int:
        r = self.triple_counts.get(triple, 0)
        return r * (r - 1)


def profile_counts(inst: Instance) -> ProfileCounts:
    """Exact occurrence counts; the closed-form second moment runs on these."""
    b: dict[int, int] = {}
    e: dict[int, int] = {}
    c_mid: dict[tuple[int, int], int] = {}
    c_out: dict[tuple[int, int], int] = {}
    triple_counts: dict[tuple[int, int, int], int] = {}
    for c in inst.constraints:
        b[c.middle] = b.get(c.middle, 0) + 1
        for v in (c.outer_lo, c.outer_hi):
            e[v] = e.get(v, 0) + 1
            key = (c.middle, v)
            c_mid[key] = c_mid.get(key, 0) + 1
        pair = (c.outer_lo, c.outer_hi)
        c_out[pair] = c_out.get(pair, 0) + 1
        trip = c.var_key()
        triple_counts[trip] = triple_counts.get(trip, 0) + 1
    return ProfileCounts(inst.m, b, e, c_mid, c_out, triple_counts)


def _relevant_pairs(counts: ProfileCounts):
    pairs = set(counts.c_out)
    for u, v in counts.c_mid:
        pairs.add((min(u, v), max(u, v)))
    return pairs


def cross_term_closed_form(inst: Instance) -> Fraction:
    """Sum of E[X_l X_l'] over ordered pairs of distinct constraints.

    Case-size accounting with the additive weights; exact for every
    instance (the same-3-set term uses per-triple counts directly).
    """
    counts = profile_counts(inst)
    w = CASE_SUM_WEIGHTS_768
    total = 0
    for u in counts.b.keys() | counts.e.keys():
        total += counts.s1(u) * w[1] + counts.s2(u) * w[2] + counts.s3(u) * w[3]
    for u, v in _relevant_pairs(counts):
        total += (
            counts.s4(u, v) * w[4]
            + counts.s5(u, v) * w[5]
            + counts.s6(u, v) * w[6]
            + counts.s7(u, v) * w[7]
        )
    for trip in counts.triple_counts:
        total += counts.s8(trip) * w[8]
    return Fraction(total, 768)


def second_moment_closed_form(inst: Instance) -> Fraction:
    """E[X^2] = m * 88/768 + cross term, via the case-size closed form.

    The value is exact for any instance; the guaranteed lower bound of
    (11/768) m additionally needs the instance to be irreducible.
    """
    return Fraction(inst.m * DIAGONAL_768, 768) + cross_term_closed_form(inst)


def second_moment_enumerated(inst: Instance) -> Fraction:
    """E[X^2] as the sum of pair_expectation over all ordered pairs."""
    total = Fraction(0)
    for c1 in inst.constraints:
        for c2 in inst.constraints:
            total += pair_expectation(c1, c2)
    return total


def cross_term_lower_bound_check(inst: Instance) -> bool:
    """True iff the exact cross term is >= -(77/768) m.

    Requires an irreducible instance; together with the diagonal
    m * 88/768 this certifies E[X^2] >= (11/768) m.
    """
    from .kernelize import is_irreducible

    if not is_irreducible(inst):
        raise NotIrreducibleError("cross-term bound is stated for irreducible instances")
    return cross_term_closed_form(inst) >= Fraction(-77 * inst.m, 768)


def moments_direct(
    inst: Instance, max_vars: int = 8
) -> tuple[Fraction, Fraction, Fraction]:
    """(E[X], E[X^2], E[X^4]) by direct enumeration of all 4^n assignments."""
    if inst.n > max_vars:
        raise TooLargeError(f"direct enumeration capped at n <= {max_vars}, got {inst.n}")
    if inst.n == 0:
        return Fraction(0), Fraction(0), Fraction(0)
    s1, s2, s4 = backend.moment_power_sums(inst.n, *backend.constraint_arrays(inst))
    points = 4**inst.n
    return (
        Fraction(s1, 6 * points),
        Fraction(s2, 36 * points),
        Fraction(s4, 1296 * points),
    )


def second_moment_direct(inst: Instance, max_vars: int = 8) -> Fraction:
    return moments_direct(inst, max_vars)[1]


def fourth_moment_enumerated(inst: Instance, max_vars: int = 8) -> Fraction:
    """Exact E[X^4] over all 4^n assignments (n <= max_vars)."""
    return moments_direct(inst, max_vars)[2]


def monte_carlo_moments(
    inst: Instance, samples: int, seed: int
) -> tuple[Fraction, Fraction]:
    """Empirical (mean, mean square) of the weight over sampled assignments.

    Statistical smoke test for scales where enumeration is infeasible;
    deterministic per seed, and still exact rationals of the sample sums.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = random.Random(seed)
    s1 = 0
    s2 = 0
    for _ in range(samples):
        phi: Assignment4 = {v: rng.randrange(4) for v in inst.variables()}
        w = 0
        for c in inst.constraints:
            w += weight6(phi[c.middle], phi[c.outer_lo], phi[c.outer_hi])
        s1 += w
        s2 += w * w
    return Fraction(s1, 6 * samples), Fraction(s2, 36 * samples)
