"""Per-constraint weights under four-class assignments.

Fix an assignment phi of classes {0,1,2,3} to the variables and draw a
random arrangement that places all class-0 variables first (in uniformly
random internal order), then class 1, 2, 3.  For one constraint, the
probability it is satisfied exceeds the uniform 1/3 by an amount that
depends only on the classes of its three variables:

    classes of (middle, outers)            weight   share of the 64 triples
    all three equal                          0            4/64  (= 1/16)
    middle differs, outers equal            -1/3         12/64  (= 3/16)
    middle equals one of two distinct       +1/6         24/64  (= 6/16)
    all distinct, middle class between      +2/3          8/64  (= 2/16)
    all distinct, middle class outside      -1/3         16/64  (= 4/16)

Summed over the instance, this weight plus m/3 is the expected number of
satisfied constraints under a random class-compatible arrangement.  Every
weight is a multiple of 1/6, so enumeration kernels accumulate the scaled
integer form (6x) and convert to Fraction once at the end.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial, prod

from .errors import TooLargeError
from .instance import Arrangement, Instance

Assignment4 = dict[int, int]


def weight6(mid: int, lo: int, hi: int) -> int:
    """Scaled weight (6x) for one class triple; values in {0, -2, 1, 4}."""
    if mid == lo and lo == hi:
        return 0
    if lo == hi:
        return -2
    if mid == lo or mid == hi:
        return 1
    if lo < mid < hi or hi < mid < lo:
        return 4
    return -2


def weight_case(mid: int, lo: int, hi: int) -> int:
    """Index (1..5) of the class-triple case, in the order of the module
    docstring table."""
    if mid == lo and lo == hi:
        return 1
    if lo == hi:
        return 2
    if mid == lo or mid == hi:
        return 3
    if lo < mid < hi or hi < mid < lo:
        return 4
    return 5


def constraint_weight(mid: int, lo: int, hi: int) -> Fraction:
    """Exact weight of a single constraint for given class values."""
    return Fraction(weight6(mid, lo, hi), 6)


def assignment_weight(inst: Instance, phi: Assignment4) -> Fraction:
    """Total weight of the instance under phi.

    The expected satisfied count of a random phi-compatible arrangement is
    m/3 plus this value.
    """
    total = 0
    for c in inst.constraints:
        total += weight6(phi[c.middle], phi[c.outer_lo], phi[c.outer_hi])
    return Fraction(total, 6)


def compatible_arrangements(inst: Instance, phi: Assignment4):
    """Yield every arrangement that orders classes 0 < 1 < 2 < 3 as blocks."""
    blocks = [[v for v in inst.variables() if phi[v] == cls] for cls in range(4)]
    for perms in itertools.product(*(itertools.permutations(b) for b in blocks)):
        arr: Arrangement = {}
        pos = 1
        for perm in perms:
            for v in perm:
                arr[v] = pos
                pos += 1
        yield arr


def expected_satisfied_exhaustive(
    inst: Instance, phi: Assignment4, max_arrangements: int = 2_000_000
) -> Fraction:
    """Exact average satisfied count over all phi-compatible arrangements.

    Direct enumeration over the product of per-class orderings; the cost is
    the product of the class-size factorials.  This is the independent
    oracle for assignment_weight: the result always equals
    m/3 + assignment_weight(inst, phi).
    """
    from .solvers import satisfied_count

    sizes = [sum(1 for v in inst.variables() if phi[v] == cls) for cls in range(4)]
    count = prod(factorial(s) for s in sizes)
    if count > max_arrangements:
        raise TooLargeError(
            f"{count} compatible arrangements exceed the limit {max_arrangements}"
        )
    total = 0
    for arr in compatible_arrangements(inst, phi):
        total += satisfied_count(inst, arr)
    return Fraction(total, count)
