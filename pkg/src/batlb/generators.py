"""Instance generators for testing and benchmarking.

All generators are deterministic functions of their seed (stdlib
Mersenne Twister).  Constraints are always produced in canonical form.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from math import comb

from .errors import TooManyError, TooSmallError
from .instance import Arrangement, Constraint, Instance, normalize_constraint

# Resampling guard for the planted generator; hitting it means the
# requested density is essentially infeasible for the noise level.
_MAX_RESAMPLES_PER_CONSTRAINT = 10_000


def constraint_universe_size(n: int) -> int:
    """Number of distinct canonical constraints on n variables: 3*C(n,3)."""
    return 3 * comb(n, 3)


def gen_complete(n: int) -> Instance:
    """The instance holding all three constraints on every 3-set.

    Every arrangement satisfies exactly one constraint per 3-set, so these
    instances meet the m/3 bound with equality.
    """
    if n < 3:
        raise TooSmallError(f"complete instances need n >= 3, got {n}")
    constraints = []
    for a, b, c in itertools.combinations(range(1, n + 1), 3):
        constraints.append(Constraint(a, b, c))
        constraints.append(Constraint(b, a, c))
        constraints.append(Constraint(c, a, b))
    return Instance(n, tuple(sorted(constraints)))


def _random_canonical(rng: random.Random, n: int) -> Constraint:
    a, b, c = rng.sample(range(1, n + 1), 3)
    mid = rng.choice((a, b, c))
    lo, hi = sorted(v for v in (a, b, c) if v != mid)
    return Constraint(mid, lo, hi)


def gen_random(n: int, m: int, seed: int) -> Instance:
    """m distinct canonical constraints sampled uniformly without replacement."""
    universe = constraint_universe_size(n)
    if m > universe:
        raise TooManyError(f"asked for {m} constraints, only {universe} exist for n={n}")
    rng = random.Random(seed)
    if universe <= 200_000:
        pool = sorted(gen_complete(n).constraints) if n >= 3 else []
        chosen = rng.sample(pool, m) if m else []
        return Instance(n, tuple(chosen))
    # Huge universe: rejection sampling stays uniform and never enumerates it.
    seen: set[Constraint] = set()
    out: list[Constraint] = []
    while len(out) < m:
        c = _random_canonical(rng, n)
        if c not in seen:
            seen.add(c)
            out.append(c)
    return Instance(n, tuple(out))


def gen_planted(
    n: int, m: int, noise: Fraction | float | str, seed: int
) -> tuple[Instance, Arrangement]:
    """Instance with a hidden arrangement, plus that arrangement.

    A uniformly random arrangement alpha* is drawn first.  Each constraint
    is, with probability 1-noise, satisfied by alpha* (the middle is the
    positionally middle variable of a random 3-set); otherwise it is a
    uniformly random constraint.  Duplicates are resampled away.

    With noise=0 only one satisfiable constraint exists per 3-set, so m
    must not exceed C(n,3).
    """
    noise = Fraction(noise)
    if not 0 <= noise <= 1:
        raise ValueError(f"noise must lie in [0, 1], got {noise}")
    universe = constraint_universe_size(n)
    if m > universe:
        raise TooManyError(f"asked for {m} constraints, only {universe} exist for n={n}")
    if noise == 0 and m > comb(n, 3):
        raise TooManyError(
            f"noise=0 admits one constraint per 3-set: m <= {comb(n, 3)} for n={n}"
        )
    rng = random.Random(seed)
    order = list(range(1, n + 1))
    rng.shuffle(order)
    hidden = {v: pos + 1 for pos, v in enumerate(order)}

    noise_f = float(noise)
    seen: set[Constraint] = set()
    out: list[Constraint] = []
    while len(out) < m:
        for _ in range(_MAX_RESAMPLES_PER_CONSTRAINT):
            if rng.random() < noise_f:
                c = _random_canonical(rng, n)
            else:
                trio = rng.sample(range(1, n + 1), 3)
                mid = sorted(trio, key=lambda v: hidden[v])[1]
                c = normalize_constraint(mid, *(v for v in trio if v != mid))
            if c not in seen:
                break
        else:
            raise TooManyError("could not place a fresh constraint; lower m or raise noise")
        seen.add(c)
        out.append(c)
    return Instance(n, tuple(out)), hidden
