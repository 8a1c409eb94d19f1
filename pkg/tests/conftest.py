"""Shared helpers for the test suite."""

import random
from math import comb

from batlb import gen_random


def seeded_instances(count, seed, n_lo=3, n_hi=8, m_lo=0, m_max=24):
    """A reproducible batch of random instances with mixed sizes."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_lo, n_hi)
        universe = 3 * comb(n, 3)
        m = rng.randint(min(m_lo, universe), min(m_max, universe))
        out.append(gen_random(n, m, rng.randrange(2**31)))
    return out
