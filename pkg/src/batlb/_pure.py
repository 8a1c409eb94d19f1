"""Pure-Python/numpy fallback for the hot kernels in batlb._native.

Same contracts as the compiled module, selected by batlb.backend when the
extension is unavailable (or forced via BATLB_BACKEND=pure).  All sums are
exact integer arithmetic; numpy is used only with int64 accumulators.
"""

from __future__ import annotations

import itertools

import numpy as np

BACKEND_NAME = "pure"


def moment_power_sums(n, mids, los, his):
    """Sums of (W, W^2, W^4) over all 4^n class assignments.

    W is the 6-scaled total weight of the constraint list under one
    assignment.  Variable indices are 0-based.
    """
    if n == 0:
        return 0, 0, 0
    q = np.arange(1 << (2 * n), dtype=np.int64)
    digits = [(q >> (2 * v)) & 3 for v in range(n)]
    w_total = np.zeros(q.size, dtype=np.int64)
    for mid, lo, hi in zip(mids, los, his):
        mv, lv, hv = digits[mid], digits[lo], digits[hi]
        all_eq = (mv == lv) & (lv == hv)
        outers_eq = lv == hv
        touches = (mv == lv) | (mv == hv)
        between = ((lv < mv) & (mv < hv)) | ((hv < mv) & (mv < lv))
        w = np.where(
            all_eq, 0, np.where(outers_eq, -2, np.where(touches, 1, np.where(between, 4, -2)))
        )
        w_total += w
    w2 = w_total * w_total
    return int(w_total.sum()), int(w2.sum()), int((w2 * w2).sum())


def brute_best(n, mids, los, his):
    """Exhaustive search over all n! position vectors.

    Returns (best_count, positions) where positions[i] is the position of
    0-based variable i; ties keep the lexicographically smallest vector.
    """
    triples = [(int(a), int(b), int(c)) for a, b, c in zip(mids, los, his)]
    best = -1
    best_p = None
    for p in itertools.permutations(range(1, n + 1)):
        count = 0
        for mid, lo, hi in triples:
            pm = p[mid]
            pa = p[lo]
            pb = p[hi]
            if pa < pm < pb or pb < pm < pa:
                count += 1
        if count > best:
            best = count
            best_p = p
    return best, list(best_p) if best_p is not None else []


def _popcounts(full: int) -> np.ndarray:
    q = np.arange(full, dtype=np.int64)
    pc = np.zeros(full, dtype=np.int8)
    while q.any():
        pc += (q & 1).astype(np.int8)
        q >>= 1
    return pc


def dp_best(n, starts, ca, cb):
    """Subset DP over placement prefixes.

    g[S] is the best credit total achievable by placing the variables
    outside S after the (already placed) set S; a constraint is credited
    when its middle is placed while exactly one outer is already placed.
    Constraints arrive grouped by middle: for 0-based middle v, the outer
    index pairs are (ca[j], cb[j]) for j in starts[v]..starts[v+1].

    Returns (best_count, order) with order the lexicographically smallest
    optimal placement sequence of 0-based variable ids.
    """
    if n == 0:
        return 0, []
    full = 1 << n
    g = np.zeros(full, dtype=np.int32)
    by_layer = np.argsort(_popcounts(full), kind="stable").astype(np.int64)
    layer_sizes = np.bincount(_popcounts(full), minlength=n + 1)
    offsets = np.concatenate(([0], np.cumsum(layer_sizes)))
    pairs = [
        [(int(ca[j]), int(cb[j])) for j in range(starts[v], starts[v + 1])]
        for v in range(n)
    ]
    for k in range(n - 1, -1, -1):
        layer = by_layer[offsets[k] : offsets[k + 1]]
        for v in range(n):
            bit = 1 << v
            sel = layer[(layer & bit) == 0]
            if sel.size == 0:
                continue
            credit = np.zeros(sel.size, dtype=np.int32)
            for a, b in pairs[v]:
                credit += (((sel >> a) ^ (sel >> b)) & 1).astype(np.int32)
            cand = credit + g[sel | bit]
            g[sel] = np.maximum(g[sel], cand)

    def credit_of(v: int, subset: int) -> int:
        return sum(((subset >> a) ^ (subset >> b)) & 1 for a, b in pairs[v])

    order = []
    subset = 0
    target = int(g[0])
    while subset != full - 1:
        for v in range(n):
            bit = 1 << v
            if subset & bit:
                continue
            c = credit_of(v, subset)
            if c + int(g[subset | bit]) == int(g[subset]):
                order.append(v)
                subset |= bit
                break
    return target, order
