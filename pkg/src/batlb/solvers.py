"""Exact and heuristic solvers, plus the end-to-end decision driver.

The exact solvers share the placement-credit view of satisfaction: build
the arrangement left to right, and a constraint is satisfied exactly when
its middle variable is placed while precisely one of its outers is
already down.  The subset DP runs on that rule; the brute-force solver
checks positions directly and doubles as its oracle.

All "at least m/3 + kappa" comparisons are done on integers as
3 * satisfied >= m + 3 * kappa so no rounding policy is ever needed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import backend
from .errors import NegativeParameterError, TooLargeError
from .instance import (
    Arrangement,
    Instance,
    arrangement_from_order,
    check_arrangement,
    order_from_arrangement,
)
from .kernelize import (
    KernelDecision,
    _decision_from_reduction,
    lift_arrangement,
    reduce_instance,
)
from .rational import rational_str
from .weights import Assignment4, assignment_weight

DEFAULT_DP_MAX = 22
DEFAULT_BRUTE_MAX = 10


@dataclass(frozen=True)
class SolveResult:
    best_count: int
    arrangement: Arrangement
    method: str
    optimal: bool

    def to_json_dict(self, inst: Instance) -> dict:
        positions = [self.arrangement[v] for v in inst.variables()]
        return {
            "method": self.method,
            "best_count": self.best_count,
            "m": inst.m,
            "lower_bound_m_over_3": rational_str(Fraction(inst.m, 3)),
            "above_bound": rational_str(self.best_count - Fraction(inst.m, 3)),
            "arrangement": positions,
            "optimal": self.optimal,
        }


def satisfied_count(inst: Instance, arr: Arrangement) -> int:
    """Constraints whose middle sits strictly between its outers."""
    count = 0
    for c in inst.constraints:
        pm = arr[c.middle]
        pa = arr[c.outer_lo]
        pb = arr[c.outer_hi]
        if pa < pm < pb or pb < pm < pa:
            count += 1
    return count


def solve_brute(inst: Instance, max_n: int = DEFAULT_BRUTE_MAX) -> SolveResult:
    """Try all n! arrangements; ties keep the lexicographically smallest
    position vector (positions read off in variable order)."""
    if inst.n > max_n:
        raise TooLargeError(f"brute force capped at n <= {max_n}, got {inst.n}")
    if inst.n == 0:
        return SolveResult(0, {}, "brute", True)
    best, positions = backend.brute_best(inst.n, *backend.constraint_arrays(inst))
    arr = {v: int(positions[v - 1]) for v in inst.variables()}
    return SolveResult(best, arr, "brute", True)


def _middle_csr(inst: Instance):
    groups: list[list[tuple[int, int]]] = [[] for _ in range(inst.n)]
    for c in inst.constraints:
        groups[c.middle - 1].append((c.outer_lo - 1, c.outer_hi - 1))
    starts = np.zeros(inst.n + 1, dtype=np.int32)
    ca = np.empty(inst.m, dtype=np.int32)
    cb = np.empty(inst.m, dtype=np.int32)
    k = 0
    for v, pairs in enumerate(groups):
        starts[v] = k
        for a, b in pairs:
            ca[k] = a
            cb[k] = b
            k += 1
    starts[inst.n] = k
    return starts, ca, cb


def solve_exact_dp(inst: Instance, max_n: int = DEFAULT_DP_MAX) -> SolveResult:
    """Optimal count by DP over placed-prefix subsets (2^n states).

    Reconstruction returns the lexicographically smallest optimal
    placement sequence, which is deterministic but generally a different
    optimum than solve_brute picks on ties.
    """
    if inst.n > max_n:
        raise TooLargeError(f"subset DP capped at n <= {max_n}, got {inst.n}")
    if inst.n == 0:
        return SolveResult(0, {}, "dp", True)
    best, order = backend.dp_best(inst.n, *_middle_csr(inst))
    arr = arrangement_from_order(int(v) + 1 for v in order)
    return SolveResult(best, arr, "dp", True)


def sample_compatible_arrangement(
    inst: Instance, phi: Assignment4, seed: int
) -> Arrangement:
    """Random arrangement placing class blocks 0 < 1 < 2 < 3, uniform inside."""
    rng = random.Random(seed)
    arr: Arrangement = {}
    pos = 1
    for cls in range(4):
        members = [v for v in inst.variables() if phi[v] == cls]
        rng.shuffle(members)
        for v in members:
            arr[v] = pos
            pos += 1
    return arr


def randomized_round(
    inst: Instance, phi_trials: int, arr_trials: int, seed: int
) -> SolveResult:
    """Pick the sampled assignment with the largest exact weight, then the
    best of several compatible arrangements drawn for it."""
    if phi_trials < 1 or arr_trials < 1:
        raise ValueError("phi_trials and arr_trials must be >= 1")
    rng = random.Random(seed)
    best_phi: Assignment4 | None = None
    best_w: Fraction | None = None
    for _ in range(phi_trials):
        phi = {v: rng.randrange(4) for v in inst.variables()}
        w = assignment_weight(inst, phi)
        if best_w is None or w > best_w:
            best_w = w
            best_phi = phi
    assert best_phi is not None
    best_arr: Arrangement | None = None
    best_count = -1
    for _ in range(arr_trials):
        arr = sample_compatible_arrangement(inst, best_phi, rng.randrange(2**32))
        count = satisfied_count(inst, arr)
        if count > best_count:
            best_count = count
            best_arr = arr
    assert best_arr is not None
    return SolveResult(best_count, best_arr, "randomized_round", False)


def local_search(
    inst: Instance, start: Arrangement, max_rounds: int = 50
) -> SolveResult:
    """Hill-climb by removing one variable and reinserting it at the best
    position; stops at a local optimum or after max_rounds sweeps."""
    check_arrangement(inst, start)
    order = order_from_arrangement(start)
    current = satisfied_count(inst, start)
    for _ in range(max_rounds):
        improved = False
        for v in inst.variables():
            idx = order.index(v)
            rest = order[:idx] + order[idx + 1 :]
            best_gain = 0
            best_at = None
            for at in range(len(order)):
                candidate = rest[:at] + [v] + rest[at:]
                count = satisfied_count(inst, arrangement_from_order(candidate))
                if count - current > best_gain:
                    best_gain = count - current
                    best_at = at
            if best_at is not None:
                order = rest[:best_at] + [v] + rest[best_at:]
                current += best_gain
                improved = True
        if not improved:
            break
    return SolveResult(current, arrangement_from_order(order), "local_search", False)


@dataclass(frozen=True)
class Decision:
    """Outcome of the full decision pipeline.

    A YES without a certificate is existential: the moment argument
    guarantees an arrangement above the bound exists, but no polynomial
    search for one is known, so the heuristics may fail to exhibit it.
    """

    verdict: str  # "YES" | "NO" | "UNDECIDED"
    certificate: Arrangement | None
    existential: bool
    best_count: int | None
    kernel_decision: KernelDecision

    def to_json_dict(self, inst: Instance) -> dict:
        cert = None
        if self.certificate is not None:
            cert = [self.certificate[v] for v in inst.variables()]
        return {
            "verdict": self.verdict,
            "kappa": self.kernel_decision.kappa,
            "existential": self.existential,
            "best_count": self.best_count,
            "certificate": cert,
            "kernel": self.kernel_decision.to_json_dict(),
        }


def decide_batlb(
    inst: Instance,
    kappa: int,
    dp_n_max: int = DEFAULT_DP_MAX,
    trials: int = 32,
    seed: int = 0,
    mode: str = "bound",
) -> Decision:
    """Decide whether some arrangement satisfies at least m/3 + kappa.

    Kernel-threshold YES answers are sound but existential; when the
    kernel is small enough the DP settles the question either way with a
    certificate lifted back to the original instance.  UNDECIDED is
    returned only when the kernel exceeds the DP budget.
    """
    if kappa < 0:
        raise NegativeParameterError(f"kappa must be >= 0, got {kappa}")
    res = reduce_instance(inst)
    kd = _decision_from_reduction(res, kappa, mode, inst.m)
    need = inst.m + 3 * kappa

    if kd.verdict == "YES":
        certificate = None
        best = None
        if inst.n > 0:
            rr = randomized_round(inst, trials, trials, seed)
            ls = local_search(inst, rr.arrangement)
            best = ls.best_count
            if 3 * ls.best_count >= need:
                certificate = ls.arrangement
        elif inst.m == 0:
            certificate = {}
            best = 0
        return Decision("YES", certificate, certificate is None, best, kd)

    kernel = kd.kernel
    assert kernel is not None
    if kernel.n > dp_n_max:
        return Decision("UNDECIDED", None, False, None, kd)
    sub = solve_exact_dp(kernel, max_n=dp_n_max)
    lifted = lift_arrangement(sub.arrangement, res)
    best = satisfied_count(inst, lifted)
    if 3 * best >= need:
        return Decision("YES", lifted, False, best, kd)
    return Decision("NO", None, False, best, kd)
