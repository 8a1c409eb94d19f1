"""Compiled and fallback kernels must agree exactly."""

import numpy as np
import pytest
from conftest import seeded_instances

from batlb import _pure
from batlb.backend import constraint_arrays
from batlb.solvers import _middle_csr

native = pytest.importorskip("batlb._native")


def test_backend_names():
    assert _pure.BACKEND_NAME == "pure"
    assert native.BACKEND_NAME == "native"


@pytest.mark.parametrize("seed", range(6))
def test_moment_power_sums_agree(seed):
    for inst in seeded_instances(3, seed, n_lo=1, n_hi=7, m_max=20):
        arrays = constraint_arrays(inst)
        assert native.moment_power_sums(inst.n, *arrays) == _pure.moment_power_sums(
            inst.n, *arrays
        )


@pytest.mark.parametrize("seed", range(6))
def test_brute_best_agrees(seed):
    for inst in seeded_instances(3, seed + 100, n_lo=1, n_hi=6, m_max=16):
        arrays = constraint_arrays(inst)
        nb, np_ = native.brute_best(inst.n, *arrays)
        pb, pp = _pure.brute_best(inst.n, *arrays)
        assert nb == pb
        assert list(np_) == list(pp)


@pytest.mark.parametrize("seed", range(6))
def test_dp_best_agrees(seed):
    for inst in seeded_instances(3, seed + 200, n_lo=1, n_hi=9, m_max=40):
        starts, ca, cb = _middle_csr(inst)
        nb, norder = native.dp_best(inst.n, starts, ca, cb)
        pb, porder = _pure.dp_best(inst.n, starts, ca, cb)
        assert nb == pb
        assert list(norder) == list(porder)


def test_empty_inputs():
    empty = np.zeros(0, dtype=np.int32)
    assert native.moment_power_sums(0, empty, empty, empty) == (0, 0, 0)
    assert _pure.moment_power_sums(0, empty, empty, empty) == (0, 0, 0)
    starts = np.zeros(1, dtype=np.int32)
    assert native.dp_best(0, starts, empty, empty) == (0, [])
    assert _pure.dp_best(0, starts, empty, empty) == (0, [])
