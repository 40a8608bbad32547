"""Compiled backend: the kernel sources under numba.njit.

Importing this module requires numba; the compiled machine code is cached on
disk, so only the first call of each kernel in a fresh environment pays the
compilation cost.
"""

import numpy as np
from numba import njit

from . import core, sat

NAME = "numba"

decide_graph_coloring = njit(cache=True)(core.decide_graph_coloring)
decide_hyper_coloring = njit(cache=True)(core.decide_hyper_coloring)
max_independent_set = njit(cache=True)(core.max_independent_set)
tucker_condition_scan = njit(cache=True)(core.tucker_condition_scan)
cdcl_decide = njit(cache=True)(sat.cdcl_decide)


def warmup():
    """Force-compile every kernel on tiny inputs (a few seconds, once)."""
    adj = np.array([[6], [5], [3]], np.uint64)  # triangle
    deg = np.array([2, 2, 2], np.int64)
    clique = np.array([0, 1, 2], np.int64)
    decide_graph_coloring(adj, deg, 3, clique, 10_000)
    gmask = np.array([1, 2, 4], np.uint64)
    order = np.array([0, 1, 2], np.int64)
    decide_hyper_coloring(gmask, 3, 1, 2, 2, order, 10_000)
    max_independent_set(adj, 10_000)
    labels = np.zeros(3, np.int32)
    labels[1] = 1
    labels[2] = -1
    neg_code = np.array([0, 2, 1], np.int64)
    pow3 = np.array([1], np.int64)
    digits = np.array([[0], [1], [2]], np.int8)
    tucker_condition_scan(labels, neg_code, pow3, digits, 4)
    lits = np.array([0, 2, 1, 3], np.int32)  # (a or b) and (~a or ~b)
    starts = np.array([0, 2, 4], np.int64)
    units = np.empty(0, np.int32)
    cdcl_decide(2, lits, starts, units, 1_000)


__all__ = [
    "NAME",
    "decide_graph_coloring",
    "decide_hyper_coloring",
    "max_independent_set",
    "tucker_condition_scan",
    "cdcl_decide",
    "warmup",
]
