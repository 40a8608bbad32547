"""Interpreted backend: the kernel sources run as ordinary Python.

Same functions, same arrays, same answers as the compiled backend — only
slower.  Useful where numba is unavailable or unwanted (debugging, coverage).
"""

from .core import (
    decide_graph_coloring,
    decide_hyper_coloring,
    max_independent_set,
    tucker_condition_scan,
)
from .sat import cdcl_decide

NAME = "numpy"


def warmup():
    """Nothing to compile; present so both backends share one interface."""


__all__ = [
    "NAME",
    "decide_graph_coloring",
    "decide_hyper_coloring",
    "max_independent_set",
    "tucker_condition_scan",
    "cdcl_decide",
    "warmup",
]
