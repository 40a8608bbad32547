"""Hot-loop kernels with two interchangeable backends.

The search loops (coloring branch-and-bound, clause-learning search,
independence-number search, sign-label condition scan) are written once, in
plain array-oriented Python (`core.py`, `sat.py`).  Two backends expose them:

- ``numba``: the same functions compiled with :func:`numba.njit` (`jit.py`);
- ``numpy``: the same functions interpreted (`plain.py`).

Selection, in order of precedence:

1. :func:`set_backend` (process-wide, explicit);
2. the ``STABLE_KNESER_BACKEND`` environment variable, one of ``auto``,
   ``numba``, ``numpy`` (read once, at first use);
3. ``auto``: numba if it imports, else plain.

Because both backends execute the same source, answers are identical;
only wall-clock differs.  ``benchmarks/benchmark_kernels.py`` measures the
gap.
"""

import importlib
import os

_VALID = ("auto", "numba", "numpy")
_active = None  # module, or None until first use


def _load(name):
    if name == "numpy":
        return importlib.import_module(".plain", __name__)
    if name == "numba":
        return importlib.import_module(".jit", __name__)
    # auto
    try:
        return importlib.import_module(".jit", __name__)
    except ImportError:
        return importlib.import_module(".plain", __name__)


def get_kernels():
    """Return the active backend module (resolving it on first call)."""
    global _active
    if _active is None:
        name = os.environ.get("STABLE_KNESER_BACKEND", "auto").strip().lower()
        if name not in _VALID:
            raise ValueError(
                "STABLE_KNESER_BACKEND must be one of %s, got %r" % (_VALID, name)
            )
        _active = _load(name)
    return _active


def set_backend(name):
    """Select a backend explicitly ('auto', 'numba' or 'numpy').

    Returns the name of the backend that was active before (or None if the
    choice had not been resolved yet).  Intended for tests and benchmarks.
    """
    global _active
    if name not in _VALID:
        raise ValueError("backend must be one of %s, got %r" % (_VALID, name))
    previous = _active.NAME if _active is not None else None
    _active = _load(name)
    return previous


def backend_name():
    """Name of the active backend ('numba' or 'numpy')."""
    return get_kernels().NAME


__all__ = ["get_kernels", "set_backend", "backend_name"]
