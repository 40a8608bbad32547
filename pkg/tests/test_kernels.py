"""Backend parity: the interpreted and jit-compiled kernels must agree."""

import subprocess
import sys

from stable_kneser import (
    build_stable_kneser,
    build_w_graph,
    chromatic_number,
    independence_number,
    kernels,
    max_disjoint_packing,
)

CASES = [
    (6, 2, 2, (1, 4)),
    (8, 2, 2, (2, 2)),
    (9, 2, 3, (2, 2)),
    (12, 2, 4, (6, 6)),
]


def solve_all():
    out = []
    for n, k, r, svec in CASES:
        H = build_stable_kneser(n, k, r, svec)
        res = chromatic_number(H)
        pack = max_disjoint_packing(H)
        out.append((res.chi, res.certificate.assignment, pack.size, tuple(pack.witness)))
    for n, s1, s2 in [(10, 2, 4), (7, 1, 4), (11, 2, 5)]:
        a = independence_number(build_w_graph(n, s1, s2))
        out.append((a.alpha, tuple(a.witness)))
    return out


def test_backends_give_identical_answers():
    previous = kernels.set_backend("numpy")
    try:
        assert kernels.backend_name() == "numpy"
        plain_results = solve_all()
        kernels.set_backend("numba")
        assert kernels.backend_name() == "numba"
        jit_results = solve_all()
    finally:
        kernels.set_backend(previous or "auto")
    assert plain_results == jit_results


def test_kernel_modules_expose_same_functions():
    from stable_kneser.kernels import jit, plain

    names = [
        "decide_graph_coloring",
        "decide_hyper_coloring",
        "max_independent_set",
        "tucker_condition_scan",
        "cdcl_decide",
        "warmup",
        "NAME",
    ]
    for name in names:
        assert hasattr(jit, name), name
        assert hasattr(plain, name), name
    assert jit.NAME == "numba"
    assert plain.NAME == "numpy"


def test_set_backend_rejects_unknown_names():
    try:
        kernels.set_backend("cuda")
        assert False, "expected rejection of an unknown backend name"
    except ValueError:
        pass


def test_environment_variable_selects_backend():
    code = (
        "from stable_kneser import kernels, build_stable_kneser, chromatic_number\n"
        "print(kernels.backend_name())\n"
        "print(chromatic_number(build_stable_kneser(6, 2, 2, (1, 4))).chi)\n"
    )
    for want in ("numpy", "numba"):
        proc = subprocess.run(
            [sys.executable, "-c", code],
            capture_output=True,
            text=True,
            env={"STABLE_KNESER_BACKEND": want, "PATH": "/usr/bin:/bin"},
        )
        assert proc.returncode == 0, proc.stderr
        assert proc.stdout.split() == [want, "3"]


def test_environment_variable_rejects_garbage():
    code = "from stable_kneser import kernels; kernels.get_kernels()\n"
    proc = subprocess.run(
        [sys.executable, "-c", code],
        capture_output=True,
        text=True,
        env={"STABLE_KNESER_BACKEND": "gpu", "PATH": "/usr/bin:/bin"},
    )
    assert proc.returncode != 0
    assert "STABLE_KNESER_BACKEND" in proc.stderr


if __name__ == "__main__":
    import pytest

    pytest.main([__file__, "-v"])
