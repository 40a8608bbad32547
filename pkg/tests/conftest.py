import pytest

from stable_kneser import kernels


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # Compile the jitted kernels once up front so the timed tests measure
    # search work rather than compilation.
    kernels.get_kernels().warmup()
    yield
