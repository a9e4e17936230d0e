import pytest

from linsys import LinearSystem, domination_number, transversal_number, two_packing_number
from linsys.kernels import JIT_KERNELS, PY_KERNELS


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # compile/load the jitted kernels before any timed assertions run
    tiny = LinearSystem(3, [[0, 1], [1, 2], [0, 2]])
    for ks in filter(None, (PY_KERNELS, JIT_KERNELS)):
        transversal_number(tiny, kernels=ks)
        domination_number(tiny, kernels=ks)
        two_packing_number(tiny, kernels=ks)


@pytest.fixture(scope="session")
def fano():
    from linsys import projective_plane

    return projective_plane(2).system
