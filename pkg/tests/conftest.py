import itertools
import sys

import pytest

from graphmonads import _kernels
from graphmonads.families import complete_graph, fano, square_with_chord

BACKENDS = ["numpy"] + (["numba"] if _kernels.USE_NUMBA else [])


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


@pytest.fixture
def swc():
    return square_with_chord()


@pytest.fixture
def k2():
    return complete_graph(2)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def fano_plane():
    return fano()


def brute_force_homs(src, dst):
    """Oracle: filter every vertex map by the edge rule."""
    sv, dv = src.vertex_list, dst.vertex_list
    out = []
    for images in itertools.product(dv, repeat=len(sv)):
        f = dict(zip(sv, images))
        if all(dst.has_edge(f[u], f[v]) for u, v in src.edges):
            out.append(images)
    return out


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "VERDICTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
