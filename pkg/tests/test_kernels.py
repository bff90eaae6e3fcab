import random

import pytest

from compdna import _kernels
from compdna._kernels import python as pyk

needs_compiled = pytest.mark.skipif(_kernels.compiled is None, reason="compiled kernels not built")


def _random_graph(rng, n, p):
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return adj


def _is_clique(adj, c):
    return all((adj[u] >> v) & 1 for u in c for v in c if u != v)


def test_backend_name():
    assert _kernels.BACKEND in ("cython", "python")


def test_python_clique_examples():
    assert pyk.max_clique([], (), 0)[:2] == ([], True)
    assert pyk.max_clique([0, 0, 0], (), 0)[0] in ([0], [1], [2])
    tri = [0b110, 0b101, 0b011]
    assert pyk.max_clique(tri, (), 0)[0] == [0, 1, 2]


@pytest.mark.parametrize("backend", [pyk, pytest.param(_kernels.compiled, marks=needs_compiled)])
def test_clique_sizes_agree(backend):
    if backend is None:
        pytest.skip("compiled kernels not built")
    rng = random.Random(11)
    for size in (5, 20, 64, 65, 90):
        for p in (0.2, 0.5, 0.8):
            adj = _random_graph(rng, size, p)
            ref = pyk.max_clique(adj, (), 0)
            got = backend.max_clique(adj, (), 0)
            assert got[1] and len(got[0]) == len(ref[0])
            assert _is_clique(adj, got[0])


@needs_compiled
def test_node_budget():
    rng = random.Random(3)
    adj = _random_graph(rng, 80, 0.7)
    for k in (pyk, _kernels.compiled):
        clique, complete, nodes = k.max_clique(adj, (), 5)
        assert not complete and _is_clique(adj, clique)


@pytest.mark.parametrize("backend", [pyk, pytest.param(_kernels.compiled, marks=needs_compiled)])
def test_deletion_ball(backend):
    if backend is None:
        pytest.skip("compiled kernels not built")
    for n in range(1, 9):
        for t in range(0, min(n, 3) + 1):
            for w in range(2**n):
                bits = format(w, f"0{n}b")
                expected = {bits}
                for _ in range(t):
                    expected = {s[:i] + s[i + 1:] for s in expected for i in range(len(s))}
                tagged = {int("1" + s, 2) for s in expected}
                assert backend.deletion_ball(w, n, t) == tagged
