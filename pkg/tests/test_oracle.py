import os
import random

import pytest

from toriented.errors import ResourceLimitError
from toriented.gf2 import Gf2Vector
from toriented.lattice import LatticePolytope
from toriented.oracle import (boundary_kernel_rank, boundary_matrix, cayley_graph, oracle_components,
                              oracle_orientable, oracle_spherical)
from toriented.orientability import SmallCoverSpec, components, small_cover_orientable, spherical_orientable
from toriented.posets import FinitePoset, order_polytope


def spec(n, gens):
    return SmallCoverSpec.from_bits(n, gens)


def bfs_two_colour(n, gens):
    """Independent reference: explicit adjacency lists and an odd-cycle search."""
    adj = {x: [x ^ g for g in gens] for x in range(1 << n)}
    colour = {}
    comps = 0
    ok = True
    for s in adj:
        if s in colour:
            continue
        comps += 1
        colour[s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if y not in colour:
                        colour[y] = 1 - colour[x]
                        nxt.append(y)
                    elif colour[y] == colour[x]:
                        ok = False
            frontier = nxt
    return ok, comps


@pytest.mark.parametrize("n, gens, orientable, count", [
    (2, [(1, 1)], True, 2),
    (2, [(1, 0), (0, 1), (1, 1)], False, 1),
    (1, [], True, 2),
    (3, [], True, 8),
    (2, [(1, 0), (0, 1)], True, 1),
])
def test_graph_oracle_examples(n, gens, orientable, count):
    s = spec(n, gens)
    assert oracle_orientable(s) is orientable
    assert oracle_components(s) == count
    assert bfs_two_colour(n, [g.word for g in s.generators]) == (orientable, count)


@pytest.mark.parametrize("n, gens, expected", [
    (2, [(1, 1)], 2),
    (2, [(1, 0), (0, 1), (1, 1)], 0),
    (1, [(1,)], 1),
])
def test_boundary_kernel_examples(n, gens, expected):
    assert boundary_kernel_rank(spec(n, gens)) == expected


def test_boundary_matrix_shape():
    bm = boundary_matrix(spec(2, [(1, 1), (1, 0)]))
    assert bm.ncols == 4 and len(bm.entries) == 4
    # every column meets exactly one class per generator
    for col in range(4):
        assert sum(row[col] for row in bm.entries) == 2
    bm1 = boundary_matrix(spec(1, [(1,)]))
    assert bm1.entries == ((1, 1),)


def test_cayley_graph_structure():
    g = cayley_graph(spec(3, [(1, 0, 0), (0, 1, 1)]))
    edges = list(g.edges())
    assert len(edges) == 8 * 2 // 2
    for xi in g.vertices:
        assert len(g.neighbours(xi)) == 2
        for eta in g.neighbours(xi):
            assert xi in g.neighbours(eta)


def test_oracles_agree_with_theorem_random():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randrange(1, 6)
        s = SmallCoverSpec(n, tuple(Gf2Vector(n, rng.randrange(1, 1 << n)) for _ in range(rng.randrange(0, 8))))
        v = small_cover_orientable(s)
        c = components(s)
        assert oracle_orientable(s) == v.orientable
        assert oracle_components(s) == c.count
        assert boundary_kernel_rank(s) == (c.count if v.orientable else 0)


def test_oracle_spherical():
    cross2 = LatticePolytope.from_vertices([(1, 0), (-1, 0), (0, 1), (0, -1)])
    assert oracle_spherical(cross2) == (True, 4)
    chain = order_polytope(FinitePoset.from_covers("ab", [("a", "b")]))
    ok, count = oracle_spherical(chain)
    assert ok and count == spherical_orientable(chain)[1].count
    nonranked = order_polytope(FinitePoset.from_covers("xzw", [("x", "z")]))
    assert oracle_spherical(nonranked)[0] is False


def test_caps(monkeypatch):
    big = SmallCoverSpec(13, ())
    with pytest.raises(ResourceLimitError):
        oracle_orientable(big)
    with pytest.raises(ResourceLimitError):
        boundary_kernel_rank(SmallCoverSpec(11, ()))
    monkeypatch.setenv("TORIENTED_ORACLE_CAP", "13")
    assert oracle_components(big) == 2 ** 13
    monkeypatch.setenv("TORIENTED_ORACLE_CAP", "2")
    with pytest.raises(ResourceLimitError):
        oracle_orientable(SmallCoverSpec(3, ()))
