import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hellyext import graphs, lattice
from hellyext.errors import (
    DimensionMismatch,
    FormatError,
    ParameterError,
    PointInSet,
    TooManyRays,
)
from hellyext.lattice import Box, l1, parity


def test_l1_and_parity():
    assert l1((0, 0), (2, -3)) == 5
    assert l1((1,), (1,)) == 0
    assert parity((0, 0)) == 1
    assert parity((2, 1)) == 2
    assert parity((-1, -1, 1)) == 2
    with pytest.raises(DimensionMismatch):
        l1((0, 0), (1,))


def test_box_point_sets():
    box = Box(2, 3)
    pts = lattice.box_vertices(box)
    assert len(pts) == 16
    bdry = set(lattice.box_boundary(box))
    inner = set(lattice.box_interior(box))
    assert len(bdry) == 12
    assert inner == {(1, 1), (1, 2), (2, 1), (2, 2)}
    assert bdry | inner == set(pts)
    assert not bdry & inner
    assert len(lattice.box_vertices(Box(3, 2))) == 27
    with pytest.raises(ParameterError):
        Box(0, 2)
    with pytest.raises(ParameterError):
        Box(2, 0)


def test_axis_embedding_preserves_star_metric():
    rays = (2, 1, 3, 1)
    leaves = lattice.axis_embed_star(rays, 2)
    assert leaves == ((2, 0), (-1, 0), (0, 3), (0, -1))
    star = graphs.star_tree(rays)
    dm = star.distances()
    marks = star.leaf_marks
    for i, j in itertools.combinations(range(len(rays)), 2):
        assert l1(leaves[i], leaves[j]) == int(dm.dist[marks[i]][marks[j]])
    for i, r in enumerate(rays):
        assert l1(leaves[i], (0, 0)) == r
    with pytest.raises(TooManyRays):
        lattice.axis_embed_star((1, 1, 1), 1)


def test_ext_set_lattice_shadowing():
    # collinear points toward the origin: only the nearest survives
    assert lattice.ext_set_lattice([(1, 0), (2, 0), (5, 0)], (0, 0)) == ((1, 0),)
    # a staircase in the positive quadrant: only the lower-left corner set
    stairs = [(3, 0), (2, 1), (1, 2), (0, 3), (3, 1), (2, 2)]
    kept = lattice.ext_set_lattice(stairs, (0, 0))
    assert kept == ((0, 3), (1, 2), (2, 1), (3, 0))
    with pytest.raises(PointInSet):
        lattice.ext_set_lattice([(0, 0), (1, 0)], (0, 0))
    with pytest.raises(DimensionMismatch):
        lattice.ext_set_lattice([(0, 0), (1, 0, 0)], (0, 0))


def test_axis_supported_ext_bound_exhaustive():
    # all subsets of two short axes in d = 1, 2: at most one survivor per ray
    for d in (1, 2):
        axis_pts = []
        for axis in range(d):
            for sign in (1, -1):
                for r in (1, 2, 3):
                    p = [0] * d
                    p[axis] = sign * r
                    axis_pts.append(tuple(p))
        for size in range(1, 5):
            for sub in itertools.combinations(axis_pts, size):
                kept = lattice.ext_set_lattice(sub, (0,) * d)
                assert len(kept) <= 2 * d


def test_box_graph_is_l1_isometric():
    for d, n in ((1, 5), (2, 3), (3, 2)):
        g, to_idx, to_point = lattice.box_graph(Box(d, n))
        dm = g.distances()
        pts = lattice.box_vertices(Box(d, n))
        for p, q in itertools.combinations(pts, 2):
            assert int(dm.dist[to_idx[p]][to_idx[q]]) == l1(p, q)
        assert all(to_point[to_idx[p]] == p for p in pts)


def test_box_graph_bipartition_matches_parity():
    g, to_idx, to_point = lattice.box_graph(Box(2, 3))
    bip = graphs.bipartition(g)
    for p in lattice.box_vertices(Box(2, 3)):
        assert bip.class_of[to_idx[p]] == parity(p)


def test_point_text_round_trip():
    for p in ((0,), (1, -2), (3, 0, -5)):
        assert lattice.point_from_text(lattice.point_to_text(p)) == p
    assert lattice.point_to_text((1, -2)) == "(1,-2)"
    with pytest.raises(FormatError):
        lattice.point_from_text("(1, a)")


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10**6), d=st.integers(1, 3))
def test_ext_set_culling_never_drops_binding_constraints(seed, d):
    """Culled set keeps, for every dropped a, a witness on a geodesic to b."""
    rng = random.Random(seed)
    pts = {tuple(rng.randrange(-4, 5) for _ in range(d)) for _ in range(rng.randrange(1, 8))}
    b = tuple(rng.randrange(-4, 5) for _ in range(d))
    pts.discard(b)
    if not pts:
        pts = {tuple(x + 1 for x in b)}
    kept = lattice.ext_set_lattice(pts, b)
    assert set(kept) <= pts
    for a in pts - set(kept):
        assert any(k != a and l1(a, k) + l1(k, b) == l1(a, b) for k in kept)
