"""Points of the integer lattice with the l1 metric, boxes and axis stars.

Lattice points are plain tuples of ints.  In text form a point is written
``(c1,c2,...,cd)``; whitespace after commas is tolerated on input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DimensionMismatch,
    FormatError,
    ParameterError,
    PointInSet,
    TooManyRays,
)
from .graphs import Graph

__all__ = [
    "Box",
    "l1",
    "parity",
    "box_vertices",
    "box_boundary",
    "box_interior",
    "axis_embed_star",
    "ext_set_lattice",
    "box_graph",
    "point_to_text",
    "point_from_text",
]


def l1(p, q) -> int:
    """The l1 distance between two lattice points of equal dimension."""
    if len(p) != len(q):
        raise DimensionMismatch(f"points {p} and {q} differ in dimension")
    return sum(abs(a - b) for a, b in zip(p, q))


def parity(p) -> int:
    """Coordinate-sum parity: 1 when even, 2 when odd.

    The two values 2-colour the lattice and line up with partite class
    labels of bipartite target graphs.
    """
    return 1 if sum(p) % 2 == 0 else 2


@dataclass(frozen=True)
class Box:
    """The box ``{0..n}^d``."""

    d: int
    n: int

    def __post_init__(self):
        if self.d < 1:
            raise ParameterError(f"box dimension must be >= 1, got {self.d}")
        if self.n < 1:
            raise ParameterError(f"box side must be >= 1, got {self.n}")


def box_vertices(box: Box) -> tuple:
    """All points of the box in lexicographic order."""
    points = [()]
    for _ in range(box.d):
        points = [p + (c,) for p in points for c in range(box.n + 1)]
    return tuple(points)


def box_boundary(box: Box) -> tuple:
    """Points with some coordinate equal to 0 or n, in lexicographic order."""
    return tuple(
        p for p in box_vertices(box) if any(c == 0 or c == box.n for c in p)
    )


def box_interior(box: Box) -> tuple:
    """Points with every coordinate strictly between 0 and n."""
    return tuple(
        p for p in box_vertices(box) if all(0 < c < box.n for c in p)
    )


def axis_embed_star(ray_lengths, d: int) -> tuple:
    """Place star-tree leaves on the coordinate axes around the origin.

    Ray ``i`` (1-based) of length ``r_i`` ends at ``+r_i e_1``, ``-r_i e_1``,
    ``+r_i e_2``, ``-r_i e_2``, ... in that order, so each axis carries at
    most two rays and the center lands on the origin.  Leaf-to-leaf l1
    distances then equal their star-tree path distances.
    """
    rays = tuple(int(r) for r in ray_lengths)
    if d < 1:
        raise ParameterError(f"dimension must be >= 1, got {d}")
    if any(r < 1 for r in rays):
        raise ParameterError(f"ray lengths must be positive, got {rays}")
    if len(rays) > 2 * d:
        raise TooManyRays(f"{len(rays)} rays do not fit in dimension {d}")
    leaves = []
    for i, r in enumerate(rays):
        axis = i // 2
        sign = 1 if i % 2 == 0 else -1
        point = [0] * d
        point[axis] = sign * r
        leaves.append(tuple(point))
    return tuple(leaves)


def ext_set_lattice(points, b) -> tuple:
    """Cull ``points`` to those not shadowed by another point towards ``b``.

    A point ``a`` is dropped when some other ``a'`` lies on an l1 geodesic
    from ``a`` to ``b``, i.e. ``l1(a, a') + l1(a', b) == l1(a, b)``; the
    constraint that ``a`` imposes on a 1-Lipschitz value at ``b`` is then
    implied by the one ``a'`` imposes.  Returns the kept points sorted.
    """
    pts = sorted(set(tuple(p) for p in points))
    b = tuple(b)
    for p in pts:
        if len(p) != len(b):
            raise DimensionMismatch(f"points {p} and {b} differ in dimension")
    if b in pts:
        raise PointInSet(f"extension point {b} already in the set")
    kept = []
    for a in pts:
        shadowed = any(
            a2 != a and l1(a, a2) + l1(a2, b) == l1(a, b) for a2 in pts
        )
        if not shadowed:
            kept.append(a)
    return tuple(kept)


def box_graph(box: Box) -> tuple[Graph, dict, tuple]:
    """The box as a graph: unit-l1 pairs are edges.

    Returns the graph, the point-to-index map and the index-to-point tuple;
    indices follow the lexicographic order of :func:`box_vertices`.  The box
    is an isometric patch of the lattice, so graph distances equal l1.
    """
    points = box_vertices(box)
    index = {p: i for i, p in enumerate(points)}
    edges = []
    for p in points:
        for axis in range(box.d):
            q = p[:axis] + (p[axis] + 1,) + p[axis + 1 :]
            if q in index:
                edges.append((index[p], index[q]))
    return Graph(len(points), edges), index, points


def point_to_text(p) -> str:
    return "(" + ",".join(str(c) for c in p) + ")"


def point_from_text(text: str) -> tuple:
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise FormatError(f"cannot parse point {text!r}")
    body = s[1:-1].strip()
    if not body:
        raise FormatError(f"cannot parse point {text!r}")
    try:
        return tuple(int(c.strip()) for c in body.split(","))
    except ValueError:
        raise FormatError(f"cannot parse point {text!r}") from None
