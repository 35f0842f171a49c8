"""Filling holes: extending a boundary homomorphism to a whole box.

A :class:`BoundaryCondition` assigns a vertex of a bipartite target graph
to every boundary point of a box.  :func:`hole_fill_decide` answers
extendability by the pairwise test (target distance of every two images at
most the l1 distance of their points) and :func:`hole_fill_construct`
produces a filling by fixing interior points in raster order through the
class-restricted one-point step.

Both are backed by a theorem only when the target passes the bipartite
pairwise Helly check for the box dimension.  That precondition is verified
automatically for targets up to a size threshold and trusted (with a
:class:`HellyPreconditionWarning`) beyond it; when the check is run and
fails, the same warning is emitted and the outputs may legitimately
disagree with exhaustive search.

Boundary file format: header ``boundary d=<d> n=<n> target=<graphfile>``
then ``(<coords>) -> <vertex>`` lines; graph paths resolve relative to the
boundary file's directory.
"""

from __future__ import annotations

import os
import warnings
from dataclasses import dataclass

from .errors import (
    FormatError,
    IncompleteAssignment,
    NotHomomorphism,
    ParameterError,
    ParityMismatch,
)
from .extension import ExtensionOutcome, LipschitzViolation, PartialMap, extend_one_point
from .graphs import Graph, bipartition, graph_from_text
from .helly import bipartite_helly_check
from .lattice import (
    Box,
    box_boundary,
    box_interior,
    box_vertices,
    ext_set_lattice,
    l1,
    parity,
    point_from_text,
    point_to_text,
)

__all__ = [
    "BoundaryCondition",
    "HellyPreconditionWarning",
    "validate_boundary",
    "hole_fill_decide",
    "hole_fill_construct",
    "random_boundary_condition",
    "boundary_to_text",
    "boundary_from_text",
]


class HellyPreconditionWarning(UserWarning):
    """The decide/construct guarantees assume a bipartite pairwise-Helly
    target; emitted when that assumption is unverified or verifiably false."""


@dataclass
class BoundaryCondition:
    box: Box
    target: Graph
    assignment: dict


def validate_boundary(bc: BoundaryCondition) -> None:
    """Totality on the boundary, homomorphism on boundary edges, parity
    consistency.  Raises; returns nothing."""
    boundary = set(box_boundary(bc.box))
    for p in sorted(boundary):
        if p not in bc.assignment:
            raise IncompleteAssignment(f"boundary point {p} has no assignment")
    for p in sorted(bc.assignment):
        if p not in boundary:
            raise IncompleteAssignment(f"assigned point {p} is not on the boundary")
        v = bc.assignment[p]
        if not isinstance(v, int) or not 0 <= v < bc.target.n:
            raise ParameterError(f"assignment at {p} is not a vertex: {v!r}")
    dist = bc.target.distances().dist
    for p in sorted(boundary):
        for k in range(bc.box.d):
            q = p[:k] + (p[k] + 1,) + p[k + 1 :]
            if q in boundary:
                fp, fq = bc.assignment[p], bc.assignment[q]
                if dist[fp, fq] != 1:
                    raise NotHomomorphism((p, q), (fp, fq))
    bip = bipartition(bc.target)
    seen = {0: set(), 1: set()}
    for p, v in bc.assignment.items():
        seen[parity(p) - 1].add(bip.class_of[v])
    for par, classes in seen.items():
        if len(classes) > 1:
            raise ParityMismatch(
                f"lattice parity {par + 1} maps into both partite classes"
            )
    if seen[0] and seen[1] and seen[0] == seen[1]:
        raise ParityMismatch("both lattice parities map into one partite class")


def _parity_orientation(bc: BoundaryCondition, bip):
    """Which partite class each lattice parity maps to (1 or 2)."""
    orient = {}
    for p, v in bc.assignment.items():
        orient[parity(p)] = bip.class_of[v]
    for par in (1, 2):
        if par not in orient:
            orient[par] = 3 - orient[3 - par]
    return orient


_precondition_cache: dict = {}


def _warn_unless_helly(target: Graph, d: int, threshold: int) -> None:
    if target.n > threshold:
        warnings.warn(
            f"target has {target.n} > {threshold} vertices; "
            "bipartite Helly precondition not verified",
            HellyPreconditionWarning,
            stacklevel=3,
        )
        return
    key = (target, 2 * d)
    holds = _precondition_cache.get(key)
    if holds is None:
        holds = bipartite_helly_check(target, 2 * d, 2) is True
        _precondition_cache[key] = holds
    if not holds:
        warnings.warn(
            "target fails the bipartite pairwise Helly check; "
            "answers may disagree with exhaustive search",
            HellyPreconditionWarning,
            stacklevel=3,
        )


def hole_fill_decide(bc: BoundaryCondition, helly_threshold: int = 12):
    """``True`` iff every boundary pair satisfies the distance test, else
    the first violating pair."""
    validate_boundary(bc)
    _warn_unless_helly(bc.target, bc.box.d, helly_threshold)
    pts = sorted(bc.assignment)
    dist = bc.target.distances().dist
    for i, p in enumerate(pts):
        for q in pts[i + 1 :]:
            dd = l1(p, q)
            dt = int(dist[bc.assignment[p], bc.assignment[q]])
            if dt > dd:
                return LipschitzViolation(p, q, dd, dt)
    return True


def hole_fill_construct(bc: BoundaryCondition, helly_threshold: int = 12) -> ExtensionOutcome:
    """Fill the interior in raster order; smallest admissible vertex of the
    point's parity class at each step, constraints culled first.

    On success the result is checked to be a homomorphism on every box edge
    restricting to the boundary condition.  A failure certificate names the
    stuck point and the (vertex, radius) constraints with empty intersection;
    with a bipartite pairwise-Helly target this happens exactly on decide-no
    instances.
    """
    validate_boundary(bc)
    _warn_unless_helly(bc.target, bc.box.d, helly_threshold)
    bip = bipartition(bc.target)
    orient = _parity_orientation(bc, bip)
    assigned = dict(bc.assignment)
    for p in box_interior(bc.box):
        culled = ext_set_lattice(list(assigned), p)
        constraints = [(assigned[a], l1(p, a)) for a in culled]
        v = extend_one_point(
            bc.target, constraints, class_restrict=bip.side(orient[parity(p)])
        )
        if v is None:
            return ExtensionOutcome(
                map=None, stuck_point=p, constraints=tuple(constraints)
            )
        assigned[p] = v
    dist = bc.target.distances().dist
    for p in box_vertices(bc.box):
        for k in range(bc.box.d):
            q = p[:k] + (p[k] + 1,) + p[k + 1 :]
            if q in assigned:
                assert dist[assigned[p], assigned[q]] == 1, (p, q)
    for p, v in bc.assignment.items():
        assert assigned[p] == v
    return ExtensionOutcome(
        map=PartialMap(bc.target, assigned, d=bc.box.d, lipschitz_t=1)
    )


def _boundary_cycle(n: int):
    """Boundary points of a d=2 box in cyclic walk order (length 4n)."""
    out = [(i, 0) for i in range(n + 1)]
    out += [(n, j) for j in range(1, n + 1)]
    out += [(i, n) for i in range(n - 1, -1, -1)]
    out += [(0, j) for j in range(n - 1, 0, -1)]
    return out


def _mat_mul(a, b, k):
    return [
        [sum(a[i][x] * b[x][j] for x in range(k)) for j in range(k)]
        for i in range(k)
    ]


def _weighted_index(weights, rng):
    total = sum(weights)
    if total == 0:
        raise ParameterError("target admits no valid boundary condition")
    r = rng.randrange(total)
    for i, w in enumerate(weights):
        if r < w:
            return i
        r -= w
    raise AssertionError


def random_boundary_condition(box: Box, target: Graph, rng) -> BoundaryCondition:
    """A uniformly random valid boundary condition.

    For d = 2 this samples uniformly over all homomorphisms of the boundary
    cycle into the target via closed-walk counting (exact integer weights);
    d = 1 enumerates the valid endpoint pairs.  ``rng`` is a seeded
    ``random.Random``.
    """
    bip = bipartition(target)
    if box.d == 1:
        p, q = (0,), (box.n,)
        pairs = []
        dist = target.distances().dist
        for u in range(target.n):
            for v in range(target.n):
                if box.n == 1:
                    if dist[u, v] == 1:
                        pairs.append((u, v))
                elif parity(p) == parity(q):
                    if bip.class_of[u] == bip.class_of[v]:
                        pairs.append((u, v))
                elif bip.class_of[u] != bip.class_of[v]:
                    pairs.append((u, v))
        u, v = pairs[rng.randrange(len(pairs))]
        return BoundaryCondition(box, target, {p: u, q: v})
    if box.d != 2:
        raise ParameterError("random boundary conditions support d in {1, 2}")
    cyc = _boundary_cycle(box.n)
    length = len(cyc)
    k = target.n
    adj = [[1 if target._adj[i, j] else 0 for j in range(k)] for i in range(k)]
    powers = [[[1 if i == j else 0 for j in range(k)] for i in range(k)]]
    for _ in range(length):
        powers.append(_mat_mul(powers[-1], adj, k))
    start = _weighted_index([powers[length][v][v] for v in range(k)], rng)
    walk = [start]
    for i in range(1, length):
        back = powers[length - i]
        weights = [adj[walk[-1]][w] * back[w][start] for w in range(k)]
        walk.append(_weighted_index(weights, rng))
    bc = BoundaryCondition(box, target, dict(zip(cyc, walk)))
    validate_boundary(bc)
    return bc


def boundary_to_text(bc: BoundaryCondition, target_path: str) -> str:
    lines = [f"boundary d={bc.box.d} n={bc.box.n} target={target_path}"]
    for p in sorted(bc.assignment):
        lines.append(f"{point_to_text(p)} -> {bc.assignment[p]}")
    return "\n".join(lines) + "\n"


def boundary_from_text(text: str, base_dir: str = ".") -> BoundaryCondition:
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines or not lines[0].startswith("boundary "):
        raise FormatError("boundary file must start with a 'boundary' header")
    fields = {}
    for tok in lines[0].split()[1:]:
        if "=" not in tok:
            raise FormatError(f"bad header token {tok!r}")
        key, _, val = tok.partition("=")
        fields[key] = val
    try:
        box = Box(int(fields["d"]), int(fields["n"]))
    except (KeyError, ValueError):
        raise FormatError("boundary header needs integer d= and n=") from None
    if "target" not in fields:
        raise FormatError("boundary header needs target=")
    with open(os.path.join(base_dir, fields["target"])) as fh:
        target = graph_from_text(fh.read())
    assignment = {}
    for ln in lines[1:]:
        left, sep, right = ln.partition("->")
        if not sep:
            raise FormatError(f"cannot parse boundary entry {ln!r}")
        try:
            key = point_from_text(left.strip())
            value = int(right.strip())
        except ValueError:
            raise FormatError(f"cannot parse boundary entry {ln!r}") from None
        if key in assignment:
            raise FormatError(f"duplicate boundary entry for {left.strip()}")
        assignment[key] = value
    return BoundaryCondition(box, target, assignment)
