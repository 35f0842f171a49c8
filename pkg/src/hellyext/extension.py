"""Lipschitz maps into graphs and their one-point / greedy extensions.

A :class:`PartialMap` carries finitely many domain points (lattice points
of a fixed dimension, or vertices of a domain graph) to vertices of a
target graph.  The pieces assembled here:

* :func:`is_lipschitz` - pairwise verification with a first-violation
  certificate;
* :func:`ext_set` - geodesic culling of constraint points on graph
  domains (the lattice twin lives in :mod:`hellyext.lattice`);
* :func:`extend_one_point` - the ball-intersection step: pick the
  smallest-index target vertex satisfying all (center, radius)
  constraints;
* :func:`greedy_extend` - extend point by point, nearest pending point
  first, constraints culled before each step.  On targets passing the
  pairwise Helly check for the relevant parameters this never gets stuck;
  on other targets a failure is only "greedy-stuck", not a proof that no
  extension exists (use the brute-force oracle for a decision);
* :func:`violation_to_witness_map` - turn a Helly violation into a
  1-Lipschitz map on axis points that no value at the origin can extend.

Map files: header ``map d=<d> t=<t> target=<graphfile>`` (lattice domain)
or ``map domain=<graphfile> t=<t> target=<graphfile>`` (graph domain),
then one entry per line, ``(<coords>) -> <vertex>`` or ``v<idx> -> <vertex>``.
Graph paths are resolved relative to the map file's directory.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .errors import (
    FormatError,
    NotLipschitzInput,
    ParameterError,
    PointInSet,
)
from .graphs import Graph, DistanceMatrix, graph_from_text
from .helly import HellyViolation, verify_violation
from .lattice import axis_embed_star, ext_set_lattice, l1, point_from_text, point_to_text

__all__ = [
    "PartialMap",
    "LipschitzViolation",
    "ExtensionOutcome",
    "is_lipschitz",
    "ext_set",
    "extend_one_point",
    "greedy_extend",
    "violation_to_witness_map",
    "map_to_text",
    "map_from_text",
]


class PartialMap:
    """A finite map into ``target``, over lattice points or graph vertices.

    Exactly one of ``d`` (lattice dimension) and ``domain_graph`` must be
    given.  Lattice keys are integer tuples of length ``d``; graph keys are
    vertex indices of ``domain_graph``.  ``lipschitz_t`` is the scale the
    map is meant to respect; nothing is verified at construction.
    """

    def __init__(self, target, entries, d=None, domain_graph=None, lipschitz_t=1):
        if (d is None) == (domain_graph is None):
            raise ParameterError("exactly one of d and domain_graph is required")
        if lipschitz_t < 1:
            raise ParameterError(f"lipschitz_t must be >= 1, got {lipschitz_t}")
        if d is not None and d < 1:
            raise ParameterError(f"d must be >= 1, got {d}")
        entries = dict(entries)
        for p, v in entries.items():
            if d is not None:
                if (
                    not isinstance(p, tuple)
                    or len(p) != d
                    or not all(isinstance(c, int) for c in p)
                ):
                    raise ParameterError(f"bad lattice point {p!r} for d={d}")
            else:
                if not isinstance(p, int) or not 0 <= p < domain_graph.n:
                    raise ParameterError(f"bad domain vertex {p!r}")
            if not isinstance(v, (int, np.integer)) or not 0 <= v < target.n:
                raise ParameterError(f"bad target vertex {v!r}")
            entries[p] = int(v)
        self.target = target
        self.entries = entries
        self.d = d
        self.domain_graph = domain_graph
        self.lipschitz_t = lipschitz_t

    def domain(self):
        return tuple(sorted(self.entries))

    def domain_distance(self, p, q):
        if self.d is not None:
            return l1(p, q)
        return int(self.domain_graph.distances().dist[p, q])

    def with_entry(self, p, v):
        entries = dict(self.entries)
        entries[p] = v
        return PartialMap(
            self.target,
            entries,
            d=self.d,
            domain_graph=self.domain_graph,
            lipschitz_t=self.lipschitz_t,
        )


@dataclass(frozen=True)
class LipschitzViolation:
    """First domain pair with dist_target > t * dist_domain."""

    p: object
    q: object
    d_domain: int
    d_target: int


@dataclass(frozen=True)
class ExtensionOutcome:
    """Result of a greedy extension: a total map, or a stuck certificate.

    On failure ``stuck_point`` is the point that could not be assigned and
    ``constraints`` lists (target vertex, radius) balls whose intersection
    is empty.
    """

    map: PartialMap | None
    stuck_point: object = None
    constraints: tuple = ()

    @property
    def ok(self):
        return self.map is not None


def is_lipschitz(f: PartialMap, t: int | None = None):
    """``True`` or the lexicographically first violating pair."""
    if t is None:
        t = f.lipschitz_t
    if t < 1:
        raise ParameterError(f"t must be >= 1, got {t}")
    pts = f.domain()
    tdist = f.target.distances().dist
    for i, p in enumerate(pts):
        for q in pts[i + 1 :]:
            dd = f.domain_distance(p, q)
            dt = int(tdist[f.entries[p], f.entries[q]])
            if dt > t * dd:
                return LipschitzViolation(p, q, dd, dt)
    return True


def ext_set(dm: DistanceMatrix, a, b: int):
    """Members of ``a`` not shadowed by another member on a geodesic to ``b``.

    ``a'`` shadows ``a`` when d(a,a') + d(a',b) = d(a,b).  One-point
    extendability over ``a`` equals extendability over the result.
    """
    pts = sorted(set(a))
    if b in pts:
        raise PointInSet(f"b={b} is in the set")
    dist = dm.dist
    kept = []
    for p in pts:
        if not any(
            q != p and dist[p, q] + dist[q, b] == dist[p, b] for q in pts
        ):
            kept.append(p)
    return tuple(kept)


def extend_one_point(h: Graph, constraints, class_restrict=None):
    """Smallest-index vertex of ``h`` within every (center, radius) ball.

    ``class_restrict`` limits candidates to the given vertex collection.
    Returns ``None`` when the intersection is empty; that is an answer,
    not a fault.
    """
    constraints = list(constraints)
    if not constraints:
        raise ParameterError("no constraints")
    dm = h.distances()
    ok = np.ones(h.n, dtype=bool)
    for v, r in constraints:
        if not 0 <= v < h.n:
            raise ParameterError(f"constraint center {v} out of range")
        if r < 0:
            raise ParameterError(f"constraint radius {r} negative")
        ok &= dm.dist[v] <= r
    if class_restrict is not None:
        mask = np.zeros(h.n, dtype=bool)
        mask[list(class_restrict)] = True
        ok &= mask
    hits = np.flatnonzero(ok)
    if hits.size == 0:
        return None
    return int(hits[0])


def _cull(f: PartialMap, assigned, b):
    if f.d is not None:
        return ext_set_lattice(assigned, b)
    return ext_set(f.domain_graph.distances(), assigned, b)


def greedy_extend(f: PartialMap, s, order=None) -> ExtensionOutcome:
    """Extend ``f`` over the finite superset ``s``, one point at a time.

    Each pending point gets the smallest-index target vertex compatible
    with every already-assigned point (radius t * domain distance),
    constraints culled through the geodesic extension set first.  Default
    processing order: nearest to the current domain, ties by point;
    ``order`` overrides it.  The input must verify t-Lipschitz and the
    total result is re-verified before it is returned.
    """
    t = f.lipschitz_t
    bad = is_lipschitz(f, t)
    if bad is not True:
        raise NotLipschitzInput((bad.p, bad.q), bad.d_domain, bad.d_target, t)
    s = list(dict.fromkeys(s))
    missing = [p for p in f.entries if p not in set(s)]
    if missing:
        raise ParameterError(f"s does not contain domain point {missing[0]!r}")
    assigned = dict(f.entries)
    pending = set(p for p in s if p not in assigned)
    if order is not None:
        order = list(order)
        if sorted(order) != sorted(pending):
            raise ParameterError("order must enumerate exactly the new points")
    while pending:
        if order is not None:
            b = order.pop(0)
        elif assigned:
            b = min(
                pending,
                key=lambda p: (min(f.domain_distance(p, a) for a in assigned), p),
            )
        else:
            b = min(pending)
        if not assigned:
            # nothing constrains the first point
            assigned[b] = 0
            pending.discard(b)
            continue
        culled = _cull(f, list(assigned), b)
        constraints = [(assigned[a], t * f.domain_distance(b, a)) for a in culled]
        v = extend_one_point(f.target, constraints)
        if v is None:
            return ExtensionOutcome(
                map=None, stuck_point=b, constraints=tuple(constraints)
            )
        assigned[b] = v
        pending.discard(b)
    total = PartialMap(
        f.target, assigned, d=f.d, domain_graph=f.domain_graph, lipschitz_t=t
    )
    assert is_lipschitz(total, t) is True
    return ExtensionOutcome(map=total)


def violation_to_witness_map(g: Graph, violation: HellyViolation, d: int):
    """Axis-point witness from a pairwise Helly violation.

    Ball radii become axis rays, ball centers the values.  Pairwise
    intersection of the balls makes the map 1-Lipschitz; emptiness of the
    whole intersection makes the origin unextendable, which is re-checked
    here before returning.
    """
    verify_violation(g, violation, 2)
    if violation.mode != "plain":
        raise ParameterError("witness construction needs a plain-mode violation")
    radii = tuple(b.radius for b in violation.balls)
    leaves = axis_embed_star(radii, d)
    entries = {leaf: ball.center for leaf, ball in zip(leaves, violation.balls)}
    f = PartialMap(g, entries, d=d, lipschitz_t=1)
    assert is_lipschitz(f, 1) is True
    origin = (0,) * d
    got = extend_one_point(
        g, [(v, l1(p, origin)) for p, v in entries.items()]
    )
    assert got is None, "violation unexpectedly extendable at the origin"
    return tuple(leaves), f


def map_to_text(f: PartialMap, target_path: str, domain_path: str | None = None) -> str:
    if f.d is not None:
        head = f"map d={f.d} t={f.lipschitz_t} target={target_path}"
    else:
        if domain_path is None:
            raise ParameterError("graph-domain maps need a domain_path")
        head = f"map domain={domain_path} t={f.lipschitz_t} target={target_path}"
    lines = [head]
    for p in f.domain():
        key = point_to_text(p) if f.d is not None else f"v{p}"
        lines.append(f"{key} -> {f.entries[p]}")
    return "\n".join(lines) + "\n"


def map_from_text(text: str, base_dir: str = ".") -> PartialMap:
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines or not lines[0].startswith("map "):
        raise FormatError("map file must start with a 'map' header")
    fields = {}
    for tok in lines[0].split()[1:]:
        if "=" not in tok:
            raise FormatError(f"bad header token {tok!r}")
        key, _, val = tok.partition("=")
        fields[key] = val
    if "target" not in fields or "t" not in fields:
        raise FormatError("map header needs t= and target=")
    if ("d" in fields) == ("domain" in fields):
        raise FormatError("map header needs exactly one of d= and domain=")
    try:
        t = int(fields["t"])
        d = int(fields["d"]) if "d" in fields else None
    except ValueError:
        raise FormatError("d and t must be integers") from None
    with open(os.path.join(base_dir, fields["target"])) as fh:
        target = graph_from_text(fh.read())
    domain_graph = None
    if "domain" in fields:
        with open(os.path.join(base_dir, fields["domain"])) as fh:
            domain_graph = graph_from_text(fh.read())
    entries = {}
    for ln in lines[1:]:
        left, sep, right = ln.partition("->")
        if not sep:
            raise FormatError(f"cannot parse map entry {ln!r}")
        left = left.strip()
        try:
            value = int(right.strip())
            if d is not None:
                key = point_from_text(left)
            elif left.startswith("v"):
                key = int(left[1:])
            else:
                raise ValueError
        except ValueError:
            raise FormatError(f"cannot parse map entry {ln!r}") from None
        if key in entries:
            raise FormatError(f"duplicate map entry for {left}")
        entries[key] = value
    return PartialMap(target, entries, d=d, domain_graph=domain_graph, lipschitz_t=t)
