"""Brute-force ground truth, kept independent of the clever code paths.

Nothing here prunes through Helly properties or geodesic culling; the
point of this module is to certify the rest of the package by raw search:

* :func:`brute_force_extend` - backtracking extendability of a partial
  map, constraint checks against already-assigned points only;
* :func:`brute_force_helly` - the ball-collection definition enumerated
  literally, radii running one past the diameter so the main checker's
  radius cap is itself under test;
* :func:`enumerate_connected_graphs` - the small-graph test universe;
* :func:`kirszbraun_equivalence_harness` - machine check, on every small
  graph, that the pairwise Helly property coincides with lattice
  Kirszbraun extendability probed through axis-embedded star trees;
* :func:`product_preservation_check` and :func:`small_diameter_check` -
  the product and bounded-diameter preservation laws at desk scale.

Hard node budgets turn combinatorial explosion into :class:`TooLarge`.
"""

from __future__ import annotations

import itertools
import math
import multiprocessing
import random
from dataclasses import dataclass

from .errors import NotBipartite, ParameterError, TooLarge
from .extension import PartialMap, greedy_extend
from .graphs import (
    Graph,
    bipartition,
    canonical_form,
    graph_from_edges,
    induced_subgraph,
    star_tree,
    strong_product,
    tensor_product,
)
from .helly import Ball, HellyViolation, helly_check
from .lattice import axis_embed_star, box_vertices, Box, l1

__all__ = [
    "brute_force_extend",
    "brute_force_helly",
    "enumerate_connected_graphs",
    "graph_kirszbraun_status",
    "bipartite_kirszbraun_status",
    "HarnessRow",
    "HarnessReport",
    "kirszbraun_equivalence_harness",
    "ProductReport",
    "product_preservation_check",
    "SmallDiameterReport",
    "small_diameter_check",
]

NODE_BUDGET = 10**8


def brute_force_extend(f: PartialMap, s, t: int | None = None) -> bool:
    """True iff some total assignment on ``s`` extends ``f`` t-Lipschitz-ly.

    Plain backtracking: new points in ascending order, target vertices in
    ascending index, each candidate checked against assigned points only.
    """
    if t is None:
        t = f.lipschitz_t
    s = sorted(set(s))
    in_s = set(s)
    for p in f.entries:
        if p not in in_s:
            raise ParameterError(f"s does not contain domain point {p!r}")
    new = [p for p in s if p not in f.entries]
    if f.target.n ** len(new) > NODE_BUDGET:
        raise TooLarge(
            f"{f.target.n}^{len(new)} assignments exceed the {NODE_BUDGET} budget"
        )
    pts = sorted(f.entries)
    tdist = f.target.distances().dist
    for i, p in enumerate(pts):
        for q in pts[i + 1 :]:
            if tdist[f.entries[p], f.entries[q]] > t * f.domain_distance(p, q):
                return False
    assigned = dict(f.entries)

    def fits(p, v):
        return all(
            tdist[v, w] <= t * f.domain_distance(p, q) for q, w in assigned.items()
        )

    def bt(i):
        if i == len(new):
            return True
        p = new[i]
        for v in range(f.target.n):
            if fits(p, v):
                assigned[p] = v
                if bt(i + 1):
                    return True
                del assigned[p]
        return False

    return bt(0)


def brute_force_helly(g: Graph, n: int, m: int):
    """The (n, m)-Helly definition by raw enumeration.

    Balls ordered by (center, radius) with radii 1..diameter+1; collections
    are nondecreasing index tuples visited in lexicographic order; the
    m-wise hypothesis is maintained incrementally over slot combinations
    and an empty running intersection under a holding hypothesis is a
    violation (lex-first completion pads with the current ball).  Agrees
    with the main checker down to the certificate.
    """
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    if m < 1 or m > n:
        raise ParameterError(f"m must be in 1..n, got {m}")
    dm = g.distances()
    balls = [
        (c, r) for c in range(g.n) for r in range(1, dm.diameter + 2)
    ]
    sets = []
    for c, r in balls:
        bits = 0
        for v in range(g.n):
            if dm.dist[c, v] <= r:
                bits |= 1 << v
        sets.append(bits)
    budget = NODE_BUDGET
    found = None

    def rec(start, chosen, inter):
        nonlocal budget, found
        for j in range(start, len(balls)):
            budget -= 1
            if budget <= 0:
                raise TooLarge("helly enumeration exceeded the node budget")
            if len(chosen) >= m - 1:
                ok = True
                for sub in itertools.combinations(chosen, m - 1):
                    x = sets[j]
                    for i in sub:
                        x &= sets[i]
                        if not x:
                            break
                    if not x:
                        ok = False
                        break
                if not ok:
                    continue
            new_inter = inter & sets[j]
            if not new_inter:
                if len(chosen) >= m - 1:
                    found = chosen + [j] * (n - len(chosen))
                    return True
                continue
            if len(chosen) + 1 < n and rec(j, chosen + [j], new_inter):
                return True
        return False

    if rec(0, [], (1 << g.n) - 1):
        support = sorted(set(found))
        return HellyViolation(
            balls=tuple(Ball(*balls[i]) for i in support), mode="plain"
        )
    return True


def enumerate_connected_graphs(k: int):
    """All connected simple graphs on k vertices up to isomorphism.

    Grown by attaching a new vertex to every nonempty subset of a smaller
    graph (every connected graph has a vertex whose removal keeps it
    connected), deduplicated by brute-force canonical form.  Deterministic
    order: ascending canonical key.
    """
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    if k > 7:
        raise TooLarge("enumeration is limited to 7 vertices")
    level = [graph_from_edges(1, ())]
    for size in range(2, k + 1):
        seen = {}
        for g in level:
            for mask in range(1, 1 << g.n):
                extra = tuple(
                    (v, g.n) for v in range(g.n) if mask >> v & 1
                )
                h = graph_from_edges(size, g.edges + extra)
                seen.setdefault(canonical_form(h), h)
        level = [seen[key] for key in sorted(seen)]
    return level


def _compatible_multisets(items, k, tdist):
    """Nondecreasing k-tuples of (vertex, radius) pairs, pairwise
    d(v_i, v_j) <= r_i + r_j, pruned as they are built."""
    out = []

    def rec(start, chosen):
        if len(chosen) == k:
            out.append(tuple(chosen))
            return
        for idx in range(start, len(items)):
            v, r = items[idx]
            if all(tdist[v, w] <= r + s for w, s in chosen):
                chosen.append(items[idx])
                rec(idx, chosen)
                chosen.pop()

    rec(0, [])
    return out


def graph_kirszbraun_status(h: Graph, d: int) -> bool:
    """Oracle lattice-Kirszbraun status of ``h`` for dimension ``d``.

    Star trees are a complete test family, so this enumerates all multisets
    of 2d (vertex, radius) pairs with radii up to the diameter, places the
    rays on the coordinate axes, and asks the backtracking oracle to extend
    each 1-Lipschitz leaf assignment to the origin.
    """
    if d < 1:
        raise ParameterError(f"d must be >= 1, got {d}")
    dm = h.distances()
    items = [(v, r) for v in range(h.n) for r in range(1, dm.diameter + 1)]
    origin = (0,) * d
    for combo in _compatible_multisets(items, 2 * d, dm.dist):
        radii = tuple(r for _, r in combo)
        leaves = axis_embed_star(radii, d)
        f = PartialMap(
            h, {leaf: v for leaf, (v, _) in zip(leaves, combo)}, d=d
        )
        if not brute_force_extend(f, list(leaves) + [origin], 1):
            return False
    return True


def bipartite_kirszbraun_status(h: Graph, d: int) -> bool:
    """Bipartite analogue: leaf values must respect parity relative to a
    center class, and the center must be found inside that class."""
    if d < 1:
        raise ParameterError(f"d must be >= 1, got {d}")
    bip = bipartition(h)
    dm = h.distances()
    for center_class in (1, 2):
        items = [
            (v, r)
            for v in range(h.n)
            for r in range(1, dm.diameter + 1)
            if bip.class_of[v] == (center_class if r % 2 == 0 else 3 - center_class)
        ]
        allowed = bip.side(center_class)
        for combo in _compatible_multisets(items, 2 * d, dm.dist):
            if not any(
                all(dm.dist[w, v] <= r for v, r in combo) for w in allowed
            ):
                return False
    return True


@dataclass(frozen=True)
class HarnessRow:
    graph_id: str
    helly: bool
    kirszbraun: bool
    agree: bool


@dataclass(frozen=True)
class HarnessReport:
    d: int
    rows: tuple

    @property
    def total(self):
        return len(self.rows)

    @property
    def agree_count(self):
        return sum(1 for row in self.rows if row.agree)

    @property
    def all_agree(self):
        return self.agree_count == self.total

    def to_text(self) -> str:
        def word(flag):
            return "true" if flag else "false"

        lines = [
            f"{r.graph_id}\t{word(r.helly)}\t{word(r.kirszbraun)}\t{word(r.agree)}"
            for r in self.rows
        ]
        lines.append(f"total {self.total} agree {self.agree_count}")
        return "\n".join(lines) + "\n"


def _greedy_spot_check(h: Graph, d: int, seed_key: str) -> None:
    """Sampled cross-check: on a Helly target, greedy never gets stuck."""
    rng = random.Random(seed_key)
    box = Box(d, 2)
    points = list(box_vertices(box))
    tdist = h.distances().dist
    for _ in range(3):
        chosen = rng.sample(points, rng.randrange(2, min(5, len(points)) + 1))
        entries = {}
        for p in chosen:
            options = [
                v
                for v in range(h.n)
                if all(tdist[v, w] <= l1(p, q) for q, w in entries.items())
            ]
            entries[p] = rng.choice(options)
        out = greedy_extend(PartialMap(h, entries, d=d), points)
        assert out.ok, (h.edges, entries, out.stuck_point)


def _harness_one(task):
    graph, graph_id, d, seed = task
    helly = helly_check(graph, 2 * d, 2) is True
    kirszbraun = graph_kirszbraun_status(graph, d)
    if helly:
        _greedy_spot_check(graph, d, f"{seed}:{graph_id}")
    return HarnessRow(graph_id, helly, kirszbraun, helly == kirszbraun)


def kirszbraun_equivalence_harness(
    d: int, max_vertices: int, seed: int = 0, jobs: int = 1
) -> HarnessReport:
    """Per-graph Helly vs oracle-Kirszbraun agreement over the universe of
    connected graphs with at most ``max_vertices`` vertices.

    Deterministic for fixed arguments regardless of ``jobs``.
    """
    if d not in (1, 2):
        raise ParameterError(f"d must be 1 or 2, got {d}")
    if max_vertices < 1:
        raise ParameterError("max_vertices must be >= 1")
    if max_vertices > 6:
        raise TooLarge("harness universes are limited to 6 vertices")
    tasks = []
    for k in range(1, max_vertices + 1):
        for i, g in enumerate(enumerate_connected_graphs(k)):
            tasks.append((g, f"n{k}_{i}", d, seed))
    if jobs > 1:
        with multiprocessing.Pool(jobs) as pool:
            rows = pool.map(_harness_one, tasks)
    else:
        rows = [_harness_one(t) for t in tasks]
    return HarnessReport(d=d, rows=tuple(rows))


@dataclass(frozen=True)
class ProductReport:
    h1_kirszbraun: bool
    h2_kirszbraun: bool
    strong_kirszbraun: bool | None
    h1_bipartite: bool | None
    h2_bipartite: bool | None
    tensor_components_bipartite: tuple | None

    @property
    def ok(self):
        strong = (
            not (self.h1_kirszbraun and self.h2_kirszbraun)
            or bool(self.strong_kirszbraun)
        )
        tensor = (
            self.tensor_components_bipartite is None
            or not (self.h1_bipartite and self.h2_bipartite)
            or all(self.tensor_components_bipartite)
        )
        return strong and tensor


def product_preservation_check(h1: Graph, h2: Graph, d: int) -> ProductReport:
    """Products preserve extendability, verified on the star-tree family.

    When both factors pass the star test, the strong product must pass it;
    when both factors are bipartite and pass the class-restricted star
    test, every tensor-product component must pass it too.
    """
    k1 = graph_kirszbraun_status(h1, d)
    k2 = graph_kirszbraun_status(h2, d)
    strong = None
    if k1 and k2:
        strong = graph_kirszbraun_status(strong_product(h1, h2), d)
    b1 = b2 = None
    components = None
    try:
        b1 = bipartite_kirszbraun_status(h1, d)
        b2 = bipartite_kirszbraun_status(h2, d)
    except NotBipartite:
        b1 = b2 = None
    if b1 and b2:
        components = tuple(
            bipartite_kirszbraun_status(c, d) for c in tensor_product(h1, h2)
        )
    return ProductReport(
        h1_kirszbraun=k1,
        h2_kirszbraun=k2,
        strong_kirszbraun=strong,
        h1_bipartite=b1,
        h2_bipartite=b2,
        tensor_components_bipartite=components,
    )


def _finite_kirszbraun(g: Graph, x: Graph) -> bool:
    """``x`` absorbs every 1-Lipschitz partial map from ``g``.

    Equivalent one-point form: for every subset A, point b outside A and
    1-Lipschitz f on A, some vertex of x is within dist(b, a) of every
    f(a).  Enumerated by assigning each g-vertex a value or skipping it,
    pruning pairwise along the way.
    """
    gdist = g.distances().dist
    xdist = x.distances().dist
    budget = NODE_BUDGET
    assigned = []

    def rec(u):
        nonlocal budget
        if u == g.n:
            if not assigned or len(assigned) == g.n:
                return True
            taken = {q for q, _ in assigned}
            for b in range(g.n):
                if b in taken:
                    continue
                if not any(
                    all(xdist[w, val] <= gdist[b, q] for q, val in assigned)
                    for w in range(x.n)
                ):
                    return False
            return True
        budget -= 1
        if budget <= 0:
            raise TooLarge("subset enumeration exceeded the node budget")
        if not rec(u + 1):  # u unassigned
            return False
        for v in range(x.n):
            if all(xdist[v, val] <= gdist[u, q] for q, val in assigned):
                assigned.append((u, v))
                if not rec(u + 1):
                    assigned.pop()
                    return False
                assigned.pop()
        return True

    return rec(0)


@dataclass(frozen=True)
class SmallDiameterReport:
    ball_kirszbraun: tuple
    conclusion: bool

    @property
    def premise(self):
        return all(flag for _, flag in self.ball_kirszbraun)

    @property
    def consistent(self):
        return not self.premise or self.conclusion


def small_diameter_check(g: Graph, h: Graph) -> SmallDiameterReport:
    """If every radius-diam(g) ball of ``h`` (as an induced subgraph with
    its own path metric) absorbs maps from ``g``, then ``h`` does.

    Both sides are computed by the subset oracle and reported; the law is
    the ``consistent`` property.
    """
    n = g.distances().diameter
    hdm = h.distances()
    results = []
    for v in range(h.n):
        members = [w for w in range(h.n) if hdm.dist[v, w] <= n]
        sub, _ = induced_subgraph(h, members)
        results.append((v, _finite_kirszbraun(g, sub)))
    conclusion = _finite_kirszbraun(g, h)
    return SmallDiameterReport(
        ball_kirszbraun=tuple(results), conclusion=conclusion
    )
