"""Finite simple connected graphs with their path metric.

Every graph accepted or built here is nonempty, connected, simple and
undirected; all operations may assume that and callers may rely on it.
Distances come from breadth-first search and are stored densely, since the
graphs this package works with stay small (at most a few thousand vertices).

A small text format is used to exchange graphs::

    graph <n>
    e <u> <v>
    leaf <v>

with one ``e`` line per edge (written in sorted order) and optional ``leaf``
lines marking distinguished vertices, e.g. the ray ends of a star tree.
Blank lines and lines starting with ``#`` are ignored on input.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse.csgraph import shortest_path

from .errors import (
    EmptyGraph,
    FormatError,
    InvalidSize,
    NotBipartite,
    NotConnected,
    NotSimple,
    ParameterError,
)

__all__ = [
    "Graph",
    "DistanceMatrix",
    "Bipartition",
    "validate_graph",
    "graph_from_edges",
    "all_pairs_distances",
    "ball",
    "bipartition",
    "induced_subgraph",
    "canonical_form",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "hyperoctahedron",
    "star_tree",
    "strong_product",
    "tensor_product",
    "graph_to_text",
    "graph_from_text",
]


class Graph:
    """An immutable connected simple graph on vertices ``0..n-1``.

    ``leaf_marks`` carries the distinguished vertices ``b_1, ..., b_k`` of
    constructors that have them (star trees); it is empty otherwise.
    """

    __slots__ = ("n", "edges", "leaf_marks", "neighbors", "_adj", "_dist")

    def __init__(self, n, edges, leaf_marks=()):
        self.n = int(n)
        self.edges = tuple(sorted((min(u, v), max(u, v)) for u, v in edges))
        self.leaf_marks = tuple(int(v) for v in leaf_marks)
        adj = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self.edges:
            adj[u, v] = adj[v, u] = True
        adj.setflags(write=False)
        self._adj = adj
        self.neighbors = tuple(
            tuple(int(w) for w in np.flatnonzero(adj[v])) for v in range(self.n)
        )
        self._dist = None

    @property
    def adjacency(self):
        return self._adj

    def distances(self) -> "DistanceMatrix":
        """Return the cached all-pairs distance matrix, computing it once."""
        if self._dist is None:
            self._dist = all_pairs_distances(self)
        return self._dist

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.edges == other.edges
            and self.leaf_marks == other.leaf_marks
        )

    def __hash__(self):
        return hash((self.n, self.edges, self.leaf_marks))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={len(self.edges)})"


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Dense integer all-pairs distances together with the diameter."""

    dist: np.ndarray
    diameter: int


@dataclass(frozen=True)
class Bipartition:
    """A 2-colouring: ``class_of[v]`` is 1 or 2."""

    class_of: tuple[int, ...]
    class1: frozenset = field(init=False)
    class2: frozenset = field(init=False)

    def __post_init__(self):
        object.__setattr__(
            self, "class1", frozenset(v for v, c in enumerate(self.class_of) if c == 1)
        )
        object.__setattr__(
            self, "class2", frozenset(v for v, c in enumerate(self.class_of) if c == 2)
        )

    def side(self, k: int) -> frozenset:
        if k == 1:
            return self.class1
        if k == 2:
            return self.class2
        raise ParameterError(f"partite class must be 1 or 2, got {k}")


def validate_graph(adjacency, leaf_marks=()) -> Graph:
    """Build a :class:`Graph` from a square boolean adjacency description.

    Raises :class:`EmptyGraph`, :class:`NotSimple` or :class:`NotConnected`
    when the description is not a nonempty connected simple graph.
    """
    adj = np.asarray(adjacency, dtype=bool)
    if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
        raise NotSimple(f"adjacency must be square, got shape {adj.shape}")
    n = adj.shape[0]
    if n == 0:
        raise EmptyGraph("graph has no vertices")
    if adj.diagonal().any():
        raise NotSimple("adjacency has a loop")
    if not np.array_equal(adj, adj.T):
        raise NotSimple("adjacency is not symmetric")
    edges = [(int(u), int(v)) for u, v in zip(*np.nonzero(np.triu(adj)))]
    g = Graph(n, edges, leaf_marks)
    _check_connected(g)
    if any(not 0 <= v < n for v in g.leaf_marks):
        raise ParameterError(f"leaf marks {leaf_marks} out of range for {n} vertices")
    return g


def graph_from_edges(n, edges, leaf_marks=()) -> Graph:
    """Build and validate a graph from an explicit edge list."""
    if n <= 0:
        raise EmptyGraph("graph has no vertices")
    seen = set()
    for u, v in edges:
        if u == v:
            raise NotSimple(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise NotSimple(f"edge ({u}, {v}) out of range for {n} vertices")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise NotSimple(f"repeated edge {key}")
        seen.add(key)
    g = Graph(n, seen, leaf_marks)
    _check_connected(g)
    if any(not 0 <= v < n for v in g.leaf_marks):
        raise ParameterError(f"leaf marks {leaf_marks} out of range for {n} vertices")
    return g


def _check_connected(g: Graph):
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.neighbors[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != g.n:
        raise NotConnected(f"only {len(seen)} of {g.n} vertices reachable from 0")


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """All-pairs shortest-path distances by breadth-first search."""
    if g.n == 1:
        dist = np.zeros((1, 1), dtype=np.int64)
    else:
        dist = shortest_path(g.adjacency, method="D", unweighted=True)
        dist = dist.astype(np.int64)
    dist.setflags(write=False)
    return DistanceMatrix(dist=dist, diameter=int(dist.max()))


def ball(g: Graph, dm: DistanceMatrix, v: int, r: int) -> frozenset:
    """The closed ball of radius ``r`` around ``v``, as a vertex set."""
    if not 0 <= v < g.n:
        raise ParameterError(f"center {v} out of range")
    if r < 0:
        raise ParameterError(f"radius must be nonnegative, got {r}")
    return frozenset(int(w) for w in np.flatnonzero(dm.dist[v] <= r))


def bipartition(g: Graph) -> Bipartition:
    """2-colour the graph, or raise :class:`NotBipartite` with an odd closed walk.

    The witness walk is assembled from the BFS-tree root paths of the two
    endpoints of an offending edge; its length is odd by the colour clash.
    """
    color = [0] * g.n
    parent = [-1] * g.n
    color[0] = 1
    queue = [0]
    while queue:
        next_queue = []
        for v in queue:
            for w in g.neighbors[v]:
                if color[w] == 0:
                    color[w] = 3 - color[v]
                    parent[w] = v
                    next_queue.append(w)
                elif color[w] == color[v]:
                    # v -> root along tree edges, root -> w along tree edges,
                    # then the offending edge w -> v closes the walk; the two
                    # depths have equal parity, so the length is odd.
                    walk = (
                        _root_path(parent, v)
                        + _root_path(parent, w)[::-1][1:]
                        + [v]
                    )
                    raise NotBipartite(walk)
        queue = next_queue
    return Bipartition(class_of=tuple(color))


def _root_path(parent, v):
    path = [v]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    return path


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, tuple[int, ...]]:
    """The subgraph induced on ``vertices``, relabelled ``0..k-1``.

    Returns the subgraph and the tuple mapping new labels back to the old
    ones.  The induced subgraph must itself be connected.
    """
    keep = sorted(set(int(v) for v in vertices))
    if any(not 0 <= v < g.n for v in keep):
        raise ParameterError(f"vertices {vertices} out of range")
    index = {v: i for i, v in enumerate(keep)}
    edges = [
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    ]
    return graph_from_edges(len(keep), edges), tuple(keep)


# ---------------------------------------------------------------------------
# Canonical forms (brute force, for small graphs only)
# ---------------------------------------------------------------------------

_CANON_LIMIT = 8
_perm_tables: dict[int, np.ndarray] = {}


def _edge_slots(n):
    return {pair: k for k, pair in enumerate(itertools.combinations(range(n), 2))}


def _perm_table(n):
    """Rows: for each vertex permutation, where every edge slot is sent."""
    if n not in _perm_tables:
        slots = _edge_slots(n)
        table = np.empty((len(list(itertools.permutations(range(n)))), len(slots)), dtype=np.intp)
        for p, perm in enumerate(itertools.permutations(range(n))):
            for (i, j), k in slots.items():
                a, b = perm[i], perm[j]
                table[p, slots[(min(a, b), max(a, b))]] = k
        _perm_tables[n] = table
    return _perm_tables[n]


def canonical_form(g: Graph) -> tuple[int, int]:
    """An isomorphism-invariant key: minimum edge bitmask over all relabelings.

    Brute-force over all vertex permutations, so it is restricted to graphs
    with at most 8 vertices.  Two graphs are isomorphic exactly when their
    canonical forms are equal.
    """
    if g.n > _CANON_LIMIT:
        raise ParameterError(
            f"canonical_form supports at most {_CANON_LIMIT} vertices, got {g.n}"
        )
    slots = _edge_slots(g.n)
    bits = np.zeros(len(slots), dtype=np.uint64)
    for e in g.edges:
        bits[slots[e]] = 1
    weights = np.left_shift(
        np.uint64(1), np.arange(len(slots) - 1, -1, -1, dtype=np.uint64)
    )
    if len(slots) == 0:
        return (g.n, 0)
    values = bits[_perm_table(g.n)] @ weights
    return (g.n, int(values.min()))


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------


def path_graph(n: int) -> Graph:
    """The path on vertices ``0..n-1``."""
    if n < 1:
        raise InvalidSize(f"path needs at least 1 vertex, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    """The cycle on vertices ``0..n-1``."""
    if n < 3:
        raise InvalidSize(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    """The complete graph on ``n`` vertices."""
    if n < 1:
        raise InvalidSize(f"complete graph needs at least 1 vertex, got {n}")
    return Graph(n, itertools.combinations(range(n), 2))


def hyperoctahedron(d: int) -> Graph:
    """K_{2d} minus the perfect matching pairing vertex 2i with 2i+1."""
    if d < 2:
        raise InvalidSize(f"hyperoctahedron needs d >= 2, got {d}")
    edges = [
        (u, v)
        for u, v in itertools.combinations(range(2 * d), 2)
        if not (u // 2 == v // 2)
    ]
    return Graph(2 * d, edges)


def star_tree(ray_lengths) -> Graph:
    """A tree of walks: ``k`` rays of the given lengths glued at a center.

    The center is vertex 0; ray ``i`` continues with consecutively numbered
    vertices, and its far end is recorded in ``leaf_marks``.
    """
    rays = tuple(int(r) for r in ray_lengths)
    if len(rays) < 1:
        raise InvalidSize("star tree needs at least one ray")
    if any(r < 1 for r in rays):
        raise InvalidSize(f"ray lengths must be positive, got {rays}")
    edges = []
    marks = []
    nxt = 1
    for r in rays:
        prev = 0
        for _ in range(r):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        marks.append(prev)
    return Graph(nxt, edges, leaf_marks=marks)


def strong_product(g: Graph, h: Graph) -> Graph:
    """The strong product; vertex ``(a, b)`` gets index ``a * h.n + b``."""
    edges = []
    for (a, b), (c, d) in itertools.combinations(
        itertools.product(range(g.n), range(h.n)), 2
    ):
        g_adj = g.adjacency[a, c]
        h_adj = h.adjacency[b, d]
        if (a == c and h_adj) or (g_adj and b == d) or (g_adj and h_adj):
            edges.append((a * h.n + b, c * h.n + d))
    return Graph(g.n * h.n, edges)


def tensor_product(g: Graph, h: Graph) -> list[Graph]:
    """Connected components of the tensor product, each relabelled from 0.

    ``(a, b)`` is adjacent to ``(c, d)`` exactly when ``a ~ c`` and ``b ~ d``;
    the product of connected graphs need not be connected (it never is for
    two bipartite factors with an edge each), so components are returned
    ordered by their smallest pair index.
    """
    size = g.n * h.n
    pairs = [(a, b) for a in range(g.n) for b in range(h.n)]
    adj = {i: [] for i in range(size)}
    for (a, b), (c, d) in itertools.combinations(pairs, 2):
        if g.adjacency[a, c] and h.adjacency[b, d]:
            i, j = a * h.n + b, c * h.n + d
            adj[i].append(j)
            adj[j].append(i)
    unseen = set(range(size))
    components = []
    while unseen:
        root = min(unseen)
        comp = {root}
        stack = [root]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        unseen -= comp
        order = sorted(comp)
        index = {v: i for i, v in enumerate(order)}
        comp_edges = [
            (index[v], index[w]) for v in order for w in adj[v] if v < w
        ]
        components.append(Graph(len(order), comp_edges))
    return components


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------


def graph_to_text(g: Graph) -> str:
    lines = [f"graph {g.n}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    lines.extend(f"leaf {v}" for v in g.leaf_marks)
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> Graph:
    n = None
    edges = []
    marks = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0] == "graph" and len(parts) == 2 and n is None:
                n = int(parts[1])
            elif parts[0] == "e" and len(parts) == 3 and n is not None:
                edges.append((int(parts[1]), int(parts[2])))
            elif parts[0] == "leaf" and len(parts) == 2 and n is not None:
                marks.append(int(parts[1]))
            else:
                raise ValueError
        except ValueError:
            raise FormatError(f"line {lineno}: cannot parse {raw!r}") from None
    if n is None:
        raise FormatError("missing 'graph <n>' header")
    try:
        return graph_from_edges(n, edges, leaf_marks=marks)
    except InvalidSize as exc:  # pragma: no cover - defensive
        raise FormatError(str(exc)) from exc
