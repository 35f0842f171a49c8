"""Ball-intersection (Helly) properties of finite connected graphs.

A graph is (n, m)-Helly when every collection of n closed balls of radius
at least 1 in which each m-subcollection has a common vertex has a common
vertex overall.  Three variants are exposed:

* :func:`helly_check` - the plain property;
* :func:`bipartite_helly_check` - intersections restricted to one partite
  class at a time (both classes must pass);
* :func:`t_helly_check` - radii restricted to positive multiples of ``t``
  with ``n = 2d`` and ``m = 2``.

Radii are enumerated only up to the diameter: any larger ball equals the
whole vertex set, and dropping such balls from a collection changes neither
the hypothesis nor the conclusion.  Collections are enumerated as
nondecreasing tuples of balls ordered by (center, radius) - an odometer over
the n slots - and a failed check reports the first violating collection in
that order, deduplicated to its distinct balls, so certificates are
reproducible.

Two interchangeable search backends exist: a compiled kernel (built from
``_hellycore.pyx``) and a pure-Python one.  The compiled kernel is selected
at import time when available and handles the pairwise case ``m == 2``; the
pure kernel covers everything else.  Set ``HELLYEXT_BACKEND=pure`` or
``=compiled`` to force a choice.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from . import _hellypure
from .errors import FormatError, NotAViolation, ParameterError
from .graphs import Graph, bipartition

try:
    from . import _hellycore
except ImportError:  # pragma: no cover - depends on the build environment
    _hellycore = None

__all__ = [
    "Ball",
    "HellyViolation",
    "helly_check",
    "bipartite_helly_check",
    "t_helly_check",
    "verify_violation",
    "violation_to_text",
    "violation_from_text",
    "available_backends",
    "default_backend",
]


@dataclass(frozen=True, order=True)
class Ball:
    """A closed ball given by center vertex and radius."""

    center: int
    radius: int


@dataclass(frozen=True)
class HellyViolation:
    """A certificate: balls whose m-subcollections meet but whose whole
    collection does not.

    ``mode`` is ``"plain"``, ``"bipartite"`` (with ``partite_class`` 1 or 2)
    or ``"scaled"`` (with the radius step ``t``).
    """

    balls: tuple[Ball, ...]
    mode: str = "plain"
    partite_class: int | None = None
    t: int | None = None


def available_backends() -> tuple[str, ...]:
    if _hellycore is not None:
        return ("compiled", "pure")
    return ("pure",)


def default_backend() -> str:
    forced = os.environ.get("HELLYEXT_BACKEND")
    if forced is not None:
        if forced not in ("pure", "compiled"):
            raise ParameterError(f"HELLYEXT_BACKEND={forced!r} is not a backend")
        if forced == "compiled" and _hellycore is None:
            raise ParameterError("HELLYEXT_BACKEND=compiled but no compiled kernel")
        return forced
    return "compiled" if _hellycore is not None else "pure"


def _ball_bitset(dist_row, radius, class_mask):
    bits = 0
    for v in np.flatnonzero(dist_row <= radius):
        bits |= 1 << int(v)
    return bits & class_mask


def _pack_words(value: int, words: int) -> list[int]:
    mask = (1 << 64) - 1
    return [(value >> (64 * w)) & mask for w in range(words)]


def _run_search(ball_bits, vertex_count, universe, n, m, backend):
    if backend is None:
        backend = default_backend()
    if backend not in ("pure", "compiled"):
        raise ParameterError(f"unknown backend {backend!r}")
    if backend == "compiled" and _hellycore is None:
        raise ParameterError("compiled kernel is not available")
    nballs = len(ball_bits)
    if m == 2:
        pair_bits = []
        for i in range(nballs):
            row = 0
            for j in range(nballs):
                if ball_bits[i] & ball_bits[j]:
                    row |= 1 << j
            pair_bits.append(row)
    else:
        pair_bits = None
    if backend == "compiled" and m == 2:
        vw = max(1, (vertex_count + 63) // 64)
        bw = max(1, (nballs + 63) // 64)
        balls_arr = np.array(
            [_pack_words(b, vw) for b in ball_bits], dtype=np.uint64
        ).reshape(nballs, vw)
        pairs_arr = np.array(
            [_pack_words(p, bw) for p in pair_bits], dtype=np.uint64
        ).reshape(nballs, bw)
        universe_arr = np.array(_pack_words(universe, vw), dtype=np.uint64)
        return _hellycore.first_violation(
            np.ascontiguousarray(balls_arr),
            vertex_count,
            universe_arr,
            n,
            m,
            np.ascontiguousarray(pairs_arr),
        )
    return _hellypure.first_violation(
        ball_bits, vertex_count, universe, n, m, pair_bits
    )


def _check_params(n, m):
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    if m < 1:
        raise ParameterError(f"m must be >= 1, got {m}")
    if m > n:
        raise ParameterError(f"m must be <= n, got m={m}, n={n}")


def _balls_in_order(g: Graph, radii) -> list[Ball]:
    return [Ball(center, r) for center in range(g.n) for r in radii]


def helly_check(g: Graph, n: int, m: int, backend: str | None = None):
    """``True`` or the first violating collection of ``n`` balls.

    With ``m == n`` the hypothesis contains the conclusion and the check is
    vacuously true; violations require more than ``m`` distinct balls.
    """
    _check_params(n, m)
    dm = g.distances()
    radii = range(1, dm.diameter + 1)
    balls = _balls_in_order(g, radii)
    bits = [_ball_bitset(dm.dist[b.center], b.radius, (1 << g.n) - 1) for b in balls]
    found = _run_search(bits, g.n, (1 << g.n) - 1, n, m, backend)
    if found is None:
        return True
    return HellyViolation(balls=tuple(balls[i] for i in found), mode="plain")


def bipartite_helly_check(g: Graph, n: int, m: int, backend: str | None = None):
    """The class-restricted variant; checks both partite classes.

    Raises :class:`NotBipartite` for non-bipartite graphs.  A violation
    names the class its intersections were restricted to.
    """
    _check_params(n, m)
    bip = bipartition(g)
    dm = g.distances()
    radii = range(1, dm.diameter + 1)
    balls = _balls_in_order(g, radii)
    for k in (1, 2):
        class_mask = 0
        for v in bip.side(k):
            class_mask |= 1 << v
        bits = [_ball_bitset(dm.dist[b.center], b.radius, class_mask) for b in balls]
        found = _run_search(bits, g.n, class_mask, n, m, backend)
        if found is not None:
            return HellyViolation(
                balls=tuple(balls[i] for i in found),
                mode="bipartite",
                partite_class=k,
            )
    return True


def t_helly_check(g: Graph, d: int, t: int, backend: str | None = None):
    """The scaled variant: 2d balls, pairwise hypothesis, radii in t, 2t, ...

    With ``t == 1`` this coincides with ``helly_check(g, 2 * d, 2)``,
    certificate included.
    """
    if d < 1:
        raise ParameterError(f"d must be >= 1, got {d}")
    if t < 1:
        raise ParameterError(f"t must be >= 1, got {t}")
    dm = g.distances()
    radii = range(t, dm.diameter + 1, t)
    balls = _balls_in_order(g, radii)
    bits = [_ball_bitset(dm.dist[b.center], b.radius, (1 << g.n) - 1) for b in balls]
    found = _run_search(bits, g.n, (1 << g.n) - 1, 2 * d, 2, backend)
    if found is None:
        return True
    return HellyViolation(balls=tuple(balls[i] for i in found), mode="scaled", t=t)


def verify_violation(g: Graph, violation: HellyViolation, m: int = 2) -> bool:
    """Re-check a certificate from scratch; raise :class:`NotAViolation` if bogus.

    Confirms radii are positive (and multiples of ``t`` in scaled mode),
    that every ``m``-subcollection of the distinct balls has a common vertex
    in the relevant class, and that the whole collection has none.  Returns
    True so callers can assert on it directly.
    """
    if violation.mode not in ("plain", "bipartite", "scaled"):
        raise NotAViolation(f"unknown mode {violation.mode!r}")
    if not violation.balls:
        raise NotAViolation("certificate has no balls")
    if violation.mode == "bipartite":
        bip = bipartition(g)
        if violation.partite_class in (1, 2):
            classes = [bip.side(violation.partite_class)]
        else:
            # serialized certificates do not record the class; accept either
            classes = [bip.side(1), bip.side(2)]
    else:
        classes = [frozenset(range(g.n))]
    err = None
    for cls in classes:
        try:
            _verify_in_class(g, violation, m, cls)
            return True
        except NotAViolation as exc:
            if err is None:
                err = exc
    raise err


def _verify_in_class(g: Graph, violation: HellyViolation, m: int, cls) -> None:
    import itertools

    dm = g.distances()
    sets = []
    for b in violation.balls:
        if not 0 <= b.center < g.n:
            raise NotAViolation(f"center {b.center} out of range")
        if b.radius < 1:
            raise NotAViolation(f"radius {b.radius} not positive")
        if violation.mode == "scaled" and (
            violation.t is None or b.radius % violation.t != 0
        ):
            raise NotAViolation(f"radius {b.radius} not a multiple of t")
        sets.append(
            frozenset(int(v) for v in np.flatnonzero(dm.dist[b.center] <= b.radius))
            & cls
        )
    if len(set(sets)) < len(sets):
        # distinct (center, radius) pairs with equal vertex sets never need
        # to appear together in a first certificate
        raise NotAViolation("certificate repeats a ball vertex set")
    for sub in itertools.combinations(sets, min(m, len(sets))):
        common = sub[0]
        for s in sub[1:]:
            common = common & s
        if not common:
            raise NotAViolation("an m-subcollection has empty intersection")
    common = sets[0]
    for s in sets[1:]:
        common = common & s
    if common:
        raise NotAViolation("the whole collection has a common vertex")


def violation_to_text(v: HellyViolation) -> str:
    lines = [f"ball {b.center} {b.radius}" for b in v.balls]
    if v.mode == "scaled":
        lines.append(f"mode scaled t={v.t}")
    else:
        lines.append(f"mode {v.mode}")
    return "\n".join(lines) + "\n"


def violation_from_text(text: str) -> HellyViolation:
    balls = []
    mode = None
    t = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0] == "ball" and len(parts) == 3:
                balls.append(Ball(int(parts[1]), int(parts[2])))
            elif parts[0] == "mode" and len(parts) == 2 and parts[1] in (
                "plain",
                "bipartite",
            ):
                mode = parts[1]
            elif (
                parts[0] == "mode"
                and len(parts) == 3
                and parts[1] == "scaled"
                and parts[2].startswith("t=")
            ):
                mode = "scaled"
                t = int(parts[2][2:])
            else:
                raise ValueError
        except ValueError:
            raise FormatError(f"line {lineno}: cannot parse {raw!r}") from None
    if mode is None:
        raise FormatError("missing 'mode' line")
    return HellyViolation(balls=tuple(balls), mode=mode, t=t)
