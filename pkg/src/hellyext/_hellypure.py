"""Pure-Python kernel for the ball-family intersection search.

Vertex sets are Python ints used as bitsets.  The compiled kernel in
``_hellycore`` implements the same search over packed 64-bit words; the two
must return identical results (asserted by tests), and either can serve as
the backend for the checks in :mod:`hellyext.helly`.

The search enumerates collections of ``n`` balls as nondecreasing tuples of
ball indices, in lexicographic order (an odometer over the ``n`` slots, so
repeated balls are covered).  A collection is a violation when every
``m``-subcollection has a common vertex but the whole collection does not;
such a collection necessarily uses more than ``m`` distinct balls.  The
first violation is reported as its set of distinct ball indices, in
ascending order.

Two exact prunes keep the search polynomial in practice:

* a running intersection of the chosen balls is maintained, and a branch
  dies as soon as the hypothesis can no longer be met;
* if some vertex of the running intersection lies in every ball that is
  still eligible (a precomputed suffix intersection), no completion of the
  branch can empty the intersection, so the branch is skipped.
"""

from __future__ import annotations

import itertools

__all__ = ["first_violation"]


def first_violation(ball_bits, vertex_count, universe, n, m, pair_bits=None):
    """Find the first violating ball collection, or ``None`` if Helly holds.

    ``ball_bits[i]`` is the vertex bitset of ball ``i`` (already restricted
    to one partite class for bipartite checks); ``universe`` is the bitset
    the intersections live in.  ``pair_bits`` gives, for each ball, the
    bitset of balls it meets; it is required only when ``m == 2``.
    """
    nballs = len(ball_bits)
    if m >= n or nballs == 0 or universe == 0:
        return None
    full = (1 << vertex_count) - 1
    suffix = [full] * (nballs + 1)
    for j in range(nballs - 1, -1, -1):
        suffix[j] = suffix[j + 1] & ball_bits[j]

    use_pairs = m == 2 and pair_bits is not None
    support: list[int] = []

    def subset_meets(c):
        # Every (m-1)-subset of the support must meet ball c; for m == 1
        # this degenerates to "ball c is nonempty", as required.
        for tsub in itertools.combinations(support, m - 1):
            x = ball_bits[c]
            for t in tsub:
                x &= ball_bits[t]
            if x == 0:
                return False
        return True

    def dfs(slots, last, inter, cand):
        if inter & suffix[last + 1]:
            return None
        if slots == 0:
            return None
        if support:
            found = dfs(slots - 1, last, inter, cand)
            if found is not None:
                return found
        if use_pairs:
            mask = (cand >> (last + 1)) << (last + 1)
            while mask:
                low = mask & -mask
                c = low.bit_length() - 1
                mask ^= low
                inter2 = inter & ball_bits[c]
                if inter2 == 0:
                    if len(support) + 1 > m:
                        return support + [c]
                    continue
                support.append(c)
                found = dfs(slots - 1, c, inter2, cand & pair_bits[c])
                support.pop()
                if found is not None:
                    return found
        else:
            for c in range(last + 1, nballs):
                if not subset_meets(c):
                    continue
                inter2 = inter & ball_bits[c]
                if inter2 == 0:
                    if len(support) + 1 > m:
                        return support + [c]
                    continue
                support.append(c)
                found = dfs(slots - 1, c, inter2, 0)
                support.pop()
                if found is not None:
                    return found
        return None

    return dfs(n, -1, universe, (1 << nballs) - 1)
