# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel for the ball-family intersection search.

Word-packed twin of :mod:`hellyext._hellypure` for the ``m == 2`` case (the
hot path); see that module for the algorithm.  Vertex sets arrive as rows of
64-bit words, and the search itself runs without touching Python objects.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef struct SearchCtx:
    unsigned long long *balls      # nballs x vw words
    unsigned long long *suffix     # (nballs + 1) x vw words
    unsigned long long *pairs      # nballs x bw words
    unsigned long long *inter_stack  # (n + 2) x vw words
    unsigned long long *cand_stack   # (n + 2) x bw words
    int *support
    int nballs
    int vw
    int bw
    int found_len


cdef int _dfs(SearchCtx *ctx, int slots, int last, int klen, int depth):
    cdef unsigned long long *inter = ctx.inter_stack + depth * ctx.vw
    cdef unsigned long long *cand = ctx.cand_stack + depth * ctx.bw
    cdef unsigned long long *inter2 = ctx.inter_stack + (depth + 1) * ctx.vw
    cdef unsigned long long *cand2 = ctx.cand_stack + (depth + 1) * ctx.bw
    cdef unsigned long long *suf = ctx.suffix + (last + 1) * ctx.vw
    cdef unsigned long long acc = 0, mword, low
    cdef int w, c, cw, start, empty

    # Some vertex of the running intersection survives every eligible ball:
    # nothing below can be a violation.
    for w in range(ctx.vw):
        acc |= inter[w] & suf[w]
    if acc != 0:
        return 0
    if slots == 0:
        return 0

    if klen > 0:
        # Repeat the last chosen ball (lexicographically next completion).
        memcpy(inter2, inter, ctx.vw * sizeof(unsigned long long))
        memcpy(cand2, cand, ctx.bw * sizeof(unsigned long long))
        if _dfs(ctx, slots - 1, last, klen, depth + 1):
            return 1

    start = last + 1
    cw = start >> 6
    while cw < ctx.bw:
        mword = cand[cw]
        if cw == (start >> 6):
            mword &= (<unsigned long long>0xFFFFFFFFFFFFFFFF) << (start & 63)
        while mword:
            low = mword & (0 - mword)
            c = (cw << 6) + __builtin_ctzll(low)
            mword ^= low
            empty = 1
            for w in range(ctx.vw):
                inter2[w] = inter[w] & ctx.balls[c * ctx.vw + w]
                if inter2[w]:
                    empty = 0
            if empty:
                if klen + 1 > 2:
                    ctx.support[klen] = c
                    ctx.found_len = klen + 1
                    return 1
                continue
            ctx.support[klen] = c
            for w in range(ctx.bw):
                cand2[w] = cand[w] & ctx.pairs[c * ctx.bw + w]
            if _dfs(ctx, slots - 1, c, klen + 1, depth + 1):
                return 1
        cw += 1
    return 0


def first_violation(balls, vertex_count, universe, int n, int m, pairs):
    """Word-packed entry point; ``m`` must be 2.

    ``balls``: C-contiguous uint64 array of shape (nballs, vw);
    ``universe``: uint64 array of shape (vw,);
    ``pairs``: C-contiguous uint64 array of shape (nballs, bw).
    Returns the ascending list of distinct ball indices of the first
    violating collection, or ``None``.
    """
    if m != 2:
        raise ValueError("compiled kernel handles m == 2 only")
    cdef unsigned long long[:, ::1] balls_v = balls
    cdef unsigned long long[::1] universe_v = universe
    cdef unsigned long long[:, ::1] pairs_v = pairs
    cdef int nballs = balls_v.shape[0]
    cdef int vw = balls_v.shape[1]
    cdef int bw = pairs_v.shape[1]
    cdef int j, w, ok
    cdef unsigned long long nonzero
    if m >= n or nballs == 0:
        return None
    nonzero = 0
    for w in range(vw):
        nonzero |= universe_v[w]
    if nonzero == 0:
        return None

    cdef SearchCtx ctx
    ctx.nballs = nballs
    ctx.vw = vw
    ctx.bw = bw
    ctx.found_len = 0
    ctx.balls = <unsigned long long *>malloc(nballs * vw * sizeof(unsigned long long))
    ctx.suffix = <unsigned long long *>malloc((nballs + 1) * vw * sizeof(unsigned long long))
    ctx.pairs = <unsigned long long *>malloc(nballs * bw * sizeof(unsigned long long))
    ctx.inter_stack = <unsigned long long *>malloc((n + 2) * vw * sizeof(unsigned long long))
    ctx.cand_stack = <unsigned long long *>malloc((n + 2) * bw * sizeof(unsigned long long))
    ctx.support = <int *>malloc((n + 1) * sizeof(int))
    if (ctx.balls == NULL or ctx.suffix == NULL or ctx.pairs == NULL
            or ctx.inter_stack == NULL or ctx.cand_stack == NULL
            or ctx.support == NULL):
        _free_ctx(&ctx)
        raise MemoryError()

    try:
        for j in range(nballs):
            for w in range(vw):
                ctx.balls[j * vw + w] = balls_v[j, w]
            for w in range(bw):
                ctx.pairs[j * bw + w] = pairs_v[j, w]
        for w in range(vw):
            ctx.suffix[nballs * vw + w] = <unsigned long long>0xFFFFFFFFFFFFFFFF
        for j in range(nballs - 1, -1, -1):
            for w in range(vw):
                ctx.suffix[j * vw + w] = ctx.suffix[(j + 1) * vw + w] & ctx.balls[j * vw + w]
        for w in range(vw):
            ctx.inter_stack[w] = universe_v[w]
        for w in range(bw):
            ctx.cand_stack[w] = <unsigned long long>0xFFFFFFFFFFFFFFFF
        if nballs & 63:
            # clear the junk bits past the last ball index
            ctx.cand_stack[bw - 1] = (
                (<unsigned long long>1 << (nballs & 63)) - 1
            )
        ok = _dfs(&ctx, n, -1, 0, 0)
        if not ok:
            return None
        return [ctx.support[j] for j in range(ctx.found_len)]
    finally:
        _free_ctx(&ctx)


cdef void _free_ctx(SearchCtx *ctx):
    free(ctx.balls)
    free(ctx.suffix)
    free(ctx.pairs)
    free(ctx.inter_stack)
    free(ctx.cand_stack)
    free(ctx.support)
