# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same signatures and results as ``_pykernels``."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc
from libc.string cimport memcpy


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef struct Search:
    int n
    int W
    uint64_t* adj
    int* current
    int depth
    int* best
    int best_size
    long long nodes
    long long max_nodes
    bint stopped


cdef inline bint is_empty(const uint64_t* s, int W) noexcept nogil:
    cdef int w
    for w in range(W):
        if s[w]:
            return False
    return True


cdef inline int first_bit(const uint64_t* s, int W) noexcept nogil:
    cdef int w
    for w in range(W):
        if s[w]:
            return w * 64 + __builtin_ctzll(s[w])
    return -1


cdef int expand(Search* S, uint64_t* P) noexcept nogil:
    cdef int W = S.W
    cdef int n = S.n
    cdef int i, k, v, w, colour
    cdef uint64_t* U
    cdef uint64_t* Q
    cdef uint64_t* NP
    cdef uint64_t* nb
    cdef int* order
    cdef int* bounds

    S.nodes += 1
    if S.max_nodes > 0 and S.nodes > S.max_nodes:
        S.stopped = True
        return 0

    U = <uint64_t*> malloc(3 * W * sizeof(uint64_t))
    order = <int*> malloc(2 * n * sizeof(int))
    if U == NULL or order == NULL:
        free(U)
        free(order)
        return -1
    Q = U + W
    NP = U + 2 * W
    bounds = order + n

    memcpy(U, P, W * sizeof(uint64_t))
    k = 0
    colour = 0
    while not is_empty(U, W):
        colour += 1
        memcpy(Q, U, W * sizeof(uint64_t))
        while True:
            v = first_bit(Q, W)
            if v < 0:
                break
            nb = S.adj + v * W
            for w in range(W):
                Q[w] &= ~nb[w]
            Q[v >> 6] &= ~((<uint64_t> 1) << (v & 63))
            U[v >> 6] &= ~((<uint64_t> 1) << (v & 63))
            order[k] = v
            bounds[k] = colour
            k += 1

    for i in range(k - 1, -1, -1):
        if S.stopped or S.depth + bounds[i] <= S.best_size:
            break
        v = order[i]
        S.current[S.depth] = v
        S.depth += 1
        nb = S.adj + v * W
        for w in range(W):
            NP[w] = P[w] & nb[w]
        if not is_empty(NP, W):
            if expand(S, NP) < 0:
                free(U)
                free(order)
                return -1
        elif S.depth > S.best_size:
            S.best_size = S.depth
            memcpy(S.best, S.current, S.depth * sizeof(int))
        S.depth -= 1
        P[v >> 6] &= ~((<uint64_t> 1) << (v & 63))

    free(U)
    free(order)
    return 0


def max_clique(adj, initial=(), long long max_nodes=0):
    cdef int n = len(adj)
    cdef int W = (n + 63) // 64 if n else 1
    cdef Search S
    cdef uint64_t* P
    cdef int v, w, rc
    cdef bytes raw
    cdef const unsigned char* buf

    if n == 0:
        return sorted(initial), True, 0

    S.n = n
    S.W = W
    S.adj = <uint64_t*> malloc(n * W * sizeof(uint64_t))
    S.current = <int*> malloc(n * sizeof(int))
    S.best = <int*> malloc(n * sizeof(int))
    P = <uint64_t*> malloc(W * sizeof(uint64_t))
    if S.adj == NULL or S.current == NULL or S.best == NULL or P == NULL:
        free(S.adj); free(S.current); free(S.best); free(P)
        raise MemoryError()
    try:
        for v in range(n):
            raw = int(adj[v]).to_bytes(W * 8, "little")
            buf = raw
            for w in range(W):
                S.adj[v * W + w] = (<uint64_t*> (buf + 8 * w))[0]
        init = list(initial)
        S.best_size = len(init)
        for v in range(S.best_size):
            S.best[v] = init[v]
        S.depth = 0
        S.nodes = 0
        S.max_nodes = max_nodes
        S.stopped = False
        for w in range(W):
            P[w] = <uint64_t> 0
        for v in range(n):
            P[v >> 6] |= (<uint64_t> 1) << (v & 63)
        with nogil:
            rc = expand(&S, P)
        if rc < 0:
            raise MemoryError()
        clique = sorted(S.best[v] for v in range(S.best_size))
        return clique, not S.stopped, S.nodes
    finally:
        free(S.adj); free(S.current); free(S.best); free(P)


def deletion_ball(unsigned long long word, int length, int t):
    cdef set frontier = {word}
    cdef set nxt
    cdef int k, j
    cdef unsigned long long w
    if length > 63:
        raise OverflowError("compiled deletion_ball handles words up to 63 bits")
    for k in range(length, length - t, -1):
        nxt = set()
        for obj in frontier:
            w = obj
            for j in range(k):
                nxt.add((w & (((<unsigned long long> 1) << j) - 1)) | ((w >> (j + 1)) << j))
        frontier = nxt
    cdef unsigned long long tag = (<unsigned long long> 1) << (length - t)
    return {(<unsigned long long> w2) | tag for w2 in frontier}
