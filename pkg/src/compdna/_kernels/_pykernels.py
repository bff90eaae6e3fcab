"""Pure-Python kernels; the compiled module mirrors these signatures exactly."""


def max_clique(adj, initial=(), max_nodes=0):
    """Maximum clique by bitset branch and bound with greedy-colouring bounds.

    ``adj[v]`` is the neighbour bitset of vertex ``v``; lower vertex indices
    are coloured first, so callers should pass vertices sorted by decreasing
    degree.  ``initial`` seeds the incumbent.  With ``max_nodes > 0`` the
    search stops after that many expansions.

    Returns ``(clique, complete, nodes)`` where ``complete`` is false if the
    node budget ran out before optimality was proven.
    """
    n = len(adj)
    best = list(initial)
    nodes = 0
    stopped = False
    current = []

    def expand(P):
        nonlocal best, nodes, stopped
        nodes += 1
        if max_nodes and nodes > max_nodes:
            stopped = True
            return
        order = []
        bounds = []
        U = P
        colour = 0
        while U:
            colour += 1
            Q = U
            while Q:
                low = Q & -Q
                v = low.bit_length() - 1
                Q &= ~low & ~adj[v]
                U &= ~low
                order.append(v)
                bounds.append(colour)
        for i in range(len(order) - 1, -1, -1):
            if len(current) + bounds[i] <= len(best) or stopped:
                return
            v = order[i]
            current.append(v)
            NP = P & adj[v]
            if NP:
                expand(NP)
            elif len(current) > len(best):
                best = current[:]
            current.pop()
            P &= ~(1 << v)

    if n:
        expand((1 << n) - 1)
    return sorted(best), not stopped, nodes


def deletion_ball(word, length, t):
    """All subsequences of a binary word left after exactly ``t`` deletions.

    Words are ints with bit ``i`` holding position ``i``; results are tagged
    with a leading one at bit ``length - t`` so different lengths never clash.
    """
    frontier = {word}
    for k in range(length, length - t, -1):
        nxt = set()
        for w in frontier:
            for j in range(k):
                nxt.add((w & ((1 << j) - 1)) | ((w >> (j + 1)) << j))
        frontier = nxt
    tag = 1 << (length - t)
    return {w | tag for w in frontier}
