"""Brute-force reference implementations used only by the tests.

Nothing here calls the library's enumeration or ball code: representations
come from scanning every binary matrix, balls from applying every pattern.
"""

import itertools


def all_matrices(M, n):
    for bits in range(2 ** (M * n)):
        yield tuple(tuple((bits >> (i * n + j)) & 1 for j in range(n)) for i in range(M))


def representations(x, M):
    n = len(x)
    return [X for X in all_matrices(M, n)
            if all(sum(X[i][j] for i in range(M)) == x[j] for j in range(n))]


def substitution_ball(x, M, t):
    """Outputs of at most t substitutions (flip sets of size <= t)."""
    n = len(x)
    out = set()
    for X in representations(x, M):
        cells = [(i, j) for i in range(M) for j in range(n)]
        for k in range(t + 1):
            for flips in itertools.combinations(cells, k):
                R = [list(r) for r in X]
                for i, j in flips:
                    R[i][j] = 1 - R[i][j]
                out.add(tuple(map(tuple, R)))
    return out


def loss_ball(x, M, t):
    out = set()
    for X in representations(x, M):
        for k in range(min(t, M) + 1):
            for lost in itertools.combinations(range(M), k):
                out.add(tuple(r for i, r in enumerate(X) if i not in lost))
    return out


def single_deletion_ball(x, M):
    out = set()
    for X in representations(x, M):
        for i in range(M):
            for j in range(len(x)):
                row = X[i][:j] + X[i][j + 1:]
                out.add(X[:i] + (row,) + X[i + 1:])
    return out


def single_insertion_ball(x, M):
    out = set()
    for X in representations(x, M):
        for i in range(M):
            for j in range(len(x) + 1):
                for s in (0, 1):
                    row = X[i][:j] + (s,) + X[i][j:]
                    out.add(X[:i] + (row,) + X[i + 1:])
    return out


def binary_deletion_code_max(n):
    """Largest binary single-deletion code by trying subsets, largest first."""
    words = list(itertools.product((0, 1), repeat=n))

    def ball(w):
        return {w[:j] + w[j + 1:] for j in range(n)}

    balls = [ball(w) for w in words]
    for size in range(len(words), 0, -1):
        for S in itertools.combinations(range(len(words)), size):
            if all(balls[a].isdisjoint(balls[b]) for a, b in itertools.combinations(S, 2)):
                return size
    return 0
