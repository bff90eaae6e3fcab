"""Time the compiled kernels against the pure-Python fallback.

Usage::

    python benchmarks/bench_kernels.py [--n 7] [--repeat 3]

The clique benchmark solves the maximum single-deletion code problem for
binary words of length ``n``; the deletion-ball benchmark expands every word
of length ``2n`` under two deletions.
"""

import argparse
import time

from compdna import _kernels
from compdna.analysis import binary_deletion_graph, maximum_independent_set


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=7, help="binary word length for the clique search")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    backends = [("python", _kernels.python)]
    if _kernels.compiled is not None:
        backends.append(("cython", _kernels.compiled))
    else:
        print("compiled kernels not built; timing the fallback only")

    adj = binary_deletion_graph(args.n, 1)
    words = 2 * args.n
    print(f"{'kernel':<28}{'backend':<10}{'seconds':>10}  result")
    for name, mod in backends:
        secs, (mis, complete) = best_of(args.repeat, lambda: maximum_independent_set(adj, backend=mod))
        print(f"{'max independent set n=' + str(args.n):<28}{name:<10}{secs:>10.4f}  size {len(mis)}")
    for name, mod in backends:
        secs, total = best_of(args.repeat, lambda: sum(len(mod.deletion_ball(w, words, 2))
                                                       for w in range(2**words)))
        print(f"{'deletion balls len=' + str(words) + ' t=2':<28}{name:<10}{secs:>10.4f}  {total} outputs")


if __name__ == "__main__":
    main()
