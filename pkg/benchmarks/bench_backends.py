"""Compare the compiled and pure Helly search kernels.

Times helly_check on a mix of holding and violating instances with both
backends and prints a per-instance table plus the overall speedup.

Usage: python benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import random
import time

from hellyext import available_backends, graphs, helly


def random_connected_graph(k, rng, extra):
    edges = set()
    verts = list(range(k))
    rng.shuffle(verts)
    for i in range(1, k):
        edges.add(tuple(sorted((verts[i], verts[rng.randrange(i)]))))
    for u in range(k):
        for v in range(u + 1, k):
            if rng.random() < extra:
                edges.add((u, v))
    return graphs.graph_from_edges(k, sorted(edges))


def instances():
    rng = random.Random(0)
    yield "O_3 (6,2)", graphs.hyperoctahedron(3), 6, 2
    yield "C_9 (4,2)", graphs.cycle_graph(9), 4, 2
    yield "P_4 x P_4 strong (4,2)", graphs.strong_product(
        graphs.path_graph(4), graphs.path_graph(4)
    ), 4, 2
    yield "random tree 16 (4,2)", random_connected_graph(16, rng, 0.0), 4, 2
    yield "random tree 10 (5,2)", random_connected_graph(10, rng, 0.0), 5, 2
    yield "random graph 40 p=.05 (4,2)", random_connected_graph(40, rng, 0.05), 4, 2


def best_time(g, n, m, backend, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = helly.helly_check(g, n, m, backend=backend)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = available_backends()
    if "compiled" not in backends:
        print("compiled backend unavailable; nothing to compare")
        return

    print(f"{'instance':<30} {'pure':>10} {'compiled':>10} {'speedup':>8}  result")
    tot_pure = tot_comp = 0.0
    for name, g, n, m in instances():
        t_pure, r_pure = best_time(g, n, m, "pure", args.repeat)
        t_comp, r_comp = best_time(g, n, m, "compiled", args.repeat)
        assert (r_pure is True) == (r_comp is True)
        assert r_pure is True or r_pure.balls == r_comp.balls
        tot_pure += t_pure
        tot_comp += t_comp
        verdict = "holds" if r_pure is True else "violation"
        print(
            f"{name:<30} {t_pure * 1e3:>8.2f}ms {t_comp * 1e3:>8.2f}ms "
            f"{t_pure / t_comp:>7.1f}x  {verdict}"
        )
    print(f"{'total':<30} {tot_pure * 1e3:>8.2f}ms {tot_comp * 1e3:>8.2f}ms "
          f"{tot_pure / tot_comp:>7.1f}x")


if __name__ == "__main__":
    main()
