import random

import pytest

from hellyext import graphs


def pytest_addoption(parser):
    parser.addoption(
        "--slow",
        action="store_true",
        default=False,
        help="also run the slow exhaustive sweeps",
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long exhaustive sweep, needs --slow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="needs --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def acceptance_log(request):
    lines = getattr(request.config, "_acceptance_lines", None)
    if lines is None:
        lines = request.config._acceptance_lines = []

    def record(number, ok, detail):
        line = f"criterion {number:02d}: {'PASS' if ok else 'FAIL'} ({detail})"
        lines.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)


def random_connected_graph(k, rng, extra=0.0):
    """Random spanning tree plus Bernoulli(extra) chords."""
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


def random_partial_values(points, target, rng, t=1, dist=None):
    """Greedy random t-Lipschitz assignment on the given domain points.

    dist(p, q) gives the domain metric; defaults to L1 on tuples.
    Returns None when the sampler corners itself, callers just retry.
    """
    if dist is None:
        def dist(p, q):
            return sum(abs(a - b) for a, b in zip(p, q))

    dm = target.distances()
    out = {}
    for p in rng.sample(list(points), len(points)):
        choices = [
            v
            for v in range(target.n)
            if all(int(dm.dist[v][w]) <= t * dist(p, q) for q, w in out.items())
        ]
        if not choices:
            return None
        out[p] = rng.choice(choices)
    return out


@pytest.fixture
def rng():
    return random.Random(0)
