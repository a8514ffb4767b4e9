import itertools
import random

import pytest

from whitneyprod.graphs import Graph, NAMED_CORPUS, graph_from_edges, named


def corpus_graphs():
    return [(f"{name}{list(params)}", named(name, list(params)))
            for name, params in NAMED_CORPUS]


def brute_f_vector(g: Graph):
    """Independent oracle: count complete subgraphs by subset scan."""
    counts = []
    for k in range(1, g.n + 1):
        c = sum(1 for s in itertools.combinations(range(g.n), k)
                if g.is_complete(s))
        if c == 0:
            break
        counts.append(c)
    return tuple(counts)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labeled tree from a Prufer sequence."""
    rng = random.Random(seed)
    if n == 1:
        return graph_from_edges(1, [])
    if n == 2:
        return graph_from_edges(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    edges = []
    for x in seq:
        leaf = min(i for i in range(n) if deg[i] == 1)
        edges.append((min(leaf, x), max(leaf, x)))
        deg[leaf] -= 1
        deg[x] -= 1
    u, v = [i for i in range(n) if deg[i] == 1]
    edges.append((u, v))
    return graph_from_edges(n, edges)


@pytest.fixture(scope="session")
def corpus():
    return corpus_graphs()
