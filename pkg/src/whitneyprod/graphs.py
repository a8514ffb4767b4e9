"""Finite simple graphs over integer vertex ids, with clique enumeration.

A Simplex is an ascending tuple of vertex indices spanning a complete
subgraph; the set of all simplices is the Whitney (clique) complex of the
graph.  All enumeration orders are lexicographic so outputs are
bit-reproducible.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

Simplex = tuple[int, ...]
FVector = tuple[int, ...]


@dataclass(frozen=True)
class Graph:
    """Immutable finite simple graph.

    Vertices are 0..n-1 with unique text labels; edges are stored as a
    frozenset of (i, j) pairs with i < j.
    """

    labels: tuple[str, ...]
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise ValueError("vertex labels must be unique")
        for i, j in self.edges:
            if not (0 <= i < j < n):
                raise ValueError(f"bad edge ({i},{j}) for {n} vertices")

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj = [set() for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return tuple(frozenset(s) for s in adj)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def has_edge(self, i: int, j: int) -> bool:
        if i > j:
            i, j = j, i
        return (i, j) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph; labels are preserved, indices compacted."""
        vs = sorted(set(vertices))
        pos = {v: k for k, v in enumerate(vs)}
        edges = frozenset(
            (pos[i], pos[j]) for i, j in self.edges if i in pos and j in pos
        )
        return Graph(tuple(self.labels[v] for v in vs), edges)

    def is_complete(self, vertices: Sequence[int]) -> bool:
        return all(
            self.has_edge(a, b) for a, b in itertools.combinations(vertices, 2)
        )


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]],
                     labels: Sequence[str] | None = None) -> Graph:
    if labels is None:
        labels = tuple(f"v{i}" for i in range(n))
    norm = frozenset((min(i, j), max(i, j)) for i, j in edges if i != j)
    return Graph(tuple(labels), norm)


EMPTY_GRAPH = Graph(())


# ---------------------------------------------------------------------------
# clique complex


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All maximal cliques, via Bron-Kerbosch with pivoting."""
    adj = g.adjacency
    out: list[tuple[int, ...]] = []

    def expand(r: list[int], p: set[int], x: set[int]):
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in sorted(p - adj[pivot]):
            expand(r + [v], p & adj[v], x & adj[v])
            p.remove(v)
            x.add(v)

    expand([], set(range(g.n)), set())
    return sorted(out)


@lru_cache(maxsize=256)
def _simplices_by_dim(g: Graph) -> tuple[tuple[Simplex, ...], ...]:
    """All simplices graded by dimension, each grade lexicographic."""
    if g.n == 0:
        return ()
    grades: list[set[Simplex]] = []
    for mc in maximal_cliques(g):
        for k in range(1, len(mc) + 1):
            while len(grades) < k:
                grades.append(set())
            grades[k - 1].update(itertools.combinations(mc, k))
    return tuple(tuple(sorted(s)) for s in grades)


def cliques(g: Graph, k: int) -> list[Simplex]:
    """All complete subgraphs on exactly k vertices, ascending, lex order."""
    if k < 1:
        raise ValueError("k must be >= 1")
    grades = _simplices_by_dim(g)
    if k > len(grades):
        return []
    return list(grades[k - 1])


def all_simplices(g: Graph) -> list[Simplex]:
    return [s for grade in _simplices_by_dim(g) for s in grade]


def f_vector(g: Graph) -> FVector:
    return tuple(len(grade) for grade in _simplices_by_dim(g))


def total_simplex_count(g: Graph) -> int:
    return sum(f_vector(g))


def euler_characteristic(g: Graph) -> int:
    return sum((-1) ** k * v for k, v in enumerate(f_vector(g)))


def clique_number(g: Graph) -> int:
    return len(_simplices_by_dim(g))


# ---------------------------------------------------------------------------
# local structure and joins


def unit_sphere(g: Graph, v: int) -> Graph:
    """Induced subgraph on the neighbors of v."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return g.subgraph(g.neighbors(v))


def _uniquify(labels: list[str]) -> tuple[str, ...]:
    used: set[str] = set()
    out = []
    for lab in labels:
        candidate, i = lab, 0
        while candidate in used:
            i += 1
            candidate = f"{lab}~{i}"
        used.add(candidate)
        out.append(candidate)
    return tuple(out)


def join(g: Graph, h: Graph) -> Graph:
    """Zykov join: disjoint union plus all cross edges."""
    if g.n == 0:
        return h
    if h.n == 0:
        return g
    labels = _uniquify(list(g.labels) + list(h.labels))
    edges = set(g.edges)
    off = g.n
    edges.update((i + off, j + off) for i, j in h.edges)
    edges.update((i, j + off) for i in range(g.n) for j in range(h.n))
    return Graph(labels, frozenset(edges))


def suspension(g: Graph) -> Graph:
    """Join with the two-point edgeless graph (the 0-sphere)."""
    s0 = Graph(("s+", "s-"))
    return join(g, s0)


# ---------------------------------------------------------------------------
# named graph registry


def _complete(n: int) -> Graph:
    return graph_from_edges(n, itertools.combinations(range(n), 2))


def _cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def _star(n: int) -> Graph:
    # n vertices total: center 0 and n-1 leaves
    if n < 2:
        raise ValueError("star needs n >= 2")
    return graph_from_edges(n, [(0, i) for i in range(1, n)])


def _wheel(n: int) -> Graph:
    # cycle C_n plus a hub adjacent to every rim vertex; hub is vertex n
    c = _cycle(n)
    edges = set(c.edges) | {(i, n) for i in range(n)}
    return graph_from_edges(n + 1, edges)


def _cross_polytope(k: int) -> Graph:
    # join of k copies of the 0-sphere; 2k vertices
    if k < 1:
        raise ValueError("cross_polytope needs k >= 1")
    g = Graph(("p0", "q0"))
    for i in range(1, k):
        g = join(g, Graph((f"p{i}", f"q{i}")))
    return g


def _octahedron() -> Graph:
    return _cross_polytope(3)


def _icosahedron() -> Graph:
    edges = [
        (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
        (1, 2), (2, 3), (3, 4), (4, 5), (5, 1),
        (1, 6), (1, 7), (2, 7), (2, 8), (3, 8), (3, 9),
        (4, 9), (4, 10), (5, 10), (5, 6), (6, 7), (7, 8),
        (8, 9), (9, 10), (10, 6),
        (6, 11), (7, 11), (8, 11), (9, 11), (10, 11),
    ]
    return graph_from_edges(12, edges)


def _house() -> Graph:
    # square 0-1-2-3 with a roof apex 4 over the edge (2,3)
    return graph_from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 3), (2, 4), (3, 4)])


def _lollipop() -> Graph:
    # K4 with a pendant vertex attached
    edges = list(itertools.combinations(range(4), 2)) + [(3, 4)]
    return graph_from_edges(5, edges)


def _tadpole() -> Graph:
    # triangle with a tail of two extra vertices
    return graph_from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (3, 4)])


def _sun(rays: Sequence[int]) -> Graph:
    # C4 with the given number of pendant rays at each cycle vertex
    if len(rays) != 4:
        raise ValueError("sun takes 4 ray counts")
    edges = [(0, 1), (1, 2), (2, 3), (0, 3)]
    nxt = 4
    for v, count in enumerate(rays):
        for _ in range(count):
            edges.append((v, nxt))
            nxt += 1
    return graph_from_edges(nxt, edges)


def erdos_renyi(n: int, percent: int, seed: int) -> Graph:
    """Seeded G(n, p) with p = percent/100; bit-reproducible."""
    rng = random.Random(seed)
    p = percent / 100.0
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return graph_from_edges(n, edges)


def named(name: str, params: Sequence[int] = ()) -> Graph:
    """Deterministic construction of a named graph."""
    params = list(params)
    try:
        if name == "complete":
            return _complete(*params)
        if name == "cycle":
            return _cycle(*params)
        if name in ("path", "line"):
            return _path(*params)
        if name == "star":
            return _star(*params)
        if name == "wheel":
            return _wheel(*params)
        if name == "octahedron":
            return _octahedron()
        if name == "icosahedron":
            return _icosahedron()
        if name == "house":
            return _house()
        if name == "lollipop":
            return _lollipop()
        if name == "tadpole":
            return _tadpole()
        if name == "sun":
            return _sun(params)
        if name == "cross_polytope":
            return _cross_polytope(*params)
        if name == "erdos_renyi":
            return erdos_renyi(*params)
    except TypeError as exc:
        raise ValueError(f"bad parameters for {name!r}: {params}") from exc
    raise ValueError(f"unknown named graph {name!r}")


NAMED_CORPUS = (
    ("complete", (1,)), ("complete", (2,)), ("complete", (3,)), ("complete", (4,)),
    ("cycle", (3,)), ("cycle", (4,)), ("cycle", (5,)), ("cycle", (8,)),
    ("path", (1,)), ("path", (4,)), ("star", (4,)), ("star", (8,)),
    ("wheel", (6,)), ("octahedron", ()), ("icosahedron", ()),
    ("house", ()), ("lollipop", ()), ("tadpole", ()),
    ("sun", (1, 0, 0, 0)), ("cross_polytope", (2,)),
)


# ---------------------------------------------------------------------------
# serialization


def graph_to_json(g: Graph) -> str:
    payload = {"labels": list(g.labels), "edges": [list(e) for e in g.sorted_edges()]}
    return json.dumps(payload, separators=(",", ":"))


def graph_from_json(text: str) -> Graph:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed graph JSON: {exc}") from exc
    if not isinstance(payload, dict) or "labels" not in payload or "edges" not in payload:
        raise ValueError("graph JSON needs 'labels' and 'edges'")
    labels = payload["labels"]
    if not all(isinstance(l, str) for l in labels):
        raise ValueError("labels must be strings")
    edges = []
    for e in payload["edges"]:
        if not (isinstance(e, list) and len(e) == 2):
            raise ValueError(f"bad edge entry {e!r}")
        edges.append((int(e[0]), int(e[1])))
    return graph_from_edges(len(labels), edges, labels)


def graph_to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for i, lab in enumerate(g.labels):
        lines.append(f'  {i} [label="{lab}"];')
    for i, j in g.sorted_edges():
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# brute-force isomorphism for small graphs (test support)


def canonical_form(g: Graph) -> tuple:
    """Canonical edge set under all vertex permutations; n <= 8 only."""
    if g.n > 8:
        raise ValueError("canonical_form is limited to 8 vertices")
    best = None
    verts = range(g.n)
    for perm in itertools.permutations(verts):
        relabeled = tuple(sorted(
            (min(perm[i], perm[j]), max(perm[i], perm[j])) for i, j in g.edges
        ))
        if best is None or relabeled < best:
            best = relabeled
    return (g.n, best)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    return canonical_form(g) == canonical_form(h)


def automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """All adjacency-preserving vertex permutations; n <= 7 only."""
    if g.n > 7:
        raise ValueError("automorphisms is limited to 7 vertices")
    out = []
    for perm in itertools.permutations(range(g.n)):
        mapped = {(min(perm[i], perm[j]), max(perm[i], perm[j])) for i, j in g.edges}
        if mapped == g.edges:
            out.append(perm)
    return out


def connected_components(g: Graph) -> list[frozenset[int]]:
    seen: set[int] = set()
    comps = []
    for start in range(g.n):
        if start in seen:
            continue
        stack = [start]
        comp = {start}
        seen.add(start)
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if w not in comp:
                    comp.add(w)
                    seen.add(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    return comps
