"""Inductive dimension, homotopy, sphere recognition, curvature, coloring.

Recursive predicates work on vertex subsets of a fixed host graph and
memoize on the subset, so repeated sphere computations inside one call
share work.  Size-guarded recursions return None ("unknown") instead of
guessing when the guard trips.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Optional

from .graphs import (
    Graph,
    Simplex,
    clique_number,
    euler_characteristic,
    f_vector,
    graph_from_edges,
    unit_sphere,
)

if TYPE_CHECKING:
    from .product import ProductGraph


@dataclass(frozen=True)
class DimensionReport:
    total: Fraction
    per_vertex: tuple[Fraction, ...]


@dataclass(frozen=True)
class CurvatureReport:
    per_vertex: tuple[Fraction, ...]
    total: Fraction


@dataclass(frozen=True)
class ColoringReport:
    colors: tuple[int, ...]
    num_colors: int
    proper: bool


@dataclass(frozen=True)
class CensusEntry:
    edges: tuple[tuple[int, int], ...]
    chromatic: int
    chromatic_refined: int
    is_odd_cycle: bool


@dataclass(frozen=True)
class CensusReport:
    total_graphs: int
    drops: tuple[CensusEntry, ...]


class _Host:
    """Subset-based recursion engine over one fixed host graph."""

    def __init__(self, g: Graph, max_vertices: int = 40):
        self.adj = g.adjacency
        self.max_vertices = max_vertices
        self._dim: dict[frozenset[int], Fraction] = {}
        self._contract: dict[frozenset[int], Optional[bool]] = {}
        self._sphere: dict[tuple[frozenset[int], int], Optional[bool]] = {}

    def dim(self, subset: frozenset[int]) -> Fraction:
        if not subset:
            return Fraction(-1)
        cached = self._dim.get(subset)
        if cached is not None:
            return cached
        total = Fraction(0)
        for v in subset:
            total += 1 + self.dim(subset & self.adj[v])
        result = total / len(subset)
        self._dim[subset] = result
        return result

    def contractible(self, subset: frozenset[int]) -> Optional[bool]:
        if not subset:
            return False
        if len(subset) == 1:
            return True
        if len(subset) > self.max_vertices:
            return None
        cached = self._contract.get(subset, "miss")
        if cached != "miss":
            return cached
        result: Optional[bool] = False
        saw_unknown = False
        # cheap witnesses first: low-degree vertices have small spheres
        for v in sorted(subset, key=lambda u: (len(subset & self.adj[u]), u)):
            s = self.contractible(subset & self.adj[v])
            if s is None:
                saw_unknown = True
                continue
            if not s:
                continue
            rest = self.contractible(subset - {v})
            if rest is None:
                saw_unknown = True
            elif rest:
                result = True
                break
        if result is False and saw_unknown:
            result = None
        self._contract[subset] = result
        return result

    def is_sphere(self, subset: frozenset[int], d: int) -> Optional[bool]:
        if d < -1:
            return False
        if d == -1:
            return not subset
        if not subset:
            return False
        if len(subset) > self.max_vertices:
            return None
        key = (subset, d)
        cached = self._sphere.get(key, "miss")
        if cached != "miss":
            return cached
        result: Optional[bool] = True
        for v in subset:
            s = self.is_sphere(subset & self.adj[v], d - 1)
            if s is None:
                result = None
            elif not s:
                result = False
                break
        if result is True:
            for v in subset:
                c = self.contractible(subset - {v})
                if c is None:
                    result = None
                elif not c:
                    result = False
                    break
        self._sphere[key] = result
        return result

    def reduce(self, subset: frozenset[int]) -> frozenset[int]:
        """Greedily remove vertices with contractible unit spheres."""
        while len(subset) > 1:
            for v in sorted(subset):
                if self.contractible(subset & self.adj[v]) is True:
                    subset = subset - {v}
                    break
            else:
                break
        return subset


def _full(g: Graph) -> frozenset[int]:
    return frozenset(range(g.n))


def inductive_dimension(g: Graph) -> DimensionReport:
    """Exact inductive dimension: 1 plus the average over unit spheres."""
    host = _Host(g, max_vertices=g.n + 1)
    per_vertex = tuple(1 + host.dim(g.neighbors(v)) for v in range(g.n))
    if not per_vertex:
        return DimensionReport(Fraction(-1), ())
    total = sum(per_vertex, Fraction(0)) / len(per_vertex)
    return DimensionReport(total, per_vertex)


def contractible(g: Graph, *, max_vertices: int = 40) -> Optional[bool]:
    """True/False, or None when the size guard prevents a verdict."""
    return _Host(g, max_vertices).contractible(_full(g))


def homotopy_reduce(g: Graph, *, max_vertices: int = 40) -> Graph:
    """Remove vertices with contractible unit spheres until none remain."""
    host = _Host(g, max_vertices)
    return g.subgraph(host.reduce(_full(g)))


def is_sphere(g: Graph, d: int, *, max_vertices: int = 40) -> Optional[bool]:
    """Recursive homotopy-sphere test.

    d = -1 accepts exactly the empty graph; otherwise every unit sphere
    must be a (d-1)-sphere and deleting any single vertex must leave a
    contractible graph.
    """
    return _Host(g, max_vertices).is_sphere(_full(g), d)


def is_geometric(g: Graph, d: int, *, max_vertices: int = 40) -> Optional[bool]:
    """Every unit sphere is a (d-1)-sphere."""
    if g.n == 0:
        return False
    host = _Host(g, max_vertices)
    result: Optional[bool] = True
    for v in range(g.n):
        s = host.is_sphere(g.neighbors(v), d - 1)
        if s is None:
            result = None
        elif not s:
            return False
    return result


def graph_boundary(g: Graph, *, max_vertices: int = 40) -> Graph:
    """Subgraph generated by vertices whose unit sphere is not a sphere.

    The reference dimension is the top dimension (clique number minus 1);
    interior vertices of a d-dimensional graph have (d-1)-sphere links.
    """
    d = clique_number(g) - 1
    host = _Host(g, max_vertices)
    bad = [v for v in range(g.n)
           if host.is_sphere(g.neighbors(v), d - 1) is not True]
    return g.subgraph(bad)


# ---------------------------------------------------------------------------
# curvature


def _vertex_curvature(sphere_f: tuple[int, ...]) -> Fraction:
    k = Fraction(1)
    for i, count in enumerate(sphere_f):
        k += Fraction((-1) ** (i + 1) * count, i + 2)
    return k


def curvature(g: Graph) -> CurvatureReport:
    """Clique-counting curvature; totals to the Euler characteristic."""
    per_vertex = tuple(
        _vertex_curvature(f_vector(unit_sphere(g, v))) for v in range(g.n)
    )
    total = sum(per_vertex, Fraction(0))
    if total != euler_characteristic(g):
        raise AssertionError("curvature total differs from Euler characteristic")
    return CurvatureReport(per_vertex, total)


@dataclass(frozen=True)
class SimplexCurvatureReport:
    simplices: tuple[Simplex, ...]
    per_simplex: tuple[Fraction, ...]
    total: Fraction


def simplex_curvature(g: Graph) -> SimplexCurvatureReport:
    """Curvature of each simplex: the vertex curvature in the refinement."""
    from .product import enhance

    refined = enhance(g)
    rep = curvature(refined.graph)
    simplices = tuple(a for a, _ in refined.provenance)
    return SimplexCurvatureReport(simplices, rep.per_vertex, rep.total)


# ---------------------------------------------------------------------------
# chromatic invariants


def chromatic_number_exact(g: Graph, *, max_vertices: int = 10) -> int:
    """Exact chromatic number by backtracking; small graphs only."""
    if g.n > max_vertices:
        raise ValueError(f"exact chromatic search limited to {max_vertices} vertices")
    if g.n == 0:
        return 0
    lower = clique_number(g)
    order = sorted(range(g.n), key=lambda v: -len(g.neighbors(v)))

    def colorable(k: int) -> bool:
        colors: dict[int, int] = {}

        def place(idx: int) -> bool:
            if idx == len(order):
                return True
            v = order[idx]
            used = {colors[w] for w in g.neighbors(v) if w in colors}
            limit = min(k, (max(colors.values()) + 2) if colors else 1)
            for c in range(limit):
                if c not in used:
                    colors[v] = c
                    if place(idx + 1):
                        return True
                    del colors[v]
            return False

        return place(0)

    k = lower
    while not colorable(k):
        k += 1
    return k


def dim_coloring(p: "ProductGraph") -> ColoringReport:
    """Color each product vertex by the dimension of its simplex pair."""
    colors = tuple(
        sum(len(s) - 1 for s in prov) for prov in p.provenance
    )
    proper = all(colors[i] != colors[j] for i, j in p.graph.edges)
    return ColoringReport(colors, len(set(colors)), proper)


def product_chromatic(g: Graph, h: Graph) -> int:
    """Chromatic number of the product: clique numbers n + m - 1.

    Cross-validated against the clique number of the built product and
    against the explicit dimension coloring.
    """
    from .product import graph_product

    value = clique_number(g) + clique_number(h) - 1
    p = graph_product(g, h)
    if clique_number(p.graph) != value:
        raise AssertionError("product clique number disagrees with formula")
    report = dim_coloring(p)
    if not report.proper or report.num_colors != value:
        raise AssertionError("dimension coloring does not certify the formula")
    return value


def _connected_5_vertex_graphs():
    from .graphs import connected_components

    pairs = list(itertools.combinations(range(5), 2))
    for bits in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
        g = graph_from_edges(5, edges)
        if len(connected_components(g)) == 1:
            yield g


def chromatic_census_5() -> CensusReport:
    """Chromatic drop census over all connected labeled 5-vertex graphs.

    Records every graph whose refinement has a strictly smaller chromatic
    number.  The refined chromatic number is exact: the clique number is a
    lower bound and the dimension coloring matches it from above.
    """
    from .product import enhance

    drops = []
    total = 0
    for g in _connected_5_vertex_graphs():
        total += 1
        c = chromatic_number_exact(g)
        omega = clique_number(g)
        refined = enhance(g)
        if clique_number(refined.graph) != omega:
            raise AssertionError("refinement changed the clique number")
        report = dim_coloring(refined)
        if not report.proper or report.num_colors != omega:
            raise AssertionError("dimension coloring failed in census")
        c1 = omega
        if c1 < c:
            is_c5 = (len(g.edges) == 5
                     and all(len(g.neighbors(v)) == 2 for v in range(5)))
            drops.append(CensusEntry(tuple(g.sorted_edges()), c, c1, is_c5))
    return CensusReport(total, tuple(drops))
