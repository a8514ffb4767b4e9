"""The simplicial graph product, refinement, and refinement sequences.

Vertices of the product are pairs (simplex of G, simplex of H); two
vertices are adjacent when one pair contains the other componentwise.
This is the graph of the polynomial product of the factor encodings, and
the direct construction is tested against that algebraic route.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

from .graphs import (
    Graph,
    Simplex,
    all_simplices,
    euler_characteristic,
    f_vector,
    total_simplex_count,
)
from .limits import DEFAULT_LIMITS, Limits
from .topology import DimensionReport, inductive_dimension

Provenance = tuple[Simplex, ...]


@dataclass(frozen=True)
class ProductGraph:
    graph: Graph
    provenance: tuple[Provenance, ...]
    factors: tuple[Graph, ...]


class SizeCapExceeded(RuntimeError):
    def __init__(self, needed: int, cap: int):
        super().__init__(
            f"product would have {needed} vertices, above the cap {cap} "
            "(--max-product-vertices)")
        self.needed = needed
        self.cap = cap


def _simplex_label(g: Graph, s: Simplex) -> str:
    return "·".join(g.labels[v] for v in s)


def _subsimplices(s: Simplex) -> list[Simplex]:
    out: list[Simplex] = [()]
    for v in s:
        out += [t + (v,) for t in out]
    return [t for t in out if t]


def graph_product_n(factors: list[Graph],
                    limits: Limits = DEFAULT_LIMITS) -> ProductGraph:
    """n-ary product built directly in the ring of simplex tuples."""
    if any(g.n == 0 for g in factors):
        return ProductGraph(Graph(()), (), tuple(factors))
    counts = [total_simplex_count(g) for g in factors]
    needed = 1
    for c in counts:
        needed *= c
    if needed > limits.max_product_vertices:
        raise SizeCapExceeded(needed, limits.max_product_vertices)

    grids = [all_simplices(g) for g in factors]
    verts: list[Provenance] = sorted(iproduct(*grids))
    index = {p: i for i, p in enumerate(verts)}

    edges: set[tuple[int, int]] = set()
    for i, prov in enumerate(verts):
        # connect to every proper componentwise divisor
        for div in iproduct(*[_subsimplices(s) for s in prov]):
            if div != prov:
                j = index[div]
                edges.add((min(i, j), max(i, j)))

    labels = tuple(
        "|".join(_simplex_label(g, s) for g, s in zip(factors, prov))
        for prov in verts
    )
    return ProductGraph(Graph(labels, frozenset(edges)), tuple(verts),
                        tuple(factors))


def graph_product(g: Graph, h: Graph,
                  limits: Limits = DEFAULT_LIMITS) -> ProductGraph:
    return graph_product_n([g, h], limits)


def enhance(g: Graph, limits: Limits = DEFAULT_LIMITS) -> ProductGraph:
    """Barycentric refinement: vertices are the simplices of g."""
    k1 = Graph(("*",))
    p = graph_product_n([g, k1], limits)
    labels = tuple(_simplex_label(g, prov[0]) for prov in p.provenance)
    return ProductGraph(Graph(labels, p.graph.edges), p.provenance, p.factors)


@dataclass(frozen=True)
class RefineStep:
    graph: Graph
    dim: Fraction
    f_vector: tuple[int, ...]
    euler: int


@dataclass(frozen=True)
class RefineReport:
    steps: tuple[RefineStep, ...]
    truncated: bool


def refine_sequence(g: Graph, n: int,
                    limits: Limits = DEFAULT_LIMITS) -> RefineReport:
    """[G, G_1, ..., G_n] with G_k the refinement of G_{k-1}."""
    steps = []
    current = g
    truncated = False
    for step in range(n + 1):
        steps.append(RefineStep(
            current,
            inductive_dimension(current).total,
            f_vector(current),
            euler_characteristic(current),
        ))
        if step == n:
            break
        try:
            current = enhance(current, limits).graph
        except SizeCapExceeded:
            truncated = True
            break
    return RefineReport(tuple(steps), truncated)


@dataclass(frozen=True)
class PointwiseEntry:
    pair: Provenance
    product_dim: Fraction
    factor_sum: Fraction

    @property
    def ok(self) -> bool:
        return self.product_dim == self.factor_sum


@dataclass(frozen=True)
class PointwiseReport:
    entries: tuple[PointwiseEntry, ...]
    total_dim: Fraction
    all_ok: bool


def pointwise_dimension_check(g: Graph, h: Graph,
                              limits: Limits = DEFAULT_LIMITS) -> PointwiseReport:
    """Per-vertex additivity of dimension over the product.

    The dimension of (x, y) in G x H must equal the dimension of x in the
    refinement of G plus the dimension of y in the refinement of H.
    """
    p = graph_product(g, h, limits)
    dims_p = inductive_dimension(p.graph)
    g1 = enhance(g, limits)
    h1 = enhance(h, limits)
    dims_g1 = inductive_dimension(g1.graph)
    dims_h1 = inductive_dimension(h1.graph)
    pos_g = {prov[0]: i for i, prov in enumerate(g1.provenance)}
    pos_h = {prov[0]: i for i, prov in enumerate(h1.provenance)}

    entries = []
    for i, (a, b) in enumerate(p.provenance):
        lhs = dims_p.per_vertex[i]
        rhs = dims_g1.per_vertex[pos_g[a]] + dims_h1.per_vertex[pos_h[b]]
        entries.append(PointwiseEntry((a, b), lhs, rhs))
    return PointwiseReport(tuple(entries), dims_p.total,
                           all(e.ok for e in entries))
