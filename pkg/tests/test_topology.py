from collections import Counter
from fractions import Fraction

import pytest

from whitneyprod.graphs import (
    Graph,
    erdos_renyi,
    euler_characteristic,
    graph_from_edges,
    named,
    unit_sphere,
)
from whitneyprod.homology import betti
from whitneyprod.product import enhance, graph_product, graph_product_n
from whitneyprod.topology import (
    chromatic_census_5,
    chromatic_number_exact,
    contractible,
    curvature,
    dim_coloring,
    graph_boundary,
    homotopy_reduce,
    inductive_dimension,
    is_geometric,
    is_sphere,
    product_chromatic,
    simplex_curvature,
)
from conftest import corpus_graphs, random_tree


def test_dimension_frozen_values():
    assert inductive_dimension(named("house")).total == Fraction(22, 15)
    assert inductive_dimension(named("lollipop")).total == Fraction(5, 2)
    assert inductive_dimension(enhance(named("lollipop")).graph).total == Fraction(11, 4)
    assert inductive_dimension(enhance(named("house")).graph).total == Fraction(37, 24)
    assert inductive_dimension(enhance(named("tadpole")).graph).total == Fraction(71, 44)
    for n in (2, 3, 4, 5):
        assert inductive_dimension(named("complete", [n])).total == n - 1
    assert inductive_dimension(Graph(())).total == -1


def test_dimension_report_consistency():
    rep = inductive_dimension(named("house"))
    assert sum(rep.per_vertex, Fraction(0)) / len(rep.per_vertex) == rep.total


def test_contractible():
    assert contractible(named("path", [5])) is True
    assert contractible(named("cycle", [4])) is False
    assert contractible(named("complete", [1])) is True
    assert contractible(named("wheel", [6])) is True
    assert contractible(named("octahedron")) is False


def test_contractible_guard_returns_unknown():
    g = erdos_renyi(12, 60, 1)
    assert contractible(g, max_vertices=5) is None


def test_homotopy_reduce():
    assert homotopy_reduce(random_tree(8, 3)).n == 1
    assert homotopy_reduce(named("wheel", [6])).n == 1
    assert homotopy_reduce(named("cycle", [5])).n == 5


def test_homotopy_reduce_preserves_betti(corpus):
    for name, g in corpus:
        reduced = homotopy_reduce(g)
        b0, b1 = betti(g), betti(reduced)
        pad = max(len(b0), len(b1))
        assert list(b0) + [0] * (pad - len(b0)) == list(b1) + [0] * (pad - len(b1)), name


def test_is_sphere():
    for n in (4, 5, 8):
        assert is_sphere(named("cycle", [n]), 1) is True
    assert is_sphere(named("cycle", [4]), 2) is False
    assert is_sphere(named("octahedron"), 2) is True
    assert is_sphere(Graph(()), -1) is True
    assert is_sphere(Graph(("a", "b")), 0) is True
    assert is_sphere(named("path", [2]), 0) is False


def test_boundary_of_cube_product_is_sphere():
    k2 = named("complete", [2])
    ball = graph_product_n([k2, k2, k2])
    bd = graph_boundary(ball.graph)
    assert bd.n == 26
    assert is_sphere(bd, 2) is True
    # the boundary matches the refined octahedron in size and cohomology
    oct1 = enhance(named("octahedron")).graph
    assert (bd.n, betti(bd)) == (oct1.n, betti(oct1))


def test_is_geometric():
    assert is_geometric(named("octahedron"), 2) is True
    assert is_geometric(named("icosahedron"), 2) is True
    assert is_geometric(enhance(named("octahedron")).graph, 2) is True
    assert is_geometric(named("house"), 2) is False


def test_cylinder_spheres_in_torus_product():
    p = graph_product(named("cycle", [4]), named("cycle", [8]))
    for v in range(p.graph.n):
        s = unit_sphere(p.graph, v)
        assert euler_characteristic(s) == 0
        assert is_sphere(s, 1) is True


def test_curvature_cycles_flat():
    rep = curvature(named("cycle", [7]))
    assert set(rep.per_vertex) == {Fraction(0)}
    assert rep.total == 0


def test_curvature_icosahedron():
    rep = curvature(named("icosahedron"))
    assert set(rep.per_vertex) == {Fraction(1, 6)}
    assert rep.total == 2


def test_curvature_product_ball():
    rep = curvature(graph_product(named("complete", [3]),
                                  named("complete", [2])).graph)
    counts = Counter(rep.per_vertex)
    assert counts[Fraction(1, 6)] == 9
    assert counts[Fraction(-1, 6)] == 3
    assert counts[Fraction(0)] == 9
    assert rep.total == 1


def test_curvature_random_gauss_bonnet():
    for seed in range(100):
        g = erdos_renyi(10, 50, 4000 + seed)
        assert curvature(g).total == euler_characteristic(g)


def test_simplex_curvature():
    rep = simplex_curvature(named("complete", [3]))
    assert len(rep.per_simplex) == 7
    assert rep.total == 1
    rep2 = simplex_curvature(named("octahedron"))
    assert len(rep2.per_simplex) == 26
    assert rep2.total == 2
    rep3 = simplex_curvature(named("complete", [1]))
    assert rep3.per_simplex == (Fraction(1),)


def test_chromatic_number_exact():
    assert chromatic_number_exact(named("cycle", [5])) == 3
    assert chromatic_number_exact(named("cycle", [6])) == 2
    assert chromatic_number_exact(named("complete", [4])) == 4
    with pytest.raises(ValueError):
        chromatic_number_exact(erdos_renyi(12, 50, 0))


def test_dim_coloring_proper_on_products():
    pairs = [(named("complete", [2]), named("complete", [2])),
             (named("house"), named("path", [3])),
             (named("cycle", [4]), named("star", [4]))]
    for g, h in pairs:
        rep = dim_coloring(graph_product(g, h))
        assert rep.proper


def test_product_chromatic():
    k2 = named("complete", [2])
    assert product_chromatic(k2, k2) == 3
    assert chromatic_number_exact(graph_product(k2, k2).graph) == 3
    p3 = graph_product_n([k2, k2, k2])
    rep = dim_coloring(p3)
    assert rep.proper and rep.num_colors == 4
    t1, t2 = random_tree(5, 1), random_tree(6, 2)
    assert product_chromatic(t1, t2) == 3


def test_refinement_chromatic_is_clique_number():
    for seed in range(20):
        g = erdos_renyi(7, 50, 800 + seed)
        from whitneyprod.graphs import clique_number

        omega = clique_number(g)
        if omega == 0:
            continue
        e = enhance(g)
        assert clique_number(e.graph) == omega
        rep = dim_coloring(e)
        assert rep.proper and rep.num_colors == omega
        if g.n <= 10:
            assert omega <= chromatic_number_exact(g)


def test_chromatic_census():
    rep = chromatic_census_5()
    assert rep.total_graphs == 728
    assert len(rep.drops) == 12
    assert all(e.is_odd_cycle for e in rep.drops)
    assert all(e.chromatic == 3 and e.chromatic_refined == 2 for e in rep.drops)
