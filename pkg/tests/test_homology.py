from fractions import Fraction

import pytest

from whitneyprod.graphs import (
    Graph,
    erdos_renyi,
    euler_characteristic,
    named,
    suspension,
)
from whitneyprod.homology import (
    PoincarePolynomial,
    _collapse_core,
    betti,
    dirac,
    harmonic_basis,
    incidence_matrices,
    kunneth_check,
    laplacian_block,
    oriented_complex,
    poincare_polynomial,
)
from whitneyprod.linalg import SparseIntegerMatrix, nullspace
from whitneyprod.product import enhance, graph_product
from conftest import corpus_graphs, random_tree


def test_oriented_complex_grades():
    c = oriented_complex(graph_product(named("complete", [2]),
                                       named("complete", [2])).graph)
    assert c.f_vector == (9, 16, 8)
    assert oriented_complex(named("house")).f_vector == (5, 6, 1)
    assert oriented_complex(named("complete", [1])).f_vector == (1,)


def test_incidence_signs_triangle():
    c = oriented_complex(named("complete", [3]))
    d1 = incidence_matrices(c)[1]
    # row for (0,1,2) against edges (0,1),(0,2),(1,2): omit-position signs
    assert [d1[(0, j)] for j in range(3)] == [1, -1, 1]


def test_incidence_squares_to_zero(corpus):
    for name, g in corpus:
        mats = incidence_matrices(oriented_complex(g))
        for k in range(len(mats) - 1):
            assert (mats[k + 1] @ mats[k]).is_zero(), name
    for seed in range(100):
        mats = incidence_matrices(oriented_complex(erdos_renyi(7, 50, seed)))
        for k in range(len(mats) - 1):
            assert (mats[k + 1] @ mats[k]).is_zero()


def test_d0_rank_of_cycle():
    c = oriented_complex(named("cycle", [4]))
    d0 = incidence_matrices(c)[0]
    assert (d0.rows, d0.cols) == (4, 4)
    assert d0.rank() == 3


def test_dirac_shape_and_symmetry():
    p = graph_product(named("complete", [2]), named("complete", [2]))
    d = dirac(oriented_complex(p.graph))
    assert (d.rows, d.cols) == (33, 33)
    assert d.transpose() == d
    assert dirac(oriented_complex(named("complete", [1]))).is_zero()


def test_laplacian_block_of_cycle_is_graph_laplacian():
    c4 = named("cycle", [4])
    l0 = laplacian_block(oriented_complex(c4), 0)
    for i in range(4):
        assert l0[(i, i)] == 2
        for j in c4.neighbors(i):
            assert l0[(min(i, j), max(i, j))] == -1


def test_betti_values():
    assert betti(named("cycle", [4])) == (1, 1)
    assert betti(named("octahedron")) == (1, 0, 1)
    assert betti(named("house")) == (1, 1, 0)
    assert betti(suspension(named("octahedron"))) == (1, 0, 0, 1)
    assert betti(Graph(())) == ()


def test_betti_torus_products():
    c4 = named("cycle", [4])
    assert betti(graph_product(c4, c4).graph) == (1, 2, 1)


def test_collapse_core_agrees_with_direct(corpus):
    for name, g in corpus:
        assert betti(g, collapse_threshold=0) == betti(g, collapse_threshold=10**9), name
    for seed in range(20):
        g = erdos_renyi(8, 50, 7000 + seed)
        assert betti(g, collapse_threshold=0) == betti(g, collapse_threshold=10**9)


def test_collapse_core_preserves_euler():
    p = graph_product(named("house"), named("sun", [1, 0, 0, 0]))
    c = oriented_complex(p.graph)
    core = _collapse_core(c)
    chi = lambda fv: sum((-1) ** k * v for k, v in enumerate(fv))
    assert chi(core.f_vector) == chi(c.f_vector)


def test_hodge_consistency_small_graphs():
    # kernel dimension of L_k equals the rank-formula Betti number
    for g in (named("cycle", [4]), named("house"), named("octahedron"),
              named("wheel", [6]), erdos_renyi(7, 40, 5)):
        b = betti(g)
        c = oriented_complex(g)
        for k in range(len(b)):
            lap = laplacian_block(c, k)
            kernel = nullspace(lap)
            assert len(kernel) == b[k]


def test_betti_invariant_under_refinement(corpus):
    for name, g in corpus:
        b0, b1 = betti(g), betti(enhance(g).graph)
        pad = max(len(b0), len(b1))
        assert list(b0) + [0] * (pad - len(b0)) == list(b1) + [0] * (pad - len(b1)), name


def test_poincare_values():
    assert poincare_polynomial(named("house")).coefficients == (1, 1, 0)
    poly = poincare_polynomial(graph_product(named("complete", [3]),
                                             named("star", [8])).graph)
    assert poly.coefficients == (1, 0, 0, 0)


def test_poincare_polynomial_product():
    p = PoincarePolynomial((1, 1))
    assert (p * p).coefficients == (1, 2, 1)
    assert p(-1) == 0


def test_kunneth_house_sun():
    rep = kunneth_check(named("house"), named("sun", [1, 0, 0, 0]))
    assert rep.ok
    assert rep.factor_product == (1, 2, 1)


def test_kunneth_forests():
    f1 = random_tree(4, 1)
    f2 = random_tree(5, 2)
    # disjoint unions: two trees x three trees has betti (6, 0, ...)
    two = Graph(tuple(f"a{i}" for i in range(8)),
                frozenset(list(f1.edges) + [(i + 4, j + 4) for i, j in random_tree(4, 3).edges]))
    three = Graph(tuple(f"b{i}" for i in range(9)),
                  frozenset(list(random_tree(3, 4).edges)
                            + [(i + 3, j + 3) for i, j in random_tree(3, 5).edges]
                            + [(i + 6, j + 6) for i, j in random_tree(3, 6).edges]))
    assert betti(two)[0] == 2 and all(b == 0 for b in betti(two)[1:])
    assert betti(three)[0] == 3 and all(b == 0 for b in betti(three)[1:])
    rep = kunneth_check(two, three)
    assert rep.ok and rep.factor_product == (6,)


def test_kunneth_with_point_refines():
    g = named("house")
    rep = kunneth_check(g, named("complete", [1]))
    assert rep.ok


def test_harmonic_basis_dimensions():
    house1 = enhance(named("house")).graph
    assert len(harmonic_basis(house1, 1)) == 1
    basis0 = harmonic_basis(named("cycle", [4]), 0)
    assert len(basis0) == 1
    vec = basis0[0]
    assert len(set(vec)) == 1 and vec[0] != 0
    assert harmonic_basis(named("octahedron"), 1) == []


def test_harmonic_basis_is_closed_and_coclosed():
    g = named("cycle", [4])
    c = oriented_complex(g)
    mats = incidence_matrices(c)
    for vec in harmonic_basis(g, 1):
        assert all(x == 0 for x in mats[0].transpose().apply(vec))


def test_harmonic_basis_grade_check():
    with pytest.raises(ValueError):
        harmonic_basis(named("cycle", [4]), 5)


def test_dirac_square_is_block_diagonal_laplacian():
    g = named("cycle", [4])
    c = oriented_complex(g)
    d = dirac(c)
    assert (d.rows, d.cols) == (8, 8)
    square = d @ d
    l0 = laplacian_block(c, 0)
    l1 = laplacian_block(c, 1)
    for (r, col), v in square.entries.items():
        block = l0 if r < 4 and col < 4 else l1 if r >= 4 and col >= 4 else None
        assert block is not None, "off-diagonal block in D^2"
        assert block[(r % 4, col % 4)] == v
