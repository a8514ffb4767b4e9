"""Oriented Whitney complex, incidence matrices, Betti numbers, Kunneth.

Simplices carry the ascending-vertex orientation; the face of a simplex
obtained by omitting its i-th vertex enters the coboundary with sign
(-1)^i.  Betti numbers come from exact integer ranks of the incidence
matrices; harmonic bases are exact rational kernels.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph, Simplex, _simplices_by_dim, euler_characteristic
from .limits import DEFAULT_LIMITS, Limits
from .linalg import SparseIntegerMatrix, nullspace, stack

BettiVector = tuple[int, ...]


@dataclass(frozen=True)
class OrientedComplex:
    simplices_by_dim: tuple[tuple[Simplex, ...], ...]

    @property
    def top_dim(self) -> int:
        return len(self.simplices_by_dim) - 1

    def grade(self, k: int) -> tuple[Simplex, ...]:
        if 0 <= k < len(self.simplices_by_dim):
            return self.simplices_by_dim[k]
        return ()

    def index(self, k: int) -> dict[Simplex, int]:
        return {s: i for i, s in enumerate(self.grade(k))}

    @property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(g) for g in self.simplices_by_dim)

    @property
    def total(self) -> int:
        return sum(self.f_vector)


def oriented_complex(g: Graph) -> OrientedComplex:
    return OrientedComplex(_simplices_by_dim(g))


def incidence_matrices(c: OrientedComplex) -> list[SparseIntegerMatrix]:
    """d_k maps k-forms to (k+1)-forms; rows are (k+1)-simplices."""
    mats = []
    for k in range(c.top_dim):
        lower = c.index(k)
        entries: dict[tuple[int, int], int] = {}
        for r, s in enumerate(c.grade(k + 1)):
            for i in range(len(s)):
                face = s[:i] + s[i + 1:]
                entries[(r, lower[face])] = (-1) ** i
        mats.append(SparseIntegerMatrix(
            len(c.grade(k + 1)), len(c.grade(k)), entries))
    return mats


def dirac(c: OrientedComplex) -> SparseIntegerMatrix:
    """Block matrix of all incidence matrices plus their transposes."""
    offsets = [0]
    for grade in c.simplices_by_dim:
        offsets.append(offsets[-1] + len(grade))
    n = offsets[-1]
    entries: dict[tuple[int, int], int] = {}
    for k, d in enumerate(incidence_matrices(c)):
        ro, co = offsets[k + 1], offsets[k]
        for (r, cidx), v in d.entries.items():
            entries[(ro + r, co + cidx)] = v
            entries[(co + cidx, ro + r)] = v
    return SparseIntegerMatrix(n, n, entries)


def laplacian_block(c: OrientedComplex, k: int) -> SparseIntegerMatrix:
    """L_k restricted to k-forms."""
    mats = incidence_matrices(c)
    n = len(c.grade(k))
    out = SparseIntegerMatrix(n, n)
    if k < len(mats):
        out = out + (mats[k].transpose() @ mats[k])
    if k >= 1:
        out = out + (mats[k - 1] @ mats[k - 1].transpose())
    return out


COLLAPSE_THRESHOLD = 4000


def _collapse_core(c: OrientedComplex) -> OrientedComplex:
    """Strip free pairs: a simplex with a unique one-higher coface leaves
    together with it.  Elementary collapses preserve all Betti numbers, so
    the core is an exact stand-in for rank computations."""
    from collections import deque

    alive: set[Simplex] = {s for grade in c.simplices_by_dim for s in grade}
    cofaces: dict[Simplex, list[Simplex]] = {s: [] for s in alive}
    up: dict[Simplex, int] = {s: 0 for s in alive}
    for s in alive:
        if len(s) == 1:
            continue
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            cofaces[face].append(s)
            up[face] += 1

    queue = deque(s for s in sorted(alive) if up[s] == 1)
    while queue:
        s = queue.popleft()
        if s not in alive or up[s] != 1:
            continue
        t = next(x for x in cofaces[s] if x in alive)
        alive.discard(s)
        alive.discard(t)
        for big, small in ((t, s), (s, None)):
            for i in range(len(big)):
                face = big[:i] + big[i + 1:]
                if len(face) == 0 or face not in alive:
                    continue
                up[face] -= 1
                if up[face] == 1:
                    queue.append(face)

    grades: list[list[Simplex]] = [[] for _ in c.simplices_by_dim]
    for s in alive:
        grades[len(s) - 1].append(s)
    while grades and not grades[-1]:
        grades.pop()
    return OrientedComplex(tuple(tuple(sorted(g)) for g in grades))


def betti(g: Graph, *, collapse_threshold: int = COLLAPSE_THRESHOLD) -> BettiVector:
    """Exact Betti numbers via integer ranks of the incidence matrices."""
    c = oriented_complex(g)
    if c.total == 0:
        return ()
    top = c.top_dim
    core = _collapse_core(c) if c.total > collapse_threshold else c
    mats = incidence_matrices(core)
    ranks = [m.rank() for m in mats]
    out = []
    for k in range(top + 1):
        vk = len(core.grade(k))
        rk = ranks[k] if k < len(ranks) else 0
        rk_prev = ranks[k - 1] if 1 <= k <= len(ranks) else 0
        out.append(vk - rk - rk_prev)
    b = tuple(out)
    if sum((-1) ** k * bk for k, bk in enumerate(b)) != euler_characteristic(g):
        raise AssertionError("Euler-Poincare check failed")
    return b


@dataclass(frozen=True)
class PoincarePolynomial:
    coefficients: BettiVector

    def __call__(self, x: Fraction | int) -> Fraction:
        return sum(c * x ** k for k, c in enumerate(self.coefficients))

    def __mul__(self, other: "PoincarePolynomial") -> "PoincarePolynomial":
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return PoincarePolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        while out and out[-1] == 0:
            out.pop()
        return PoincarePolynomial(tuple(out))


def poincare_polynomial(g: Graph) -> PoincarePolynomial:
    return PoincarePolynomial(betti(g))


@dataclass(frozen=True)
class KunnethReport:
    factor_product: tuple[int, ...]
    product_betti: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return self.factor_product == self.product_betti


def kunneth_check(g: Graph, h: Graph,
                  limits: Limits = DEFAULT_LIMITS) -> KunnethReport:
    """Compare p_G * p_H against the Betti vector of the product."""
    from .product import graph_product

    lhs = poincare_polynomial(g) * poincare_polynomial(h)
    rhs = betti(graph_product(g, h, limits).graph)
    rhs_trimmed = list(rhs)
    while rhs_trimmed and rhs_trimmed[-1] == 0:
        rhs_trimmed.pop()
    return KunnethReport(lhs.coefficients, tuple(rhs_trimmed))


def harmonic_basis(g: Graph, k: int) -> list[list[Fraction]]:
    """Exact rational basis of the harmonic k-forms (kernel of L_k).

    Computed as the joint kernel of d_k and the transpose of d_{k-1},
    which equals ker L_k by Hodge theory; both identities are asserted.
    """
    c = oriented_complex(g)
    if not (0 <= k <= c.top_dim):
        raise ValueError(f"grade {k} out of range")
    mats = incidence_matrices(c)
    n = len(c.grade(k))
    constraints = SparseIntegerMatrix(0, n)
    if k < len(mats):
        constraints = stack(constraints, mats[k])
    if k >= 1:
        constraints = stack(constraints, mats[k - 1].transpose())
    basis = nullspace(constraints)
    lap = laplacian_block(c, k)
    for vec in basis:
        if any(x != 0 for x in lap.apply(vec)):
            raise AssertionError("harmonic basis vector not in ker L_k")
    return basis
