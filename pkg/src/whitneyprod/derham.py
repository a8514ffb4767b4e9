"""Tensor (de Rham) complex of a product and its map to the Whitney complex.

The tensor complex carries the Leibniz derivative d(a x b) =
(da) x b + (-1)^{dim a} a x (db).  The comparison map psi into the Whitney
complex of the product collapses a divisibility chain to factor simplices:
the first p+1 chain vertices project to a strictly increasing sequence of
maximal G-vertices forming the G-simplex, the last q+1 to the H-simplex.
That front/back split composed with the top-vertex collapse is a genuine
cochain map, which chain_map_check certifies degree by degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .graphs import Graph, Simplex
from .homology import (
    OrientedComplex,
    betti,
    harmonic_basis,
    incidence_matrices,
    oriented_complex,
)
from .limits import DEFAULT_LIMITS, Limits
from .linalg import SparseIntegerMatrix, nullspace, rank_of_rows, stack
from .product import ProductGraph, graph_product

BasisPair = tuple[Simplex, Simplex]


@dataclass(frozen=True)
class TensorComplex:
    basis_by_degree: tuple[tuple[BasisPair, ...], ...]
    derivative_matrices: tuple[SparseIntegerMatrix, ...]

    def dim(self, k: int) -> int:
        if 0 <= k < len(self.basis_by_degree):
            return len(self.basis_by_degree[k])
        return 0

    def index(self, k: int) -> dict[BasisPair, int]:
        return {p: i for i, p in enumerate(self.basis_by_degree[k])}


def tensor_complex(g: Graph, h: Graph) -> TensorComplex:
    cg, ch = oriented_complex(g), oriented_complex(h)
    dg, dh = incidence_matrices(cg), incidence_matrices(ch)
    top = cg.top_dim + ch.top_dim

    bases: list[tuple[BasisPair, ...]] = []
    for k in range(top + 1):
        pairs = [
            (a, b)
            for i in range(k + 1)
            for a in cg.grade(i)
            for b in ch.grade(k - i)
        ]
        bases.append(tuple(sorted(pairs)))

    gi = [cg.index(i) for i in range(cg.top_dim + 1)]
    hi = [ch.index(j) for j in range(ch.top_dim + 1)]

    mats = []
    for k in range(top):
        tgt = {p: i for i, p in enumerate(bases[k + 1])}
        entries: dict[tuple[int, int], int] = {}
        for col, (a, b) in enumerate(bases[k]):
            ia, jb = len(a) - 1, len(b) - 1
            if ia < len(dg):
                d = dg[ia]
                ca = gi[ia][a]
                for (r, c), v in d.entries.items():
                    if c == ca:
                        row = tgt[(cg.grade(ia + 1)[r], b)]
                        entries[(row, col)] = entries.get((row, col), 0) + v
            if jb < len(dh):
                d = dh[jb]
                cb = hi[jb][b]
                sign = (-1) ** ia
                for (r, c), v in d.entries.items():
                    if c == cb:
                        row = tgt[(a, ch.grade(jb + 1)[r])]
                        entries[(row, col)] = entries.get((row, col), 0) + sign * v
        mats.append(SparseIntegerMatrix(len(bases[k + 1]), len(bases[k]), entries))
    return TensorComplex(tuple(bases), tuple(mats))


# ---------------------------------------------------------------------------
# the comparison map


def _perm_sign(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@dataclass(frozen=True)
class ProductSide:
    """Product graph together with its Whitney complex, shared by checks."""

    product: ProductGraph
    complex: OrientedComplex
    whitney_d: tuple[SparseIntegerMatrix, ...]
    tensor: TensorComplex


def build_pair(g: Graph, h: Graph, limits: Limits = DEFAULT_LIMITS) -> ProductSide:
    p = graph_product(g, h, limits)
    c = oriented_complex(p.graph)
    return ProductSide(p, c, tuple(incidence_matrices(c)), tensor_complex(g, h))


def _chain_order(simplex: Simplex, prov) -> tuple[tuple, int]:
    """Vertices sorted by divisibility (pair dimension) plus parity sign."""
    keyed = sorted(range(len(simplex)),
                   key=lambda i: sum(len(s) for s in prov[simplex[i]]))
    chain = tuple(prov[simplex[i]] for i in keyed)
    sign = _perm_sign(tuple(keyed))
    return chain, sign


def _collapse(front: tuple[Simplex, ...]) -> Simplex | None:
    """Strictly increasing maxima of a simplex chain, or None."""
    out = []
    for s in front:
        m = s[-1]
        if out and m <= out[-1]:
            return None
        out.append(m)
    return tuple(out)


def psi_map(g: Graph, h: Graph, k: int,
            side: ProductSide | None = None) -> SparseIntegerMatrix:
    """Degree-k map from the tensor basis to Whitney k-cochains."""
    if side is None:
        side = build_pair(g, h)
    rows = side.complex.grade(k)
    cols = side.tensor.index(k) if k < len(side.tensor.basis_by_degree) else {}
    prov = side.product.provenance
    entries: dict[tuple[int, int], int] = {}
    for r, simplex in enumerate(rows):
        chain, sign = _chain_order(simplex, prov)
        a_chain = tuple(z[0] for z in chain)
        b_chain = tuple(z[1] for z in chain)
        for p in range(k + 1):
            a = _collapse(a_chain[:p + 1])
            if a is None:
                continue
            b = _collapse(b_chain[p:])
            if b is None:
                continue
            col = cols.get((a, b))
            if col is not None:
                entries[(r, col)] = entries.get((r, col), 0) + sign
    return SparseIntegerMatrix(len(rows), len(cols), entries)


@dataclass(frozen=True)
class ChainMapReport:
    degrees: tuple[int, ...]
    violations: tuple[tuple[int, int, int], ...]  # (degree, row, col)

    @property
    def ok(self) -> bool:
        return not self.violations


def chain_map_check(g: Graph, h: Graph,
                    limits: Limits = DEFAULT_LIMITS) -> ChainMapReport:
    """Assert d_Whitney . psi == psi . d_tensor at every degree."""
    side = build_pair(g, h, limits)
    top = side.complex.top_dim
    psis = [psi_map(g, h, k, side) for k in range(top + 1)]
    violations = []
    degrees = []
    for k in range(top):
        degrees.append(k)
        lhs = side.whitney_d[k] @ psis[k]
        if k < len(side.tensor.derivative_matrices):
            rhs = psis[k + 1] @ side.tensor.derivative_matrices[k]
        else:
            rhs = SparseIntegerMatrix(lhs.rows, lhs.cols)
        diff = lhs - rhs
        for (r, c) in sorted(diff.entries):
            violations.append((k, r, c))
    return ChainMapReport(tuple(degrees), tuple(violations))


def derham_betti(g: Graph, h: Graph) -> tuple[int, ...]:
    """Betti vector of the tensor complex via exact ranks."""
    tc = tensor_complex(g, h)
    ranks = [m.rank() for m in tc.derivative_matrices]
    out = []
    for k in range(len(tc.basis_by_degree)):
        rk = ranks[k] if k < len(ranks) else 0
        rk_prev = ranks[k - 1] if k >= 1 else 0
        out.append(tc.dim(k) - rk - rk_prev)
    return tuple(out)


def derham_harmonic_basis(tc: TensorComplex, k: int) -> list[list[Fraction]]:
    """Joint kernel of the degree-k derivative and the prior transpose."""
    n = tc.dim(k)
    constraints = SparseIntegerMatrix(0, n)
    if k < len(tc.derivative_matrices):
        constraints = stack(constraints, tc.derivative_matrices[k])
    if k >= 1:
        constraints = stack(constraints, tc.derivative_matrices[k - 1].transpose())
    return nullspace(constraints)


def _integerize(vec: list[Fraction]) -> list[int]:
    denom = lcm(*[x.denominator for x in vec]) if vec else 1
    return [int(x * denom) for x in vec]


@dataclass(frozen=True)
class IsoReport:
    degree: int
    betti_k: int
    cocycles_ok: bool
    independent_ok: bool

    @property
    def ok(self) -> bool:
        return self.cocycles_ok and self.independent_ok


def cohomology_iso_check(g: Graph, h: Graph, k: int,
                         limits: Limits = DEFAULT_LIMITS) -> IsoReport:
    """psi sends de Rham harmonic forms to independent Whitney classes.

    Rank of [im d_{k-1} | psi(harmonic basis)] must exceed rank(d_{k-1})
    by the full Betti number.
    """
    side = build_pair(g, h, limits)
    basis = derham_harmonic_basis(side.tensor, k)
    bk = len(basis)
    psi = psi_map(g, h, k, side)

    images = []
    cocycles_ok = True
    for vec in basis:
        img = psi.apply(vec)
        if k < len(side.whitney_d):
            if any(x != 0 for x in side.whitney_d[k].apply(img)):
                cocycles_ok = False
        images.append(_integerize(img))

    n_k = len(side.complex.grade(k))
    prev = side.whitney_d[k - 1] if k >= 1 else SparseIntegerMatrix(n_k, 0)
    base_rank = prev.rank()
    cols: list[dict[int, int]] = [dict() for _ in range(prev.cols + bk)]
    for (r, c), v in prev.entries.items():
        cols[c][r] = v
    for j, img in enumerate(images):
        cols[prev.cols + j] = {i: v for i, v in enumerate(img) if v}
    aug_rank = rank_of_rows(cols)
    return IsoReport(k, bk, cocycles_ok, aug_rank == base_rank + bk)


@dataclass(frozen=True)
class HarmonicProductReport:
    pair_count: int
    all_harmonic: bool
    counts_ok: bool

    @property
    def ok(self) -> bool:
        return self.all_harmonic and self.counts_ok


def harmonic_product_check(g: Graph, h: Graph) -> HarmonicProductReport:
    """Products of factor harmonic forms are harmonic in the tensor complex."""
    tc = tensor_complex(g, h)
    bg, bh = betti(g), betti(h)
    cg, ch = oriented_complex(g), oriented_complex(h)

    pair_count = 0
    all_harmonic = True
    for i in range(len(bg)):
        basis_g = harmonic_basis(g, i) if bg[i] else []
        for j in range(len(bh)):
            basis_h = harmonic_basis(h, j) if bh[j] else []
            for f in basis_g:
                for q in basis_h:
                    pair_count += 1
                    k = i + j
                    idx = tc.index(k)
                    vec = [Fraction(0)] * tc.dim(k)
                    for ai, a in enumerate(cg.grade(i)):
                        if f[ai] == 0:
                            continue
                        for bj, b in enumerate(ch.grade(j)):
                            if q[bj] == 0:
                                continue
                            vec[idx[(a, b)]] = f[ai] * q[bj]
                    if k < len(tc.derivative_matrices):
                        if any(x != 0 for x in tc.derivative_matrices[k].apply(vec)):
                            all_harmonic = False
                    if k >= 1:
                        dt = tc.derivative_matrices[k - 1].transpose()
                        if any(x != 0 for x in dt.apply(vec)):
                            all_harmonic = False

    db = derham_betti(g, h)
    counts_ok = True
    for k in range(len(db)):
        expect = sum(
            bg[i] * bh[k - i]
            for i in range(len(bg))
            if 0 <= k - i < len(bh)
        )
        if db[k] != expect:
            counts_ok = False
    return HarmonicProductReport(pair_count, all_harmonic, counts_ok)
