"""Signed square-free monomial chains encoding graphs.

A monomial is an ascending tuple of namespaced variables (ns, index); a
chain maps monomials to nonzero integer coefficients.  Graphs encode as
all-coefficient-one chains with one term per simplex, and chains decode
back to graphs through full-term divisibility: the monomial must divide
the monomial and the coefficient must divide the coefficient (absolute
values; sign is treated as orientation only).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .graphs import Graph, Simplex, all_simplices

Var = tuple[str, int]
Monomial = tuple[Var, ...]
Term = tuple[Monomial, int]


def monomial(vars_: Iterable[Var]) -> Monomial:
    vs = tuple(sorted(vars_))
    if len(set(vs)) != len(vs):
        raise ValueError("monomial must be square-free")
    if not vs:
        raise ValueError("monomial must be nonempty")
    return vs


@dataclass(frozen=True)
class Chain:
    """Finite integer combination of square-free monomials."""

    terms: tuple[Term, ...]

    @staticmethod
    def from_dict(d: dict[Monomial, int]) -> "Chain":
        return Chain(tuple(sorted((m, c) for m, c in d.items() if c)))

    @staticmethod
    def zero() -> "Chain":
        return Chain(())

    def as_dict(self) -> dict[Monomial, int]:
        return dict(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Chain") -> "Chain":
        d = self.as_dict()
        for m, c in other.terms:
            d[m] = d.get(m, 0) + c
        return Chain.from_dict(d)

    def __neg__(self) -> "Chain":
        return Chain(tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def scale(self, k: int) -> "Chain":
        if k == 0:
            return Chain.zero()
        return Chain(tuple((m, c * k) for m, c in self.terms))

    def monomials(self) -> list[Monomial]:
        return [m for m, _ in self.terms]

    def degree_terms(self, degree: int) -> list[Term]:
        return [(m, c) for m, c in self.terms if len(m) == degree]

    def namespaces(self) -> frozenset[str]:
        return frozenset(ns for m, _ in self.terms for ns, _ in m)


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return set(a) <= set(b)


def term_divides(t1: Term, t2: Term) -> bool:
    """Full-term divisibility: monomial and (absolute) coefficient."""
    (m1, c1), (m2, c2) = t1, t2
    return monomial_divides(m1, m2) and abs(c2) % abs(c1) == 0


# ---------------------------------------------------------------------------
# graph <-> chain


def encode(g: Graph, namespace: str = "a") -> Chain:
    """One +1 term per simplex of g, variables (namespace, vertex index)."""
    return Chain(tuple(
        (tuple((namespace, v) for v in s), 1) for s in all_simplices(g)
    ))


def decode(f: Chain | Sequence[Term]) -> Graph:
    """Graph with one vertex per term, edges by full-term divisibility.

    Accepts either a combined Chain or a raw term list, so that syntactic
    inputs with repeated monomials keep their distinct vertices.
    """
    terms = list(f.terms) if isinstance(f, Chain) else [
        (monomial(m), int(c)) for m, c in f
    ]
    labels = tuple(format_term(m, c) for m, c in terms)
    edges = set()
    for i in range(len(terms)):
        for j in range(i + 1, len(terms)):
            if terms[i][0] == terms[j][0] and not isinstance(f, Chain):
                # distinct syntactic terms with equal monomials: edge only
                # on mutual coefficient divisibility
                if term_divides(terms[i], terms[j]) and term_divides(terms[j], terms[i]):
                    edges.add((i, j))
            elif term_divides(terms[i], terms[j]) or term_divides(terms[j], terms[i]):
                edges.add((i, j))
    return Graph(labels, frozenset(edges))


def multiply(f: Chain, g: Chain) -> Chain:
    """Bilinear product; factors must live in disjoint namespaces."""
    if f.namespaces() & g.namespaces():
        raise ValueError("factors share a namespace; re-encode one of them")
    out: dict[Monomial, int] = {}
    for m1, c1 in f.terms:
        for m2, c2 in g.terms:
            m = tuple(sorted(m1 + m2))
            out[m] = out.get(m, 0) + c1 * c2
    return Chain.from_dict(out)


# ---------------------------------------------------------------------------
# boundary and Euler characteristic


def boundary(f: Chain) -> Chain:
    """Alternating-sign sum of monomial divisors one degree down.

    Signs come from the position of the omitted variable in the canonical
    ascending order; degree-1 monomials map to zero.
    """
    out: dict[Monomial, int] = {}
    for m, c in f.terms:
        if len(m) == 1:
            continue
        for i in range(len(m)):
            sub = m[:i] + m[i + 1:]
            out[sub] = out.get(sub, 0) + c * (-1) ** i
    return Chain.from_dict(out)


def chain_euler(f: Chain) -> int:
    """Euler characteristic: minus the evaluation at (-1, ..., -1)."""
    return -sum(c * (-1) ** len(m) for m, c in f.terms)


def inner_product(f: Chain, g: Chain) -> int:
    d = g.as_dict()
    return sum(c * d.get(m, 0) for m, c in f.terms)


# ---------------------------------------------------------------------------
# spheres and dimension


def chain_sphere(f: Chain, t: Term) -> Chain:
    """Sub-chain of terms term-dividing t or term-divisible by t."""
    if t not in f.terms:
        raise ValueError(f"term {t!r} is not part of the chain")
    keep = [
        (m, c) for m, c in f.terms
        if (m, c) != t and (term_divides((m, c), t) or term_divides(t, (m, c)))
    ]
    return Chain(tuple(keep))


def _vertex_sphere(f_dict: dict[Monomial, int], v: Var) -> dict[Monomial, int]:
    """All multiples of the variable v, divided by v."""
    out = {}
    for m, c in f_dict.items():
        if len(m) > 1 and v in m:
            out[tuple(x for x in m if x != v)] = c
    return out


def chain_small_dimension(f: Chain) -> Fraction:
    """Recursive dimension on the chain itself.

    A vertex is a degree-1 monomial; its sphere is the chain of all its
    proper multiples divided by it; the dimension of a chain is one plus
    the average dimension of its vertex spheres, with the vertexless
    chain at -1.  Chains coming from graphs recover the graph dimension.
    """
    def dim_of(d: dict[Monomial, int]) -> Fraction:
        verts = [m[0] for m in d if len(m) == 1]
        if not verts:
            return Fraction(-1)
        total = Fraction(0)
        for v in verts:
            total += 1 + dim_of(_vertex_sphere(d, v))
        return total / len(verts)

    return dim_of(f.as_dict())


def chain_large_dimension(f: Chain) -> Fraction:
    """Dimension of the decoded divisibility graph."""
    from .topology import inductive_dimension

    return inductive_dimension(decode(f)).total


def chain_contractible(f: Chain) -> bool:
    """Recursive contractibility on the divisibility structure.

    A single term is contractible; otherwise some degree-1 variable must
    have a contractible sphere (its proper multiples) and leave a
    contractible chain after removing its whole star.
    """
    def contract(terms: tuple[Term, ...]) -> bool:
        if not terms:
            return False
        if len(terms) == 1:
            return True
        verts = [(m, c) for m, c in terms if len(m) == 1]
        for vm, vc in verts:
            v = vm[0]
            # dividing by v keeps the divisibility structure of the link
            link = tuple(
                (tuple(x for x in m if x != v), c)
                for m, c in terms if v in m and m != vm
            )
            rest = tuple((m, c) for m, c in terms if v not in m)
            if contract(link) and contract(rest):
                return True
        return False

    return contract(f.terms)


# ---------------------------------------------------------------------------
# text serialization

_VAR_RE = re.compile(r"^([A-Za-z]+)(\d+)$")


def format_var(v: Var) -> str:
    return f"{v[0]}{v[1]}"


def format_term(m: Monomial, c: int) -> str:
    return f"{c}*{'.'.join(format_var(v) for v in m)}"


def chain_to_text(f: Chain) -> str:
    """Signed monomial sum, e.g. '3*a1 + 5*b2 - 1*a1.a2'."""
    if f.is_zero():
        return "0"
    parts = []
    for i, (m, c) in enumerate(f.terms):
        body = f"{abs(c)}*{'.'.join(format_var(v) for v in m)}"
        if i == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def parse_var(text: str) -> Var:
    m = _VAR_RE.match(text)
    if not m:
        raise ValueError(f"bad variable {text!r}")
    return (m.group(1), int(m.group(2)))


def chain_from_text(text: str) -> Chain:
    text = text.strip()
    if text == "0" or not text:
        return Chain.zero()
    tokens = text.replace("- ", "-").replace("+ ", "+").split()
    out: dict[Monomial, int] = {}
    for tok in tokens:
        sign = 1
        if tok.startswith("-"):
            sign, tok = -1, tok[1:]
        elif tok.startswith("+"):
            tok = tok[1:]
        if "*" not in tok:
            raise ValueError(f"bad term {tok!r}; expected coeff*monomial")
        coeff_s, mono_s = tok.split("*", 1)
        m = monomial(parse_var(v) for v in mono_s.split("."))
        out[m] = out.get(m, 0) + sign * int(coeff_s)
    return Chain.from_dict(out)
