"""Facet data of the edge polytope: regular vertices and fundamental sets.

For a connected nonbipartite graph the facets of the edge polytope come in
two kinds, each named by a vertex or a vertex set:

* a vertex i is regular when every connected component of the graph with i
  deleted contains an odd cycle;
* an independent set T is fundamental when the bipartite subgraph spanned by
  the edges between T and its neighborhood N(T) is connected, and the rest
  of the graph is empty or has an odd cycle in every component.

Each descriptor carries a supporting linear form: the coordinate form x_i
for a regular vertex, and (sum over N(T) minus sum over T) for a fundamental
set, halved when T and N(T) exhaust the vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence, Union

from .graph import (
    Graph,
    VertexSet,
    every_component_nonbipartite,
    is_bipartite,
    members,
    neighborhood,
    require_connected,
)


@dataclass(frozen=True)
class RegularVertex:
    vertex: int


@dataclass(frozen=True)
class Fundamental:
    mask: VertexSet

    @property
    def vertices(self) -> tuple[int, ...]:
        return members(self.mask)

    def __repr__(self) -> str:
        return "Fundamental({%s})" % ", ".join(str(v) for v in self.vertices)


FacetDescriptor = Union[RegularVertex, Fundamental]


@dataclass(frozen=True)
class SupportForm:
    """Integer linear form with denominator 1 or 2, evaluated exactly."""

    coeffs: tuple[int, ...]
    denom: int

    def __post_init__(self) -> None:
        if self.denom not in (1, 2):
            raise ValueError(f"denominator must be 1 or 2, got {self.denom}")
        if not any(self.coeffs):
            raise ValueError("zero form")

    def value(self, vec: Sequence[int]) -> Fraction:
        return Fraction(sum(c * x for c, x in zip(self.coeffs, vec)), self.denom)


def facet_sort_key(f: FacetDescriptor) -> tuple:
    """Regular vertices by label first, then fundamental sets lexicographically."""
    if isinstance(f, RegularVertex):
        return (0, (f.vertex,))
    return (1, f.vertices)


# ---------------------------------------------------------------------------
# regular vertices

def is_regular_vertex(g: Graph, v: int) -> bool:
    """True iff every component of the graph minus v contains an odd cycle."""
    if not 1 <= v <= g.d:
        raise ValueError(f"vertex {v} out of range 1..{g.d}")
    return every_component_nonbipartite(g, g.full & ~(1 << (v - 1)))


def regular_vertices(g: Graph) -> list[int]:
    return [v for v in range(1, g.d + 1) if is_regular_vertex(g, v)]


# ---------------------------------------------------------------------------
# fundamental sets

def _bipartite_part_connected(g: Graph, t: VertexSet, nb: VertexSet) -> bool:
    # connectivity of the graph on t | nb using only edges between t and nb
    total = t | nb
    start = t & -t
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length()
            if t >> (v - 1) & 1:
                nxt |= g.adj[v - 1] & nb
            else:
                nxt |= g.adj[v - 1] & t
        frontier = nxt & ~seen
        seen |= frontier
    return seen == total


def _rest_components_odd(g: Graph, t: VertexSet, nb: VertexSet) -> bool:
    rest = g.full & ~(t | nb)
    return rest == 0 or every_component_nonbipartite(g, rest)


def is_fundamental(g: Graph, t: VertexSet) -> bool:
    """Fundamental set test: t independent, the t-to-N(t) bipartite subgraph
    connected, and every component away from t and N(t) nonbipartite.
    """
    if t == 0:
        raise ValueError("empty vertex set")
    if t & ~g.full:
        raise ValueError("vertex set not within 1..d")
    m = t
    while m:
        low = m & -m
        if g.adj[low.bit_length() - 1] & t:
            return False
        m ^= low
    nb = neighborhood(g, t)
    return _bipartite_part_connected(g, t, nb) and _rest_components_odd(g, t, nb)


def iter_fundamental_sets(g: Graph) -> Iterator[VertexSet]:
    """Fundamental sets, in lexicographic order of their sorted vertex tuples.

    Walks the independent sets depth-first in label order, so the yield
    order is the lexicographic order on vertex tuples.
    """
    d = g.d

    def extend(mask: VertexSet, start: int) -> Iterator[VertexSet]:
        for v in range(start, d + 1):
            if g.adj[v - 1] & mask:
                continue
            sub = mask | (1 << (v - 1))
            yield sub
            yield from extend(sub, v + 1)

    for t in extend(0, 1):
        nb = neighborhood(g, t)
        if _bipartite_part_connected(g, t, nb) and _rest_components_odd(g, t, nb):
            yield t


def enumerate_fundamental_sets(g: Graph) -> list[VertexSet]:
    return list(iter_fundamental_sets(g))


# ---------------------------------------------------------------------------
# supporting forms and the facet list

def _form_for(g: Graph, f: FacetDescriptor) -> SupportForm:
    # no validation; callers pass descriptors already known to be facets
    if isinstance(f, RegularVertex):
        coeffs = [0] * g.d
        coeffs[f.vertex - 1] = 1
        return SupportForm(tuple(coeffs), 1)
    t = f.mask
    nb = neighborhood(g, t)
    coeffs = [0] * g.d
    m = nb
    while m:
        low = m & -m
        coeffs[low.bit_length() - 1] = 1
        m ^= low
    m = t
    while m:
        low = m & -m
        coeffs[low.bit_length() - 1] = -1
        m ^= low
    return SupportForm(tuple(coeffs), 2 if (t | nb) == g.full else 1)


def support_form(g: Graph, f: FacetDescriptor) -> SupportForm:
    """Supporting form of a facet descriptor; validates the descriptor."""
    if isinstance(f, RegularVertex):
        if not is_regular_vertex(g, f.vertex):
            raise ValueError(f"vertex {f.vertex} is not regular")
        return _form_for(g, f)
    if isinstance(f, Fundamental):
        if not is_fundamental(g, f.mask):
            raise ValueError(f"{f!r} is not a fundamental set")
        return _form_for(g, f)
    raise TypeError(f"not a facet descriptor: {f!r}")


def facets(g: Graph) -> list[FacetDescriptor]:
    """All facet descriptors of the edge polytope, in facet_sort_key order.

    Requires a connected nonbipartite graph; the facet description below
    two dimensions degenerates otherwise.
    """
    require_connected(g)
    if is_bipartite(g):
        raise ValueError("graph is bipartite; facet data needs an odd cycle")
    out: list[FacetDescriptor] = [RegularVertex(v) for v in regular_vertices(g)]
    out += [Fundamental(t) for t in iter_fundamental_sets(g)]
    return out
