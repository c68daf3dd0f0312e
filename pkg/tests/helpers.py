"""Shared test utilities: brute-force reimplementations on networkx.

Everything here recomputes package predicates from their definitions with
independent machinery (networkx traversals, itertools subsets), so tests
can compare two implementations that share no code.
"""

from __future__ import annotations

import itertools
import random

import networkx as nx
from hypothesis import strategies as st

from edgering import Graph, members, vset


def nx_graph(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(1, g.d + 1))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    verts = sorted(h.nodes)
    index = {v: k for k, v in enumerate(verts, start=1)}
    return Graph(len(verts), tuple((index[a], index[b]) for a, b in h.edges))


def brute_regular_vertex(g: Graph, v: int) -> bool:
    h = nx_graph(g)
    h.remove_node(v)
    return all(
        not nx.bipartite.is_bipartite(h.subgraph(c)) for c in nx.connected_components(h)
    )


def brute_fundamental(g: Graph, tset: frozenset[int]) -> bool:
    h = nx_graph(g)
    if any(h.has_edge(a, b) for a in tset for b in tset):
        return False
    nb = set()
    for v in tset:
        nb |= set(h.neighbors(v))
    bip = nx.Graph()
    bip.add_nodes_from(tset | nb)
    bip.add_edges_from(
        (a, b) for a, b in h.edges if (a in tset) != (b in tset) and {a, b} <= tset | nb
    )
    if not nx.is_connected(bip):
        return False
    rest = set(h.nodes) - tset - nb
    if not rest:
        return True
    sub = h.subgraph(rest)
    return all(
        not nx.bipartite.is_bipartite(sub.subgraph(c)) for c in nx.connected_components(sub)
    )


def brute_fundamental_sets(g: Graph) -> list[tuple[int, ...]]:
    out = []
    for r in range(1, g.d + 1):
        for combo in itertools.combinations(range(1, g.d + 1), r):
            if brute_fundamental(g, frozenset(combo)):
                out.append(combo)
    out.sort()
    return out


def brute_chordless_odd_cycles(g: Graph) -> list[tuple[int, ...]]:
    h = nx_graph(g)
    out = []
    for r in range(3, g.d + 1, 2):
        for combo in itertools.combinations(range(1, g.d + 1), r):
            sub = h.subgraph(combo)
            if all(d == 2 for _, d in sub.degree) and nx.is_connected(sub):
                verts = set(combo)
                start = min(verts)
                seq = [start]
                prev, cur = None, start
                while True:
                    nbrs = sorted(w for w in sub.neighbors(cur) if w != prev)
                    nxt = nbrs[0]
                    if nxt == start:
                        break
                    seq.append(nxt)
                    prev, cur = cur, nxt
                out.append(tuple(seq))
    out.sort()
    return out


def brute_r1(g: Graph) -> tuple[bool, list]:
    """The connectivity criterion recomputed on networkx from scratch.

    Returns (verdict, violations) with violations as ('regular', v) or
    ('fundamental', vertex tuple), sorted regular-first.
    """
    h = nx_graph(g)
    if nx.bipartite.is_bipartite(h):
        return (True, [])
    violations = []
    for v in sorted(h.nodes):
        if brute_regular_vertex(g, v):
            rest = h.subgraph(set(h.nodes) - {v})
            if rest.number_of_nodes() and not nx.is_connected(rest):
                violations.append(("regular", v))
    for combo in brute_fundamental_sets(g):
        tset = set(combo)
        nb = set()
        for v in tset:
            nb |= set(h.neighbors(v))
        rest = set(h.nodes) - tset - nb
        if rest and not nx.is_connected(h.subgraph(rest)):
            violations.append(("fundamental", combo))
    return (not violations, violations)


def as_brute_violation(f) -> tuple:
    from edgering import RegularVertex

    if isinstance(f, RegularVertex):
        return ("regular", f.vertex)
    return ("fundamental", f.vertices)


def random_graph(rng: random.Random, d: int, p: float) -> Graph:
    pairs = [(i, j) for i in range(1, d + 1) for j in range(i + 1, d + 1)]
    return Graph(d, tuple(e for e in pairs if rng.random() < p))


def random_connected_nonbipartite(rng: random.Random, d: int, p: float) -> Graph:
    from edgering import is_bipartite, is_connected

    while True:
        g = random_graph(rng, d, p)
        if is_connected(g) and not is_bipartite(g):
            return g


# hypothesis strategies

@st.composite
def graphs(draw, min_d: int = 1, max_d: int = 8) -> Graph:
    d = draw(st.integers(min_d, max_d))
    pairs = [(i, j) for i in range(1, d + 1) for j in range(i + 1, d + 1)]
    picked = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return Graph(d, tuple(picked))


@st.composite
def connected_nonbipartite_graphs(draw, min_d: int = 3, max_d: int = 7) -> Graph:
    from edgering import is_bipartite, is_connected

    d = draw(st.integers(min_d, max_d))
    pairs = [(i, j) for i in range(1, d + 1) for j in range(i + 1, d + 1)]
    base = [(i, i + 1) for i in range(1, d)] + [(1, 3), (2, 3)]
    extra = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    g = Graph(d, tuple(set(base) | set(extra)))
    assert is_connected(g) and not is_bipartite(g)
    return g
