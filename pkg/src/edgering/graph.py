"""Finite simple graphs on vertex sets {1, ..., d}.

Vertices carry 1-based labels.  A set of vertices is represented as an int
bitmask in which bit v-1 stands for vertex v; all set arithmetic downstream
(unions, complements, floods) is plain integer bit twiddling.  The vertex
count is capped at 64 so exhaustive subset scans stay feasible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64

Edge = tuple[int, int]
Cycle = tuple[int, ...]
VertexSet = int


class ParseError(ValueError):
    """Malformed edge-list or graph6 input."""


class UnsupportedError(ValueError):
    """Well-formed input outside the supported domain (e.g. too many vertices)."""


def vset(vertices: Iterable[int]) -> VertexSet:
    """Bitmask for a collection of 1-based vertex labels."""
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def members(mask: VertexSet) -> tuple[int, ...]:
    """Ascending 1-based labels of the vertices in a bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..d.

    Edges are normalized to sorted pairs in lexicographic order, so two
    graphs with the same edge set compare equal and serialize identically.
    ``adj[v-1]`` is the neighbor bitmask of vertex v.
    """

    d: int
    edges: tuple[Edge, ...]
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not isinstance(self.d, int) or self.d < 1:
            raise ValueError(f"vertex count must be a positive integer, got {self.d!r}")
        if self.d > MAX_VERTICES:
            raise UnsupportedError(f"vertex count {self.d} exceeds the {MAX_VERTICES}-vertex bound")
        normalized = []
        for i, j in self.edges:
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (1 <= i <= self.d and 1 <= j <= self.d):
                raise ValueError(f"edge {{{i},{j}}} out of range 1..{self.d}")
            normalized.append((i, j) if i < j else (j, i))
        normalized.sort()
        for a, b in zip(normalized, normalized[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {{{a[0]},{a[1]}}}")
        adj = [0] * self.d
        for i, j in normalized:
            adj[i - 1] |= 1 << (j - 1)
            adj[j - 1] |= 1 << (i - 1)
        object.__setattr__(self, "edges", tuple(normalized))
        object.__setattr__(self, "adj", tuple(adj))

    @property
    def n(self) -> int:
        return len(self.edges)

    @property
    def full(self) -> VertexSet:
        """Bitmask of the whole vertex set."""
        return (1 << self.d) - 1

    def neighbors(self, v: int) -> VertexSet:
        return self.adj[v - 1]

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i - 1] >> (j - 1) & 1)


# ---------------------------------------------------------------------------
# edge-list format: header "d n", then n lines "i j"

def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format: a "d n" header then n lines "i j"."""
    lines = text.splitlines()
    if not lines or not lines[0].split():
        raise ParseError("empty input")
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError(f"line 1: expected header 'd n', got {lines[0]!r}")
    try:
        d, n = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError(f"line 1: expected two integers, got {lines[0]!r}") from None
    if d < 1:
        raise ParseError(f"line 1: vertex count must be positive, got {d}")
    if d > MAX_VERTICES:
        raise UnsupportedError(f"line 1: vertex count {d} exceeds the {MAX_VERTICES}-vertex bound")
    if n < 0:
        raise ParseError(f"line 1: edge count must be nonnegative, got {n}")
    edges: list[Edge] = []
    seen: set[Edge] = set()
    ln = 1
    for ln, line in enumerate(lines[1:], start=2):
        tokens = line.split()
        if not tokens:
            if any(rest.split() for rest in lines[ln:]):
                raise ParseError(f"line {ln}: blank line inside edge list")
            break
        if len(edges) == n:
            raise ParseError(f"line {ln}: trailing data after {n} edges")
        if len(tokens) != 2:
            raise ParseError(f"line {ln}: expected edge 'i j', got {line!r}")
        try:
            i, j = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"line {ln}: expected two integers, got {line!r}") from None
        if i == j:
            raise ParseError(f"line {ln}: loop at vertex {i}")
        if not (1 <= i <= d and 1 <= j <= d):
            raise ParseError(f"line {ln}: edge {{{i},{j}}} out of range 1..{d}")
        e = (i, j) if i < j else (j, i)
        if e in seen:
            raise ParseError(f"line {ln}: duplicate edge {{{e[0]},{e[1]}}}")
        seen.add(e)
        edges.append(e)
    if len(edges) != n:
        raise ParseError(f"expected {n} edges, found {len(edges)}")
    return Graph(d, tuple(edges))


def serialize_edge_list(g: Graph) -> str:
    lines = [f"{g.d} {g.n}"]
    lines += [f"{i} {j}" for i, j in g.edges]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# graph6 format (headerless lines; optional ">>graph6<<" prefix tolerated)

def _g6_size(line: bytes, where: str) -> tuple[int, int]:
    # returns (vertex count, offset of the first adjacency byte)
    b0 = line[0]
    if b0 == 126:
        if len(line) >= 2 and line[1] == 126:
            raise UnsupportedError(f"{where}: vertex count exceeds the {MAX_VERTICES}-vertex bound")
        if len(line) < 4:
            raise ParseError(f"{where}: truncated vertex count")
        parts = [line[k] - 63 for k in (1, 2, 3)]
        if any(p < 0 or p > 63 for p in parts):
            raise ParseError(f"{where}: invalid graph6 byte in vertex count")
        return (parts[0] << 12) | (parts[1] << 6) | parts[2], 4
    if not 63 <= b0 <= 125:
        raise ParseError(f"{where}: invalid graph6 byte {b0}")
    return b0 - 63, 1


def _g6_decode(line: bytes, where: str) -> Graph:
    n, off = _g6_size(line, where)
    if n == 0:
        raise ParseError(f"{where}: empty graph")
    if n > MAX_VERTICES:
        raise UnsupportedError(f"{where}: vertex count {n} exceeds the {MAX_VERTICES}-vertex bound")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = line[off:]
    if len(body) < nbytes:
        raise ParseError(f"{where}: truncated adjacency data")
    if len(body) > nbytes:
        raise ParseError(f"{where}: trailing bytes after adjacency data")
    bits = 0
    for b in body:
        if not 63 <= b <= 126:
            raise ParseError(f"{where}: invalid graph6 byte {b}")
        bits = (bits << 6) | (b - 63)
    pad = 6 * nbytes - nbits
    if bits & ((1 << pad) - 1):
        raise ParseError(f"{where}: nonzero padding bits")
    bits >>= pad
    edges = []
    pos = nbits
    for j in range(2, n + 1):  # upper triangle, column by column
        for i in range(1, j):
            pos -= 1
            if bits >> pos & 1:
                edges.append((i, j))
    return Graph(n, tuple(edges))


def parse_graph6(data: bytes | str) -> list[Graph]:
    """Parse graph6 data, one graph per line; blank lines are skipped."""
    if isinstance(data, str):
        try:
            data = data.encode("ascii")
        except UnicodeEncodeError:
            raise ParseError("graph6 data is not ASCII") from None
    graphs = []
    for ln, raw in enumerate(data.splitlines(), start=1):
        line = raw.strip()
        if line.startswith(b">>graph6<<"):
            line = line[len(b">>graph6<<"):]
        if not line:
            continue
        graphs.append(_g6_decode(line, f"line {ln}"))
    return graphs


def serialize_graph6(g: Graph) -> str:
    """Single graph6 line (no trailing newline, no header)."""
    n = g.d
    if n <= 62:
        prefix = chr(63 + n)
    else:
        prefix = "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    bits = 0
    nbits = n * (n - 1) // 2
    for j in range(2, n + 1):
        for i in range(1, j):
            bits = (bits << 1) | (g.adj[i - 1] >> (j - 1) & 1)
    nbytes = (nbits + 5) // 6
    bits <<= 6 * nbytes - nbits
    body = "".join(chr(63 + (bits >> 6 * (nbytes - 1 - k) & 63)) for k in range(nbytes))
    return prefix + body


# ---------------------------------------------------------------------------
# connectivity and odd cycles

def _flood(g: Graph, start: VertexSet, within: VertexSet) -> VertexSet:
    # vertices of `within` reachable from `start`; start must lie inside `within`
    seen = start
    frontier = start
    adj = g.adj
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= adj[low.bit_length() - 1]
            m ^= low
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def connected_within(g: Graph, s: VertexSet) -> bool:
    """True iff s is empty or induces a connected subgraph."""
    if s == 0:
        return True
    return _flood(g, s & -s, s) == s


def is_connected(g: Graph) -> bool:
    return _flood(g, 1, g.full) == g.full


def connected_components(g: Graph, within: VertexSet | None = None) -> list[VertexSet]:
    """Vertex sets of the connected components, smallest member first.

    With `within` given, components of the subgraph induced on that set.
    """
    rem = g.full if within is None else within
    comps = []
    while rem:
        comp = _flood(g, rem & -rem, rem)
        comps.append(comp)
        rem &= ~comp
    return comps


def _odd_cycle_within(g: Graph, comp: VertexSet) -> Cycle | None:
    # BFS 2-coloring of a connected vertex set; on a same-color edge, walk the
    # two tree paths up to their meet and splice the odd cycle together.
    d = g.d
    parent = [0] * d
    depth = [-1] * d
    root = (comp & -comp).bit_length()
    depth[root - 1] = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        du = depth[u - 1]
        m = g.adj[u - 1] & comp
        while m:
            low = m & -m
            m ^= low
            w = low.bit_length()
            if depth[w - 1] < 0:
                depth[w - 1] = du + 1
                parent[w - 1] = u
                queue.append(w)
            elif (depth[w - 1] ^ du) & 1 == 0:
                a, b = u, w
                pa, pb = [a], [b]
                while depth[a - 1] > depth[b - 1]:
                    a = parent[a - 1]
                    pa.append(a)
                while depth[b - 1] > depth[a - 1]:
                    b = parent[b - 1]
                    pb.append(b)
                while a != b:
                    a = parent[a - 1]
                    pa.append(a)
                    b = parent[b - 1]
                    pb.append(b)
                return canonical_cycle(pa + pb[-2::-1])
    return None


def odd_cycle_witness(g: Graph, s: VertexSet) -> Cycle | None:
    """An odd cycle inside s, or None if the induced subgraph is bipartite.

    s must be nonempty and induce a connected subgraph.  The returned cycle
    is canonical: smallest vertex first, then the smaller neighbor.
    """
    if s == 0:
        raise ValueError("empty vertex set")
    if s & ~g.full:
        raise ValueError("vertex set not within 1..d")
    if not connected_within(g, s):
        raise ValueError("vertex set does not induce a connected subgraph")
    return _odd_cycle_within(g, s)


def is_bipartite(g: Graph) -> bool:
    return all(_odd_cycle_within(g, c) is None for c in connected_components(g))


def every_component_nonbipartite(g: Graph, within: VertexSet) -> bool:
    """True iff each connected piece of `within` contains an odd cycle.

    An empty set passes vacuously.
    """
    return all(
        _odd_cycle_within(g, c) is not None for c in connected_components(g, within)
    )


def canonical_cycle(seq: Sequence[int]) -> Cycle:
    """Rotate and possibly reflect a cyclic vertex sequence into canonical
    form: smallest vertex first, then the lexicographically smaller direction.
    """
    k = min(range(len(seq)), key=seq.__getitem__)
    fwd = tuple(seq[k:]) + tuple(seq[:k])
    rev = (fwd[0],) + tuple(reversed(fwd[1:]))
    return min(fwd, rev)


# ---------------------------------------------------------------------------
# subgraphs and neighborhoods

def induced_subgraph(g: Graph, s: VertexSet) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on s, relabelled to 1..|s|.

    Returns (subgraph, labels) where labels[k-1] is the original label of
    the new vertex k.
    """
    if s == 0:
        raise ValueError("empty vertex set")
    if s & ~g.full:
        raise ValueError("vertex set not within 1..d")
    labels = members(s)
    index = {v: k for k, v in enumerate(labels, start=1)}
    edges = tuple(
        (index[i], index[j])
        for i, j in g.edges
        if s >> (i - 1) & 1 and s >> (j - 1) & 1
    )
    return Graph(len(labels), edges), labels


def neighborhood(g: Graph, t: VertexSet) -> VertexSet:
    """Union of the neighbor sets of the vertices in t."""
    out = 0
    m = t & g.full
    while m:
        low = m & -m
        out |= g.adj[low.bit_length() - 1]
        m ^= low
    return out


# ---------------------------------------------------------------------------
# chordless odd cycles

def chordless_odd_cycles(g: Graph) -> list[Cycle]:
    """All chordless odd cycles, canonical and sorted lexicographically.

    A vertex subset is a chordless cycle exactly when it induces a connected
    2-regular subgraph, so this scans every subset; exponential in d, meant
    for small graphs.
    """
    out = []
    adj = g.adj
    for mask in range(1, 1 << g.d):
        k = mask.bit_count()
        if k < 3 or k & 1 == 0:
            continue
        m = mask
        regular = True
        while m:
            low = m & -m
            if (adj[low.bit_length() - 1] & mask).bit_count() != 2:
                regular = False
                break
            m ^= low
        if regular and connected_within(g, mask):
            out.append(_cycle_order(g, mask))
    out.sort()
    return out


def _cycle_order(g: Graph, mask: VertexSet) -> Cycle:
    # walk a subset known to induce a single cycle, starting at its smallest
    # vertex toward the smaller neighbor; this lands on the canonical form
    start = (mask & -mask).bit_length()
    nb = g.adj[start - 1] & mask
    seq = [start]
    prev, cur = start, (nb & -nb).bit_length()
    while cur != start:
        seq.append(cur)
        nxt = g.adj[cur - 1] & mask & ~(1 << (prev - 1))
        prev, cur = cur, (nxt & -nxt).bit_length()
    return tuple(seq)


# ---------------------------------------------------------------------------
# spanning trees

def spanning_tree_edges(g: Graph) -> tuple[Edge, ...]:
    """Edges of a BFS spanning tree from vertex 1 (graph must be connected)."""
    if not is_connected(g):
        raise ValueError("graph is not connected")
    seen = 1
    queue = deque([1])
    tree = []
    while queue:
        u = queue.popleft()
        m = g.adj[u - 1] & ~seen
        while m:
            low = m & -m
            m ^= low
            w = low.bit_length()
            seen |= low
            tree.append((u, w) if u < w else (w, u))
            queue.append(w)
    return tuple(tree)


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise ValueError("graph is not connected")


# ---------------------------------------------------------------------------
# named families

def cycle_graph(n: int) -> Graph:
    """The n-cycle, n >= 3."""
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return Graph(n, tuple(edges))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs at least 1 vertex, got {n}")
    edges = tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))
    return Graph(n, edges)


def complete_bipartite_graph(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError(f"complete bipartite graph needs positive part sizes, got {a},{b}")
    edges = tuple((i, a + j) for i in range(1, a + 1) for j in range(1, b + 1))
    return Graph(a + b, edges)


def bridge_graph(k: int) -> Graph:
    """Two disjoint triangles {1,2,3} and {4,5,6} joined by k internally
    disjoint paths 3 - (6+i) - 4, one middle vertex each; k >= 1.
    """
    if k < 1:
        raise ValueError(f"bridge graph needs at least 1 path, got {k}")
    edges = [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)]
    for i in range(1, k + 1):
        mid = 6 + i
        edges += [(3, mid), (4, mid)]
    return Graph(6 + k, tuple(edges))


FAMILIES = {
    "bridge": (bridge_graph, 1),
    "cycle": (cycle_graph, 1),
    "complete": (complete_graph, 1),
    "complete_bipartite": (complete_bipartite_graph, 2),
}


def generate_family(name: str, params: Sequence[int]) -> Graph:
    """Build a named family member; see FAMILIES for names and arities."""
    if name not in FAMILIES:
        raise ValueError(f"unknown family {name!r}; known: {', '.join(sorted(FAMILIES))}")
    func, arity = FAMILIES[name]
    if len(params) != arity:
        raise ValueError(f"family {name!r} expects {arity} parameter(s), got {len(params)}")
    return func(*params)


def labelled_graphs(d: int) -> Iterator[Graph]:
    """Every labelled simple graph on vertices 1..d, by edge-subset code."""
    pairs = [(i, j) for i in range(1, d + 1) for j in range(i + 1, d + 1)]
    for code in range(1 << len(pairs)):
        edges = tuple(p for k, p in enumerate(pairs) if code >> k & 1)
        yield Graph(d, edges)
