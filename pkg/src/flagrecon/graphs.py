"""Finite simple graphs: subgraph algebra, named families, exact canonical labelling.

Vertex identifiers are opaque strings.  Internally a graph keeps one integer
bitset of neighbour indices per vertex; induced subgraphs, clique search and
partition refinement then reduce to word-level bit operations, which is fast
enough at the dozens-of-vertices scale this library targets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "Graph",
    "full_subgraph",
    "vertex_deleted",
    "complement",
    "join",
    "disjoint_union",
    "is_connected",
    "canonical_form",
    "graph_from_canonical_form",
    "are_isomorphic",
    "cycle",
    "path",
    "complete",
    "complete_multipartite",
    "cross_polytope",
    "torus_grid",
    "icosahedron",
    "generate",
    "FAMILIES",
]


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable finite simple graph on labelled vertices.

    ``labels`` fixes the vertex order; ``adj[i]`` is the bitset of indices
    adjacent to ``labels[i]``.  Loops are rejected and adjacency must be
    symmetric.
    """

    labels: tuple[str, ...]
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise ValueError("duplicate vertex label")
        if len(self.adj) != n:
            raise ValueError("adjacency row count does not match vertex count")
        for i, row in enumerate(self.adj):
            if row < 0 or row >> n:
                raise ValueError("adjacency bits reference unknown vertices")
            if row >> i & 1:
                raise ValueError(f"self-loop at vertex {self.labels[i]!r}")
        for i in range(n):
            for j in iter_bits(self.adj[i]):
                if not self.adj[j] >> i & 1:
                    raise ValueError("adjacency must be symmetric")

    @classmethod
    def from_edges(
        cls, vertices: Iterable[str], edges: Iterable[tuple[str, str]]
    ) -> "Graph":
        labels = tuple(vertices)
        pos = {v: i for i, v in enumerate(labels)}
        if len(pos) != len(labels):
            raise ValueError("duplicate vertex label")
        adj = [0] * len(labels)
        for u, v in edges:
            if u not in pos or v not in pos:
                raise ValueError(f"edge ({u!r}, {v!r}) references unknown vertex")
            if u == v:
                raise ValueError(f"self-loop at vertex {u!r}")
            adj[pos[u]] |= 1 << pos[v]
            adj[pos[v]] |= 1 << pos[u]
        return cls(labels, tuple(adj))

    @cached_property
    def _pos(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.labels)}

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def index(self, v: str) -> int:
        try:
            return self._pos[v]
        except KeyError:
            raise ValueError(f"unknown vertex {v!r}") from None

    def has_edge(self, u: str, v: str) -> bool:
        return bool(self.adj[self.index(u)] >> self.index(v) & 1)

    def degree(self, v: str) -> int:
        return self.adj[self.index(v)].bit_count()

    def neighbors(self, v: str) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in iter_bits(self.adj[self.index(v)]))

    def edges(self) -> list[tuple[str, str]]:
        out = []
        for i, row in enumerate(self.adj):
            for j in iter_bits(row):
                if j > i:
                    out.append((self.labels[i], self.labels[j]))
        return out

    def relabel(self, mapping: Mapping[str, str]) -> "Graph":
        """Rename vertices through a bijective mapping; adjacency is unchanged."""
        new = tuple(mapping[v] for v in self.labels)
        return Graph(new, self.adj)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph({self.vertex_count} vertices, {self.edge_count} edges)"


# ---------------------------------------------------------------------------
# subgraph algebra
# ---------------------------------------------------------------------------


def full_subgraph(g: Graph, t: Iterable[str]) -> Graph:
    """Induced subgraph on the vertex subset ``t``, labels preserved.

    The result keeps the relative vertex order of ``g``.
    """
    wanted = set(t)
    for v in wanted:
        g.index(v)  # raises on unknown vertices
    keep = [i for i, v in enumerate(g.labels) if v in wanted]
    mask = sum(1 << i for i in keep)
    new_index = {old: new for new, old in enumerate(keep)}
    adj = []
    for i in keep:
        row = 0
        for j in iter_bits(g.adj[i] & mask):
            row |= 1 << new_index[j]
        adj.append(row)
    return Graph(tuple(g.labels[i] for i in keep), tuple(adj))


def vertex_deleted(g: Graph, s: str) -> Graph:
    """The card of ``g`` at ``s``: delete the vertex and its incident edges."""
    g.index(s)
    return full_subgraph(g, (v for v in g.labels if v != s))


def complement(g: Graph) -> Graph:
    n = g.vertex_count
    full = (1 << n) - 1
    adj = tuple((full & ~g.adj[i]) & ~(1 << i) for i in range(n))
    return Graph(g.labels, adj)


def join(g1: Graph, g2: Graph) -> Graph:
    """Graph join: disjoint copies of both graphs plus all cross edges."""
    overlap = set(g1.labels) & set(g2.labels)
    if overlap:
        raise ValueError(f"label sets overlap: {sorted(overlap)}")
    n1 = g1.vertex_count
    labels = g1.labels + g2.labels
    cross1 = ((1 << g2.vertex_count) - 1) << n1
    cross2 = (1 << n1) - 1
    adj = [row | cross1 for row in g1.adj]
    adj += [(row << n1) | cross2 for row in g2.adj]
    return Graph(labels, tuple(adj))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    overlap = set(g1.labels) & set(g2.labels)
    if overlap:
        raise ValueError(f"label sets overlap: {sorted(overlap)}")
    n1 = g1.vertex_count
    adj = list(g1.adj) + [row << n1 for row in g2.adj]
    return Graph(g1.labels + g2.labels, tuple(adj))


def is_connected(g: Graph) -> bool:
    """Breadth-first reachability; a single vertex counts as connected."""
    n = g.vertex_count
    if n == 0:
        raise ValueError("connectivity of the empty graph is undefined")
    seen = 1
    frontier = 1
    while frontier:
        grown = seen
        for i in iter_bits(frontier):
            grown |= g.adj[i]
        frontier = grown & ~seen
        seen = grown
    return seen == (1 << n) - 1


# ---------------------------------------------------------------------------
# canonical labelling
# ---------------------------------------------------------------------------
#
# Individualisation-refinement search.  Colourings are refined to equitability;
# branching individualises one vertex of the first non-singleton colour class.
# The certificate is the minimum, over all orderings compatible with the search
# tree, of the packed upper-triangle adjacency bits, so equal certificates hold
# exactly for isomorphic graphs (the certificate decodes back to a graph).


def _refine(n: int, adj: Sequence[int], colors: list[int]) -> list[int]:
    """Refine a colouring to equitability.

    Vertices are recoloured by (old colour, neighbour-colour counts) until
    stable.  New colour ids follow the sorted signature order, so the refined
    colouring is a refinement of the input order and is invariant under
    relabelling.
    """
    while True:
        ncol = max(colors) + 1
        sigs: list[tuple[int, tuple[int, ...]]] = []
        for v in range(n):
            counts = [0] * ncol
            rest = adj[v]
            while rest:
                low = rest & -rest
                counts[colors[low.bit_length() - 1]] += 1
                rest ^= low
            sigs.append((colors[v], tuple(counts)))
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        refined = [rank[s] for s in sigs]
        if refined == colors:
            return colors
        colors = refined


def _cells_of(colors: Sequence[int]) -> list[list[int]]:
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    return [cells[c] for c in sorted(cells)]


def _is_homogeneous(adj: Sequence[int], cells: list[list[int]]) -> bool:
    """True when every pair of colour classes is joined completely or not at all.

    The partition is already equitable, so one representative per class
    suffices.  When this holds, every class-order-respecting vertex order
    yields the same adjacency matrix and branching can stop.
    """
    masks = [sum(1 << v for v in cell) for cell in cells]
    for a, cell in enumerate(cells):
        row = adj[cell[0]]
        for b, mask in enumerate(masks):
            d = (row & mask).bit_count()
            limit = len(cells[b]) - 1 if a == b else len(cells[b])
            if d != 0 and d != limit:
                return False
    return True


def _certificate(n: int, adj: Sequence[int], order: Sequence[int]) -> bytes:
    """Pack the upper-triangle adjacency bits of ``order`` column by column."""
    acc = 0
    nbits = 0
    out = bytearray()
    for j in range(1, n):
        row = adj[order[j]]
        for i in range(j):
            acc = acc << 1 | (row >> order[i] & 1)
            nbits += 1
            if nbits == 8:
                out.append(acc)
                acc = 0
                nbits = 0
    if nbits:
        out.append(acc << (8 - nbits))
    return bytes(out)


@lru_cache(maxsize=1 << 16)
def canonical_form(g: Graph) -> bytes:
    """Canonical certificate of the isomorphism class of ``g``.

    Exact: two graphs receive equal certificates if and only if they are
    isomorphic.  The certificate embeds the vertex count, so graphs of
    different orders never collide.
    """
    n = g.vertex_count
    if n == 0:
        return b"0:"
    adj = g.adj
    best: bytes | None = None

    def visit(colors: list[int]) -> None:
        nonlocal best
        colors = _refine(n, adj, colors)
        cells = _cells_of(colors)
        if len(cells) == n or _is_homogeneous(adj, cells):
            order = [v for cell in cells for v in cell]
            cert = _certificate(n, adj, order)
            if best is None or cert < best:
                best = cert
            return
        target = next(cell for cell in cells if len(cell) > 1)
        for v in target:
            branched = [c * 2 for c in colors]
            branched[v] -= 1
            visit(branched)

    visit([0] * n)
    assert best is not None
    return b"%d:" % n + best


def graph_from_canonical_form(cert: bytes) -> Graph:
    """Decode a certificate back into its canonically labelled representative."""
    head, sep, packed = cert.partition(b":")
    if not sep:
        raise ValueError("malformed certificate")
    n = int(head)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if packed[k >> 3] >> (7 - (k & 7)) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(tuple(str(i) for i in range(n)), tuple(adj))


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    return canonical_form(g1) == canonical_form(g2)


# ---------------------------------------------------------------------------
# named families
# ---------------------------------------------------------------------------


def _range_labels(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


def cycle(n: int) -> Graph:
    """The cycle C_n, n >= 3.

    >>> cycle(3).edge_count
    3
    """
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    labels = _range_labels(n)
    return Graph.from_edges(labels, [(labels[i], labels[(i + 1) % n]) for i in range(n)])


def path(n: int) -> Graph:
    """The path P_n on n >= 1 vertices."""
    if n < 1:
        raise ValueError("paths need at least 1 vertex")
    labels = _range_labels(n)
    return Graph.from_edges(labels, [(labels[i], labels[i + 1]) for i in range(n - 1)])


def complete(n: int) -> Graph:
    """The complete graph K_n, n >= 1."""
    if n < 1:
        raise ValueError("complete graphs need at least 1 vertex")
    labels = _range_labels(n)
    return Graph.from_edges(
        labels, [(labels[i], labels[j]) for i in range(n) for j in range(i + 1, n)]
    )


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph with the given part sizes, parts consecutive.

    >>> complete_multipartite([2, 2, 2]).edge_count
    12
    """
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError("part sizes must be positive")
    n = sum(sizes)
    labels = _range_labels(n)
    part = []
    for p, s in enumerate(sizes):
        part += [p] * s
    edges = [
        (labels[i], labels[j])
        for i in range(n)
        for j in range(i + 1, n)
        if part[i] != part[j]
    ]
    return Graph.from_edges(labels, edges)


def cross_polytope(k: int) -> Graph:
    """1-skeleton of the k-dimensional cross polytope: K_{2,...,2} with k parts.

    k = 2 is the 4-cycle, k = 3 the octahedron.
    """
    if k < 1:
        raise ValueError("cross polytopes need k >= 1")
    return complete_multipartite([2] * k)


def torus_grid(p: int, q: int) -> Graph:
    """Triangulated p-by-q torus grid, p, q >= 4.

    Vertex (i, j) is adjacent to (i±1, j), (i, j±1), (i+1, j+1) and
    (i-1, j-1), all mod (p, q).  Every vertex has degree 6 and the clique
    complex is the standard flag triangulation of the torus.
    """
    if p < 4 or q < 4:
        raise ValueError("torus grids need p, q >= 4")
    labels = tuple(f"{i},{j}" for i in range(p) for j in range(q))
    edges = []
    for i in range(p):
        for j in range(q):
            a = f"{i},{j}"
            for di, dj in ((1, 0), (0, 1), (1, 1)):
                edges.append((a, f"{(i + di) % p},{(j + dj) % q}"))
    return Graph.from_edges(labels, edges)


def icosahedron() -> Graph:
    """1-skeleton of the icosahedron: 12 vertices, 30 edges, 20 triangles.

    Vertex 0 is one apex, 1..5 and 6..10 the two rings, 11 the other apex.
    """
    edges = []
    for i in range(5):
        u, un = str(1 + i), str(1 + (i + 1) % 5)
        l, ln = str(6 + i), str(6 + (i + 1) % 5)
        edges += [("0", u), (u, un), ("11", l), (l, ln), (u, l), (u, ln)]
    return Graph.from_edges(_range_labels(12), edges)


FAMILIES = {
    "cycle": (cycle, 1),
    "path": (path, 1),
    "complete": (complete, 1),
    "complete_multipartite": (complete_multipartite, None),
    "cross_polytope": (cross_polytope, 1),
    "torus_grid": (torus_grid, 2),
    "icosahedron": (icosahedron, 0),
}


def generate(family: str, params: Sequence[int] = ()) -> Graph:
    """Build a named family member; deterministic labelling.

    ``family`` is one of ``FAMILIES``; ``params`` are its integer parameters
    (variadic for ``complete_multipartite``).
    """
    if family not in FAMILIES:
        raise ValueError(
            f"unknown family {family!r}; choose from {', '.join(sorted(FAMILIES))}"
        )
    fn, arity = FAMILIES[family]
    params = list(params)
    if arity is None:
        return fn(params)
    if len(params) != arity:
        raise ValueError(f"family {family!r} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)
