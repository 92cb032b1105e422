"""Ground-truth helpers for the test suite.

Everything here is deliberately naive: permutation sweeps, rational-arithmetic
ranks, full subset enumeration. The library has to agree with these on inputs
small enough for the naive version to finish.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, permutations

from hypothesis import strategies as st

from flagrecon import (
    Graph,
    NerveSystem,
    SimplicialComplex,
    cross_polytope,
    cycle,
    full_subcomplex,
    icosahedron,
    join,
    path,
    reduced_cohomology_via_cochains,
    torus_grid,
)
from flagrecon import complete as complete_graph


def graph_on(labels: list[str], mask: int) -> Graph:
    """Graph from an upper-triangle bitmask, lowest bit = (0,1), row-major."""
    edges = []
    k = 0
    for i in range(len(labels)):
        for j in range(i + 1, len(labels)):
            if mask >> k & 1:
                edges.append((labels[i], labels[j]))
            k += 1
    return Graph.from_edges(labels, edges)


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    mask = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return graph_on([f"v{i}" for i in range(n)], mask)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    labels = [f"v{i}" for i in range(n)]
    edges = [
        (labels[i], labels[j])
        for i, j in combinations(range(n), 2)
        if rng.random() < p
    ]
    return Graph.from_edges(labels, edges)


def hub(label: str = "h") -> Graph:
    return Graph.from_edges([label], [])


def small_corpus() -> list[tuple[str, Graph]]:
    """The named graphs most tests cycle through."""
    return [
        ("C4", cycle(4)),
        ("C5", cycle(5)),
        ("C6", cycle(6)),
        ("C7", cycle(7)),
        ("P4", path(4)),
        ("K4", complete_graph(4)),
        ("K22", cross_polytope(2)),
        ("K222", cross_polytope(3)),
        ("wheel", join(cycle(4), hub())),
        ("torus44", torus_grid(4, 4)),
        ("icosa", icosahedron()),
    ]


def iso_bijection(g1: Graph, g2: Graph) -> dict[str, str] | None:
    """Exhaustive isomorphism search over all vertex bijections.

    Returns one witnessing bijection or None. Factorial cost, so callers
    stay at 8 vertices or fewer.
    """
    n = g1.vertex_count
    if n != g2.vertex_count or g1.edge_count != g2.edge_count:
        return None
    assert n <= 8, "permutation oracle is factorial; keep inputs small"
    pairs = list(combinations(range(n), 2))
    for perm in permutations(range(n)):
        if all(
            g1.has_edge(g1.labels[i], g1.labels[j])
            == g2.has_edge(g2.labels[perm[i]], g2.labels[perm[j]])
            for i, j in pairs
        ):
            return {g1.labels[i]: g2.labels[perm[i]] for i in range(n)}
    return None


def rational_rank(rows: list[list[int]]) -> int:
    """Matrix rank by Gauss-Jordan elimination over Q."""
    m = [[Fraction(x) for x in row] for row in rows]
    cols = len(m[0]) if m else 0
    rank = 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][c]
        m[rank] = [x * inv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def determinant(rows: list[list[int]]) -> Fraction:
    """Exact determinant by fraction-pivot elimination."""
    n = len(rows)
    assert all(len(row) == n for row in rows)
    m = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for r in range(c + 1, n):
            if m[r][c]:
                f = m[r][c] * inv
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return det


def is_unimodular(rows: list[list[int]]) -> bool:
    return abs(determinant(rows)) == 1


def brute_maximal_cliques(g: Graph) -> list[frozenset[str]]:
    """Maximal cliques by sweeping all 2^n vertex subsets."""
    n = g.vertex_count
    assert n <= 14
    cliques = []
    for mask in range(1, 1 << n):
        vs = [i for i in range(n) if mask >> i & 1]
        if all(g.has_edge(g.labels[i], g.labels[j]) for i, j in combinations(vs, 2)):
            cliques.append(frozenset(g.labels[i] for i in vs))
    return [c for c in cliques if not any(c < d for d in cliques)]


def naive_boundary_rows(L: SimplicialComplex, k: int) -> list[list[int]]:
    """Reduced k-th boundary matrix, rebuilt from the face lists.

    Rows follow (k-1)-faces (a single empty-face row when k = 0), columns
    follow k-faces; the sign of a face is the parity of the dropped position.
    """
    dim = L.dimension
    if k < 0 or k > dim:
        return []
    cols = L.simplices[k]
    if k == 0:
        return [[1] * len(cols)]
    rows_index = {face: r for r, face in enumerate(L.simplices[k - 1])}
    rows = [[0] * len(cols) for _ in rows_index]
    for c, simplex in enumerate(cols):
        for i in range(len(simplex)):
            face = simplex[:i] + simplex[i + 1 :]
            rows[rows_index[face]][c] = -1 if i % 2 else 1
    return rows


def rational_betti(L: SimplicialComplex) -> dict[int, int]:
    """Reduced Betti numbers over Q; torsion is invisible here by design."""
    if L.vertex_count == 0:
        return {-1: 1}
    dim = L.dimension
    ranks = {}
    for k in range(dim + 2):
        rows = naive_boundary_rows(L, k)
        ranks[k] = rational_rank(rows) if rows else 0
    betti = {-1: 1 - ranks[0]}
    for k in range(dim + 1):
        betti[k] = len(L.simplices[k]) - ranks[k] - ranks[k + 1]
    return {k: b for k, b in betti.items() if b}


def join_split(g: Graph) -> tuple[list[str], list[str]] | None:
    """A nontrivial bipartition with every cross pair adjacent, or None."""
    n = g.vertex_count
    assert 1 <= n <= 14
    for mask in range(1, (1 << n) - 1):
        a = [i for i in range(n) if mask >> i & 1]
        b = [i for i in range(n) if not mask >> i & 1]
        if all(g.has_edge(g.labels[i], g.labels[j]) for i in a for j in b):
            return [g.labels[i] for i in a], [g.labels[i] for i in b]
    return None


def brute_condition3_failures(ns: NerveSystem) -> list[tuple[tuple[str, ...], int]]:
    """(subset, degree) pairs where deleting a clique leaves cohomology.

    Cliques are found by subset sweep and the cohomology goes through the
    cochain-complex route, so neither step shares code with the library's
    spherical-subset walk.
    """
    g = ns.graph
    n = g.vertex_count
    assert n <= 12
    failures = []
    for mask in range(1, 1 << n):
        vs = [g.labels[i] for i in range(n) if mask >> i & 1]
        if not all(g.has_edge(u, v) for u, v in combinations(vs, 2)):
            continue
        rest = [v for v in g.labels if v not in vs]
        sub = full_subcomplex(ns.nerve, rest)
        groups = reduced_cohomology_via_cochains(sub)
        for d in sorted(groups.nontrivial()):
            failures.append((tuple(vs), d))
    return failures
