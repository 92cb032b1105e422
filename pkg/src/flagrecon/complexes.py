"""Abstract simplicial complexes, clique (flag) complexes, links and subcomplexes.

Simplices are stored as label tuples sorted by the complex's own vertex
order, grouped by dimension; level 0 always equals the vertex list.  The
complex with no vertices is legal and has dimension -1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .graphs import Graph, iter_bits

__all__ = [
    "Simplex",
    "SimplicialComplex",
    "DimensionCapExceeded",
    "build_complex",
    "clique_complex",
    "full_subcomplex",
    "link",
    "one_skeleton",
    "is_flag",
    "f_vector",
    "euler_characteristic",
]

Simplex = tuple[str, ...]


class DimensionCapExceeded(ValueError):
    """A clique grew past the configured dimension cap."""


@dataclass(frozen=True)
class SimplicialComplex:
    """Immutable simplicial complex; build through :func:`build_complex`.

    ``simplices[k]`` holds the k-simplices in a fixed deterministic order.
    Downward closure is the builder's responsibility; the constructor only
    guards the cheap invariants.
    """

    labels: tuple[str, ...]
    simplices: tuple[tuple[Simplex, ...], ...]

    def __post_init__(self) -> None:
        if self.labels:
            if not self.simplices or self.simplices[0] != tuple((v,) for v in self.labels):
                raise ValueError("level 0 must equal the vertex list")
        elif self.simplices:
            raise ValueError("a complex without vertices has no simplices")
        for k, level in enumerate(self.simplices):
            if any(len(s) != k + 1 for s in level):
                raise ValueError(f"level {k} contains a simplex of the wrong size")
            if not level:
                raise ValueError("trailing empty simplex levels are not stored")

    @cached_property
    def _pos(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.labels)}

    @cached_property
    def _face_set(self) -> frozenset[Simplex]:
        return frozenset(s for level in self.simplices for s in level)

    @property
    def dimension(self) -> int:
        return len(self.simplices) - 1

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    def faces(self, k: int) -> tuple[Simplex, ...]:
        if 0 <= k < len(self.simplices):
            return self.simplices[k]
        return ()

    def simplex(self, vertices: Iterable[str]) -> Simplex:
        """Normalise ``vertices`` to this complex's storage order."""
        vs = list(vertices)
        if len(set(vs)) != len(vs):
            raise ValueError("repeated vertex in simplex")
        for v in vs:
            if v not in self._pos:
                raise ValueError(f"unknown vertex {v!r}")
        return tuple(sorted(vs, key=self._pos.__getitem__))

    def has_simplex(self, vertices: Iterable[str]) -> bool:
        try:
            return self.simplex(vertices) in self._face_set
        except ValueError:
            return False

    def __contains__(self, simplex: Simplex) -> bool:
        return simplex in self._face_set

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"SimplicialComplex(dim={self.dimension}, f={f_vector(self)})"


def build_complex(labels: Iterable[str], faces: Iterable[Iterable[str]]) -> SimplicialComplex:
    """Close ``faces`` downward over ``labels`` and normalise storage.

    Every label becomes a 0-simplex whether or not a face mentions it.
    Faces may list vertices in any order but must not repeat one.
    """
    labels = tuple(labels)
    pos = {v: i for i, v in enumerate(labels)}
    if len(pos) != len(labels):
        raise ValueError("duplicate vertex label")
    by_dim: list[set[tuple[int, ...]]] = [set((i,) for i in range(len(labels)))]
    for face in faces:
        face = list(face)
        idx = sorted(pos[v] if v in pos else -1 for v in face)
        if idx and idx[0] < 0:
            missing = next(v for v in face if v not in pos)
            raise ValueError(f"face references unknown vertex {missing!r}")
        if len(set(idx)) != len(idx):
            raise ValueError(f"face repeats a vertex: {face}")
        while len(by_dim) < len(idx):
            by_dim.append(set())
        for k in range(2, len(idx) + 1):
            by_dim[k - 1].update(itertools.combinations(idx, k))
    if not labels:
        return SimplicialComplex((), ())
    while len(by_dim) > 1 and not by_dim[-1]:
        by_dim.pop()
    simplices = tuple(
        tuple(tuple(labels[i] for i in s) for s in sorted(level)) for level in by_dim
    )
    return SimplicialComplex(labels, simplices)


# ---------------------------------------------------------------------------
# clique complexes
# ---------------------------------------------------------------------------


def _maximal_cliques(adj: Sequence[int], n: int) -> list[int]:
    """All maximal cliques as bitsets (pivoting Bron-Kerbosch)."""
    if n == 0:
        return []
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        # pivot on the vertex of p|x with the most candidates in p
        best_u, best_cnt = -1, -1
        rest = p | x
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            rest ^= low
            c = (adj[u] & p).bit_count()
            if c > best_cnt:
                best_u, best_cnt = u, c
        cand = p & ~adj[best_u]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            expand(r | low, p & adj[v], x & adj[v])
            p &= ~low
            x |= low

    expand(0, (1 << n) - 1, 0)
    return out


def clique_complex(g: Graph, max_dim: int | None = None) -> SimplicialComplex:
    """The flag complex of ``g``: every clique becomes a simplex.

    ``max_dim`` guards against accidental blowup on dense graphs; a clique
    larger than ``max_dim + 1`` vertices raises :class:`DimensionCapExceeded`
    rather than truncating silently.
    """
    cliques = _maximal_cliques(g.adj, g.vertex_count)
    if max_dim is not None:
        for c in cliques:
            size = c.bit_count()
            if size > max_dim + 1:
                raise DimensionCapExceeded(
                    f"clique on {size} vertices exceeds the dimension cap {max_dim}"
                )
    faces = [[g.labels[i] for i in iter_bits(c)] for c in cliques]
    return build_complex(g.labels, faces)


# ---------------------------------------------------------------------------
# subcomplexes and links
# ---------------------------------------------------------------------------


def full_subcomplex(L: SimplicialComplex, t: Iterable[str]) -> SimplicialComplex:
    """The full subcomplex on vertex subset ``t``: all simplices inside ``t``."""
    wanted = set(t)
    for v in wanted:
        if v not in L._pos:
            raise ValueError(f"unknown vertex {v!r}")
    sub_labels = tuple(v for v in L.labels if v in wanted)
    faces = [
        s for level in L.simplices[1:] for s in level if wanted.issuperset(s)
    ]
    return build_complex(sub_labels, faces)


def link(L: SimplicialComplex, simplex: Iterable[str]) -> SimplicialComplex:
    """Link of a simplex: faces disjoint from it whose union with it is a face.

    The link of a facet is the empty complex; the link of the link vertex set
    is computed over exactly the vertices v with simplex + v a face of L.
    """
    s = L.simplex(simplex)
    if s not in L._face_set:
        raise ValueError(f"{s} is not a simplex of the complex")
    sset = set(s)
    k = len(s)
    vertices = []
    faces = []
    for level in L.simplices:
        for face in level:
            if len(face) <= k:
                continue
            if sset.issubset(face):
                rest = tuple(v for v in face if v not in sset)
                if len(rest) == 1:
                    vertices.append(rest[0])
                else:
                    faces.append(rest)
    return build_complex(vertices, faces)


def one_skeleton(L: SimplicialComplex) -> Graph:
    return Graph.from_edges(L.labels, [(e[0], e[1]) for e in L.faces(1)])


def is_flag(L: SimplicialComplex) -> bool:
    """True when L is the clique complex of its own 1-skeleton."""
    return clique_complex(one_skeleton(L)) == L


def f_vector(L: SimplicialComplex) -> tuple[int, ...]:
    """Face counts by dimension; the empty complex has an empty f-vector."""
    return tuple(len(level) for level in L.simplices)


def euler_characteristic(L: SimplicialComplex) -> int:
    return sum((-1) ** k * len(level) for k, level in enumerate(L.simplices))
