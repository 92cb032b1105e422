"""Decks, hypomorphisms, reconstructibility certificates and card recovery.

A certificate is one-directional: it asserts that the deck determines the
graph (by one of two sufficient criteria), never that a graph without a
certificate is ambiguous.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .complexes import clique_complex
from .coxeter import NerveSystem, PDVerdict, is_virtual_pd
from .graphs import Graph, canonical_form, graph_from_canonical_form, vertex_deleted
from .manifolds import (
    ManifoldVerdict,
    boundary_of,
    detect_dimension,
    is_homology_manifold,
)

__all__ = [
    "Deck",
    "deck",
    "are_hypomorphic",
    "VERDICT_THEOREM_1",
    "VERDICT_THEOREM_2",
    "VERDICT_NONE",
    "NO_CERTIFICATE_CAVEAT",
    "Certificate",
    "certify_reconstructible",
    "reconstruct_from_card",
    "enumerate_graphs",
    "brute_force_oracle",
]


@dataclass
class Deck:
    """Multiset of vertex-deleted cards, keyed by canonical form.

    ``matching`` records which deleted vertex produced which card class.
    """

    cards: dict[bytes, int]
    matching: dict[str, bytes]

    @property
    def size(self) -> int:
        return sum(self.cards.values())

    def key(self) -> tuple[tuple[bytes, int], ...]:
        """Hashable identity of the multiset, for grouping decks."""
        return tuple(sorted(self.cards.items()))


def deck(g: Graph) -> Deck:
    """All vertex-deleted cards of ``g`` as a canonical-form multiset."""
    if g.vertex_count < 1:
        raise ValueError("decks need at least one vertex")
    matching = {v: canonical_form(vertex_deleted(g, v)) for v in g.labels}
    return Deck(dict(Counter(matching.values())), matching)


def are_hypomorphic(g1: Graph, g2: Graph) -> dict[str, str] | None:
    """A deck-respecting bijection between the vertex sets, if one exists.

    Cards are matched class by class; inside a class, vertices are paired in
    sorted label order, which makes the returned bijection deterministic.
    Isomorphic graphs always have one.  Returns None when the decks differ.
    """
    d1, d2 = deck(g1), deck(g2)
    if d1.key() != d2.key():
        return None
    by_card1: dict[bytes, list[str]] = {}
    for v, card in d1.matching.items():
        by_card1.setdefault(card, []).append(v)
    by_card2: dict[bytes, list[str]] = {}
    for v, card in d2.matching.items():
        by_card2.setdefault(card, []).append(v)
    out: dict[str, str] = {}
    for card, vs1 in by_card1.items():
        vs2 = by_card2[card]
        for a, b in zip(sorted(vs1), sorted(vs2)):
            out[a] = b
    return out


VERDICT_THEOREM_1 = "theorem_1"
VERDICT_THEOREM_2 = "theorem_2"
VERDICT_NONE = "none"

NO_CERTIFICATE_CAVEAT = (
    "no certificate: the implemented criteria are sufficient conditions only, "
    "so this verdict does not assert that the graph is unreconstructible"
)


@dataclass
class Certificate:
    """Reconstructibility certificate with the evidence behind it.

    ``theorem_2``: the clique complex is a homology n-manifold, n >= 1.
    ``theorem_1``: the associated right-angled group is virtually PD of
    dimension n >= 1.  When both hold, theorem_2 wins (it carries the
    stronger, directly geometric evidence).  ``none`` always carries the
    caveat.
    """

    verdict: str
    dimension: int | None
    manifold: ManifoldVerdict | None
    virtual_pd: PDVerdict | None
    caveat: str | None = None


def certify_reconstructible(g: Graph, max_dim: int | None = None) -> Certificate:
    """Certify that the deck of ``g`` determines it, if a criterion applies.

    Requires at least 3 vertices (below that the deck carries too little
    information for either criterion to make sense).
    """
    if g.vertex_count < 3:
        raise ValueError("certificates require at least 3 vertices")
    nerve = clique_complex(g, max_dim)
    n = detect_dimension(nerve)
    manifold = is_homology_manifold(nerve, n) if n >= 1 else None
    if manifold is not None and manifold.is_manifold:
        return Certificate(VERDICT_THEOREM_2, n, manifold, None)
    pd = is_virtual_pd(NerveSystem(g, nerve))
    if pd.is_vpd and pd.dimension is not None and pd.dimension >= 1:
        return Certificate(VERDICT_THEOREM_1, pd.dimension, manifold, pd)
    return Certificate(VERDICT_NONE, None, manifold, pd, NO_CERTIFICATE_CAVEAT)


def _fresh_label(taken: tuple[str, ...]) -> str:
    label = "*"
    while label in taken:
        label += "*"
    return label


def reconstruct_from_card(card: Graph, n: int, max_dim: int | None = None) -> Graph:
    """Recover a graph from one card, assuming the original's clique complex
    is a homology n-manifold without boundary.

    Deleting a vertex punches a hole whose rim is exactly the deleted
    vertex's neighbourhood: in the card's clique complex those are the
    vertices whose local homology has gone trivial.  The lost vertex is
    reattached along that rim.  If the card does not have the expected
    shape, the boundary scan raises.
    """
    if n < 1:
        raise ValueError("card recovery needs manifold dimension n >= 1")
    nerve = clique_complex(card, max_dim)
    rim = boundary_of(nerve, n)
    label = _fresh_label(card.labels)
    edges = card.edges() + [(label, v) for v in sorted(rim, key=card.index)]
    return Graph.from_edges(card.labels + (label,), edges)


def enumerate_graphs(n: int) -> list[Graph]:
    """One canonically labelled representative per isomorphism class of order n.

    Representatives are grown by attaching one vertex in every possible way
    to the classes one order down, deduplicating by canonical form at each
    step; every class of order n arises this way from deleting a vertex.
    Capped at n = 7 (1044 classes), which keeps time and memory at desk
    scale.
    """
    if not 1 <= n <= 7:
        raise ValueError("enumeration supports 1 <= n <= 7")
    reps: dict[bytes, Graph] = {}
    single = Graph(("0",), (0,))
    reps[canonical_form(single)] = single
    for k in range(2, n + 1):
        grown: dict[bytes, Graph] = {}
        for g in reps.values():
            labels = g.labels + (str(k - 1),)
            for mask in range(1 << (k - 1)):
                adj = list(g.adj) + [mask]
                for i in range(k - 1):
                    if mask >> i & 1:
                        adj[i] |= 1 << (k - 1)
                cert = canonical_form(Graph(labels, tuple(adj)))
                if cert not in grown:
                    grown[cert] = graph_from_canonical_form(cert)
        reps = grown
    return [reps[c] for c in sorted(reps)]


def brute_force_oracle(graphs: list[Graph]) -> list[list[Graph]]:
    """Group pairwise non-isomorphic graphs by identical decks.

    Returns the groups of size >= 2: families of mutually hypomorphic,
    non-isomorphic graphs.  Callers must pass one representative per
    isomorphism class; duplicates would show up as fake groups.
    """
    by_deck: dict[tuple, list[Graph]] = {}
    for g in graphs:
        by_deck.setdefault(deck(g).key(), []).append(g)
    return [group for group in by_deck.values() if len(group) > 1]
