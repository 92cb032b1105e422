"""
Decks, certificates, and recovering a graph from one card
=========================================================

A card is the graph with one vertex deleted; the deck is the multiset of
all cards up to isomorphism.  The classic question is whether the deck
determines the graph.  When the clique complex happens to be a closed
homology manifold it does, and a single card is even enough to rebuild
the whole graph.
"""

import flagrecon as fr

# the deck of C5 is five copies of the path P4
d = fr.deck(fr.cycle(5))
for card_form, mult in d.cards.items():
    g = fr.graph_from_canonical_form(card_form)
    print(f"C5 card x{mult}:", fr.emit_graph6(g))

# the two-vertex ambiguity: an edge and a non-edge have the same deck
bijection = fr.are_hypomorphic(fr.complete(2), fr.Graph.from_edges("xy", []))
print("K2 ~ 2K1 bijection:", bijection)

# certificates.  C7's complex is a circle, a closed 1-manifold:
cert = fr.certify_reconstructible(fr.cycle(7))
print("C7:", cert.verdict, "dimension", cert.dimension)

# the wheel is a cone, never a closed manifold, but its group is a
# virtual duality group, which is the other sufficient criterion
wheel = fr.join(fr.cycle(5), fr.Graph.from_edges(["h"], []))
cert = fr.certify_reconstructible(wheel)
print("wheel:", cert.verdict, "dimension", cert.dimension)

# no criterion applies to a path; the caveat spells out what that means
cert = fr.certify_reconstructible(fr.path(5))
print("P5:", cert.verdict)
print("  ", cert.caveat)

# single-card recovery on the icosahedron: delete any vertex, find the
# rim of the hole, glue a fresh vertex back on
icosa = fr.icosahedron()
card = fr.vertex_deleted(icosa, "7")
rebuilt = fr.reconstruct_from_card(card, 2)
print("rebuilt icosahedron is isomorphic:", fr.are_isomorphic(rebuilt, icosa))

# the same works for every card of every closed case
for name, g, n in [("C6", fr.cycle(6), 1), ("torus", fr.torus_grid(4, 4), 2)]:
    ok = all(
        fr.are_isomorphic(fr.reconstruct_from_card(fr.vertex_deleted(g, v), n), g)
        for v in g.labels
    )
    print(f"{name}: all {g.vertex_count} cards round-trip: {ok}")
