"""
Graphs and their flag complexes
===============================

A flag complex is the clique complex of its own 1-skeleton: every set of
pairwise adjacent vertices spans a simplex, so the graph alone determines
all of the topology.  This tour builds a few graphs and inspects what
their clique complexes look like.
"""

import flagrecon as fr

# a hexagon: no triangles, so the complex stays 1-dimensional
hexagon = fr.cycle(6)
L = fr.clique_complex(hexagon)
print("hexagon:", fr.f_vector(L), "dimension", L.dimension)
print("euler characteristic:", fr.euler_characteristic(L))

# the octahedron graph (3rd cross-polytope) fills in 8 triangles
octa = fr.cross_polytope(3)
L = fr.clique_complex(octa)
print("octahedron:", fr.f_vector(L), "dimension", L.dimension)
print("euler characteristic:", fr.euler_characteristic(L), "(a 2-sphere)")

# maximal simplices are exactly the maximal cliques of the graph
print("facets:", sorted(fr.maximal_simplices(L))[:4], "...")

# a complete graph gives a solid simplex: contractible, χ = 1
K = fr.clique_complex(fr.complete(4))
print("K4:", fr.f_vector(K), "χ =", fr.euler_characteristic(K))

# links: the local picture around a face.  In the octahedron every vertex
# sees a 4-cycle, which is how the manifold checks will recognise S^2.
lk = fr.link(L, ["0"])
print("link of a vertex in the octahedron:", fr.f_vector(lk))
print("link of an edge:", fr.f_vector(fr.link(L, ["0", "2"])), "(two points)")

# full subcomplexes restrict to a vertex subset and stay flag
sub = fr.full_subcomplex(L, ["0", "1", "2", "3"])
print("full subcomplex on 4 vertices:", fr.f_vector(sub))

# the torus grid is flag and 6-regular; its complex is a closed surface
torus = fr.torus_grid(4, 4)
L = fr.clique_complex(torus)
print("torus:", fr.f_vector(L), "χ =", fr.euler_characteristic(L))

# homology distinguishes what the Euler characteristic cannot
print("torus homology:", fr.reduced_homology(L))
print("sphere homology:", fr.reduced_homology(fr.clique_complex(octa)))
