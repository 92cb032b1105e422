"""The right-angled Coxeter dictionary, computed entirely on the nerve side.

A graph determines a right-angled Coxeter system whose nerve is the clique
complex; the group itself is never materialised.  Finiteness, irreducibility,
direct-product peeling, virtual Poincare duality and finite generation of
group-ring cohomology are all decided through their graph/complex
equivalents:

* spherical subset      <-> clique
* finite group          <-> complete graph
* irreducible system    <-> connected complement
* product decomposition <-> join decomposition, spherical factor = universal vertices
* virtual PD of dim n   <-> after peeling the spherical factor, the core's
                            complex is a generalized homology (n-1)-sphere
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .complexes import SimplicialComplex, Simplex, clique_complex, full_subcomplex, one_skeleton
from .graphs import Graph, complement, is_connected
from .homology import AbelianGroup, GradedGroups, reduced_cohomology
from .manifolds import SphereVerdict, detect_dimension, is_generalized_homology_sphere

__all__ = [
    "NerveSystem",
    "is_spherical",
    "spherical_subsets",
    "is_finite_group",
    "is_irreducible",
    "join_decomposition",
    "PDVerdict",
    "is_virtual_pd",
    "Condition3Witness",
    "Condition3Result",
    "condition3_vanishing",
    "NOT_FINITELY_GENERATED",
    "coxeter_cohomology_if_fg",
    "LemmaKeyReport",
    "lemma_key_crosscheck",
]


@dataclass(frozen=True)
class NerveSystem:
    """A right-angled system presented by its graph and its nerve (the clique complex)."""

    graph: Graph
    nerve: SimplicialComplex

    def __post_init__(self) -> None:
        # the nerve must sit over exactly this graph; flagness is the
        # builder's contract and is not re-derived here
        if one_skeleton(self.nerve) != self.graph:
            raise ValueError("nerve's 1-skeleton does not match the graph")

    @classmethod
    def from_graph(cls, g: Graph, max_dim: int | None = None) -> "NerveSystem":
        return cls(g, clique_complex(g, max_dim))

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.graph.labels


def is_spherical(ns: NerveSystem, t: Iterable[str]) -> bool:
    """A subset generates a finite standard subgroup exactly when it is a clique."""
    vs = list(t)
    for v in vs:
        ns.graph.index(v)
    if len(set(vs)) != len(vs):
        raise ValueError("repeated vertex in subset")
    if not vs:
        return True
    return ns.nerve.has_simplex(vs)


def spherical_subsets(ns: NerveSystem) -> list[Simplex]:
    """All nonempty spherical subsets, by size then storage order."""
    return [s for level in ns.nerve.simplices for s in level]


def is_finite_group(ns: NerveSystem) -> bool:
    """The group is finite exactly when the graph is complete."""
    n = ns.graph.vertex_count
    if n == 0:
        raise ValueError("empty vertex set")
    return ns.graph.edge_count == n * (n - 1) // 2


def is_irreducible(ns: NerveSystem) -> bool:
    """No nontrivial direct-product splitting: the complement graph is connected."""
    if ns.graph.vertex_count == 0:
        raise ValueError("empty vertex set")
    return is_connected(complement(ns.graph))


def join_decomposition(ns: NerveSystem) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """Split off the maximal spherical direct factor.

    Returns (core, spherical_factor); the spherical factor is the set of
    universal vertices, which is always a clique, and the graph is the join
    of the two sides.  Either side may be empty.
    """
    n = ns.graph.vertex_count
    full = (1 << n) - 1
    t1 = [
        v
        for i, v in enumerate(ns.graph.labels)
        if ns.graph.adj[i] == full & ~(1 << i)
    ]
    t1_set = set(t1)
    t0 = tuple(v for v in ns.graph.labels if v not in t1_set)
    return t0, tuple(t1)


@dataclass
class PDVerdict:
    """Virtual Poincare duality verdict with the peeling that produced it.

    ``degenerate`` flags dimension 0 (finite group: everything peeled away,
    the core complex is empty).
    """

    is_vpd: bool
    dimension: int | None
    core: tuple[str, ...]
    spherical_factor: tuple[str, ...]
    core_sphere: SphereVerdict
    degenerate: bool = False


def is_virtual_pd(ns: NerveSystem) -> PDVerdict:
    """Virtual Poincare duality of dimension n via product peeling.

    The group is virtually PD of dimension n exactly when, after splitting
    off the maximal spherical factor, the core's complex is a generalized
    homology (n-1)-sphere.  No smaller factor can do better: removing fewer
    universal vertices leaves a cone, and a nonempty cone is never a
    homology sphere.
    """
    t0, t1 = join_decomposition(ns)
    core = full_subcomplex(ns.nerve, t0)
    sphere = is_generalized_homology_sphere(core, detect_dimension(core))
    if sphere.is_sphere:
        dim = sphere.dimension + 1
        return PDVerdict(True, dim, t0, t1, sphere, degenerate=(dim == 0))
    return PDVerdict(False, None, t0, t1, sphere)


@dataclass
class Condition3Witness:
    subset: Simplex
    degree: int
    group: AbelianGroup


@dataclass
class Condition3Result:
    holds: bool
    witness: Condition3Witness | None
    subsets_checked: int


def condition3_vanishing(ns: NerveSystem) -> Condition3Result:
    """Vanishing of the complement cohomology over every spherical subset.

    For each nonempty spherical T, the full subcomplex on the remaining
    vertices must have trivial reduced cohomology in every degree.  The
    first failure, in deterministic (size, storage) order, is the witness.
    """
    labels = ns.graph.labels
    checked = 0
    for t in spherical_subsets(ns):
        checked += 1
        tset = set(t)
        rest = [v for v in labels if v not in tset]
        coh = reduced_cohomology(full_subcomplex(ns.nerve, rest))
        bad = coh.nontrivial()
        if bad:
            degree = min(bad)
            return Condition3Result(False, Condition3Witness(t, degree, bad[degree]), checked)
    return Condition3Result(True, None, checked)


class _NotFinitelyGenerated:
    """Marker: the requested group-ring cohomology is not finitely generated."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "NOT_FINITELY_GENERATED"


NOT_FINITELY_GENERATED = _NotFinitelyGenerated()


def coxeter_cohomology_if_fg(ns: NerveSystem, i: int) -> AbelianGroup | _NotFinitelyGenerated:
    """Group-ring cohomology in degree i, when finitely generated.

    For an irreducible system, H^i of the group with group-ring coefficients
    is finitely generated exactly when the complement cohomology in degree
    i-1 vanishes over every nonempty spherical subset, and it then equals
    the nerve's reduced cohomology in degree i-1.  Otherwise the marker
    ``NOT_FINITELY_GENERATED`` is returned.
    """
    if i < 0:
        raise ValueError("cohomological degree must be nonnegative")
    if not is_irreducible(ns):
        raise ValueError("the dictionary applies to irreducible systems only")
    labels = ns.graph.labels
    for t in spherical_subsets(ns):
        tset = set(t)
        rest = [v for v in labels if v not in tset]
        if not reduced_cohomology(full_subcomplex(ns.nerve, rest)).group(i - 1).is_trivial:
            return NOT_FINITELY_GENERATED
    return reduced_cohomology(ns.nerve).group(i - 1)


@dataclass
class LemmaKeyReport:
    """Three equivalent conditions evaluated independently.

    For an irreducible infinite system these must agree; a disagreement is
    an implementation defect, not a mathematical possibility.
    """

    virtual_pd: PDVerdict
    sphere: SphereVerdict
    vanishing: Condition3Result

    @property
    def statements(self) -> tuple[bool, bool, bool]:
        return (self.virtual_pd.is_vpd, self.sphere.is_sphere, self.vanishing.holds)

    @property
    def consistent(self) -> bool:
        return len(set(self.statements)) == 1


def lemma_key_crosscheck(ns: NerveSystem) -> LemmaKeyReport:
    """Evaluate virtual PD, sphere, and vanishing independently and report.

    Requires an irreducible infinite system; outside that hypothesis the
    three statements are not equivalent and the crosscheck is meaningless.
    """
    if not is_irreducible(ns):
        raise ValueError("crosscheck requires an irreducible system")
    if is_finite_group(ns):
        raise ValueError("crosscheck requires an infinite group")
    pd = is_virtual_pd(ns)
    sphere = is_generalized_homology_sphere(ns.nerve, detect_dimension(ns.nerve))
    vanishing = condition3_vanishing(ns)
    return LemmaKeyReport(pd, sphere, vanishing)
