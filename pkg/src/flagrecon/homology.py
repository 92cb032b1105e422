"""Exact integer simplicial (co)homology via Smith normal form.

All arithmetic uses Python's arbitrary-precision integers; fixed-width
words would overflow silently on exactly the matrices where torsion shows
up.  Homology is reduced throughout, with the empty complex treated as the
(-1)-sphere: its only nontrivial group is H~[-1] = Z.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .complexes import SimplicialComplex, link

__all__ = [
    "IntegerMatrix",
    "identity_matrix",
    "matrix_multiply",
    "transpose",
    "boundary_matrix",
    "SmithNormalForm",
    "smith_normal_form",
    "AbelianGroup",
    "TRIVIAL_GROUP",
    "INTEGERS",
    "GradedGroups",
    "reduced_homology",
    "reduced_cohomology",
    "reduced_cohomology_via_cochains",
    "local_homology",
]


@dataclass(frozen=True)
class IntegerMatrix:
    """Dense integer matrix; row-major tuple storage, shape kept explicit."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows:
            raise ValueError("row count mismatch")
        if any(len(r) != self.cols for r in self.entries):
            raise ValueError("column count mismatch")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], cols: int | None = None) -> "IntegerMatrix":
        data = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            if not data:
                raise ValueError("column count required for empty matrices")
            cols = len(data[0])
        return cls(len(data), cols, data)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries[ij[0]][ij[1]]


def identity_matrix(n: int) -> IntegerMatrix:
    return IntegerMatrix(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def transpose(m: IntegerMatrix) -> IntegerMatrix:
    return IntegerMatrix(m.cols, m.rows, tuple(zip(*m.entries)) if m.entries else tuple(() for _ in range(m.cols)))


def matrix_multiply(a: IntegerMatrix, b: IntegerMatrix) -> IntegerMatrix:
    if a.cols != b.rows:
        raise ValueError("shape mismatch")
    bt = list(zip(*b.entries)) if b.entries else [()] * b.cols
    data = tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a.entries
    )
    if not data:
        data = ()
    return IntegerMatrix(a.rows, b.cols, data)


# ---------------------------------------------------------------------------
# boundary operators
# ---------------------------------------------------------------------------


def boundary_matrix(L: SimplicialComplex, k: int, reduced: bool = False) -> IntegerMatrix:
    """The boundary operator from k-chains to (k-1)-chains, alternating signs.

    With ``reduced`` the k = 0 operator is the augmentation row (all ones)
    into the rank-one chain group on the empty simplex.  Out-of-range k
    yields the appropriately shaped zero-sized matrix.
    """
    dim = L.dimension
    cols_basis = L.faces(k)
    rows_basis = L.faces(k - 1)
    if k == 0:
        if reduced:
            return IntegerMatrix(1, len(cols_basis), (tuple(1 for _ in cols_basis),))
        return IntegerMatrix(0, len(cols_basis), ())
    if k < 0 or k > dim + 1:
        return IntegerMatrix(0, 0, ())
    row_index = {s: i for i, s in enumerate(rows_basis)}
    columns = []
    for s in cols_basis:
        col = [0] * len(rows_basis)
        for i in range(len(s)):
            facet = s[:i] + s[i + 1 :]
            col[row_index[facet]] = -1 if i % 2 else 1
        columns.append(col)
    entries = tuple(tuple(col[r] for col in columns) for r in range(len(rows_basis)))
    return IntegerMatrix(len(rows_basis), len(cols_basis), entries)


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SmithNormalForm:
    """Diagonal form D with invariant factors d_1 | d_2 | ... | d_r.

    When transforms are requested, ``row_transform @ m @ col_transform == D``
    with both transforms unimodular.
    """

    matrix: IntegerMatrix
    rank: int
    invariant_factors: tuple[int, ...]
    row_transform: IntegerMatrix | None = None
    col_transform: IntegerMatrix | None = None


def smith_normal_form(m: IntegerMatrix, with_transforms: bool = False) -> SmithNormalForm:
    """Diagonalise ``m`` over Z by unimodular row and column operations.

    Pivots are always the smallest nonzero magnitude in the trailing block,
    which keeps entry growth tame on the small dense matrices boundary
    operators produce.  Each diagonal entry is forced to divide every entry
    of its trailing block before the next position starts, so the diagonal
    comes out as a divisibility chain.
    """
    nrow, ncol = m.rows, m.cols
    a = [list(row) for row in m.entries]
    u = [[int(i == j) for j in range(nrow)] for i in range(nrow)] if with_transforms else None
    v = [[int(i == j) for j in range(ncol)] for i in range(ncol)] if with_transforms else None

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        if u is not None:
            u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        if v is not None:
            for row in v:
                row[i], row[j] = row[j], row[i]

    def add_row(dst: int, src: int, factor: int) -> None:
        arow, srow = a[dst], a[src]
        for j in range(ncol):
            arow[j] += factor * srow[j]
        if u is not None:
            urow, usrow = u[dst], u[src]
            for j in range(nrow):
                urow[j] += factor * usrow[j]

    def add_col(dst: int, src: int, factor: int) -> None:
        for row in a:
            row[dst] += factor * row[src]
        if v is not None:
            for row in v:
                row[dst] += factor * row[src]

    def negate_row(i: int) -> None:
        a[i] = [-x for x in a[i]]
        if u is not None:
            u[i] = [-x for x in u[i]]

    for s in range(min(nrow, ncol)):
        while True:
            # smallest nonzero magnitude in the trailing block becomes the
            # pivot, re-chosen every round: remainders left by the previous
            # round are smaller than the old pivot, so this walks a Euclidean
            # descent instead of letting quotients inflate the block
            pi = pj = -1
            pv = 0
            for i in range(s, nrow):
                for j in range(s, ncol):
                    e = abs(a[i][j])
                    if e and (pv == 0 or e < pv):
                        pi, pj, pv = i, j, e
            if pv == 0:
                break
            if pi != s:
                swap_rows(pi, s)
            if pj != s:
                swap_cols(pj, s)
            if a[s][s] < 0:
                negate_row(s)
            dirty = False
            for i in range(s + 1, nrow):
                if a[i][s]:
                    q = a[i][s] // a[s][s]
                    if q:
                        add_row(i, s, -q)
                    if a[i][s]:
                        dirty = True
            for j in range(s + 1, ncol):
                if a[s][j]:
                    q = a[s][j] // a[s][s]
                    if q:
                        add_col(j, s, -q)
                    if a[s][j]:
                        dirty = True
            if dirty:
                continue
            # row and column are clean; force divisibility into the block
            d = a[s][s]
            offender = -1
            for i in range(s + 1, nrow):
                if any(x % d for x in a[i][s + 1 :]):
                    offender = i
                    break
            if offender < 0:
                break
            add_row(s, offender, 1)

    diag = []
    for i in range(min(nrow, ncol)):
        if a[i][i]:
            diag.append(a[i][i])
    entries = tuple(tuple(row) for row in a)
    result = IntegerMatrix(nrow, ncol, entries)
    factors = tuple(diag)
    for x, y in zip(factors, factors[1:]):
        assert y % x == 0, "invariant factors must form a divisibility chain"
    return SmithNormalForm(
        result,
        len(factors),
        factors,
        IntegerMatrix(nrow, nrow, tuple(tuple(r) for r in u)) if u is not None else None,
        IntegerMatrix(ncol, ncol, tuple(tuple(r) for r in v)) if v is not None else None,
    )


# ---------------------------------------------------------------------------
# abelian groups and graded collections
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group: Z^rank plus cyclic torsion factors.

    Torsion entries are >= 2 and form a divisibility chain, matching the
    invariant-factor normal form.
    """

    rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        if any(t < 2 for t in self.torsion):
            raise ValueError("torsion factors must be at least 2")
        for x, y in zip(self.torsion, self.torsion[1:]):
            if y % x:
                raise ValueError("torsion factors must form a divisibility chain")

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


TRIVIAL_GROUP = AbelianGroup()
INTEGERS = AbelianGroup(1)


@dataclass(eq=False)
class GradedGroups:
    """Degree-indexed abelian groups; degrees not stored are trivial.

    Equality is semantic: two collections are equal when their nontrivial
    degrees agree, regardless of which trivial degrees happen to be stored.
    """

    by_degree: dict[int, AbelianGroup]

    def group(self, degree: int) -> AbelianGroup:
        return self.by_degree.get(degree, TRIVIAL_GROUP)

    def nontrivial(self) -> dict[int, AbelianGroup]:
        return {
            d: g for d, g in sorted(self.by_degree.items()) if not g.is_trivial
        }

    @property
    def is_trivial_everywhere(self) -> bool:
        return not self.nontrivial()

    def shifted(self, offset: int) -> "GradedGroups":
        return GradedGroups({d + offset: g for d, g in self.by_degree.items()})

    def degrees(self) -> list[int]:
        return sorted(self.by_degree)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedGroups):
            return NotImplemented
        return self.nontrivial() == other.nontrivial()

    def __str__(self) -> str:
        nt = self.nontrivial()
        if not nt:
            return "0"
        return ", ".join(f"[{d}]={g}" for d, g in nt.items())


def _torsion_of(snf: SmithNormalForm) -> tuple[int, ...]:
    return tuple(d for d in snf.invariant_factors if d > 1)


# ---------------------------------------------------------------------------
# homology and cohomology
# ---------------------------------------------------------------------------


@lru_cache(maxsize=1 << 15)
def reduced_homology(L: SimplicialComplex) -> GradedGroups:
    """Reduced integral homology in every degree -1 .. dim(L).

    The augmented chain complex is used throughout, so the empty complex
    reports Z in degree -1 and a nonempty complex reports rank
    (#components - 1) in degree 0.
    """
    dim = L.dimension
    if dim == -1:
        return GradedGroups({-1: INTEGERS})
    f = [len(level) for level in L.simplices]
    snf = [
        smith_normal_form(boundary_matrix(L, k, reduced=(k == 0)))
        for k in range(dim + 2)
    ]
    groups: dict[int, AbelianGroup] = {
        -1: AbelianGroup(1 - snf[0].rank, _torsion_of(snf[0]))
    }
    for k in range(dim + 1):
        rank = f[k] - snf[k].rank - snf[k + 1].rank
        groups[k] = AbelianGroup(rank, _torsion_of(snf[k + 1]))
    return GradedGroups(groups)


def reduced_cohomology(L: SimplicialComplex) -> GradedGroups:
    """Reduced integral cohomology by universal coefficients.

    Free part of H~^k equals the free part of H~_k; torsion is the torsion
    of H~_{k-1}.
    """
    dim = L.dimension
    if dim == -1:
        return GradedGroups({-1: INTEGERS})
    h = reduced_homology(L)
    return GradedGroups(
        {
            k: AbelianGroup(h.group(k).rank, h.group(k - 1).torsion)
            for k in range(-1, dim + 1)
        }
    )


def reduced_cohomology_via_cochains(L: SimplicialComplex) -> GradedGroups:
    """Reduced cohomology recomputed from transposed boundary operators.

    Independent of :func:`reduced_cohomology`; the two routes must agree.
    The cochain in degree k is dual to the chain in degree k, with the dual
    augmentation entering at degree -1.
    """
    dim = L.dimension
    if dim == -1:
        return GradedGroups({-1: INTEGERS})
    f = {-1: 1}
    for k, level in enumerate(L.simplices):
        f[k] = len(level)
    # delta[k] maps k-cochains to (k+1)-cochains
    delta = {
        k: smith_normal_form(transpose(boundary_matrix(L, k + 1, reduced=(k + 1 == 0))))
        for k in range(-1, dim + 1)
    }
    groups: dict[int, AbelianGroup] = {}
    for k in range(-1, dim + 1):
        below = delta.get(k - 1)
        rank = f[k] - delta[k].rank - (below.rank if below else 0)
        groups[k] = AbelianGroup(rank, _torsion_of(below) if below else ())
    return GradedGroups(groups)


def local_homology(L: SimplicialComplex, simplex: Iterable[str]) -> GradedGroups:
    """Local homology at a simplex: the link's reduced homology, shifted.

    The shift is dim(simplex) + 1, so a facet of an n-complex reports Z in
    degree n (its link is empty, the (-1)-sphere).
    """
    s = L.simplex(simplex)
    if s not in L._face_set:
        raise ValueError(f"{s} is not a simplex of the complex")
    return reduced_homology(link(L, s)).shifted(len(s))
