"""Normalized chains, integral homology via Smith normal form, Euler
characteristic, and path components.

The chain complex is generated by nondegenerate simplices; the differential
is the alternating sum of the faces, with any face carrying a nonempty
degeneracy word contributing zero.  That kills the degenerate part, so the
complex stays finite under truncation and is the chain-complex image of the
simplicial data.

Smith normal form runs on plain Python integers, which are arbitrary
precision, so the arithmetic is exact with no overflow escalation to manage.
Matrix sizes here are tiny; correctness outranks speed.

Sign convention: the differential is sum_i (-1)^i d_i.  Homology groups do
not depend on this choice; induced-map matrices do.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import FiniteSSet, SimplicialMap, validate
from .errors import SSetError


@dataclass(frozen=True)
class ChainComplex:
    """Integer differentials on the free abelian groups of nondegenerate
    simplices.

    ``boundaries[n]`` has shape (rank(n-1), rank(n)); index 0 holds the zero
    map out of dimension 0, with shape (0, rank(0)).
    """

    ranks: tuple[int, ...]
    boundaries: tuple[np.ndarray, ...]

    @property
    def dimension(self) -> int:
        return len(self.ranks) - 1

    def boundary(self, n: int) -> np.ndarray:
        """The differential out of dimension n; zero maps beyond the range."""
        if 0 <= n < len(self.boundaries):
            return self.boundaries[n]
        rows = self.ranks[n - 1] if 0 <= n - 1 <= self.dimension else 0
        return np.zeros((rows, 0), dtype=np.int64)


def normalized_chains(K: FiniteSSet) -> ChainComplex:
    """The normalized chain complex of a validated presentation.

    Raises if K fails validation or if the assembled differentials do not
    square to zero (which would mean a bug, not bad input).
    """
    report = validate(K)
    if not report.ok:
        raise SSetError(f"presentation is invalid:\n{report}")
    D = K.truncation
    ranks = tuple(K.n_nondegenerate(n) for n in range(D + 1))
    boundaries = [np.zeros((0, ranks[0] if ranks else 0), dtype=np.int64)]
    for n in range(1, D + 1):
        M = np.zeros((ranks[n - 1], ranks[n]), dtype=np.int64)
        for x in K.simplices(n):
            for i, ref in enumerate(K.faces(x)):
                if ref.word:
                    continue
                M[ref.key.index, x.index] += (-1) ** i
        boundaries.append(M)
    for n in range(2, D + 1):
        if np.any(boundaries[n - 1] @ boundaries[n]):
            raise SSetError(f"differentials do not compose to zero at dimension {n}")
    return ChainComplex(ranks, tuple(boundaries))


# -- Smith normal form -------------------------------------------------------


@dataclass(frozen=True)
class SNFResult:
    """Invariant factors and, optionally, the unimodular transforms.

    ``diagonal`` is the full diagonal of the normal form (zeros included),
    nonnegative, each entry dividing the next nonzero one.  When retained,
    ``left @ M @ right`` equals the diagonal matrix.
    """

    diagonal: tuple[int, ...]
    left: np.ndarray | None = None
    right: np.ndarray | None = None

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)

    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d > 1)


def _int_rows(M) -> list[list[int]]:
    A = np.asarray(M)
    if A.ndim != 2:
        raise ValueError("expected a matrix")
    return [[int(v) for v in row] for row in A]


def smith_normal_form(M, retain_transforms: bool = False) -> SNFResult:
    """Diagonalize an integer matrix by unimodular row and column operations.

    Classic pivot-reduction: move a smallest nonzero entry to the pivot,
    clear its row and column by division with remainder, and repair
    divisibility by folding offending entries into the pivot row.
    """
    A = _int_rows(M)
    rows = len(A)
    cols = len(A[0]) if rows else 0
    L = [[int(i == j) for j in range(rows)] for i in range(rows)]
    R = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        L[i], L[j] = L[j], L[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in R:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, factor):
        A[dst] = [a + factor * b for a, b in zip(A[dst], A[src])]
        L[dst] = [a + factor * b for a, b in zip(L[dst], L[src])]

    def add_col(dst, src, factor):
        for row in A:
            row[dst] += factor * row[src]
        for row in R:
            row[dst] += factor * row[src]

    def negate_row(i):
        A[i] = [-a for a in A[i]]
        L[i] = [-a for a in L[i]]

    t = 0
    while t < min(rows, cols):
        # locate a smallest nonzero entry in the remaining block
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if A[i][j] != 0 and (pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, rows):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // A[t][t]))
                    if A[i][t]:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, cols):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // A[t][t]))
                    if A[t][j]:
                        swap_cols(t, j)
                        dirty = True
        # repair divisibility: fold a non-multiple into the pivot row
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if A[i][j] % A[t][t] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(t, offender, 1)
            continue
        if A[t][t] < 0:
            negate_row(t)
        t += 1

    diagonal = tuple(A[i][i] for i in range(min(rows, cols)))
    if not retain_transforms:
        return SNFResult(diagonal)
    return SNFResult(
        diagonal,
        np.array(L, dtype=object) if rows else np.zeros((0, 0), dtype=object),
        np.array(R, dtype=object) if cols else np.zeros((0, 0), dtype=object),
    )


# -- homology groups -----------------------------------------------------------


@dataclass(frozen=True)
class HomologyGroup:
    """betti free summands plus cyclic torsion summands Z/t, t dividing the next.

    ``truncation_caveat`` flags a group computed at the truncation dimension,
    where the incoming differential is unknown and the reported group is only
    an upper bound.
    """

    betti: int
    torsion: tuple[int, ...]
    truncation_caveat: bool = False

    def is_trivial(self) -> bool:
        return self.betti == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.betti == 1:
            parts.append("Z")
        elif self.betti > 1:
            parts.append(f"Z^{self.betti}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        text = " + ".join(parts) if parts else "0"
        if self.truncation_caveat:
            text += "  (at truncation: upper differential unknown)"
        return text


def homology_of_chain(cc: ChainComplex, n: int, truncation: int | None = None) -> HomologyGroup:
    if not 0 <= n <= cc.dimension:
        raise SSetError(f"homology degree {n} outside 0..{cc.dimension}")
    out_rank = smith_normal_form(cc.boundary(n)).rank if n >= 1 else 0
    if n + 1 <= cc.dimension:
        snf_in = smith_normal_form(cc.boundary(n + 1))
        in_rank, torsion = snf_in.rank, snf_in.torsion()
        caveat = False
    else:
        in_rank, torsion = 0, ()
        caveat = truncation is not None and n == truncation
    betti = cc.ranks[n] - out_rank - in_rank
    return HomologyGroup(betti, torsion, caveat)


def homology(K: FiniteSSet, n: int) -> HomologyGroup:
    """H_n as betti number plus invariant-factor torsion.

    At n == truncation the group carries a caveat flag: the image of the
    next differential is unknown there.
    """
    cc = normalized_chains(K)
    return homology_of_chain(cc, n, truncation=K.truncation)


def homology_groups(K: FiniteSSet, up_to: int | None = None) -> list[HomologyGroup]:
    cc = normalized_chains(K)
    if up_to is None:
        up_to = cc.dimension
    return [homology_of_chain(cc, n, truncation=K.truncation) for n in range(up_to + 1)]


def euler_characteristic(K: FiniteSSet) -> int:
    """Alternating sum of nondegenerate simplex counts."""
    return sum((-1) ** n * K.n_nondegenerate(n) for n in range(K.truncation + 1))


def pi0(K: FiniteSSet):
    """Path components: vertices joined whenever an edge connects them.

    Returns (count, labeling) where labeling maps each vertex key to a
    component number, numbered in vertex order.
    """
    vertices = list(K.simplices(0))
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in K.simplices(1) if K.truncation >= 1 else ():
        a = find(K.face(e, 0).key)
        b = find(K.face(e, 1).key)
        if a != b:
            parent[b] = a
    labels = {}
    numbering = {}
    for v in vertices:
        root = find(v)
        if root not in numbering:
            numbering[root] = len(numbering)
        labels[v] = numbering[root]
    return len(numbering), labels


def induced_chain_map(f: SimplicialMap) -> list[np.ndarray]:
    """Per-dimension matrices of the chain map induced by a simplicial map.

    A generator maps to its image when the image is nondegenerate and to zero
    otherwise.  Commutation with the differentials is checked; failure is an
    internal error, not bad input.
    """
    K, L = f.source, f.target
    ccK = normalized_chains(K)
    ccL = normalized_chains(L)
    mats = []
    for n in range(K.truncation + 1):
        M = np.zeros((L.n_nondegenerate(n), K.n_nondegenerate(n)), dtype=np.int64)
        for x in K.simplices(n):
            ref = f.images[x]
            if not ref.word:
                M[ref.key.index, x.index] += 1
        mats.append(M)
    for n in range(1, K.truncation + 1):
        lhs = ccL.boundary(n) @ mats[n]
        rhs = mats[n - 1] @ ccK.boundary(n)
        if np.any(lhs != rhs):
            raise SSetError(
                f"induced chain map fails to commute with the differential at dimension {n}"
            )
    return mats


def is_homology_equivalence(f: SimplicialMap) -> bool:
    """Does f induce isomorphisms on homology strictly below the truncation?

    Checked through the mapping cone: the cone of a chain map between free
    complexes is acyclic exactly where the map is a homology isomorphism.
    """
    K, L = f.source, f.target
    if K.truncation != L.truncation:
        raise SSetError("truncation mismatch")
    D = K.truncation
    ccK = normalized_chains(K)
    ccL = normalized_chains(L)
    mats = induced_chain_map(f)
    ranks = tuple(
        (ccK.ranks[n - 1] if n >= 1 else 0) + ccL.ranks[n] for n in range(D + 1)
    )
    boundaries = [np.zeros((0, ranks[0]), dtype=np.int64)]
    for n in range(1, D + 1):
        kk = ccK.ranks[n - 1]
        ll = ccL.ranks[n]
        rows = (ccK.ranks[n - 2] if n >= 2 else 0) + ccL.ranks[n - 1]
        M = np.zeros((rows, kk + ll), dtype=np.int64)
        if n >= 2:
            M[: ccK.ranks[n - 2], :kk] = -ccK.boundary(n - 1)
        M[rows - ccL.ranks[n - 1] :, :kk] = mats[n - 1]
        M[rows - ccL.ranks[n - 1] :, kk:] = ccL.boundary(n)
        boundaries.append(M)
    cone = ChainComplex(ranks, tuple(boundaries))
    return all(
        homology_of_chain(cone, n).is_trivial() for n in range(min(D, cone.dimension))
    )
