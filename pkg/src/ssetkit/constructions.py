"""Builders for the standard simplicial sets and operations combining them.

Simplices, boundaries and horns are presented on vertex subsets of {0..n}.
Products use the shuffle pairing on normal forms: a nondegenerate n-simplex
of K x L is a pair of n-simplices whose degeneracy words share no index.
Quotients are restricted to collapsing a face-closed subobject to a point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import (
    FiniteSSet,
    SimplexKey,
    SimplexRef,
    SimplicialMap,
    apply_face,
    enumerate_simplicial_maps,
    level_set,
    nondegenerate,
)
from .errors import SSetError, TruncationError


@dataclass(frozen=True)
class SubSSet:
    """A face-closed set of nondegenerate simplices of a parent object."""

    parent: FiniteSSet
    members: frozenset[SimplexKey]

    def closure_violations(self) -> list[str]:
        problems = []
        for key in self.members:
            if not self.parent.has_key(key):
                problems.append(f"{key!r} is not a simplex of the parent")
                continue
            if key.dim == 0:
                continue
            for i, ref in enumerate(self.parent.faces(key)):
                if ref.key not in self.members:
                    problems.append(f"face {i} of {key!r} leaves the subobject")
        return problems

    def is_face_closed(self) -> bool:
        return not self.closure_violations()


def sub_sset(parent: FiniteSSet, members) -> SubSSet:
    """Wrap a set of keys as a subobject, raising if it is not face-closed."""
    sub = SubSSet(parent, frozenset(members))
    problems = sub.closure_violations()
    if problems:
        raise SSetError("subobject is not face-closed: " + "; ".join(problems))
    return sub


def _label(vertices: tuple[int, ...]) -> str:
    return "-".join(str(v) for v in vertices)


def _from_vertex_subsets(subsets, truncation: int) -> FiniteSSet:
    """Present a family of vertex subsets (closed under deletion) as an sset.

    Faces delete the i-th vertex and always land on nondegenerate simplices.
    """
    K = FiniteSSet(truncation)
    by_verts: dict[tuple[int, ...], SimplexKey] = {}
    for verts in sorted(subsets, key=lambda s: (len(s), s)):
        dim = len(verts) - 1
        faces = []
        for i in range(dim + 1):
            sub = verts[:i] + verts[i + 1 :]
            if dim >= 1:
                faces.append(nondegenerate(by_verts[sub]))
        by_verts[verts] = K.add_simplex(dim, faces, label=_label(verts))
    return K.freeze()


def standard_simplex(n: int, truncation: int | None = None) -> FiniteSSet:
    """The n-simplex: nondegenerate k-simplices are the (k+1)-subsets of {0..n}."""
    if truncation is None:
        truncation = n
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > truncation:
        raise TruncationError(f"standard simplex of dimension {n} needs truncation >= {n}")
    subsets = [
        verts
        for size in range(1, n + 2)
        for verts in itertools.combinations(range(n + 1), size)
    ]
    return _from_vertex_subsets(subsets, truncation)


def boundary(n: int, truncation: int | None = None) -> FiniteSSet:
    """The n-simplex minus its top nondegenerate simplex; empty for n = 0."""
    if truncation is None:
        truncation = max(n, 0)
    if n < 0:
        raise ValueError("n must be non-negative")
    subsets = [
        verts
        for size in range(1, n + 1)
        for verts in itertools.combinations(range(n + 1), size)
    ]
    return _from_vertex_subsets(subsets, truncation)


def horn(n: int, k: int, truncation: int | None = None) -> FiniteSSet:
    """The boundary minus the (n-1)-face opposite vertex k (the face not
    containing k)."""
    if truncation is None:
        truncation = n
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"horn index {k} out of range for dimension {n}")
    opposite = tuple(v for v in range(n + 1) if v != k)
    subsets = [
        verts
        for size in range(1, n + 1)
        for verts in itertools.combinations(range(n + 1), size)
        if verts != opposite
    ]
    return _from_vertex_subsets(subsets, truncation)


def label_inclusion(small: FiniteSSet, big: FiniteSSet) -> SimplicialMap:
    """The inclusion matching nondegenerate simplices by label.

    Intended for the subset-presented objects above, whose labels are the
    vertex tuples.
    """
    lookup = {(key.dim, key.label): key for key in big.all_simplices()}
    images = {}
    for x in small.all_simplices():
        target = lookup.get((x.dim, x.label))
        if target is None:
            raise SSetError(f"no simplex labelled {x.label!r} in dimension {x.dim}")
        images[x] = nondegenerate(target)
    return SimplicialMap(small, big, images)


# -- products and coproducts --------------------------------------------------


def _ref_display(ref: SimplexRef) -> str:
    base = ref.key.label if ref.key.label is not None else f"{ref.key.dim}#{ref.key.index}"
    if not ref.word:
        return base
    return "".join(f"s{a}" for a in ref.word) + base


def _normalize_pair(K: FiniteSSet, L: FiniteSSet, a: SimplexRef, b: SimplexRef):
    """Normal form of a levelwise pair: shared degeneracies factored out.

    Returns ``(word, (a', b'))`` with the words of a' and b' disjoint, so the
    stripped pair names a nondegenerate simplex of the product.
    """
    js = []
    while True:
        common = set(a.word) & set(b.word)
        if not common:
            break
        j = max(common)
        js.append(j)
        a = apply_face(K, j, a)
        b = apply_face(L, j, b)
    word: tuple[int, ...] = ()
    from .core import _word_after_degeneracy

    for j in reversed(js):
        word = _word_after_degeneracy(j, word)
    return word, (a, b)


def product(K: FiniteSSet, L: FiniteSSet) -> FiniteSSet:
    """The categorical product, with levelwise sets in canonical bijection
    with the pairs of level sets.

    Nondegenerate n-simplices are the pairs of n-simplices whose degeneracy
    words are disjoint; faces are computed componentwise and renormalized.
    """
    if K.truncation != L.truncation:
        raise TruncationError(
            f"truncation mismatch: {K.truncation} != {L.truncation}"
        )
    D = K.truncation
    P = FiniteSSet(D)
    pair_key: dict[tuple[SimplexRef, SimplexRef], SimplexKey] = {}
    for n in range(D + 1):
        for a in level_set(K, n):
            for b in level_set(L, n):
                if set(a.word) & set(b.word):
                    continue
                faces = []
                for i in range(n + 1) if n >= 1 else ():
                    fa = apply_face(K, i, a)
                    fb = apply_face(L, i, b)
                    word, stripped = _normalize_pair(K, L, fa, fb)
                    faces.append(SimplexRef(word, pair_key[stripped]))
                label = f"({_ref_display(a)},{_ref_display(b)})"
                pair_key[(a, b)] = P.add_simplex(n, faces, label=label)
    return P.freeze()


def product_projections(K: FiniteSSet, L: FiniteSSet, P: FiniteSSet):
    """The two projections of a product built by :func:`product`.

    P must be the product of K and L with the same construction order.
    """
    first: dict[SimplexKey, SimplexRef] = {}
    second: dict[SimplexKey, SimplexRef] = {}
    pairs = []
    for n in range(P.truncation + 1):
        for a in level_set(K, n):
            for b in level_set(L, n):
                if set(a.word) & set(b.word):
                    continue
                pairs.append((a, b))
    for key, (a, b) in zip(P.all_simplices(), pairs):
        first[key] = a
        second[key] = b
    return SimplicialMap(P, K, first), SimplicialMap(P, L, second)


def coproduct(K: FiniteSSet, L: FiniteSSet) -> FiniteSSet:
    """Disjoint union of presentations."""
    if K.truncation != L.truncation:
        raise TruncationError(
            f"truncation mismatch: {K.truncation} != {L.truncation}"
        )
    C = FiniteSSet(K.truncation)
    relocated: dict[tuple[int, SimplexKey], SimplexKey] = {}
    for dim in range(C.truncation + 1):
        for tag, M in ((0, K), (1, L)):
            for x in M.simplices(dim):
                faces = [
                    SimplexRef(ref.word, relocated[(tag, ref.key)]) for ref in M.faces(x)
                ]
                relocated[(tag, x)] = C.add_simplex(dim, faces, label=x.label)
    C.freeze()
    return C


def coproduct_inclusions(K: FiniteSSet, L: FiniteSSet, C: FiniteSSet):
    """Inclusions of the two summands into a coproduct built by :func:`coproduct`."""
    left: dict[SimplexKey, SimplexRef] = {}
    right: dict[SimplexKey, SimplexRef] = {}
    cursor = {d: 0 for d in range(C.truncation + 1)}
    for dim in range(C.truncation + 1):
        for x in K.simplices(dim):
            left[x] = nondegenerate(C.key(dim, cursor[dim]))
            cursor[dim] += 1
        for x in L.simplices(dim):
            right[x] = nondegenerate(C.key(dim, cursor[dim]))
            cursor[dim] += 1
    return SimplicialMap(K, C, left), SimplicialMap(L, C, right)


# -- quotients and skeleta ------------------------------------------------------


def _point_degeneracy(dim: int, base: SimplexKey) -> SimplexRef:
    """The unique degenerate dim-simplex on a vertex."""
    return SimplexRef(tuple(range(dim - 1, -1, -1)), base)


def collapse(K: FiniteSSet, A: SubSSet):
    """Collapse a nonempty face-closed subobject to a single vertex.

    Returns the quotient together with the projection map.  Faces that land
    in A are re-targeted to the unique degeneracy of the new base vertex,
    which is labelled ``*``.
    """
    if A.parent is not K:
        raise SSetError("subobject does not belong to the given simplicial set")
    if not A.members:
        raise SSetError("cannot collapse the empty subobject to a point")
    problems = A.closure_violations()
    if problems:
        raise SSetError("subobject is not face-closed: " + "; ".join(problems))
    Q = FiniteSSet(K.truncation)
    base = Q.add_simplex(0, label="*")
    relocated: dict[SimplexKey, SimplexKey] = {}
    for x in K.all_simplices():
        if x in A.members:
            continue
        faces = []
        for ref in K.faces(x):
            if ref.key in A.members:
                faces.append(_point_degeneracy(x.dim - 1, base))
            else:
                faces.append(SimplexRef(ref.word, relocated[ref.key]))
        relocated[x] = Q.add_simplex(x.dim, faces, label=x.label)
    Q.freeze()
    images = {}
    for x in K.all_simplices():
        if x in A.members:
            images[x] = _point_degeneracy(x.dim, base)
        else:
            images[x] = nondegenerate(relocated[x])
    return Q, SimplicialMap(K, Q, images)


def skeleton(K: FiniteSSet, m: int) -> FiniteSSet:
    """Discard nondegenerate simplices of dimension above m."""
    if not 0 <= m <= K.truncation:
        raise TruncationError(f"skeleton dimension {m} outside 0..{K.truncation}")
    S = FiniteSSet(K.truncation)
    relocated: dict[SimplexKey, SimplexKey] = {}
    for x in K.all_simplices():
        if x.dim > m:
            continue
        faces = [SimplexRef(ref.word, relocated[ref.key]) for ref in K.faces(x)]
        relocated[x] = S.add_simplex(x.dim, faces, label=x.label)
    return S.freeze()


def mapping_space_level(K: FiniteSSet, L: FiniteSSet, n: int) -> list:
    """Level n of the mapping object: all maps K x Delta[n] -> L.

    Level 0 is the plain set of simplicial maps K -> L.
    """
    if K.truncation != L.truncation:
        raise TruncationError(
            f"truncation mismatch: {K.truncation} != {L.truncation}"
        )
    if n > K.truncation:
        raise TruncationError(
            f"mapping level {n} needs the {n}-simplex, but truncation is {K.truncation}"
        )
    cylinder = product(K, standard_simplex(n, K.truncation))
    return enumerate_simplicial_maps(cylinder, L)


# -- oriented complexes as simplicial sets --------------------------------------


def oriented_to_sset(oc, truncation: int | None = None) -> FiniteSSet:
    """Present an oriented simplicial complex as a simplicial set.

    Every simplex must be a chain in the vertex order; its increasing vertex
    listing supplies the face structure (face i deletes the i-th vertex).
    """
    from .complexes import OrientedComplex  # local import to avoid a cycle

    if not isinstance(oc, OrientedComplex):
        raise TypeError("expected an OrientedComplex")
    bad = [s for s in oc.complex.simplices if not oc.is_chain(s)]
    if bad:
        listing = ", ".join(sorted("{" + ",".join(map(str, sorted(s))) + "}" for s in bad))
        raise SSetError(f"simplices with incomparable vertices: {listing}")
    top = max(len(s) for s in oc.complex.simplices) - 1 if oc.complex.simplices else -1
    if truncation is None:
        truncation = max(top, 0)
    if top > truncation:
        raise TruncationError(f"complex has a {top}-simplex, truncation is {truncation}")
    K = FiniteSSet(truncation)
    by_chain: dict[tuple, SimplexKey] = {}
    chains = sorted(
        (tuple(oc.sort_chain(s)) for s in oc.complex.simplices),
        key=lambda c: (len(c), tuple(str(v) for v in c)),
    )
    for chain in chains:
        dim = len(chain) - 1
        faces = []
        for i in range(dim + 1) if dim >= 1 else ():
            faces.append(nondegenerate(by_chain[chain[:i] + chain[i + 1 :]]))
        by_chain[chain] = K.add_simplex(dim, faces, label="-".join(map(str, chain)))
    return K.freeze()
