"""Abstract and oriented simplicial complexes, their products, and
realization to explicit coordinates.

A complex is a vertex set plus a downward-closed family of nonempty vertex
subsets.  Realization assigns standard basis vectors via a vertex bijection;
only the maximal simplices are retained on the realized side, since mesh
formats list maximal cells.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import SSetError


@dataclass(frozen=True)
class AbstractComplex:
    """Vertex labels in a fixed order, simplices as frozensets of labels."""

    vertices: tuple
    simplices: frozenset

    def f_vector(self) -> tuple[int, ...]:
        if not self.simplices:
            return ()
        top = max(len(s) for s in self.simplices)
        counts = [0] * top
        for s in self.simplices:
            counts[len(s) - 1] += 1
        return tuple(counts)

    def __repr__(self):
        return f"AbstractComplex({len(self.vertices)} vertices, {len(self.simplices)} simplices)"


@dataclass
class ComplexReport:
    ok: bool
    violations: list[str]
    complex: AbstractComplex | None

    def __str__(self):
        if self.ok:
            return "valid complex"
        return "invalid complex:\n" + "\n".join(f"  {v}" for v in self.violations)


def _fmt(simplex) -> str:
    return "{" + ",".join(str(v) for v in sorted(simplex, key=str)) + "}"


def validate_complex(vertices, simplices) -> ComplexReport:
    """Check the singleton and downward-closure conditions.

    Reports every missing face; on success the report carries the complex.
    """
    vertices = tuple(vertices)
    family = {frozenset(s) for s in simplices}
    violations = []
    vertex_set = set(vertices)
    if len(vertex_set) != len(vertices):
        violations.append("duplicate vertex labels")
    for s in sorted(family, key=lambda s: (len(s), _fmt(s))):
        if not s:
            violations.append("the empty set is not a simplex")
            continue
        stray = s - vertex_set
        if stray:
            violations.append(f"simplex {_fmt(s)} uses unknown vertices {_fmt(stray)}")
        for v in sorted(s, key=str):
            if frozenset([v]) not in family:
                violations.append(f"missing singleton {{{v}}}")
        for face in map(frozenset, itertools.combinations(sorted(s, key=str), len(s) - 1)):
            if face and face not in family:
                violations.append(f"simplex {_fmt(s)} must have face {_fmt(face)}")
    for v in sorted(vertex_set, key=str):
        if frozenset([v]) not in family:
            violations.append(f"missing singleton {{{v}}}")
    violations = sorted(set(violations))
    if violations:
        return ComplexReport(False, violations, None)
    return ComplexReport(True, [], AbstractComplex(vertices, frozenset(family)))


def complex_from_maximal(vertices, maximal) -> AbstractComplex:
    """Build a complex by closing a family of simplices downward."""
    family = set()
    for s in maximal:
        s = tuple(sorted(set(s), key=str))
        for size in range(1, len(s) + 1):
            family.update(frozenset(c) for c in itertools.combinations(s, size))
    report = validate_complex(vertices, family)
    if not report.ok:
        raise SSetError(str(report))
    return report.complex


def maximal_simplices(K: AbstractComplex) -> list[frozenset]:
    """Simplices not contained in any strictly larger simplex."""
    return sorted(
        (s for s in K.simplices if not any(s < t for t in K.simplices)),
        key=lambda s: (len(s), _fmt(s)),
    )


def euler_characteristic_complex(K: AbstractComplex) -> int:
    """Alternating sum over all simplices by cardinality."""
    return sum((-1) ** (len(s) - 1) for s in K.simplices)


# -- oriented complexes ---------------------------------------------------------


@dataclass(frozen=True)
class OrientedComplex:
    """An abstract complex with a partial order on its vertices.

    ``order`` is the full relation as a frozenset of (a, b) pairs meaning
    a <= b, reflexively and transitively closed.
    """

    complex: AbstractComplex
    order: frozenset

    def leq(self, a, b) -> bool:
        return (a, b) in self.order

    def is_chain(self, simplex) -> bool:
        return all(
            self.leq(a, b) or self.leq(b, a)
            for a, b in itertools.combinations(simplex, 2)
        )

    def sort_chain(self, simplex) -> list:
        elts = list(simplex)
        # comparability is guaranteed by is_chain; sort by dominance count
        return sorted(elts, key=lambda v: sum(1 for w in elts if self.leq(w, v)))


def _closure(vertices, pairs) -> frozenset:
    rel = {(v, v) for v in vertices}
    rel.update((a, b) for a, b in pairs)
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in itertools.product(list(rel), repeat=2):
            if b == c and (a, d) not in rel:
                rel.add((a, d))
                changed = True
    return frozenset(rel)


def oriented_complex(K: AbstractComplex, pairs) -> OrientedComplex:
    """Orient a complex by the reflexive-transitive closure of given pairs.

    Raises on antisymmetry failures (a <= b <= a with a != b).
    """
    rel = _closure(K.vertices, pairs)
    for a, b in rel:
        if a != b and (b, a) in rel:
            raise SSetError(f"order is not antisymmetric: {a} and {b}")
    return OrientedComplex(K, rel)


def oriented_by_total_order(K: AbstractComplex) -> OrientedComplex:
    """Orient by the order in which the vertices are listed."""
    pairs = [
        (K.vertices[i], K.vertices[j])
        for i in range(len(K.vertices))
        for j in range(i, len(K.vertices))
    ]
    return OrientedComplex(K, frozenset(pairs))


def validate_oriented(oc: OrientedComplex) -> ComplexReport:
    """Every simplex must be a chain in the vertex order."""
    bad = [
        f"simplex {_fmt(s)} has incomparable vertices"
        for s in sorted(oc.complex.simplices, key=lambda s: (len(s), _fmt(s)))
        if not oc.is_chain(s)
    ]
    if bad:
        return ComplexReport(False, bad, None)
    return ComplexReport(True, [], oc.complex)


# -- products --------------------------------------------------------------------


def product_complex(K: AbstractComplex, L: AbstractComplex) -> AbstractComplex:
    """Unoriented product: all subsets whose two projections are simplices."""
    vertices = tuple(itertools.product(K.vertices, L.vertices))
    family = set()
    # every candidate subset lies in sk x sl for its own projections (sk, sl),
    # so scanning exact-projection subsets over all pairs is exhaustive
    for sk in K.simplices:
        for sl in L.simplices:
            cell = sorted(itertools.product(sorted(sk, key=str), sorted(sl, key=str)))
            for size in range(1, len(cell) + 1):
                for cand in itertools.combinations(cell, size):
                    if frozenset(p[0] for p in cand) == sk and frozenset(
                        p[1] for p in cand
                    ) == sl:
                        family.add(frozenset(cand))
    return AbstractComplex(vertices, frozenset(family))


def product_oriented(K: OrientedComplex, L: OrientedComplex) -> OrientedComplex:
    """Oriented product: only chains in the componentwise order survive."""
    plain = product_complex(K.complex, L.complex)
    order = frozenset(
        ((a1, a2), (b1, b2))
        for (a1, a2) in plain.vertices
        for (b1, b2) in plain.vertices
        if K.leq(a1, b1) and L.leq(a2, b2)
    )
    oc = OrientedComplex(plain, order)
    chains = frozenset(s for s in plain.simplices if oc.is_chain(s))
    return OrientedComplex(AbstractComplex(plain.vertices, chains), order)


# -- realization -----------------------------------------------------------------


@dataclass(frozen=True)
class RealizedComplex:
    """Vertices as standard basis vectors of R^|V|, maximal cells as index tuples.

    ``labels[i]`` is the vertex with phi-value i + 1, and ``coordinates[i]``
    is the basis vector e_{i+1}.
    """

    labels: tuple
    coordinates: np.ndarray
    maximal: tuple[tuple[int, ...], ...]


def realize(K: AbstractComplex, phi: dict | None = None) -> RealizedComplex:
    """Assign basis vectors by the bijection phi: V -> {1..|V|}.

    Defaults to the listed vertex order.  Maximal simplices are emitted as
    0-based index tuples, sorted lexicographically.
    """
    n = len(K.vertices)
    if phi is None:
        phi = {v: i + 1 for i, v in enumerate(K.vertices)}
    if sorted(phi.values()) != list(range(1, n + 1)) or set(phi) != set(K.vertices):
        raise SSetError("phi is not a bijection onto {1..|V|}")
    labels = tuple(sorted(K.vertices, key=lambda v: phi[v]))
    coords = np.eye(n, dtype=float)
    maximal = tuple(
        sorted(
            tuple(sorted(phi[v] - 1 for v in s))
            for s in maximal_simplices(K)
        )
    )
    return RealizedComplex(labels, coords, maximal)


def read_back(rc: RealizedComplex) -> AbstractComplex:
    """Recover the abstract complex from a realization's maximal cells."""
    maximal = [tuple(rc.labels[i] for i in cell) for cell in rc.maximal]
    return complex_from_maximal(rc.labels, maximal)
