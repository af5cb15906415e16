"""Shared corpus of objects used across the test modules.

Everything is built fresh per call at a common truncation so map enumeration
preconditions hold.  Mutated presentations are deliberately broken objects
that validate() must reject.
"""

from __future__ import annotations

import ssetkit as sk
from ssetkit.complexes import complex_from_maximal, oriented_by_total_order
from ssetkit.core import FiniteSSet, SimplexKey, SimplexRef, nondegenerate

# the paper's running example complex, with the edge the closure condition
# and the realization figure both require
EXAMPLE_K_VERTICES = ["a", "b", "c", "d"]
EXAMPLE_K_SIMPLICES = [
    {"a"}, {"b"}, {"c"}, {"d"},
    {"a", "b"}, {"a", "c"}, {"b", "c"}, {"a", "d"}, {"c", "d"},
    {"a", "c", "d"},
]

OCTAHEDRON_FACES = [
    ("T", "L", "F"), ("T", "F", "R"), ("T", "R", "H"), ("T", "H", "L"),
    ("B", "L", "F"), ("B", "F", "R"), ("B", "R", "H"), ("B", "H", "L"),
]
OCTAHEDRON_VERTICES = ["T", "B", "L", "R", "F", "H"]


def example_k_complex():
    report = sk.validate_complex(EXAMPLE_K_VERTICES, EXAMPLE_K_SIMPLICES)
    assert report.ok
    return report.complex


def octahedron_complex():
    return complex_from_maximal(OCTAHEDRON_VERTICES, OCTAHEDRON_FACES)


def circle(truncation=4):
    D1 = sk.standard_simplex(1, truncation)
    return sk.collapse(D1, sk.sub_sset(D1, D1.simplices(0)))[0]


def collapsed_triangle(truncation=4):
    """Quotient of the 2-simplex by the edge opposite vertex 0."""
    D2 = sk.standard_simplex(2, truncation)
    members = [k for k in D2.all_simplices() if k.label in ("1", "2", "1-2")]
    return sk.collapse(D2, sk.sub_sset(D2, members))[0]


def two_sphere(truncation=4):
    """Quotient of the 2-simplex by its whole boundary."""
    D2 = sk.standard_simplex(2, truncation)
    members = [k for k in D2.all_simplices() if k.dim < 2]
    return sk.collapse(D2, sk.sub_sset(D2, members))[0]


def categories():
    return [
        ("poset0", sk.chain_category(0)),
        ("poset1", sk.chain_category(1)),
        ("poset2", sk.chain_category(2)),
        ("z2", sk.cyclic_group_category(2)),
        ("z3", sk.cyclic_group_category(3)),
        ("pair-groupoid", sk.indiscrete_category(["a", "b"])),
    ]


def sset_corpus(truncation=4):
    """Named corpus objects, all at one truncation, all expected valid."""
    out = []
    for n in range(min(truncation, 4) + 1):
        out.append((f"simplex-{n}", sk.standard_simplex(n, truncation)))
    for n in range(1, min(truncation, 4) + 1):
        out.append((f"boundary-{n}", sk.boundary(n, truncation)))
    out.append(("empty", sk.boundary(0, truncation)))
    for n in range(1, min(truncation, 4) + 1):
        for k in range(n + 1):
            out.append((f"horn-{n}-{k}", sk.horn(n, k, truncation)))
    D1 = sk.standard_simplex(1, truncation)
    out.append(("square", sk.product(D1, D1)))
    circ = circle(truncation)
    out.append(("circle", circ))
    out.append(("torus", sk.product(circ, circ)))
    out.append(("triangle-x-point", sk.product(sk.standard_simplex(2, truncation),
                                               sk.standard_simplex(0, truncation))))
    out.append(("collapsed-triangle", collapsed_triangle(truncation)))
    out.append(("two-sphere", two_sphere(truncation)))
    out.append(("two-triangles", sk.coproduct(sk.standard_simplex(2, truncation),
                                              sk.standard_simplex(2, truncation))))
    out.append(("triangle-plus-circle", sk.coproduct(sk.standard_simplex(2, truncation), circ)))
    for name, C in categories():
        out.append((f"nerve-{name}", sk.nerve(C, truncation)))
    Ko = oriented_by_total_order(example_k_complex())
    out.append(("example-k", sk.oriented_to_sset(Ko, truncation)))
    octa = oriented_by_total_order(octahedron_complex())
    out.append(("octahedron", sk.oriented_to_sset(octa, truncation)))
    return out


def permuted_triangle():
    """The 2-simplex with faces reassigned to (e1, e0, e2).

    Recomputing the identities by hand: (0,1) still passes because both
    sides land on the top vertex, while (0,2) and (1,2) fail.
    """
    K = FiniteSSet(2)
    v = [K.add_simplex(0, label=str(i)) for i in range(3)]
    e01 = K.add_simplex(1, [nondegenerate(v[1]), nondegenerate(v[0])], label="0-1")
    e02 = K.add_simplex(1, [nondegenerate(v[2]), nondegenerate(v[0])], label="0-2")
    e12 = K.add_simplex(1, [nondegenerate(v[2]), nondegenerate(v[1])], label="1-2")
    K.add_simplex(2, [nondegenerate(e02), nondegenerate(e12), nondegenerate(e01)], label="bad")
    return K.freeze()


def mutated_corpus():
    """Broken presentations that validate() must reject."""
    out = [("permuted-triangle-faces", permuted_triangle())]

    # an edge whose face targets another edge (wrong dimension)
    K = FiniteSSet(1)
    v0 = K.add_simplex(0, label="v0")
    v1 = K.add_simplex(0, label="v1")
    e = K.add_simplex(1, [nondegenerate(v1), nondegenerate(v0)], label="e")
    K.add_simplex(1, [nondegenerate(e), nondegenerate(v0)], label="bad")
    out.append(("edge-face-is-edge", K.freeze()))

    # dangling reference: face points at a missing vertex index
    K = FiniteSSet(1)
    v0 = K.add_simplex(0, label="v0")
    K.add_simplex(1, [nondegenerate(SimplexKey(0, 7)), nondegenerate(v0)], label="bad")
    out.append(("dangling-face", K.freeze()))

    # word not applicable: s1 cannot act on a vertex
    K = FiniteSSet(2)
    v0 = K.add_simplex(0, label="v0")
    e = K.add_simplex(1, [nondegenerate(v0), nondegenerate(v0)], label="loop")
    K.add_simplex(
        2,
        [SimplexRef((1,), v0), nondegenerate(e), nondegenerate(e)],
        label="bad",
    )
    out.append(("inapplicable-word", K.freeze()))

    # tetrahedron with two faces swapped: higher-dimensional identity failure
    D3 = sk.standard_simplex(3, 3)
    K = FiniteSSet(3)
    relocated = {}
    for x in D3.all_simplices():
        faces = [SimplexRef(r.word, relocated[r.key]) for r in D3.faces(x)]
        if x.dim == 3:
            faces[0], faces[1] = faces[1], faces[0]
        relocated[x] = K.add_simplex(x.dim, faces, label=x.label)
    out.append(("swapped-tetrahedron-faces", K.freeze()))

    # 2-simplex whose face endpoints cannot meet: d0 of the faces disagree
    K = FiniteSSet(2)
    v0 = K.add_simplex(0, label="v0")
    v1 = K.add_simplex(0, label="v1")
    e = K.add_simplex(1, [nondegenerate(v1), nondegenerate(v0)], label="e")
    K.add_simplex(
        2,
        [nondegenerate(e), SimplexRef((0,), v0), SimplexRef((0,), v0)],
        label="bad",
    )
    out.append(("mismatched-endpoints", K.freeze()))

    return out
