"""Exhaustive horn-map enumeration, filler search, and recognition predicates.

A horn map into K is recorded by the images of the top-dimensional horn
faces: positions i != k carry the image of the face opposite vertex i,
mutually compatible on shared faces (d_i x_j = d_{j-1} x_i for i < j).
Lower-dimensional images are forced by these, so the record is complete.

All predicates are bounded.  An unbounded horn-filling statement cannot be
verified on a truncated presentation, so every report carries the dimension
bound it was checked at, and the verdict names say so ("..._up_to").
Degenerate simplices are eligible fillers throughout; constant fillers are
how degenerate horns get filled.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import FiniteSSet, SimplexRef, apply_face, level_set
from .errors import TruncationError


@dataclass(frozen=True)
class HornMap:
    """A map from the (n, k)-horn, as compatible images of its top faces.

    ``faces[i]`` is the image of the face opposite vertex i; entry k is None.
    """

    n: int
    k: int
    faces: tuple

    def __post_init__(self):
        if len(self.faces) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} face slots, got {len(self.faces)}")
        if self.faces[self.k] is not None:
            raise ValueError(f"slot {self.k} must be empty for the ({self.n},{self.k})-horn")

    def __repr__(self):
        entries = ", ".join(
            f"d{i}->{ref!r}" for i, ref in enumerate(self.faces) if ref is not None
        )
        return f"Horn({self.n},{self.k})[{entries}]"


def horn_map_is_compatible(K: FiniteSSet, h: HornMap) -> bool:
    """Shared sub-faces of the assigned faces must agree."""
    for j in range(h.n + 1):
        if j == h.k or h.faces[j] is None:
            continue
        for i in range(j):
            if i == h.k or h.faces[i] is None:
                continue
            if apply_face(K, i, h.faces[j]) != apply_face(K, j - 1, h.faces[i]):
                return False
    return True


def enumerate_horn_maps(K: FiniteSSet, n: int, k: int) -> list[HornMap]:
    """All maps from the (n, k)-horn into K, by compatible backtracking.

    Agrees in cardinality with enumerating simplicial maps out of the horn
    presented as a simplicial set, but only searches top-face images.
    """
    if not 1 <= n <= K.truncation:
        raise TruncationError(f"horn dimension {n} outside 1..{K.truncation}")
    if not 0 <= k <= n:
        raise ValueError(f"horn index {k} out of range for dimension {n}")
    slots = [i for i in range(n + 1) if i != k]
    candidates = level_set(K, n - 1)
    results: list[HornMap] = []
    assigned: dict[int, SimplexRef] = {}

    def compatible(i: int, ref: SimplexRef) -> bool:
        for j, other in assigned.items():
            lo, hi = (i, j) if i < j else (j, i)
            lo_ref, hi_ref = (ref, other) if i < j else (other, ref)
            if n >= 2 and apply_face(K, lo, hi_ref) != apply_face(K, hi - 1, lo_ref):
                return False
        return True

    def extend(pos: int):
        if pos == len(slots):
            faces = tuple(assigned.get(i) for i in range(n + 1))
            results.append(HornMap(n, k, faces))
            return
        i = slots[pos]
        for ref in candidates:
            if compatible(i, ref):
                assigned[i] = ref
                extend(pos + 1)
                del assigned[i]

    extend(0)
    return results


def fillers(K: FiniteSSet, h: HornMap) -> list[SimplexRef]:
    """All n-simplices of K, degenerate included, whose faces extend h."""
    if h.n > K.truncation:
        raise TruncationError(f"fillers of a {h.n}-horn exceed truncation {K.truncation}")
    out = []
    for x in level_set(K, h.n):
        if all(
            i == h.k or apply_face(K, i, x) == h.faces[i] for i in range(h.n + 1)
        ):
            out.append(x)
    return out


def restrict_to_horn(K: FiniteSSet, x: SimplexRef, n: int, k: int) -> HornMap:
    """The horn map obtained by forgetting the k-th face of an n-simplex."""
    faces = tuple(
        None if i == k else apply_face(K, i, x) for i in range(n + 1)
    )
    return HornMap(n, k, faces)


@dataclass
class RecognitionReport:
    """Outcome of a bounded horn-filling check.

    ``witness`` is the lexicographically first failing horn map (by dimension,
    horn index, then enumeration order); present iff the check failed.
    ``stats[(n, k)]`` records horn-map and filler counts per horn shape.
    """

    kind: str
    passed: bool
    bound: int
    witness: HornMap | None
    witness_fillers: int | None
    stats: dict

    def __str__(self):
        verdict = "pass" if self.passed else "fail"
        total = sum(s["horn_maps"] for s in self.stats.values())
        head = f"{self.kind} up to dimension {self.bound}: {verdict} ({total} horn maps)"
        if self.witness is not None:
            head += f"\n  witness: {self.witness!r} with {self.witness_fillers} filler(s)"
        return head


def _check_horns(K: FiniteSSet, kind: str, bound: int, inner_only: bool, unique_from: int):
    """Shared driver: fillers must exist everywhere and be unique from
    dimension ``unique_from`` upward (0 disables uniqueness)."""
    if bound > K.truncation - 1:
        raise TruncationError(
            f"bound {bound} needs fillers up to dimension {bound}, "
            f"beyond what truncation {K.truncation} certifies"
        )
    witness = None
    witness_count = None
    stats: dict = {}
    lo = 2 if inner_only else 1
    for n in range(lo, bound + 1):
        ks = range(1, n) if inner_only else range(n + 1)
        for k in ks:
            entry = {"horn_maps": 0, "unfillable": 0, "unique": 0, "multiple": 0}
            stats[(n, k)] = entry
            need_unique = unique_from and n >= unique_from
            for h in enumerate_horn_maps(K, n, k):
                count = len(fillers(K, h))
                entry["horn_maps"] += 1
                if count == 0:
                    entry["unfillable"] += 1
                elif count == 1:
                    entry["unique"] += 1
                else:
                    entry["multiple"] += 1
                bad = (count != 1) if need_unique else (count == 0)
                if bad and witness is None:
                    witness = h
                    witness_count = count
    return RecognitionReport(kind, witness is None, bound, witness, witness_count, stats)


def is_kan_up_to(K: FiniteSSet, bound: int) -> RecognitionReport:
    """Every horn map in dimensions 1..bound has at least one filler."""
    return _check_horns(K, "kan", bound, inner_only=False, unique_from=0)


def is_quasicategory_up_to(K: FiniteSSet, bound: int) -> RecognitionReport:
    """Every inner horn map in dimensions 2..bound has at least one filler."""
    return _check_horns(K, "quasi-category", bound, inner_only=True, unique_from=0)


def is_nerve_up_to(K: FiniteSSet, bound: int) -> RecognitionReport:
    """Every inner horn map has exactly one filler."""
    return _check_horns(K, "nerve", bound, inner_only=True, unique_from=2)


def is_groupoid_nerve_up_to(K: FiniteSSet, bound: int) -> RecognitionReport:
    """Every horn map, outer included, fills; uniquely so from dimension 2 up.

    Uniqueness cannot start at dimension 1: the 1-horns are single vertices,
    and in any nerve with a nontrivial endomorphism a vertex extends to more
    than one edge.  Existence at dimension 1 plus uniqueness above it is the
    characterization actually used.
    """
    return _check_horns(K, "groupoid-nerve", bound, inner_only=False, unique_from=2)
