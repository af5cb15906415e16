"""Finitely presented, dimension-truncated simplicial sets.

Only nondegenerate simplices are stored.  Every simplex of the underlying
simplicial set is, uniquely, an admissible degeneracy word applied to a
nondegenerate simplex (the Eilenberg-Zilber normal form), so degenerate
simplices exist solely as :class:`SimplexRef` values computed on demand.

A presentation records, per dimension 0..D, an ordered list of nondegenerate
simplices, and for each nondegenerate simplex of dimension n >= 1 a faces
array of n + 1 references (entry i is the i-th face).  Face references may
point at degenerate simplices; that is required by quotients that collapse a
simplex onto something lower-dimensional.

The five simplicial identities

    d_i d_j = d_{j-1} d_i            (i < j)
    d_i s_j = s_{j-1} d_i            (i < j)
    d_j s_j = d_{j+1} s_j = id
    d_i s_j = s_j d_{i-1}            (i > j + 1)
    s_i s_j = s_{j+1} s_i            (i <= j)

drive all normal-form rewriting.  The last relation is stated with a missing
equals sign in some sources; the reading ``s_i s_j = s_{j+1} s_i`` for
``i <= j`` is the only one compatible with admissible words and is the one
implemented and validated here.

Degeneracy words are strictly decreasing tuples, read left to right in
operator order: ``(2, 0)`` names s_2 s_0 x, with s_0 applied to x first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import delta
from .delta import OrdinalMap
from .errors import CompositionError, FrozenError, SSetError, TruncationError


@dataclass(frozen=True)
class SimplexKey:
    """Identifier of a nondegenerate simplex: dimension plus position.

    The optional label is display-only and excluded from equality.
    """

    dim: int
    index: int
    label: str | None = field(default=None, compare=False)

    def __repr__(self):
        if self.label is not None:
            return f"<{self.dim}#{self.index} {self.label!r}>"
        return f"<{self.dim}#{self.index}>"


@dataclass(frozen=True)
class SimplexRef:
    """A possibly degenerate simplex in normal form: word applied to a key.

    The word must be admissible (strictly decreasing).  An empty word denotes
    the nondegenerate simplex itself.
    """

    word: tuple[int, ...]
    key: SimplexKey

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        if any(a < 0 for a in self.word):
            raise ValueError(f"negative degeneracy index in {self.word}")
        if any(a <= b for a, b in zip(self.word, self.word[1:])):
            raise ValueError(f"degeneracy word {self.word} is not strictly decreasing")

    @property
    def dim(self) -> int:
        return self.key.dim + len(self.word)

    @property
    def is_degenerate(self) -> bool:
        return bool(self.word)

    def __repr__(self):
        if not self.word:
            return repr(self.key)
        ops = "".join(f"s{a}" for a in self.word)
        return f"{ops}·{self.key!r}"


def nondegenerate(key: SimplexKey) -> SimplexRef:
    """The simplex itself, with an empty degeneracy word."""
    return SimplexRef((), key)


class FiniteSSet:
    """A finitely presented simplicial set truncated at dimension D.

    Built by adding nondegenerate simplices dimension by dimension, then
    frozen.  After :meth:`freeze` the object is immutable and all queries are
    safe to run concurrently; level sets and face applications are memoized.

    Construction is deliberately permissive about face targets so that broken
    presentations can be represented and then diagnosed by :func:`validate`.
    """

    def __init__(self, truncation: int):
        if truncation < -1:
            raise ValueError("truncation must be >= -1 (-1 encodes the empty simplicial set)")
        self._truncation = truncation
        self._keys: list[list[SimplexKey]] = [[] for _ in range(truncation + 1)]
        self._faces: dict[SimplexKey, tuple[SimplexRef, ...]] = {}
        self._frozen = False
        self._level_cache: dict[int, tuple[SimplexRef, ...]] = {}
        self._face_cache: dict[tuple[int, SimplexRef], SimplexRef] = {}

    # -- construction ------------------------------------------------------

    def add_simplex(self, dim: int, faces=(), label: str | None = None) -> SimplexKey:
        """Append a nondegenerate simplex and return its key.

        ``faces`` must contain dim + 1 SimplexRefs for dim >= 1 (entry i is
        the i-th face) and must be empty for dim 0.  Face targets are not
        checked here; run :func:`validate`.
        """
        if self._frozen:
            raise FrozenError("cannot add simplices to a frozen simplicial set")
        if dim < 0:
            raise ValueError("dimension must be non-negative")
        if dim > self._truncation:
            raise TruncationError(
                f"dimension {dim} exceeds truncation {self._truncation}"
            )
        faces = tuple(faces)
        expected = dim + 1 if dim >= 1 else 0
        if len(faces) != expected:
            raise ValueError(f"a {dim}-simplex needs {expected} faces, got {len(faces)}")
        if not all(isinstance(f, SimplexRef) for f in faces):
            raise TypeError("faces must be SimplexRefs")
        key = SimplexKey(dim, len(self._keys[dim]), label)
        self._keys[dim].append(key)
        self._faces[key] = faces
        return key

    def freeze(self) -> "FiniteSSet":
        self._frozen = True
        return self

    @property
    def frozen(self) -> bool:
        return self._frozen

    # -- queries -----------------------------------------------------------

    @property
    def truncation(self) -> int:
        return self._truncation

    def n_nondegenerate(self, dim: int) -> int:
        if not 0 <= dim <= self._truncation:
            return 0
        return len(self._keys[dim])

    def simplices(self, dim: int) -> tuple[SimplexKey, ...]:
        """Nondegenerate simplices of one dimension, in insertion order."""
        if not 0 <= dim <= self._truncation:
            return ()
        return tuple(self._keys[dim])

    def all_simplices(self):
        """All nondegenerate simplices, dimension by dimension."""
        for dim in range(self._truncation + 1):
            yield from self._keys[dim]

    def key(self, dim: int, index: int) -> SimplexKey:
        return self._keys[dim][index]

    def has_key(self, key: SimplexKey) -> bool:
        return (
            0 <= key.dim <= self._truncation
            and key.index < len(self._keys[key.dim])
            and self._keys[key.dim][key.index] == key
        )

    def faces(self, key: SimplexKey) -> tuple[SimplexRef, ...]:
        return self._faces[key]

    def face(self, key: SimplexKey, i: int) -> SimplexRef:
        return self._faces[key][i]

    def top_dim(self) -> int:
        """Largest dimension with a nondegenerate simplex, -1 if empty."""
        for dim in range(self._truncation, -1, -1):
            if self._keys[dim]:
                return dim
        return -1

    def f_vector(self) -> tuple[int, ...]:
        """Counts of nondegenerate simplices per dimension 0..top_dim()."""
        top = self.top_dim()
        return tuple(len(self._keys[d]) for d in range(top + 1))

    def is_empty(self) -> bool:
        return self.top_dim() == -1

    def __repr__(self):
        return f"FiniteSSet(truncation={self._truncation}, f_vector={self.f_vector()})"


# -- normal-form rewriting ---------------------------------------------------


def _word_after_degeneracy(j: int, word: tuple[int, ...]) -> tuple[int, ...]:
    """Admissible form of s_j composed onto an admissible word.

    Repeatedly applies s_i s_j = s_{j+1} s_i (i <= j) to push the new index
    into place.
    """
    out = []
    rest = list(word)
    while rest and j <= rest[0]:
        out.append(rest[0] + 1)
        rest.pop(0)
    out.append(j)
    out.extend(rest)
    return tuple(out)


def _word_after_face(i: int, word: tuple[int, ...]):
    """Push d_i through an admissible degeneracy word.

    Returns ``(new_word, leftover)``: either the face is absorbed by a
    cancellation d_j s_j = d_{j+1} s_j = id (leftover is None), or it emerges
    on the far side as d_leftover, to be applied to the underlying
    nondegenerate simplex.
    """
    out = []
    rest = list(word)
    while rest:
        a = rest[0]
        if i < a:
            out.append(a - 1)          # d_i s_a = s_{a-1} d_i
            rest.pop(0)
        elif i == a or i == a + 1:     # d_a s_a = d_{a+1} s_a = id
            out.extend(rest[1:])
            return tuple(out), None
        else:
            out.append(a)              # d_i s_a = s_a d_{i-1}
            rest.pop(0)
            i -= 1
    return tuple(out), i


def _push_word(word: tuple[int, ...], ref: SimplexRef) -> SimplexRef:
    """Apply an admissible degeneracy word on top of an existing reference."""
    w = ref.word
    for j in reversed(word):
        w = _word_after_degeneracy(j, w)
    return SimplexRef(w, ref.key)


def apply_degeneracy(j: int, ref: SimplexRef) -> SimplexRef:
    """s_j acting on a simplex in normal form (0 <= j <= ref.dim)."""
    if not 0 <= j <= ref.dim:
        raise ValueError(f"degeneracy index {j} out of range for dimension {ref.dim}")
    return SimplexRef(_word_after_degeneracy(j, ref.word), ref.key)


def apply_face(K: FiniteSSet, i: int, ref: SimplexRef) -> SimplexRef:
    """d_i acting on a simplex in normal form (requires ref.dim >= 1).

    The face index is rewritten through the degeneracy word; if it survives,
    it is resolved against the stored faces array of the underlying
    nondegenerate simplex, and the pending word is recombined into normal
    form.
    """
    if ref.dim < 1:
        raise ValueError("0-simplices have no faces")
    if not 0 <= i <= ref.dim:
        raise ValueError(f"face index {i} out of range for dimension {ref.dim}")
    cached = K._face_cache.get((i, ref))
    if cached is not None:
        return cached
    word, leftover = _word_after_face(i, ref.word)
    if leftover is None:
        result = SimplexRef(word, ref.key)
    else:
        result = _push_word(word, K.faces(ref.key)[leftover])
    K._face_cache[(i, ref)] = result
    return result


def apply_operator(K: FiniteSSet, op: OrdinalMap, ref: SimplexRef) -> SimplexRef:
    """The contravariant action of a monotone map on a simplex of K.

    ``op`` must target the dimension of ``ref``; the result lives in
    dimension ``op.source``.  The map is factorized and its generators are
    rewritten one at a time through the five identities.
    """
    if op.target != ref.dim:
        raise CompositionError(
            f"operator targets [{op.target}] but simplex has dimension {ref.dim}"
        )
    if op.source > K.truncation:
        raise TruncationError(
            f"operator source dimension {op.source} exceeds truncation {K.truncation}"
        )
    cw, fw = delta.factorize(op)
    for t in reversed(fw):
        ref = apply_face(K, t, ref)
    for j in reversed(cw):
        ref = apply_degeneracy(j, ref)
    return ref


# -- level sets --------------------------------------------------------------


def _admissible_words(length: int, total_dim: int):
    """All admissible degeneracy words of given length on simplices whose
    degenerate image has dimension ``total_dim``.

    Words correspond to (length)-subsets of {0..total_dim-1}: the positions
    where the underlying surjection repeats.
    """
    for subset in itertools.combinations(range(total_dim), length):
        yield tuple(sorted(subset, reverse=True))


def level_set(K: FiniteSSet, n: int) -> tuple[SimplexRef, ...]:
    """All n-simplices of K, degenerate included, in a deterministic order.

    Nondegenerate simplices come first (empty word), then degeneracies of
    lower-dimensional simplices, base dimension descending.
    """
    if not 0 <= n <= K.truncation:
        raise TruncationError(f"level {n} outside truncation {K.truncation}")
    cached = K._level_cache.get(n)
    if cached is not None:
        return cached
    out = []
    for m in range(n, -1, -1):
        for word in _admissible_words(n - m, n):
            for key in K.simplices(m):
                out.append(SimplexRef(word, key))
    result = tuple(out)
    K._level_cache[n] = result
    return result


# -- validation ---------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    """One failed check, attributed to a simplex."""

    kind: str
    key: SimplexKey | None
    detail: str
    indices: tuple[int, int] | None = None

    def __str__(self):
        where = f" at {self.key!r}" if self.key is not None else ""
        pair = f" (i,j)={self.indices}" if self.indices is not None else ""
        return f"[{self.kind}]{where}{pair}: {self.detail}"


@dataclass
class ValidationReport:
    ok: bool
    violations: list[Violation]

    def __str__(self):
        if self.ok:
            return "valid"
        lines = [f"{len(self.violations)} violation(s):"]
        lines += [f"  {v}" for v in self.violations]
        return "\n".join(lines)


def _check_ref_bookkeeping(K: FiniteSSet, ref: SimplexRef, expect_dim: int) -> str | None:
    if not K.has_key(ref.key):
        return f"dangling reference {ref!r}"
    if ref.dim != expect_dim:
        return f"reference {ref!r} has dimension {ref.dim}, expected {expect_dim}"
    m = ref.key.dim
    length = len(ref.word)
    for pos, a in enumerate(ref.word):
        if a > m + length - pos - 1:
            return f"word {ref.word} not applicable to a {m}-simplex"
    return None


def validate(K: FiniteSSet) -> ValidationReport:
    """Check face-dimension bookkeeping and the identity d_i d_j = d_{j-1} d_i.

    Every violation is reported with the offending simplex and, for identity
    failures, the index pair (i, j).  Returns a report rather than raising.
    """
    violations: list[Violation] = []
    for x in K.all_simplices():
        if x.dim == 0:
            continue
        clean = True
        for i, ref in enumerate(K.faces(x)):
            problem = _check_ref_bookkeeping(K, ref, x.dim - 1)
            if problem is not None:
                violations.append(Violation("face-bookkeeping", x, f"face {i}: {problem}"))
                clean = False
        if not clean or x.dim < 2:
            continue
        top = nondegenerate(x)
        for j in range(1, x.dim + 1):
            for i in range(j):
                try:
                    left = apply_face(K, i, apply_face(K, j, top))
                    right = apply_face(K, j - 1, apply_face(K, i, top))
                except (KeyError, IndexError, ValueError) as exc:
                    violations.append(
                        Violation("face-bookkeeping", x, f"identity check broke: {exc}", (i, j))
                    )
                    continue
                if left != right:
                    violations.append(
                        Violation(
                            "simplicial-identity",
                            x,
                            f"d{i}d{j} = {left!r} but d{j - 1}d{i} = {right!r}",
                            (i, j),
                        )
                    )
    return ValidationReport(not violations, violations)


# -- simplicial maps ----------------------------------------------------------


class SimplicialMap:
    """A map of simplicial sets, stored on nondegenerate generators.

    ``images[x]`` is the SimplexRef of the target that the nondegenerate
    generator x is sent to.  Degenerate simplices map by pushing their word
    onto the image of the underlying generator, which is exactly what
    naturality forces.
    """

    def __init__(self, source: FiniteSSet, target: FiniteSSet, images: dict):
        self.source = source
        self.target = target
        self.images = dict(images)

    def __call__(self, ref: SimplexRef) -> SimplexRef:
        return _push_word(ref.word, self.images[ref.key])

    def __eq__(self, other):
        if not isinstance(other, SimplicialMap):
            return NotImplemented
        return (
            self.source is other.source
            and self.target is other.target
            and self.images == other.images
        )

    def __hash__(self):
        return hash(frozenset(self.images.items()))

    def __repr__(self):
        return f"SimplicialMap({len(self.images)} generators)"


def naturality_violations(f: SimplicialMap) -> list[str]:
    """Face-commutation failures of a candidate map, empty when it is valid."""
    problems = []
    for x in f.source.all_simplices():
        if x not in f.images:
            problems.append(f"no image assigned to {x!r}")
            continue
        if f.images[x].dim != x.dim:
            problems.append(f"image of {x!r} has wrong dimension")
            continue
        if x.dim == 0:
            continue
        for i in range(x.dim + 1):
            expected = f(f.source.face(x, i))
            actual = apply_face(f.target, i, f.images[x])
            if expected != actual:
                problems.append(
                    f"face {i} of {x!r}: image face {actual!r} != mapped face {expected!r}"
                )
    return problems


def is_simplicial_map(f: SimplicialMap) -> bool:
    return not naturality_violations(f)


def identity_map(K: FiniteSSet) -> SimplicialMap:
    return SimplicialMap(K, K, {x: nondegenerate(x) for x in K.all_simplices()})


def compose_maps(f: SimplicialMap, g: SimplicialMap) -> SimplicialMap:
    """g after f.  The middle objects must be the same object."""
    if f.target is not g.source:
        raise CompositionError("target of the first map is not the source of the second")
    return SimplicialMap(f.source, g.target, {x: g(ref) for x, ref in f.images.items()})


def is_isomorphism(f: SimplicialMap) -> bool:
    """Levelwise bijectivity on nondegenerate simplices plus naturality."""
    if f.source.truncation != f.target.truncation:
        return False
    for dim in range(f.source.truncation + 1):
        gens = f.source.simplices(dim)
        hit = set()
        for x in gens:
            ref = f.images.get(x)
            if ref is None or ref.is_degenerate:
                return False
            hit.add(ref.key)
        if len(hit) != len(gens) or len(gens) != f.target.n_nondegenerate(dim):
            return False
    return is_simplicial_map(f)


def enumerate_simplicial_maps(K: FiniteSSet, L: FiniteSSet) -> list[SimplicialMap]:
    """Exhaustive, deterministic enumeration of all simplicial maps K -> L.

    Backtracks over generator assignments dimension by dimension; a candidate
    image is kept iff its faces in L agree with the images of the generator's
    faces in K.  Completeness follows because constraints only ever mention
    lower-dimensional, already-assigned generators.
    """
    if K.truncation != L.truncation:
        raise TruncationError(
            f"truncation mismatch: {K.truncation} != {L.truncation}"
        )
    gens = list(K.all_simplices())
    results: list[SimplicialMap] = []
    images: dict[SimplexKey, SimplexRef] = {}

    def image_of(ref: SimplexRef) -> SimplexRef:
        return _push_word(ref.word, images[ref.key])

    def extend(pos: int):
        if pos == len(gens):
            results.append(SimplicialMap(K, L, images))
            return
        x = gens[pos]
        if x.dim == 0:
            candidates = level_set(L, 0)
            wanted = None
        else:
            wanted = tuple(image_of(K.face(x, i)) for i in range(x.dim + 1))
            candidates = level_set(L, x.dim)
        for ref in candidates:
            if wanted is not None:
                if any(
                    apply_face(L, i, ref) != wanted[i] for i in range(x.dim + 1)
                ):
                    continue
            images[x] = ref
            extend(pos + 1)
        images.pop(x, None)

    extend(0)
    return results
