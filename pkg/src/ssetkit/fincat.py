"""Finite categories with explicit composition tables, and the nerve.

A category is stored as object labels, morphism names with sources and
targets, an identity assignment, and a dense composition table on composable
pairs.  The nerve presents composable chains of non-identity morphisms as
nondegenerate simplices; an inner face whose composite is an identity lands
on a degenerate simplex, exercising the normal-form machinery.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core import FiniteSSet, SimplexKey, SimplexRef, SimplicialMap, nondegenerate
from .errors import SSetError


@dataclass(frozen=True)
class FinCategory:
    """Objects, morphisms, identities, and a composition table.

    ``src``/``dst`` give endpoints per morphism name; ``identity`` assigns
    each object its identity morphism; ``table[(f, g)]`` is the composite
    g after f, defined whenever dst[f] == src[g].
    """

    objects: tuple[str, ...]
    morphisms: tuple[str, ...]
    src: dict = field(hash=False)
    dst: dict = field(hash=False)
    identity: dict = field(hash=False)
    table: dict = field(hash=False)

    def is_identity(self, name: str) -> bool:
        return name in self._identity_names()

    def _identity_names(self):
        return set(self.identity.values())

    def composable(self, f: str, g: str) -> bool:
        return self.dst[f] == self.src[g]

    def compose(self, f: str, g: str) -> str:
        """g after f."""
        return self.table[(f, g)]

    def hom(self, a: str, b: str) -> list[str]:
        return [m for m in self.morphisms if self.src[m] == a and self.dst[m] == b]

    def __repr__(self):
        return f"FinCategory({len(self.objects)} objects, {len(self.morphisms)} morphisms)"


def make_category(objects, morphisms, identity, table) -> FinCategory:
    """Assemble a category from plain data.

    ``morphisms`` maps name -> (src, dst); ``table`` maps (f, g) -> g after f.
    Shape errors (unknown names) raise; law violations are left to
    :func:`validate_category`.
    """
    objects = tuple(objects)
    names = tuple(morphisms)
    src = {m: morphisms[m][0] for m in names}
    dst = {m: morphisms[m][1] for m in names}
    for m in names:
        if src[m] not in objects or dst[m] not in objects:
            raise SSetError(f"morphism {m} has unknown endpoints")
    for obj, m in identity.items():
        if obj not in objects:
            raise SSetError(f"identity assigned to unknown object {obj}")
        if m not in names:
            raise SSetError(f"identity {m} is not a declared morphism")
    for (f, g), h in table.items():
        if f not in names or g not in names or h not in names:
            raise SSetError(f"composition entry ({f}, {g}) -> {h} uses unknown morphisms")
    return FinCategory(objects, names, src, dst, dict(identity), dict(table))


@dataclass
class CategoryReport:
    ok: bool
    violations: list[str]

    def __str__(self):
        if self.ok:
            return "valid category"
        return "invalid category:\n" + "\n".join(f"  {v}" for v in self.violations)


def validate_category(C: FinCategory) -> CategoryReport:
    """Totality of the table, associativity on all triples, unit laws."""
    violations = []
    for obj in C.objects:
        if obj not in C.identity:
            violations.append(f"object {obj} has no identity morphism")
        else:
            e = C.identity[obj]
            if C.src[e] != obj or C.dst[e] != obj:
                violations.append(f"identity {e} of {obj} is not an endomorphism")
    for f in C.morphisms:
        for g in C.morphisms:
            if not C.composable(f, g):
                continue
            h = C.table.get((f, g))
            if h is None:
                violations.append(f"missing composite for ({f}, {g})")
                continue
            if C.src[h] != C.src[f] or C.dst[h] != C.dst[g]:
                violations.append(f"composite {h} of ({f}, {g}) has wrong endpoints")
    if violations:
        return CategoryReport(False, violations)
    for f in C.morphisms:
        e_src = C.identity.get(C.src[f])
        e_dst = C.identity.get(C.dst[f])
        if e_src is not None and C.compose(e_src, f) != f:
            violations.append(f"unit law fails: {f} after {e_src} is {C.compose(e_src, f)}")
        if e_dst is not None and C.compose(f, e_dst) != f:
            violations.append(f"unit law fails: {e_dst} after {f} is {C.compose(f, e_dst)}")
    for f, g, h in itertools.product(C.morphisms, repeat=3):
        if C.composable(f, g) and C.composable(g, h):
            if C.compose(C.compose(f, g), h) != C.compose(f, C.compose(g, h)):
                violations.append(f"associativity fails on ({f}, {g}, {h})")
    return CategoryReport(not violations, violations)


# -- stock categories -------------------------------------------------------------


def chain_category(n: int) -> FinCategory:
    """The poset category 0 -> 1 -> ... -> n with one arrow i -> j for i <= j."""
    objects = [str(i) for i in range(n + 1)]
    morphisms = {}
    table = {}
    name = lambda i, j: f"{i}->{j}"
    for i in range(n + 1):
        for j in range(i, n + 1):
            morphisms[name(i, j)] = (str(i), str(j))
    for i in range(n + 1):
        for j in range(i, n + 1):
            for k in range(j, n + 1):
                table[(name(i, j), name(j, k))] = name(i, k)
    identity = {str(i): name(i, i) for i in range(n + 1)}
    return make_category(objects, morphisms, identity, table)


def cyclic_group_category(m: int) -> FinCategory:
    """Z/m as a one-object category; morphism names e, g, g2, ..."""
    if m < 1:
        raise ValueError("group order must be positive")
    name = lambda p: "e" if p == 0 else ("g" if p == 1 else f"g{p}")
    morphisms = {name(p): ("*", "*") for p in range(m)}
    table = {
        (name(p), name(q)): name((p + q) % m) for p in range(m) for q in range(m)
    }
    return make_category(["*"], morphisms, {"*": "e"}, table)


def indiscrete_category(labels) -> FinCategory:
    """Exactly one morphism between every ordered pair of objects."""
    labels = [str(x) for x in labels]
    name = lambda a, b: f"{a}~{b}"
    morphisms = {name(a, b): (a, b) for a in labels for b in labels}
    table = {
        (name(a, b), name(b, c)): name(a, c)
        for a in labels
        for b in labels
        for c in labels
    }
    identity = {a: name(a, a) for a in labels}
    return make_category(labels, morphisms, identity, table)


def disjoint_union(C: FinCategory, D: FinCategory) -> FinCategory:
    """Side-by-side union; labels are prefixed to keep them distinct."""
    objects = [f"l.{o}" for o in C.objects] + [f"r.{o}" for o in D.objects]
    morphisms = {}
    for m in C.morphisms:
        morphisms[f"l.{m}"] = (f"l.{C.src[m]}", f"l.{C.dst[m]}")
    for m in D.morphisms:
        morphisms[f"r.{m}"] = (f"r.{D.src[m]}", f"r.{D.dst[m]}")
    table = {}
    for (f, g), h in C.table.items():
        table[(f"l.{f}", f"l.{g}")] = f"l.{h}"
    for (f, g), h in D.table.items():
        table[(f"r.{f}", f"r.{g}")] = f"r.{h}"
    identity = {f"l.{o}": f"l.{C.identity[o]}" for o in C.objects}
    identity.update({f"r.{o}": f"r.{D.identity[o]}" for o in D.objects})
    return make_category(objects, morphisms, identity, table)


# -- functors ---------------------------------------------------------------------


@dataclass(frozen=True)
class Functor:
    source: FinCategory
    target: FinCategory
    on_objects: dict = field(hash=False)
    on_morphisms: dict = field(hash=False)

    def __repr__(self):
        pairs = ", ".join(f"{a}->{b}" for a, b in sorted(self.on_objects.items()))
        return f"Functor({pairs})"


def functor_violations(F: Functor) -> list[str]:
    C, D = F.source, F.target
    problems = []
    for m in C.morphisms:
        img = F.on_morphisms.get(m)
        if img is None:
            problems.append(f"no image for morphism {m}")
            continue
        if D.src[img] != F.on_objects[C.src[m]] or D.dst[img] != F.on_objects[C.dst[m]]:
            problems.append(f"image of {m} has wrong endpoints")
    if problems:
        return problems
    for obj in C.objects:
        if F.on_morphisms[C.identity[obj]] != D.identity[F.on_objects[obj]]:
            problems.append(f"identity of {obj} is not preserved")
    for f in C.morphisms:
        for g in C.morphisms:
            if C.composable(f, g):
                left = F.on_morphisms[C.compose(f, g)]
                right = D.compose(F.on_morphisms[f], F.on_morphisms[g])
                if left != right:
                    problems.append(f"composition of ({f}, {g}) is not preserved")
    return problems


def enumerate_functors(C: FinCategory, D: FinCategory) -> list[Functor]:
    """All functors C -> D by exhaustive assignment, in a deterministic order.

    Object assignments vary lexicographically over D's object order, then
    morphism assignments over D's morphism order; identities are forced.
    """
    non_identity = [m for m in C.morphisms if not C.is_identity(m)]
    results = []
    for obj_choice in itertools.product(D.objects, repeat=len(C.objects)):
        on_objects = dict(zip(C.objects, obj_choice))
        candidate_lists = []
        feasible = True
        for m in non_identity:
            cands = D.hom(on_objects[C.src[m]], on_objects[C.dst[m]])
            if not cands:
                feasible = False
                break
            candidate_lists.append(cands)
        if not feasible:
            continue
        for choice in itertools.product(*candidate_lists):
            on_morphisms = dict(zip(non_identity, choice))
            for obj in C.objects:
                on_morphisms[C.identity[obj]] = D.identity[on_objects[obj]]
            F = Functor(C, D, on_objects, on_morphisms)
            if not functor_violations(F):
                results.append(F)
    return results


def is_groupoid(C: FinCategory) -> bool:
    """Every morphism has a two-sided inverse in the table."""
    for f in C.morphisms:
        e_src = C.identity[C.src[f]]
        e_dst = C.identity[C.dst[f]]
        if not any(
            C.composable(f, g)
            and C.compose(f, g) == e_src
            and C.compose(g, f) == e_dst
            for g in C.hom(C.dst[f], C.src[f])
        ):
            return False
    return True


def _isomorphic_objects(C: FinCategory, a: str, b: str) -> bool:
    for f in C.hom(a, b):
        for g in C.hom(b, a):
            if C.compose(f, g) == C.identity[a] and C.compose(g, f) == C.identity[b]:
                return True
    return a == b


def is_equivalence(F: Functor) -> bool:
    """Fully faithful plus essentially surjective."""
    C, D = F.source, F.target
    for a in C.objects:
        for b in C.objects:
            images = [F.on_morphisms[m] for m in C.hom(a, b)]
            target_hom = D.hom(F.on_objects[a], F.on_objects[b])
            if len(set(images)) != len(images) or sorted(images) != sorted(target_hom):
                return False
    image_objects = set(F.on_objects.values())
    for d in D.objects:
        if not any(_isomorphic_objects(D, d, img) for img in image_objects):
            return False
    return True


# -- the nerve ---------------------------------------------------------------------


class Nerve:
    """The nerve of a category, truncated, with a chain index for mapping.

    Nondegenerate n-simplices are chains of n composable non-identity
    morphisms; a chain containing an identity is degenerate, and its normal
    form strips the identities while recording their positions as a
    degeneracy word.
    """

    def __init__(self, C: FinCategory, truncation: int):
        if truncation < 0:
            raise ValueError("truncation must be >= 0")
        self.category = C
        self.sset = FiniteSSet(truncation)
        self._vertex_of: dict[str, SimplexKey] = {}
        self._chain_of: dict[tuple, SimplexKey] = {}
        non_identity = [m for m in C.morphisms if not C.is_identity(m)]
        for obj in C.objects:
            self._vertex_of[obj] = self.sset.add_simplex(0, label=obj)
        chains = [((obj,), ()) for obj in C.objects]
        for n in range(1, truncation + 1):
            extended = []
            for (objects, names) in chains:
                tail = objects[-1]
                for m in non_identity:
                    if C.src[m] != tail:
                        continue
                    extended.append((objects + (C.dst[m],), names + (m,)))
            for objects, names in extended:
                faces = [self._face_ref(objects, names, i) for i in range(n + 1)]
                self._chain_of[names] = self.sset.add_simplex(
                    n, faces, label=";".join(names)
                )
            chains = extended
        self.sset.freeze()

    def _face_ref(self, objects, names, i) -> SimplexRef:
        n = len(names)
        if i == 0:
            rest = names[1:]
            return self.ref_of_chain(rest, objects[1])
        if i == n:
            rest = names[:-1]
            return self.ref_of_chain(rest, objects[0])
        composite = self.category.compose(names[i - 1], names[i])
        rest = names[: i - 1] + (composite,) + names[i + 1 :]
        return self.ref_of_chain(rest, objects[0])

    def ref_of_chain(self, names: tuple, start_obj: str) -> SimplexRef:
        """Normal form of an arbitrary composable chain (identities allowed)."""
        C = self.category
        stripped = tuple(m for m in names if not C.is_identity(m))
        word = tuple(
            sorted((pos for pos, m in enumerate(names) if C.is_identity(m)), reverse=True)
        )
        if stripped:
            key = self._chain_of[stripped]
        else:
            key = self._vertex_of[start_obj]
        return SimplexRef(word, key)

    def key_of_chain(self, names: tuple, start_obj: str | None = None) -> SimplexKey:
        if not names:
            if start_obj is None:
                raise SSetError("the empty chain needs a start object")
            return self._vertex_of[start_obj]
        return self._chain_of[tuple(names)]


def nerve(C: FinCategory, truncation: int) -> FiniteSSet:
    """The nerve as a plain simplicial set."""
    return Nerve(C, truncation).sset


def nerve_map(F: Functor, NC: Nerve, ND: Nerve) -> SimplicialMap:
    """The simplicial map induced on nerves by a functor.

    ``NC`` and ``ND`` must be nerves of F's source and target at the same
    truncation.
    """
    if NC.category is not F.source or ND.category is not F.target:
        raise SSetError("nerves do not match the functor's endpoints")
    images = {}
    for obj, key in NC._vertex_of.items():
        images[key] = nondegenerate(ND.key_of_chain((), F.on_objects[obj]))
    for names, key in NC._chain_of.items():
        mapped = tuple(F.on_morphisms[m] for m in names)
        start = F.on_objects[F.source.src[names[0]]]
        images[key] = ND.ref_of_chain(mapped, start)
    return SimplicialMap(NC.sset, ND.sset, images)
