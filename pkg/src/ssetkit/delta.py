"""The simplex category: finite ordinals and the monotone maps between them.

Objects are the ordered sets [n] = {0 <= 1 <= ... <= n}, represented by the
integer n >= 0.  Morphisms are weakly order-preserving functions [k] -> [n],
stored as explicit value tables.  Generator words (cofaces / codegeneracies)
are derived views obtained by epi-mono factorization, not the primary
representation, so composition and equality are plain table operations.

Canonical word conventions, read left to right in application order:

* a codegeneracy word has strictly decreasing indices,
* a coface word has strictly increasing indices.

This pins the uniqueness of ``factorize``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .errors import CompositionError


@dataclass(frozen=True)
class OrdinalMap:
    """A monotone map [source] -> [target] given by its value table.

    ``values[i]`` is the image of i, so ``len(values) == source + 1``.
    Instances are immutable and hashable.
    """

    source: int
    target: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if self.source < 0 or self.target < 0:
            raise ValueError("ordinals must be non-negative")
        if len(self.values) != self.source + 1:
            raise ValueError(
                f"value table has {len(self.values)} entries, expected {self.source + 1}"
            )
        for v in self.values:
            if not 0 <= v <= self.target:
                raise ValueError(f"value {v} outside [0, {self.target}]")
        for a, b in zip(self.values, self.values[1:]):
            if a > b:
                raise ValueError(f"values {self.values} are not weakly increasing")

    def __call__(self, i: int) -> int:
        return self.values[i]

    def is_injective(self) -> bool:
        return len(set(self.values)) == len(self.values)

    def is_surjective(self) -> bool:
        return len(set(self.values)) == self.target + 1

    def is_identity(self) -> bool:
        return self.source == self.target and self.values == tuple(range(self.source + 1))

    def __repr__(self):
        table = ",".join(str(v) for v in self.values)
        return f"[{self.source}]->[{self.target}]:({table})"


def identity(n: int) -> OrdinalMap:
    """The identity map on [n]."""
    return OrdinalMap(n, n, tuple(range(n + 1)))


def constant(k: int, n: int, value: int) -> OrdinalMap:
    """The constant map [k] -> [n] with the given value."""
    return OrdinalMap(k, n, (value,) * (k + 1))


def coface(i: int, n: int) -> OrdinalMap:
    """The injection [n-1] -> [n] whose image omits i (0 <= i <= n, n >= 1)."""
    if n < 1 or not 0 <= i <= n:
        raise ValueError(f"coface index {i} out of range for [{n - 1}]->[{n}]")
    return OrdinalMap(n - 1, n, tuple(v for v in range(n + 1) if v != i))


def codegeneracy(i: int, n: int) -> OrdinalMap:
    """The surjection [n+1] -> [n] that repeats the value i (0 <= i <= n)."""
    if not 0 <= i <= n:
        raise ValueError(f"codegeneracy index {i} out of range for [{n + 1}]->[{n}]")
    values = list(range(i + 1)) + list(range(i, n + 1))
    return OrdinalMap(n + 1, n, tuple(values))


def compose(f: OrdinalMap, g: OrdinalMap) -> OrdinalMap:
    """The composite g after f, i.e. f followed by g.

    Requires ``f.target == g.source``.
    """
    if f.target != g.source:
        raise CompositionError(
            f"cannot compose {f!r} with {g!r}: target [{f.target}] != source [{g.source}]"
        )
    return OrdinalMap(f.source, g.target, tuple(g.values[v] for v in f.values))


def enumerate_maps(k: int, n: int) -> list[OrdinalMap]:
    """All monotone maps [k] -> [n], in lexicographic order of value tables.

    There are binomial(n + k + 1, k + 1) of them.
    """
    if k < 0 or n < 0:
        raise ValueError("ordinals must be non-negative")
    return [
        OrdinalMap(k, n, values)
        for values in itertools.combinations_with_replacement(range(n + 1), k + 1)
    ]


def count_maps(k: int, n: int) -> int:
    """Size of Hom([k], [n]) without enumerating."""
    return comb(n + k + 1, k + 1)


def factorize(f: OrdinalMap) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split f into a codegeneracy word followed by a coface word.

    Returns ``(cw, fw)`` where the surjection onto the image of f is the
    composite of codegeneracies with indices ``cw`` (strictly decreasing,
    applied left to right) and the injection of the image is the composite of
    cofaces with indices ``fw`` (strictly increasing, applied left to right).
    ``recompose(cw, fw, f.source, f.target) == f``.
    """
    image = sorted(set(f.values))
    rank = {v: r for r, v in enumerate(image)}
    collapsed = [rank[v] for v in f.values]
    cw = tuple(
        sorted((j for j in range(len(collapsed) - 1) if collapsed[j] == collapsed[j + 1]),
               reverse=True)
    )
    present = set(image)
    fw = tuple(t for t in range(f.target + 1) if t not in present)
    return cw, fw


def recompose(cw: tuple[int, ...], fw: tuple[int, ...], source: int, target: int) -> OrdinalMap:
    """Rebuild the map factorized as ``(cw, fw)`` by multiplying out generators."""
    m = identity(source)
    for j in cw:
        m = compose(m, codegeneracy(j, m.target - 1))
    for t in fw:
        m = compose(m, coface(t, m.target + 1))
    if m.target != target:
        raise CompositionError(
            f"words recompose to [{m.source}]->[{m.target}], expected target [{target}]"
        )
    return m


def word_is_admissible_codegeneracy(word) -> bool:
    """Strictly decreasing, non-negative indices."""
    return all(a > b for a, b in zip(word, word[1:])) and all(a >= 0 for a in word)


def word_is_admissible_coface(word) -> bool:
    """Strictly increasing, non-negative indices."""
    return all(a < b for a, b in zip(word, word[1:])) and all(a >= 0 for a in word)
