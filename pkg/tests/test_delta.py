import itertools
from math import comb

import pytest

from ssetkit import delta
from ssetkit.delta import (
    OrdinalMap,
    codegeneracy,
    coface,
    compose,
    enumerate_maps,
    factorize,
    identity,
    recompose,
)
from ssetkit.errors import CompositionError


def test_ordinal_map_validation():
    OrdinalMap(1, 2, (0, 2))
    with pytest.raises(ValueError):
        OrdinalMap(1, 2, (2, 0))
    with pytest.raises(ValueError):
        OrdinalMap(1, 2, (0, 3))
    with pytest.raises(ValueError):
        OrdinalMap(1, 2, (0,))
    with pytest.raises(ValueError):
        OrdinalMap(-1, 0, ())


def test_compose_injection_then_collapse_is_identity():
    # the only map [0] -> [1] -> [0] is the identity on the point
    assert compose(coface(0, 1), codegeneracy(0, 0)) == identity(0)


def test_compose_identity_law():
    for f in enumerate_maps(2, 3):
        assert compose(identity(2), f) == f
        assert compose(f, identity(3)) == f


def test_compose_value_tables_by_hand():
    # delta_1 on [0] followed by delta_0 into [2] sends 0 to 1
    f = coface(1, 1)          # [0] -> [1], image {0}
    g = coface(0, 2)          # [1] -> [2], image {1, 2}
    assert compose(f, g).values == (1,)
    # and the other coface pairing gives 0 |-> 2
    assert compose(coface(0, 1), coface(1, 2)).values == (2,)


def test_compose_dimension_mismatch():
    with pytest.raises(CompositionError):
        compose(coface(0, 1), coface(0, 1))


def test_cofaces_are_the_two_maps_to_one():
    assert coface(0, 1).values == (1,)
    assert coface(1, 1).values == (0,)
    assert [m.values for m in enumerate_maps(0, 1)] == [(0,), (1,)]


def test_codegeneracy_base_case():
    # the only map [1] -> [0]
    assert codegeneracy(0, 0).values == (0, 0)
    assert len([m for m in enumerate_maps(1, 0)]) == 1


def test_three_injections_into_two():
    injective = [m for m in enumerate_maps(1, 2) if m.is_injective()]
    assert [set(m.values) for m in injective] == [{0, 1}, {0, 2}, {1, 2}]
    constant = [m for m in enumerate_maps(1, 2) if len(set(m.values)) == 1]
    assert len(constant) == 3
    assert len(enumerate_maps(1, 2)) == 6


def test_generator_index_ranges():
    with pytest.raises(ValueError):
        coface(2, 1)
    with pytest.raises(ValueError):
        coface(0, 0)
    with pytest.raises(ValueError):
        codegeneracy(3, 2)


@pytest.mark.parametrize("k", range(7))
@pytest.mark.parametrize("n", range(7))
def test_enumeration_count_is_binomial(k, n):
    maps = enumerate_maps(k, n)
    assert len(maps) == comb(n + k + 1, k + 1) == delta.count_maps(k, n)
    assert all(maps[i].values < maps[i + 1].values for i in range(len(maps) - 1))


@pytest.mark.parametrize("k", range(7))
def test_unique_map_to_singleton(k):
    assert len(enumerate_maps(k, 0)) == 1


def test_factorize_identity_and_collapse():
    assert factorize(identity(3)) == ((), ())
    assert factorize(codegeneracy(0, 0)) == ((0,), ())


def test_factorize_specific_map():
    f = OrdinalMap(2, 2, (0, 0, 2))
    cw, fw = factorize(f)
    assert cw == (0,)
    assert fw == (1,)
    assert recompose(cw, fw, 2, 2) == f


@pytest.mark.parametrize("k", range(6))
@pytest.mark.parametrize("n", range(6))
def test_factorize_round_trip(k, n):
    for f in enumerate_maps(k, n):
        cw, fw = factorize(f)
        assert all(a > b for a, b in zip(cw, cw[1:]))
        assert all(a < b for a, b in zip(fw, fw[1:]))
        assert recompose(cw, fw, f.source, f.target) == f


def test_associativity_on_small_triples():
    for a in range(3):
        for b in range(3):
            for c in range(3):
                for d in range(3):
                    for f in enumerate_maps(a, b):
                        for g in enumerate_maps(b, c):
                            for h in enumerate_maps(c, d):
                                assert compose(compose(f, g), h) == compose(
                                    f, compose(g, h)
                                )


@pytest.mark.parametrize("n", range(1, 7))
def test_cosimplicial_identities(n):
    # delta_j delta_i = delta_i delta_{j-1} for i < j, as maps [n-1] -> [n+1]
    if n >= 1:
        for j in range(n + 2):
            for i in range(j):
                left = compose(coface(i, n), coface(j, n + 1))
                right = compose(coface(j - 1, n), coface(i, n + 1))
                assert left == right
    # sigma_j sigma_i = sigma_i sigma_{j+1} for i <= j, as maps [n+2] -> [n]
    for j in range(n + 1):
        for i in range(j + 1):
            left = compose(codegeneracy(i, n + 1), codegeneracy(j, n))
            right = compose(codegeneracy(j + 1, n + 1), codegeneracy(i, n))
            assert left == right
    # mixed relations, as maps [n] -> [n]
    for j in range(n):
        for i in range(n + 1):
            lhs = compose(coface(i, n), codegeneracy(j, n - 1))
            if i < j:
                assert lhs == compose(codegeneracy(j - 1, n - 1), coface(i, n - 1))
            elif i in (j, j + 1):
                assert lhs == identity(n - 1)
            else:
                assert lhs == compose(codegeneracy(j, n - 1), coface(i - 1, n - 1))


def test_words_characterize_injectivity_and_surjectivity():
    for f in itertools.chain(enumerate_maps(2, 3), enumerate_maps(3, 2)):
        cw, fw = factorize(f)
        assert (not cw) == f.is_injective()
        assert (not fw) == f.is_surjective()
