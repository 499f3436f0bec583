import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dexter import dyck, intervals, monoids, order
from dexter.dyck import IntervalRef
from dexter.errors import EmptyOperand, NotAnInterval
from strategies import nonempty_paths, paths


def test_star_examples():
    assert monoids.star((1, 0), (0, 1)) == (1, 0, 0, 1)
    assert monoids.star((0, 1, 1, 0), (1, 0, 1, 0)) == (0, 1, 1, 1, 0, 1, 0, 0)


@given(st.lists(st.integers(0, 1), max_size=8))
def test_star_unit(u):
    assert monoids.star((), u) == tuple(u) == monoids.star(u, ())


def test_sharp_examples():
    assert monoids.sharp((1, 1, 0, 0), (1, 1, 0, 0)) == (1, 1, 1, 0, 0, 0)
    w = dyck.parse("110100")
    assert monoids.sharp(monoids.UNIT, w) == w == monoids.sharp(w, monoids.UNIT)
    with pytest.raises(EmptyOperand):
        monoids.sharp((), w)


@given(nonempty_paths(4), nonempty_paths(4))
def test_concatenation_through_star(u, v):
    assert monoids.star(monoids.star(dyck.bar(u), (0, 1)), dyck.bar(v)) == dyck.bar(u + v)


@given(nonempty_paths(5), nonempty_paths(5))
def test_sharp_grading(u, v):
    assert dyck.size(monoids.sharp(u, v)) == dyck.size(u) + dyck.size(v) - 1


def test_star_associative_exhaustive_small():
    words = [w for k in range(5) for w in itertools.product((0, 1), repeat=k)]
    pseudo = [w for w in words if dyck.is_pseudo_dyck(w)] + [(1, 0), (0, 1), (0, 1, 1, 0)]
    for a, b, c in itertools.product(pseudo, repeat=3):
        assert monoids.star(monoids.star(a, b), c) == monoids.star(a, monoids.star(b, c))


@given(nonempty_paths(8), nonempty_paths(8), nonempty_paths(8))
def test_sharp_associative_sampled(a, b, c):
    assert monoids.sharp(monoids.sharp(a, b), c) == monoids.sharp(a, monoids.sharp(b, c))


def test_m1_factor_examples():
    assert monoids.m1_factor((1, 0)) == []
    assert monoids.m1_factor((1, 0, 1, 0)) == [(1, 0, 1, 0)]
    with pytest.raises(EmptyOperand):
        monoids.m1_factor(())


@given(nonempty_paths(9))
def test_m1_roundtrip(w):
    f = monoids.m1_factor(w)
    assert all(monoids.is_m1_generator(g) for g in f)
    assert monoids.sharp_all(f) == w
    assert sum(monoids.grading(g) for g in f) == monoids.grading(w)


def test_m2_unit_and_validity():
    I = IntervalRef(dyck.parse("1010"), dyck.parse("1100"))
    assert monoids.m2_product(monoids.UNIT_INTERVAL, I) == I == monoids.m2_product(I, monoids.UNIT_INTERVAL)
    with pytest.raises(NotAnInterval):
        monoids.m2_product(IntervalRef(dyck.parse("1100"), dyck.parse("1010")), I)


def test_generator_products_are_intervals():
    gens = [I for n in range(2, 5) for I in intervals.iter_intervals(n) if monoids.is_m2_generator(I)]
    for I, J in itertools.product(gens, repeat=2):
        if I.size + J.size - 1 <= 7:
            K = monoids.m2_product(I, J)
            assert order.bfs_leq(K.bottom, K.top)
            assert monoids.m2_factor(K) == [I, J]


@pytest.mark.parametrize("n", range(2, 7))
def test_m2_roundtrip(n):
    for I in intervals.iter_intervals(n):
        f = monoids.m2_factor(I)
        assert monoids.m2_product_all(f) == I
        assert all(monoids.is_m2_generator(g) for g in f)


def test_core_interval_is_a_single_factor():
    I = IntervalRef(dyck.parse("101010"), dyck.parse("110100"))
    assert monoids.m2_factor(I) == [I]


def test_generator_counts_by_filtering():
    for n, ref in [(2, 3), (3, 3), (4, 11), (5, 51), (6, 267)]:
        assert monoids.m2_generator_count(n) == ref
        assert sum(1 for I in intervals.iter_intervals(n) if monoids.is_m2_generator(I)) == ref


def test_cover_compatibility():
    others = [u for n in range(1, 5) for u in dyck.dyck_paths(n)]
    for n in range(1, 5):
        for w in dyck.dyck_paths(n):
            for t, _ in order.covers(w):
                for u in others:
                    left, right = monoids.sharp(u, w), monoids.sharp(w, u)
                    assert monoids.sharp(u, t) in dict(order.covers(left))
                    assert monoids.sharp(t, u) in dict(order.covers(right))


@given(paths(1, 7))
def test_covers_do_not_split_factors(w):
    k = len(monoids.m1_factor(w))
    for t, _ in order.covers(w):
        assert len(monoids.m1_factor(t)) <= k
