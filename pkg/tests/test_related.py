import pytest

from dexter import dyck, order, related
from dexter.errors import ElementSetMismatch
from dexter.poset import chain, poset_isomorphic


def test_small_edge_counts():
    assert len(related.tamari_poset(3).covers) == 5
    assert len(related.comb_poset(3).covers) == 4
    assert len(order.hasse(3).covers) == 5


def test_tamari_cover_is_a_rotation():
    assert related.tamari_covers(dyck.parse("101100")) == [dyck.parse("111000")]
    assert related.comb_covers(dyck.parse("110100")) == []
    assert related.tamari_covers(dyck.parse("110100")) == [dyck.parse("111000")]


def test_maximal_in_both():
    # 110100 is maximal in both the comb and the dexter order
    w = dyck.parse("110100")
    assert related.comb_covers(w) == [] and order.covers(w) == []


@pytest.mark.parametrize("n", range(6))
def test_sandwich(n):
    D, T, C = (related.order_poset(n, k) for k in ("dexter", "tamari", "comb"))
    assert related.order_contains(C, D) and related.order_contains(D, T)


def test_dexter_not_contained_in_comb():
    assert not related.order_contains(related.order_poset(3, "dexter"), related.order_poset(3, "comb"))


def test_tamari_is_a_lattice():
    for n in range(6):
        assert related.tamari_poset(n).is_lattice()


def test_slide_steps_is_a_chain():
    w = dyck.parse("111010001100")
    x = dyck.Span(8, 4)
    steps = related.slide_steps(w, x, 3)
    assert len(steps) == 4
    assert related.tamari_interval_chain(w, x, 3) == steps
    T = related.tamari_poset(6)
    assert poset_isomorphic(T.interval(steps[0], steps[-1]), chain(4))


def test_mismatched_element_sets():
    with pytest.raises(ElementSetMismatch):
        related.order_contains(order.hasse(2), order.hasse(3))


def test_unknown_order():
    with pytest.raises(ValueError):
        related.order_poset(3, "kreweras")
