import pytest
from hypothesis import given

from dexter import dyck, order
from dexter.dyck import Span
from dexter.errors import ChoiceOutOfRange, NotMovable, SizeTooLarge
from dexter.poset import BLUE, RED
from strategies import paths

FIG = dyck.parse("1011010010")


def test_movable_examples():
    assert not order.is_movable(FIG, Span(5, 2))
    assert order.is_movable(FIG, Span(2, 6))
    assert order.is_movable(FIG, Span(8, 2))


def test_three_block_example():
    w = dyck.parse("111101100110000100" "110110110111010111000010000010")
    assert dyck.size(w) == 24
    assert len(dyck.blocks(w)) == 3


def test_cover_example():
    w = dyck.parse("111010001100")
    assert order.zeros_before(w, Span(8, 4)) == 3
    assert order.slide(w, Span(8, 4), 2) == dyck.parse("111010110000")


def test_slide_errors():
    with pytest.raises(NotMovable):
        order.slide(FIG, Span(5, 2), 1)
    with pytest.raises(ChoiceOutOfRange):
        order.slide(FIG, Span(8, 2), 3)


def test_small_hasse_diagrams():
    assert len(order.hasse(1)) == 1 and not order.hasse(1).covers
    P = order.hasse(3)
    assert len(P) == 5 and len(P.covers) == 5
    assert len(order.hasse(4)) == 14
    assert len(order.covers(dyck.w_min(4))) == 3


def test_size_cap():
    with pytest.raises(SizeTooLarge):
        order.hasse(15)
    with pytest.raises(SizeTooLarge):
        order.hasse(5, max_n=4)


def test_colors():
    # sliding (1,0) over both zeros of 1100 at once is a maximal slide
    assert dict(order.covers(dyck.parse("110010"))) == {dyck.parse("111000"): RED, dyck.parse("110100"): BLUE}


@given(paths(max_n=7))
def test_covers_increase_area_and_keep_size(w):
    for t, c in order.covers(w):
        assert dyck.size(t) == dyck.size(w)
        assert dyck.area(t) > dyck.area(w)
        assert c in (RED, BLUE)


@given(paths(max_n=7))
def test_cover_moves_have_valid_witnesses(w):
    for x, i, t in order.cover_moves(w):
        assert order.is_movable(w, x)
        assert order.slide(w, x, i) == t


@given(paths(max_n=6), paths(max_n=6))
def test_bfs_oracle_agrees_with_poset(u, v):
    if dyck.size(u) == dyck.size(v):
        assert order.bfs_leq(u, v) == order.hasse(dyck.size(u)).leq(u, v)


@given(paths(max_n=9))
def test_maximal_predicate(w):
    assert order.is_maximal(w) == (not order.covers(w))


def test_w_min_is_bottom():
    for n in range(7):
        P = order.hasse(n)
        assert all(P.leq(dyck.w_min(n), w) for w in P.elements)


def test_reachable_matches_upset():
    P = order.hasse(5)
    w = dyck.parse("1011001010")
    assert order.reachable_from(w) == {P.elements[j] for j in range(len(P)) if P.leq_idx(P.idx(w), j)}


def test_path_leq_beyond_poset_cap_uses_bfs():
    top = (1,) * 10 + (0,) * 10
    assert order.path_leq(dyck.w_min(10), top)
    assert not order.path_leq(top, dyck.w_min(10))
    assert not order.path_leq(dyck.w_min(3), dyck.w_min(4))
