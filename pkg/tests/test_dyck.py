import pytest
from hypothesis import given

from dexter import dyck
from dexter.dyck import Span
from dexter.errors import NotADyckWord, NotBlockIndecomposable
from strategies import nonempty_paths, paths


@pytest.mark.parametrize("word", ["10", "110100", "(1,1,0,0)", ""])
def test_parse_roundtrip(word):
    w = dyck.parse(word)
    assert dyck.parse(dyck.to_string(w)) == w


@pytest.mark.parametrize("word", ["01", "1", "100", "1101"])
def test_parse_rejects(word):
    with pytest.raises(NotADyckWord):
        dyck.parse(word)


def test_validate_rejects_other_letters():
    with pytest.raises(NotADyckWord):
        dyck.validate((1, 2, 0))


def test_catalan_counts():
    assert [len(dyck.dyck_paths(n)) for n in range(9)] == [dyck.catalan(n) for n in range(9)]
    assert [dyck.catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]


def test_w_min_and_blocks():
    assert dyck.w_min(3) == (1, 0, 1, 0, 1, 0)
    assert dyck.blocks(dyck.parse("10110100")) == [(1, 0), (1, 1, 0, 1, 0, 0)]
    assert dyck.blocks(()) == []


@given(paths())
def test_blocks_concatenate_back(w):
    bl = dyck.blocks(w)
    assert sum(bl, ()) == w
    assert all(dyck.is_block_indecomposable(b) for b in bl)


@given(paths())
def test_matching_pairs_up_steps(w):
    m = dyck.matching(w)
    for i, x in enumerate(w):
        if x == 1:
            j = m[i]
            assert w[j] == 0 and dyck.is_dyck(w[i + 1:j])


def test_subpaths_of_small_word():
    w = dyck.parse("110100")
    spans = dyck.enumerate_subpaths(w)
    assert Span(0, 6) in spans and Span(1, 2) in spans and Span(3, 2) in spans
    assert all(dyck.is_subpath(w, s) for s in spans)
    assert not dyck.is_subpath(w, Span(1, 3))


def test_level_decomposition_example():
    # (1, w1, 1, w2, 1, 0, 0, 0) with w1 = (1,0) and w2 = ()
    w = dyck.level_compose([(1, 0), ()])
    assert w == (1, 1, 0, 1, 1, 0, 0, 0)
    assert dyck.level_decomposition(w) == [(1, 0), ()]
    assert dyck.level_decomposition((1, 0)) == []


@given(nonempty_paths(6))
def test_level_roundtrip(w):
    if dyck.is_block_indecomposable(w):
        assert dyck.level_compose(dyck.level_decomposition(w)) == w
    else:
        with pytest.raises(NotBlockIndecomposable):
            dyck.level_decomposition(w)


@given(paths())
def test_strip_reassembles(w):
    s = dyck.find_strip(w)
    if not w or w[-2:] == (1, 0):
        assert s is None
    else:
        assert s.u + (1,) + s.v + (1, 0, 0) + (0,) * s.k == w
        assert dyck.is_dyck(s.v)


@given(paths(max_n=8))
def test_kappa_roundtrip_and_statistic(w):
    t = dyck.kappa(w)
    assert dyck.kappa_inv(t) == w
    assert dyck.tree_size(t) == dyck.size(w)
    assert dyck.rightmost_branch_length(t) == dyck.final_zeros(w)


@given(nonempty_paths(7))
def test_pseudo_dyck_bar(w):
    p = dyck.bar(w)
    assert dyck.is_pseudo_dyck(p)
    assert dyck.unbar(p) == w


def test_area_and_heights():
    w = dyck.parse("1100")
    assert dyck.heights(w) == [0, 1, 2, 1, 0]
    assert dyck.area(dyck.w_min(3)) < dyck.area(dyck.parse("111000"))


def test_interval_ref_size():
    assert dyck.IntervalRef(dyck.w_min(3), dyck.parse("111000")).size == 3
