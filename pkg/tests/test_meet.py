import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dexter import dyck, meet, order, verify
from dexter.errors import LetterNotZero, SizeMismatch, StartsAtGroundLevel, StepNotOne
from strategies import paths_of


def test_frozen_decomposition_example():
    fd = meet.frozen_decompose((1, 0, 1, 0), 1)
    assert fd.prefix == (1,) and fd.ell == 1 and fd.segments == () and fd.tail == (1, 0)
    assert fd.assemble() == (1, 0, 1, 0)
    with pytest.raises(LetterNotZero):
        meet.frozen_decompose((1, 0, 1, 0), 0)


@pytest.mark.parametrize("n", range(1, 7))
def test_frozen_decomposition_reassembles(n):
    for u in dyck.dyck_paths(n):
        for i, x in enumerate(u):
            if x == 0:
                assert meet.frozen_decompose(u, i).assemble() == u


def test_desc_smallest_case():
    # 1-based step 2 of (1,1,0,0) is index 1 here
    assert meet.desc((1, 1, 0, 0), 1) == (1, 0, 1, 0)
    with pytest.raises(StartsAtGroundLevel):
        meet.desc((1, 1, 0, 0), 0)
    with pytest.raises(StepNotOne):
        meet.desc((1, 1, 0, 0), 2)


def test_min_r_none_when_maximal():
    w = dyck.parse("110100")
    assert order.is_maximal(w)
    assert meet.min_R(w, 2) is None


@pytest.mark.parametrize("n", range(1, 8))
def test_desc_is_a_cover_and_s_op_keeps_prefix(n):
    for w in dyck.dyck_paths(n):
        h = dyck.heights(w)
        for i in range(len(w)):
            if w[i] == 1 and h[i] > 0:
                assert w in dict(order.covers(meet.desc(w, i)))
                s = meet.s_op(w, i)
                assert s[:i] == w[:i] and s[i] == 0
                if meet.desc_count(w, i) == 1:
                    assert s == meet.desc(w, i)


def test_brute_force_oracles():
    assert verify.check_meet_oracles(6).passed


def test_prefix_lift():
    assert verify.check_meet_prefix_lift(5).passed


def test_meet_trivial_cases():
    v = dyck.parse("110100")
    assert meet.meet(v, v) == v
    assert meet.meet(dyck.w_min(3), v) == dyck.w_min(3)
    with pytest.raises(SizeMismatch):
        meet.meet(v, (1, 0))


def test_meet_trace():
    trace = []
    m = meet.meet(dyck.parse("110100"), dyck.parse("101100"), trace)
    assert m == dyck.parse("101010")
    positions = [d for d, _, _ in trace]
    assert positions == sorted(set(positions))


@pytest.mark.parametrize("n", range(6))
def test_meet_is_glb_exhaustive(n):
    assert verify.check_meet_exhaustive(n).passed


@pytest.mark.parametrize("n", [7, 8])
@given(data=st.data())
def test_meet_lattice_laws_sampled(n, data):
    a, b, c = (data.draw(paths_of(n)) for _ in range(3))
    assert meet.meet(a, b) == meet.meet(b, a)
    assert meet.meet(a, a) == a
    assert meet.meet(meet.meet(a, b), c) == meet.meet(a, meet.meet(b, c))
    m = meet.meet(a, b)
    assert order.path_leq(m, a) and order.path_leq(m, b)


def test_associativity_exhaustive_small():
    for n in range(6):
        for a, b, c in itertools.product(dyck.dyck_paths(n), repeat=3):
            assert meet.meet(meet.meet(a, b), c) == meet.meet(a, meet.meet(b, c))
