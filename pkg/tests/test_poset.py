import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dexter import dyck, order
from dexter.errors import ElementNotInPoset
from dexter.poset import (Poset, antichain, boolean_lattice, cartesian_product, chain, find_isomorphism,
                          from_json, is_order_isomorphism, poset_isomorphic, product_of)


def relabel(P: Poset, perm: list[int]) -> Poset:
    """Same poset with element k stored at position perm[k]."""
    elements = [None] * len(P)
    for k, e in enumerate(P.elements):
        elements[perm[k]] = ("x", e)
    return Poset(elements, [(perm[i], perm[j]) for i, j, _ in P.covers])


SMALL = [order.hasse(3), order.hasse(4), boolean_lattice(3), product_of([chain(2), chain(3)])]


@given(st.sampled_from(range(len(SMALL))), st.randoms(use_true_random=False))
def test_isomorphism_invariant_under_relabeling(k, rnd):
    P = SMALL[k]
    perm = list(range(len(P)))
    rnd.shuffle(perm)
    Q = relabel(P, perm)
    f = find_isomorphism(P, Q)
    assert f is not None and is_order_isomorphism(P, Q, f)


def test_non_isomorphic_pairs():
    assert not poset_isomorphic(chain(4), boolean_lattice(2))
    assert not poset_isomorphic(antichain(3), chain(3))


def test_products():
    B = boolean_lattice(3)
    assert len(B) == 8 and B.is_lattice()
    assert poset_isomorphic(product_of([chain(2)] * 3), B)
    assert len(cartesian_product(chain(2), chain(3))) == 6


def test_meets_and_joins_in_a_chain():
    C = chain(4)
    assert C.meet_idx(1, 3) == 1 and C.join_idx(1, 3) == 3
    assert C.is_lattice() and C.is_transitively_reduced()


def test_intervals_and_ideals():
    P = order.hasse(4)
    top = dyck.parse("11110000")
    I = P.interval(dyck.w_min(4), top)
    assert len(I) == len(P.lower_ideal(top))
    assert len(P.upper_ideal(top)) == 1
    assert len(P.upper_ideal(dyck.w_min(4))) == 14


def test_json_roundtrip():
    P = order.hasse(3)
    text = P.to_json(label=dyck.to_string)
    data = json.loads(text)
    assert set(data) == {"elements", "covers"}
    Q = from_json(text, parse=dyck.parse)
    assert Q.elements == P.elements
    assert sorted(Q.covers) == sorted(P.covers)


def test_dot_has_colors():
    dot = order.hasse(3).to_dot(label=dyck.to_string)
    assert "color=red" in dot and "color=blue" in dot and '"101010"' in dot


def test_unknown_element():
    with pytest.raises(ElementNotInPoset):
        order.hasse(2).idx((1, 0))
