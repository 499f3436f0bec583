import pytest
from hypothesis import given
from hypothesis import strategies as st

from dexter import dyck, hochschild, intervals, invariants, order
from dexter.errors import NotALattice, TooLarge
from dexter.polys import IntPoly
from dexter.poset import antichain, boolean_lattice, chain, poset_isomorphic, product_of

x = IntPoly.var("x")


def test_cyclotomic_basics():
    f = invariants.cyclotomic_factor(x + 1)
    assert f.factors == [(2, 1)] and f.remainder == 1
    f = invariants.cyclotomic_factor(x * x - 1)
    assert sorted(f.factors) == [(1, 1), (2, 1)]
    assert IntPoly.from_coeffs(invariants.cyclotomic(5), "x") == x ** 4 + x ** 3 + x ** 2 + x + 1
    assert [invariants.euler_phi(d) for d in range(1, 11)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4]


@given(st.lists(st.integers(1, 30), max_size=4), st.lists(st.integers(-3, 3), min_size=1, max_size=4))
def test_factorization_reassembles(ds, extra):
    p = IntPoly.from_coeffs(extra, "x")
    if p.is_zero():
        return
    for d in ds:
        p = p * IntPoly.from_coeffs(invariants.cyclotomic(d), "x")
    f = invariants.cyclotomic_factor(p)
    assert f.expand() == p
    counts = dict(f.factors)
    for d in ds:
        assert counts.get(d, 0) >= ds.count(d)


def test_unit_circle():
    assert invariants.roots_on_unit_circle(IntPoly.from_coeffs(invariants.cyclotomic(5), "x"))
    assert not invariants.roots_on_unit_circle(x * x - 3 * x + 1)


@pytest.mark.parametrize("P", [chain(3), boolean_lattice(2), order.hasse(3), hochschild.f_poset(2)])
def test_coxeter_shape(P):
    p = invariants.coxeter_polynomial(P)
    assert p.degree() == len(P)
    assert p.coeff("x", 0) in (IntPoly.const(1), IntPoly.const(-1))


def test_coxeter_convention_calibration():
    # the 9-element example is self-reciprocal; the 20-element one pins the convention
    P = intervals.interval_poset(intervals.J_of(dyck.parse("101100")))
    f = invariants.cyclotomic_factor(invariants.coxeter_polynomial(P))
    assert len(P) == 9 and str(f) == "Phi1^2 Phi2 Phi3 Phi5"
    Q = intervals.interval_poset(intervals.J_of(dyck.parse("10111000")))
    assert len(Q) == 20
    assert str(invariants.cyclotomic_factor(invariants.coxeter_polynomial(Q))) == "Phi1^2 Phi2^2 Phi3 Phi5 Phi6^2 Phi7"


def test_coxeter_chain():
    # the Coxeter polynomial of a k-chain is 1 + x + ... + x^k
    for k in range(1, 6):
        assert invariants.coxeter_polynomial(chain(k)) == IntPoly.from_coeffs([1] * (k + 1), "x")


def test_zeta_small_posets():
    Z = invariants.zeta_polynomial(chain(2))
    assert [Z(k) for k in range(5)] == [0, 1, 2, 3, 4]
    assert invariants.zeta_polynomial(antichain(3)) == IntPoly.const(3)
    Z = invariants.zeta_polynomial(antichain(3))
    assert Z(2) == 3 and Z(5) == 3


@pytest.mark.parametrize("n", range(1, 6))
def test_zeta_counts(n):
    P = order.hasse(n)
    Z = invariants.zeta_polynomial(P)
    assert Z(2) == len(P)
    assert Z(3) == intervals.interval_count(n)
    assert Z(4) == invariants.multichain_counts(P, 4)[3]


def test_zeta_values():
    vals = [invariants.zeta_polynomial(order.hasse(n)) for n in range(1, 7)]
    assert [Z(-1) for Z in vals] == [1, -1, 2, -5, 14, -42]
    assert [Z(-2) for Z in vals] == [1, -2, 7, -29, 131, -625]


def test_lattice_properties():
    assert invariants.is_semidistributive(boolean_lattice(2))
    assert invariants.is_extremal(chain(4))
    with pytest.raises(NotALattice):
        invariants.is_semidistributive(antichain(2))
    P = intervals.interval_poset(intervals.I_of(dyck.parse("111100100100")))
    assert P.is_lattice()
    assert not invariants.is_semidistributive(P)
    assert not invariants.is_extremal(P)


def test_longest_chain():
    assert invariants.longest_chain(order.hasse(1)) == 0
    assert invariants.longest_chain(order.hasse(2)) == 1
    assert invariants.longest_chain(chain(5)) == 4


def test_h_polynomial_small():
    assert invariants.colored_h_polynomial(1) == IntPoly.const(1, invariants.RB)
    A = invariants.colored_h_polynomial(4)
    assert A.subs("r", 1).subs("b", 1) == IntPoly.const(14, invariants.RB)


def test_h_equations_and_negative_control():
    assert invariants.verify_h_equations(7).passed
    assert not invariants.verify_h_equations(7, swap=True).passed


def test_symmetry_and_narayana():
    assert all(invariants.symmetry_holds(n) for n in range(1, 8))
    assert invariants.narayana_check(8)
    assert [invariants.narayana(4, k) for k in range(1, 5)] == [1, 6, 6, 1]


def test_isomorphism_is_an_equivalence_on_products():
    a = product_of([chain(2), chain(3)])
    b = product_of([chain(3), chain(2)])
    c = product_of([chain(2), chain(3), chain(1)])
    assert poset_isomorphic(a, a)
    assert poset_isomorphic(a, b) and poset_isomorphic(b, a)
    assert poset_isomorphic(b, c) and poset_isomorphic(a, c)


def test_size_caps():
    with pytest.raises(TooLarge):
        invariants.coxeter_polynomial(chain(20), max_size=10)
