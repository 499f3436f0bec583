"""Acceptance gate: one test per criterion, run at full size.

``conftest.py`` prints a PASS/FAIL line per criterion at the end of the run.
"""

import time

import pytest

from dexter import dyck, intervals, order, verify
from dexter.report import Report


def _require(*reports: Report) -> None:
    merged = Report("criterion")
    for r in reports:
        merged.extend(r)
    assert merged.checks, "no checks ran"
    bad = [(c.name, c.witness) for c in merged.failures()]
    assert not bad, bad


@pytest.fixture
def cold_caches():
    order._hasse.cache_clear()
    dyck.dyck_paths.cache_clear()
    yield


def test_criterion_01_interval_counts(cold_caches):
    t0 = time.perf_counter()
    rep = verify.check_interval_counts(7)
    elapsed = time.perf_counter() - t0
    _require(rep)
    assert elapsed < 120, f"took {elapsed:.1f}s"


def test_criterion_02_catalytic_series():
    _require(verify.check_printed_series(), intervals.verify_functional_equations(6))


def test_criterion_03_algebraic_equation():
    _require(intervals.verify_algebraic_equation(12))


def test_criterion_04_maximal_elements():
    _require(verify.check_maximal(7, 9))


def test_criterion_05_order_sandwich():
    _require(verify.check_order_sandwich(7))


def test_criterion_06_monoids():
    _require(verify.check_monoids(max_n=7, m2_n=6, gen_n=7, sample=1000))


def test_criterion_07_factorization_theorems():
    _require(verify.check_factorizations(6))


def test_criterion_08_core_machinery():
    _require(verify.check_cores(8))


def test_criterion_09_meet(cold_caches):
    t0 = time.perf_counter()
    reports = [verify.check_meet_exhaustive(n) for n in range(8)]
    elapsed = time.perf_counter() - t0
    _require(*reports, verify.check_meet_oracles(6))
    assert elapsed < 60, f"exhaustive meet took {elapsed:.1f}s"


def test_criterion_10_hochschild():
    _require(verify.check_hochschild(8, sizes_n=8))


def test_criterion_11_coxeter_polynomials():
    _require(verify.check_coxeter(), verify.check_unit_circle(6))


def test_criterion_12_lattice_counterexamples():
    _require(verify.check_lattice_examples())


def test_criterion_13_colored_h_polynomials():
    _require(verify.check_h_polynomials(8, 8, 9))


def test_criterion_14_zeta():
    _require(verify.check_zeta(6))


def test_criterion_15_structure():
    _require(verify.check_kappa(8), verify.check_hasse_structure(8), verify.check_boolean_parts(7))
