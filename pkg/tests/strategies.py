"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from dexter import dyck


def paths(min_n: int = 0, max_n: int = 7):
    return st.integers(min_n, max_n).flatmap(lambda n: st.sampled_from(dyck.dyck_paths(n)))


def paths_of(n: int):
    return st.sampled_from(dyck.dyck_paths(n))


def nonempty_paths(max_n: int = 5):
    return paths(1, max_n)
