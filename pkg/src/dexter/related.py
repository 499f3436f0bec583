"""Tamari and comb orders on Dyck paths, and comparisons with the slide order."""

from __future__ import annotations

from functools import lru_cache

from . import dyck, order
from .dyck import DyckPath, Span
from .errors import ElementSetMismatch, NotMovable
from .poset import Poset


def _rotations(w: DyckPath, ground_only: bool) -> list[DyckPath]:
    match = dyck.matching(w)
    h = dyck.heights(w)
    out = []
    for p in range(len(w) - 1):
        if w[p] == 0 and w[p + 1] == 1:
            if ground_only and h[p + 1] != 0:
                continue
            stop = match[p + 1] + 1
            out.append(w[:p] + w[p + 1:stop] + (0,) + w[stop:])
    return out


def tamari_covers(w: DyckPath) -> list[DyckPath]:
    """Exchange a 0 with the subpath that follows it."""
    return _rotations(w, ground_only=False)


def comb_covers(w: DyckPath) -> list[DyckPath]:
    """Tamari moves whose subpath starts at height 0."""
    return _rotations(w, ground_only=True)


def _poset_from(n: int, step, name: str) -> Poset:
    elements = dyck.dyck_paths(n)
    index = {w: k for k, w in enumerate(elements)}
    edges = [(k, index[t]) for k, w in enumerate(elements) for t in step(w)]
    return Poset(elements, edges, name)


@lru_cache(maxsize=None)
def tamari_poset(n: int) -> Poset:
    return _poset_from(n, tamari_covers, f"Tamari{n}")


@lru_cache(maxsize=None)
def comb_poset(n: int) -> Poset:
    return _poset_from(n, comb_covers, f"comb{n}")


def order_poset(n: int, name: str) -> Poset:
    if name == "dexter":
        return order.hasse(n)
    if name == "tamari":
        return tamari_poset(n)
    if name == "comb":
        return comb_poset(n)
    raise ValueError(f"unknown order {name!r}")


def order_contains(P: Poset, Q: Poset) -> bool:
    """True iff every relation of ``P`` is a relation of ``Q``."""
    if set(P.elements) != set(Q.elements):
        raise ElementSetMismatch("posets are on different element sets")
    perm = [Q.index[e] for e in P.elements]
    for i in range(len(P)):
        qup = Q.up[perm[i]]
        for j in range(len(P)):
            if P.up[i] >> j & 1 and not qup >> perm[j] & 1:
                return False
    return True


def slide_steps(w: DyckPath, x: Span, i: int) -> list[DyckPath]:
    """``[M(w,x,0), M(w,x,1), ..., M(w,x,i)]`` with ``M(w,x,0) = w``."""
    order.slide(w, x, i)  # validates x and i
    return [w] + [order.slide(w, x, j) for j in range(1, i + 1)]


def tamari_interval_chain(w: DyckPath, x: Span, i: int) -> list[DyckPath]:
    """The Tamari interval ``[w, M(w,x,i)]`` listed by increasing area."""
    if not order.is_movable(w, x):
        raise NotMovable(f"{x} is not a movable subpath of {dyck.to_string(w)}")
    top = order.slide(w, x, i)
    T = tamari_poset(dyck.size(w))
    members = T.up[T.idx(w)] & T.down[T.idx(top)]
    elems = [T.elements[k] for k in range(len(T)) if members >> k & 1]
    return sorted(elems, key=dyck.area)
