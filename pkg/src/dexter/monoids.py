"""The pseudo-Dyck product ``*``, the Dyck product ``#`` and the interval monoid.

Both monoids are free; the factorizations below recover the unique words in
the generators.
"""

from __future__ import annotations

from functools import reduce
from typing import Sequence

from . import dyck, order
from .dyck import DyckPath, IntervalRef
from .errors import EmptyOperand, NotAnInterval

UNIT: DyckPath = (1, 0)
SEPARATOR: DyckPath = (1, 0, 1, 0)


def star(u: Sequence[int], v: Sequence[int]) -> tuple:
    """``(u', v', 0^k, v'')`` where ``u = (u', 0^k)`` and ``v'`` is the longest
    prefix of ``v`` whose height never drops below 0."""
    u, v = tuple(u), tuple(v)
    k = dyck.final_zeros(u)
    u_head = u[:len(u) - k]
    h = 0
    cut = len(v)
    for pos, x in enumerate(v):
        h += 1 if x else -1
        if h < 0:
            cut = pos
            break
    return u_head + v[:cut] + (0,) * k + v[cut:]


def sharp(u: DyckPath, v: DyckPath) -> DyckPath:
    if not u or not v:
        raise EmptyOperand("the # product needs non-empty Dyck paths")
    return dyck.unbar(star(dyck.bar(u), dyck.bar(v)))


def sharp_all(paths: Sequence[DyckPath]) -> DyckPath:
    return reduce(sharp, paths, UNIT)


def grading(w: DyckPath) -> int:
    return dyck.size(w) - 1


def is_m1_generator(w: DyckPath) -> bool:
    if w == SEPARATOR:
        return True
    return len(w) >= 4 and w[0] == 1 and w[-3:] == (1, 0, 0) and dyck.is_dyck(w[1:-3])


def m1_factor(w: DyckPath) -> list[DyckPath]:
    """Unique word in the generators ``(1,0,1,0)`` and ``(1,v,1,0,0)``.

    Blocks are joined by ``(1,0,1,0)``; each block expands through its level
    decomposition into the generators ``(1,w_i,1,0,0)``.
    """
    if not w:
        raise EmptyOperand("the empty path is not in the monoid")
    out: list[DyckPath] = []
    for k, block in enumerate(dyck.blocks(w)):
        if k:
            out.append(SEPARATOR)
        out.extend((1,) + part + (1, 0, 0) for part in dyck.level_decomposition(block))
    return out


# -- intervals -------------------------------------------------------------------

UNIT_INTERVAL = IntervalRef(UNIT, UNIT)


def is_interval(I: IntervalRef) -> bool:
    return order.path_leq(I.bottom, I.top)


def _check(I: IntervalRef) -> None:
    if not is_interval(I):
        raise NotAnInterval(f"{dyck.to_string(I.bottom)} is not below {dyck.to_string(I.top)}")


def m2_product(I: IntervalRef, J: IntervalRef) -> IntervalRef:
    _check(I)
    _check(J)
    return IntervalRef(sharp(I.bottom, J.bottom), sharp(I.top, J.top))


def is_m2_generator(I: IntervalRef) -> bool:
    if I.top == SEPARATOR:
        return I.bottom == SEPARATOR
    return is_m1_generator(I.top) and is_interval(I)


def m2_factor(I: IntervalRef) -> list[IntervalRef]:
    """Factor the top in M1, then cut the bottom's generator word by grading."""
    _check(I)
    tops = m1_factor(I.top)
    bottom_gens = m1_factor(I.bottom)
    out = []
    pos = 0
    for top in tops:
        need = grading(top)
        group = []
        got = 0
        while got < need:
            if pos == len(bottom_gens):
                raise NotAnInterval("bottom does not split along the top factors")
            g = bottom_gens[pos]
            group.append(g)
            got += grading(g)
            pos += 1
        if got != need:
            raise NotAnInterval("bottom does not split along the top factors")
        out.append(IntervalRef(sharp_all(group), top))
    return out


def m2_product_all(factors: Sequence[IntervalRef]) -> IntervalRef:
    return reduce(m2_product, factors, UNIT_INTERVAL)


def m2_generator_count(n: int) -> int:
    """Number of intervals of size ``n`` whose top is an M1 generator."""
    if n < 2:
        raise ValueError("generators have size at least 2")
    P = order.hasse(n)
    total = 0
    for k, w in enumerate(P.elements):
        if w == SEPARATOR:
            total += 1
        elif is_m1_generator(w):
            total += bin(P.down[k]).count("1")
    return total
