"""The interval ``F_n`` in size ``n + 2`` and its ternary encoding ``rho``."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from . import dyck, order
from .dyck import DyckPath
from .errors import LengthMismatch, NotInF, NotInImage
from .poset import Poset, bits

Ternary = tuple  # tuple of 0/1/2


def f_bottom(n: int) -> DyckPath:
    return (1, 1, 0, 0) + (1, 0) * n


def f_top(n: int) -> DyckPath:
    return (1,) + (1,) * n + (0,) * n + (1, 0, 0)


def w_nb(n: int) -> DyckPath:
    return (1, 1) + (0, 1) * n + (0, 0)


def w_n1(n: int) -> DyckPath:
    return (1, 1, 0, 1, 0, 0) + (1, 0) * (n - 1)


@lru_cache(maxsize=None)
def f_poset(n: int) -> Poset:
    """``F_n`` as a poset, built from the up-set of its bottom only."""
    if n < 1:
        raise ValueError("F_n needs n >= 1")
    up = order.reachable_from(f_bottom(n))
    elements = sorted(up)
    index = {w: k for k, w in enumerate(elements)}
    edges = [(k, index[t], c) for k, w in enumerate(elements) for t, c in order.covers(w)]
    above = Poset(elements, edges)
    return above.restrict_convex(above.down[above.idx(f_top(n))], name=f"F{n}")


def f_interval(n: int) -> dyck.IntervalRef:
    P = f_poset(n)
    assert P.leq(f_bottom(n), f_top(n))
    return dyck.IntervalRef(f_bottom(n), f_top(n))


def valleys(w: Sequence[int]) -> list[tuple[int, int]]:
    """``(index of the 1, height)`` for every subword ``(0,1)``."""
    h = dyck.heights(w)
    return [(j, h[j]) for j in range(1, len(w)) if w[j - 1] == 0 and w[j] == 1]


def peaks(w: Sequence[int]) -> list[tuple[int, int]]:
    """``(index of the 1, height at the top)`` for every subword ``(1,0)``."""
    h = dyck.heights(w)
    return [(j, h[j + 1]) for j in range(len(w) - 1) if w[j] == 1 and w[j + 1] == 0]


def in_F(w: DyckPath, n: int) -> bool:
    """Start ``(1,1)``, valleys at heights 0/1 weakly decreasing, end ``(0,1,0)`` or ``(0,1,0,0)``."""
    if dyck.size(w) != n + 2 or w[:2] != (1, 1):
        return False
    hs = [h for _, h in valleys(w)]
    if any(h not in (0, 1) for h in hs):
        return False
    if any(a < b for a, b in zip(hs, hs[1:])):
        return False
    return w[-3:] == (0, 1, 0) or w[-4:] == (0, 1, 0, 0)


def rho(w: DyckPath) -> Ternary:
    n = dyck.size(w) - 2
    if n < 1 or not in_F(w, n):
        raise NotInF(f"{dyck.to_string(w)} is not in F_{n}")
    h = dyck.heights(w)
    out: list[int] = []
    n2 = 0
    for j in range(2, len(w)):
        if w[j] == 1 and w[j - 1] == 1:
            n2 += 1
        elif w[j] == 1:
            out.append(h[j])
            out.extend([2] * n2)
            n2 = 0
    return tuple(out)


def bricks(z: Sequence[int]) -> list[tuple[int, int]]:
    """``(first letter, number of 2s)`` for each brick of ``z``."""
    out = []
    for x in z:
        if x == 2:
            if not out:
                raise NotInImage("a word cannot start with 2")
            head, twos = out[-1]
            out[-1] = (head, twos + 1)
        else:
            out.append((x, 0))
    return out


def rho_inv(z: Sequence[int]) -> DyckPath:
    z = tuple(z)
    n = len(z)
    if n < 1 or z not in z_union(n):
        raise NotInImage(f"{to_digits(z)} is not in the image of rho")
    w: list[int] = []
    h = 0
    for k, (x, twos) in enumerate(bricks(z)):
        ups = twos + 2 if k == 0 else twos + 1
        w.extend([1] * ups)
        h += ups
        w.extend([0] * (h - x))
        h = x
    w.append(1)
    w.extend([0] * (h + 1))
    return tuple(w)


def to_digits(z: Sequence[int]) -> str:
    return "".join(str(x) for x in z)


@lru_cache(maxsize=None)
def z_sets(n: int) -> tuple[frozenset, frozenset, frozenset]:
    """``(Z_{n,0}, Z_{n,1}, Z_{n,b})``."""
    if n < 1:
        raise ValueError("n >= 1")
    if n == 1:
        return frozenset({(0,)}), frozenset({(1,)}), frozenset({(1,)})
    _, z1, zb = z_sets(n - 1)
    new1 = {z + (0,) for z in z1} | {z + (2,) for z in z1} | {z + (1,) for z in zb}
    newb = {z + (1,) for z in zb} | {z + (2,) for z in zb}
    new0 = {(0,) + z[1:] for z in new1 if 1 not in z[1:]}
    return frozenset(new0), frozenset(new1), frozenset(newb)


def z_union(n: int) -> frozenset:
    z0, z1, _ = z_sets(n)
    return z0 | z1


def termwise_leq(z: Sequence[int], y: Sequence[int]) -> bool:
    if len(z) != len(y):
        raise LengthMismatch("words of different lengths")
    return all(a <= b for a, b in zip(z, y))


def count_formula(n: int) -> int:
    """``2^(n-2) (n+3)``, written to stay integral at ``n = 1``."""
    return (2 ** n) * (n + 3) // 4


# -- parts of F_n ------------------------------------------------------------------

def first_valley_height(w: DyckPath) -> int:
    return valleys(w)[0][1]


def part(n: int, which: str) -> list[DyckPath]:
    """Subsets ``F_{n,0}``, ``F_{n,1}``, ``F_{n,b}``, ``F_{n,1,c}`` and the
    height-0-valley set ``"v0"``."""
    F = f_poset(n).elements
    if which == "0":
        return [w for w in F if first_valley_height(w) == 0]
    if which == "1":
        return [w for w in F if first_valley_height(w) == 1]
    if which == "b":
        return [w for w in F if dyck.is_block_indecomposable(w)]
    if which == "v0":
        return [w for w in F if all(h == 0 for _, h in valleys(w))]
    if which in ("10", "11", "12"):
        last = int(which[1])
        return [w for w in F if first_valley_height(w) == 1 and rho(w)[-1] == last]
    raise ValueError(f"unknown part {which!r}")


# -- structural maps -------------------------------------------------------------------

def insert_at_second_peak(w: DyckPath) -> DyckPath:
    """Put ``(1,0)`` on top of the next-to-rightmost peak."""
    pk = peaks(w)
    if len(pk) < 2:
        raise NotInF(f"{dyck.to_string(w)} has fewer than two peaks")
    j = pk[-2][0] + 1
    return w[:j] + (1, 0) + w[j:]


def mu(w: DyckPath) -> DyckPath:
    return tuple(w) + (1, 0)


def insert_before_last(w: DyckPath) -> DyckPath:
    return w[:-1] + (1, 0) + w[-1:]


def slide_after_first_valley(w: DyckPath) -> DyckPath:
    """Move the subpath after the first valley down by one step."""
    j = valleys(w)[0][0]
    stop = dyck.matching(w)[j] + 1
    if stop >= len(w) or w[stop] != 0:
        raise NotInF("no 0 after the subpath following the first valley")
    return w[:j] + (0,) + w[j:stop] + w[stop + 1:]


def structural_bijections(n: int):
    """Check the four maps between parts of ``F_n`` and ``F_{n+1}``."""
    from .report import Report

    rep = Report(f"structural maps n={n}")

    def check(name, claim, src, dst, fn, effect):
        images = [fn(w) for w in src]
        bij = len(set(images)) == len(images) and set(images) == set(dst)
        acts = all(effect(rho(w), rho(fn(w))) for w in src)
        rep.add(name, claim, bij and acts, {"source": len(src), "target": len(dst)})

    check("second-peak insertion F_{n,1} -> F_{n+1,1,2}", "appends 2 to rho",
          part(n, "1"), part(n + 1, "12"), insert_at_second_peak, lambda a, b: b == a + (2,))
    check("mu F_{n,1} -> F_{n+1,1,0}", "appends 0 to rho",
          part(n, "1"), part(n + 1, "10"), mu, lambda a, b: b == a + (0,))
    check("insertion before the last letter F_{n,b} -> F_{n+1,1,1}", "appends 1 to rho",
          part(n, "b"), part(n + 1, "11"), insert_before_last, lambda a, b: b == a + (1,))
    single = [w for w in part(n, "1") if sum(h for _, h in valleys(w)) == 1]
    check("first-valley slide -> F_{n,0}", "sets the first letter of rho to 0",
          single, part(n, "0"), slide_after_first_valley, lambda a, b: b == (0,) + a[1:])
    return rep


def termwise_experiment(n: int) -> dict:
    """Compare the order on ``F_n`` with the termwise order on the images."""
    P = f_poset(n)
    images = [rho(w) for w in P.elements]
    forward = reverse = 0
    for i in range(len(P)):
        for j in range(len(P)):
            le = P.leq_idx(i, j)
            tw = termwise_leq(images[i], images[j])
            if le and not tw:
                forward += 1
            if tw and not le:
                reverse += 1
    return {"n": n, "elements": len(P), "order_not_termwise": forward,
            "termwise_not_order": reverse, "isomorphic": forward == 0 and reverse == 0}
