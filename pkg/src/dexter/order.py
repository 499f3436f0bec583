"""Slides of movable subpaths and the resulting poset on Dyck paths of size n."""

from __future__ import annotations

from collections import deque
from functools import lru_cache

from . import dyck
from .dyck import DyckPath, Span, w_min  # noqa: F401  (w_min re-exported)
from .errors import ChoiceOutOfRange, NotMovable, SizeTooLarge
from .poset import BLUE, RED, Poset

DEFAULT_MAX_N = 14


def zeros_before(w: DyckPath, x: Span) -> int:
    """``N(w, x)``: length of the run of 0s immediately before ``x``."""
    k = 0
    p = x.start - 1
    while p >= 0 and w[p] == 0:
        k += 1
        p -= 1
    return k


def _is_movable(w: DyckPath, x: Span) -> bool:
    if x.start == 0 or w[x.start - 1] != 0:
        return False
    return x.stop == len(w) or w[x.stop] == 1


def movable_subpaths(w: DyckPath) -> list[Span]:
    return [x for x in dyck.enumerate_subpaths(w) if _is_movable(w, x)]


def is_movable(w: DyckPath, x: Span) -> bool:
    return dyck.is_subpath(w, x) and _is_movable(w, x)


def slide(w: DyckPath, x: Span, i: int) -> DyckPath:
    """``M(w, x, i)``: move ``x`` to the left over ``i`` of the 0s preceding it."""
    if not is_movable(w, x):
        raise NotMovable(f"{x} is not a movable subpath of {dyck.to_string(w)}")
    n_zeros = zeros_before(w, x)
    if not 1 <= i <= n_zeros:
        raise ChoiceOutOfRange(f"i={i} not in 1..{n_zeros}")
    s, e = x.start, x.stop
    return w[:s - i] + w[s:e] + w[s - i:s] + w[e:]


def cover_moves(w: DyckPath) -> list[tuple[Span, int, DyckPath]]:
    """Every witness ``(x, i, M(w,x,i))``, ordered by span start then ``i``."""
    out = []
    for x in movable_subpaths(w):
        n_zeros = zeros_before(w, x)
        s, e = x.start, x.stop
        for i in range(1, n_zeros + 1):
            out.append((x, i, w[:s - i] + w[s:e] + w[s - i:s] + w[e:]))
    return out


def covers(w: DyckPath) -> list[tuple[DyckPath, str]]:
    """Deduplicated upper covers; red when some witness is a maximal slide."""
    color: dict[DyckPath, str] = {}
    for x, i, target in cover_moves(w):
        red = i == zeros_before(w, x)
        if red or target not in color:
            color[target] = RED if red else color.get(target, BLUE)
    return list(color.items())


def is_maximal(w: DyckPath) -> bool:
    """Block-indecomposable and no subpath both preceded by 0 and followed by 1."""
    if len(w) == 0:
        return True
    if not dyck.is_block_indecomposable(w):
        return False
    for x in dyck.enumerate_subpaths(w):
        if x.start > 0 and w[x.start - 1] == 0 and x.stop < len(w) and w[x.stop] == 1:
            return False
    return True


@lru_cache(maxsize=None)
def _hasse(n: int) -> Poset:
    elements = dyck.dyck_paths(n)
    index = {w: k for k, w in enumerate(elements)}
    edges = []
    for k, w in enumerate(elements):
        for target, c in covers(w):
            edges.append((k, index[target], c))
    return Poset(elements, edges, f"D{n}")


def hasse(n: int, max_n: int = DEFAULT_MAX_N) -> Poset:
    """The poset of all Dyck paths of size ``n`` with colored cover edges."""
    if n < 0:
        raise ValueError("size must be nonnegative")
    if n > max_n:
        raise SizeTooLarge(f"n={n} exceeds the cap {max_n}")
    return _hasse(n)


def leq(P: Poset, u, v) -> bool:
    return P.leq(u, v)


def reachable_from(start: DyckPath, step=None) -> set[DyckPath]:
    """Up-set of ``start`` by BFS, without building the full poset."""
    step = step or (lambda w: [t for t, _ in covers(w)])
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for t in step(w):
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return seen


def bfs_leq(u: DyckPath, v: DyckPath) -> bool:
    """Independent reachability oracle; prunes by area, which grows along covers."""
    if u == v:
        return True
    target_area = dyck.area(v)
    seen = {u}
    queue = deque([u])
    while queue:
        w = queue.popleft()
        for t, _ in covers(w):
            if t == v:
                return True
            if t not in seen and dyck.area(t) < target_area:
                seen.add(t)
                queue.append(t)
    return False


def path_leq(u: DyckPath, v: DyckPath, poset_cap: int = 9) -> bool:
    """``u <= v`` via the cached poset for small sizes, BFS otherwise."""
    n = dyck.size(u)
    if n != dyck.size(v):
        return False
    if n <= poset_cap:
        return hasse(n).leq(u, v)
    return bfs_leq(u, v)
