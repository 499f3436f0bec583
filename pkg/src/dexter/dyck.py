"""Dyck paths, pseudo-Dyck paths, their decompositions and the tree bijection.

A Dyck path is a plain tuple of 0/1 ints (1 = up step, 0 = down step).  Plain
tuples hash fast and slice cheaply, which matters once the posets have a few
thousand elements.  All positions are 0-based step indices.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import NotADyckWord, NotBlockIndecomposable

DyckPath = tuple  # tuple[int, ...] with the Dyck invariants
EMPTY: DyckPath = ()


class Span(NamedTuple):
    """Contiguous step range ``start .. start+length-1``."""

    start: int
    length: int

    @property
    def stop(self) -> int:
        return self.start + self.length


def validate(word: Iterable[int]) -> DyckPath:
    w = tuple(int(x) for x in word)
    h = 0
    for k, x in enumerate(w):
        if x not in (0, 1):
            raise NotADyckWord(f"letter {x!r} at {k} is not 0 or 1")
        h += 1 if x else -1
        if h < 0:
            raise NotADyckWord(f"prefix of length {k + 1} goes below the axis")
    if h != 0:
        raise NotADyckWord(f"path ends at height {h}")
    return w


def is_dyck(word: Sequence[int]) -> bool:
    h = 0
    for x in word:
        h += 1 if x else -1
        if h < 0:
            return False
    return h == 0


def parse(text: str) -> DyckPath:
    """Parse ``"110100"`` or ``"(1,1,0,1,0,0)"`` into a validated path."""
    digits = [c for c in text if c in "01"]
    return validate(int(c) for c in digits)


def to_string(w: Sequence[int]) -> str:
    return "".join(str(x) for x in w)


def to_tuple_notation(w: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in w) + ")"


def size(w: Sequence[int]) -> int:
    return sum(w)


def heights(w: Sequence[int]) -> list[int]:
    """Heights at the ``len(w) + 1`` lattice points of the path."""
    out = [0]
    h = 0
    for x in w:
        h += 1 if x else -1
        out.append(h)
    return out


def w_min(n: int) -> DyckPath:
    return (1, 0) * n


def blocks(w: DyckPath) -> list[DyckPath]:
    out = []
    h = 0
    start = 0
    for k, x in enumerate(w):
        h += 1 if x else -1
        if h == 0:
            out.append(w[start:k + 1])
            start = k + 1
    return out


def is_block_indecomposable(w: DyckPath) -> bool:
    return len(w) > 0 and len(blocks(w)) == 1


def area(w: DyckPath) -> int:
    """Sum of the heights at the midpoints of all steps.

    Equal to the sum of the heights of all lattice points, so ``(1,0)`` has
    area 1.
    """
    return sum(heights(w))


def height_sequence(w: DyckPath) -> list[int]:
    out = []
    h = 0
    for x in w:
        h += 1 if x else -1
        if x:
            out.append(h)
    return out


def matching(w: Sequence[int]) -> list[int]:
    """``match[k]`` is the index of the down step closing the up step ``k``.

    Entries for down steps are -1.
    """
    match = [-1] * len(w)
    stack = []
    for k, x in enumerate(w):
        if x:
            stack.append(k)
        else:
            match[stack.pop()] = k
    return match


def enumerate_subpaths(w: DyckPath) -> list[Span]:
    """All subpaths of ``w``, one per up step, sorted by start."""
    match = matching(w)
    return [Span(k, match[k] - k + 1) for k, x in enumerate(w) if x]


def is_subpath(w: DyckPath, span: Span) -> bool:
    if span.length < 2 or span.start < 0 or span.stop > len(w):
        return False
    return w[span.start] == 1 and matching(w)[span.start] == span.stop - 1


def final_zeros(w: Sequence[int]) -> int:
    k = 0
    for x in reversed(w):
        if x:
            break
        k += 1
    return k


class IntervalRef(NamedTuple):
    """A pair ``bottom <= top`` of Dyck paths of the same size."""

    bottom: DyckPath
    top: DyckPath

    @property
    def size(self) -> int:
        return sum(self.top)


# -- level decomposition ----------------------------------------------------

def level_decomposition(w: DyckPath) -> list[DyckPath]:
    """Parts ``(w_1, ..., w_k)`` with ``w = (1,w_1,1,w_2,...,1,w_k,1,0^{k+1})``.

    Peels the largest suffix staying at or above the current final height,
    as many times as there are parts.
    """
    if not is_block_indecomposable(w):
        raise NotBlockIndecomposable(f"{to_string(w)} is not block-indecomposable")
    k = final_zeros(w) - 1
    v = list(w[:len(w) - (k + 2)])
    h = heights(v)
    parts: list[DyckPath] = []
    for level in range(k, 0, -1):
        end = len(v)
        start = end
        while start > 0 and h[start - 1] >= level:
            start -= 1
        parts.append(tuple(v[start:end]))
        # the letter before the part is the 1 climbing to this level
        assert start > 0 and v[start - 1] == 1
        del v[start - 1:]
        del h[start:]
    parts.reverse()
    return parts


def level_compose(parts: Sequence[DyckPath]) -> DyckPath:
    out: list[int] = [1]
    for p in parts:
        out.extend(p)
        out.append(1)
    if not parts:
        return (1, 0)
    out.extend([0] * (len(parts) + 1))
    return tuple(out)


# -- strips -------------------------------------------------------------------

class Strip(NamedTuple):
    u: tuple  # prefix word, not necessarily a Dyck path
    v: DyckPath
    k: int


def find_strip(w: DyckPath) -> Optional[Strip]:
    """Write ``w = (u,1,v,1,0,0,0^k)`` anchored at the second 0 of the final run.

    Returns ``None`` exactly when ``w`` is empty or ends with ``(1,0)``.
    """
    m = final_zeros(w)
    if m < 2:
        return None
    anchor = len(w) - m + 1
    match = matching(w)
    start = match.index(anchor)
    x = w[start:anchor + 1]  # (1, v, 1, 0, 0)
    return Strip(u=w[:start], v=x[1:-3], k=m - 2)


# -- binary trees --------------------------------------------------------------

class Node(NamedTuple):
    left: "Tree"
    right: "Tree"


Tree = Optional[Node]  # None is the leaf
LEAF: Tree = None


def tree_size(t: Tree) -> int:
    if t is None:
        return 0
    return 1 + tree_size(t.left) + tree_size(t.right)


def _replace_rightmost_leaf(t: Tree, new: Tree) -> Tree:
    if t is None:
        return new
    return Node(t.left, _replace_rightmost_leaf(t.right, new))


def _replace_second_rightmost_leaf(t: Node, new: Tree) -> Node:
    # the parent of the rightmost leaf has its left child as the second
    # rightmost leaf only when that child is itself a leaf
    if t.right is None:
        if t.left is None:
            return Node(new, None)
        return Node(_replace_rightmost_leaf(t.left, new), None)
    return Node(t.left, _replace_second_rightmost_leaf(t.right, new))


@lru_cache(maxsize=None)
def kappa(w: DyckPath) -> Tree:
    if not w:
        return LEAF
    bl = blocks(w)
    if len(bl) == 1:
        return _replace_rightmost_leaf(kappa(w[1:-1]), Node(None, None))
    last = bl[-1]
    w1 = w[:len(w) - len(last)]
    return _replace_second_rightmost_leaf(kappa(last), kappa(w1))


def kappa_inv(t: Tree) -> DyckPath:
    if t is None:
        return EMPTY
    # walk to v, the parent of the rightmost leaf
    path = []
    node = t
    while node.right is not None:
        path.append(node)
        node = node.right
    v = node

    def rebuild(replacement: Tree) -> Tree:
        out = replacement
        for p in reversed(path):
            out = Node(p.left, out)
        return out

    if v.left is None:
        return (1,) + kappa_inv(rebuild(None)) + (0,)
    t1 = v.left
    t2 = rebuild(Node(None, None))
    return kappa_inv(t1) + kappa_inv(t2)


def rightmost_branch_length(t: Tree) -> int:
    k = 0
    while t is not None:
        k += 1
        t = t.right
    return k


# -- enumeration ---------------------------------------------------------------

@lru_cache(maxsize=None)
def dyck_paths(n: int) -> tuple[DyckPath, ...]:
    """All Dyck paths of size ``n`` in lexicographic order of their words."""
    out: list[DyckPath] = []
    word = [0] * (2 * n)

    def rec(pos: int, ups: int, h: int):
        if pos == 2 * n:
            out.append(tuple(word))
            return
        # 0 < 1, so try the down step first for lexicographic order
        if h > 0:
            word[pos] = 0
            rec(pos + 1, ups, h - 1)
        if ups < n:
            word[pos] = 1
            rec(pos + 1, ups + 1, h + 1)

    rec(0, 0, 0)
    return tuple(out)


def catalan(n: int) -> int:
    c = 1
    for k in range(n):
        c = c * 2 * (2 * k + 1) // (k + 2)
    return c


# -- pseudo-Dyck paths -----------------------------------------------------------

def is_pseudo_dyck(word: Sequence[int]) -> bool:
    return is_dyck((1,) + tuple(word) + (0,))


def bar(w: DyckPath) -> tuple:
    """Pseudo-Dyck path of a non-empty Dyck path (first and last letters removed)."""
    if not w:
        raise ValueError("bar of the empty path")
    return tuple(w[1:-1])


def unbar(p: Sequence[int]) -> DyckPath:
    return (1,) + tuple(p) + (0,)
