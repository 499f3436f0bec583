"""Constructive meets.

Two paths are lowered one letter at a time: at the first disagreement the
path with an up step there is replaced by the largest element below it having
a down step at that position (``s_op``).  ``rise``/``min_R`` are the dual
moves used in the correctness argument and are exposed for testing.

Indices are 0-based.  ``frozen_decompose(u, i)`` and friends take ``i`` =
length of the fixed prefix, which is also the index of the letter examined.
``desc(w, i)`` and ``s_op(w, i)`` take the index of the up step; the 1-based
step number is ``i + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import dyck
from .dyck import DyckPath
from .errors import LetterNotZero, SizeMismatch, StartsAtGroundLevel, StepNotOne


@dataclass(frozen=True)
class FrozenDecomposition:
    """``u = p 0^l X_0 0^k_0 ... X_r 0^k_r X_tail``."""

    prefix: tuple
    ell: int
    segments: tuple  # ((X_j, k_j), ...)
    tail: DyckPath

    def assemble(self) -> DyckPath:
        out = self.prefix + (0,) * self.ell
        for x, k in self.segments:
            out += x + (0,) * k
        return out + self.tail

    def pieces(self) -> list[DyckPath]:
        """``X_0, ..., X_r`` followed by the tail (possibly empty)."""
        return [x for x, _ in self.segments] + [self.tail]

    def movable(self) -> list[list[bool]]:
        """Per piece, which of its blocks can slide without touching the prefix."""
        out = []
        for x, _ in self.segments:
            nb = len(dyck.blocks(x))
            out.append([True] * (nb - 1) + [False])
        out.append([True] * len(dyck.blocks(self.tail)))
        return out

    def first_movable(self) -> Optional[int]:
        for j, flags in enumerate(self.movable()):
            if any(flags):
                return j
        return None


def frozen_decompose(u: DyckPath, i: int) -> FrozenDecomposition:
    if not 0 <= i < len(u) or u[i] != 0:
        raise LetterNotZero(f"letter {i} of {dyck.to_string(u)} is not 0")
    n = len(u)
    pos = i
    while pos < n and u[pos] == 0:
        pos += 1
    ell = pos - i
    segments = []
    tail: DyckPath = ()
    while pos < n:
        # walk to the first point at the starting height followed by a 0, or the end
        start = pos
        h = 0
        while True:
            if pos == n:
                tail = u[start:]
                break
            if h == 0 and pos > start and u[pos] == 0:
                break
            h += 1 if u[pos] else -1
            pos += 1
        if pos == n:
            break
        x = u[start:pos]
        k = 0
        while pos < n and u[pos] == 0:
            pos += 1
            k += 1
        segments.append((x, k))
    return FrozenDecomposition(u[:i], ell, tuple(segments), tail)


def rise(u: DyckPath, i: int) -> Optional[DyckPath]:
    """Slide the first block of the first piece with a movable block, over
    the zeros separating it from the previous piece (or from the prefix)."""
    fd = frozen_decompose(u, i)
    j = fd.first_movable()
    if j is None:
        return None
    # locate the first block of piece j in u
    pos = i + fd.ell
    for x, k in fd.segments[:j]:
        pos += len(x) + k
    jump = fd.ell if j == 0 else fd.segments[j - 1][1]
    piece = fd.pieces()[j]
    block = dyck.blocks(piece)[0]
    return u[:pos - jump] + block + u[pos - jump:pos] + u[pos + len(block):]


def min_R(u: DyckPath, i: int) -> Optional[DyckPath]:
    """Least ``v >= u`` sharing the first ``i`` letters and with ``v[i] = 1``."""
    if not 0 <= i < len(u) or u[i] != 0:
        raise LetterNotZero(f"letter {i} of {dyck.to_string(u)} is not 0")
    x = u
    while x[i] == 0:
        x = rise(x, i)
        if x is None:
            return None
    return x


def _desc_data(w: DyckPath, i: int) -> tuple[list[dyck.Span], int]:
    """Subpaths ``x_1..x_N`` after the start of step ``i`` and the point ``i_1``."""
    if not 0 <= i < len(w) or w[i] != 1:
        raise StepNotOne(f"step {i} of {dyck.to_string(w)} is not an up step")
    h = dyck.heights(w)
    if h[i] == 0:
        raise StartsAtGroundLevel(f"step {i} of {dyck.to_string(w)} starts at height 0")
    match = dyck.matching(w)
    spans = []
    pos = i
    while w[pos] == 1:
        stop = match[pos] + 1
        spans.append(dyck.Span(pos, stop - pos))
        pos = stop
    return spans, pos


def desc(w: DyckPath, i: int) -> DyckPath:
    """Slide the last subpath ``x_N`` down past all the 0s on its right."""
    spans, i1 = _desc_data(w, i)
    last = spans[-1]
    m = 0
    while i1 + m < len(w) and w[i1 + m] == 0:
        m += 1
    return w[:last.start] + (0,) * m + w[last.start:i1] + w[i1 + m:]


def desc_count(w: DyckPath, i: int) -> int:
    return len(_desc_data(w, i)[0])


def s_op(w: DyckPath, i: int) -> DyckPath:
    """``Desc_i`` applied ``N`` times, ``N`` counted in the original ``w``."""
    N = desc_count(w, i)
    for _ in range(N):
        w = desc(w, i)
    return w


def s_op_dynamic(w: DyckPath, i: int) -> DyckPath:
    """Apply ``Desc_i`` until step ``i`` is a down step."""
    while w[i] == 1:
        w = desc(w, i)
    return w


def meet(v: DyckPath, w: DyckPath, trace: Optional[list] = None) -> DyckPath:
    if len(v) != len(w):
        raise SizeMismatch("paths of different sizes")
    common = -1
    while v != w:
        d = next(k for k in range(len(v)) if v[k] != w[k])
        assert d > common, "common prefix must grow"
        common = d
        if v[d] == 1:
            v, w = w, v
        w = s_op(w, d)
        if trace is not None:
            trace.append((d, v, w))
    return v


def meet_all(paths) -> DyckPath:
    paths = list(paths)
    out = paths[0]
    for p in paths[1:]:
        out = meet(out, p)
    return out
