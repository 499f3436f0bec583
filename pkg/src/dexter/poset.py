"""Finite posets given by their Hasse diagram.

Reachability is stored as one Python int per element used as a bitset (bit
``j`` of ``up[i]`` set iff ``elements[i] <= elements[j]``).  Big-int ``|`` and
``&`` are fast enough for a few thousand elements.
"""

from __future__ import annotations

import json
from collections import Counter, deque
from functools import cached_property
from typing import Hashable, Iterable, Optional, Sequence

from .errors import ElementNotInPoset, TooLarge

RED, BLUE, PLAIN = "red", "blue", "uncolored"


def bits(x: int) -> Iterable[int]:
    """Indices of the set bits of ``x``, ascending."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def popcount(x: int) -> int:
    return bin(x).count("1")


class Poset:
    """Elements plus colored cover edges ``(src, dst, color)`` on indices."""

    def __init__(self, elements: Sequence[Hashable], covers: Iterable[tuple], name: str = ""):
        self.elements = list(elements)
        self.index = {e: k for k, e in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("duplicate elements")
        self.name = name
        n = len(self.elements)
        self.covers = []
        self.upper = [[] for _ in range(n)]
        self.lower = [[] for _ in range(n)]
        for c in covers:
            i, j = c[0], c[1]
            color = c[2] if len(c) > 2 else PLAIN
            self.covers.append((i, j, color))
            self.upper[i].append(j)
            self.lower[j].append(i)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"Poset({self.name or '?'}, {len(self)} elements, {len(self.covers)} covers)"

    def idx(self, e) -> int:
        try:
            return self.index[e]
        except KeyError:
            raise ElementNotInPoset(f"{e!r} is not an element of {self.name or 'the poset'}") from None

    # -- order -----------------------------------------------------------------
    @cached_property
    def topological_order(self) -> list[int]:
        indeg = [len(l) for l in self.lower]
        queue = deque(i for i, d in enumerate(indeg) if d == 0)
        order = []
        while queue:
            i = queue.popleft()
            order.append(i)
            for j in self.upper[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    queue.append(j)
        if len(order) != len(self):
            raise ValueError("cover graph has a cycle")
        return order

    @cached_property
    def up(self) -> list[int]:
        """Non-strict principal up-sets as bitsets."""
        up = [0] * len(self)
        for i in reversed(self.topological_order):
            acc = 1 << i
            for j in self.upper[i]:
                acc |= up[j]
            up[i] = acc
        return up

    @cached_property
    def down(self) -> list[int]:
        down = [0] * len(self)
        for i in self.topological_order:
            acc = 1 << i
            for j in self.lower[i]:
                acc |= down[j]
            down[i] = acc
        return down

    def leq_idx(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def leq(self, u, v) -> bool:
        return self.leq_idx(self.idx(u), self.idx(v))

    def minimal(self) -> list[int]:
        return [i for i, l in enumerate(self.lower) if not l]

    def maximal(self) -> list[int]:
        return [i for i, u in enumerate(self.upper) if not u]

    def relation_count(self) -> int:
        """Number of pairs ``x <= y`` (the number of intervals)."""
        return sum(popcount(u) for u in self.up)

    @cached_property
    def _by_down(self) -> dict[int, int]:
        return {d: i for i, d in enumerate(self.down)}

    @cached_property
    def _by_up(self) -> dict[int, int]:
        return {u: i for i, u in enumerate(self.up)}

    def meet_idx(self, i: int, j: int) -> Optional[int]:
        """Greatest lower bound, found as the element whose down-set is the intersection."""
        return self._by_down.get(self.down[i] & self.down[j])

    def join_idx(self, i: int, j: int) -> Optional[int]:
        return self._by_up.get(self.up[i] & self.up[j])

    def is_meet_semilattice(self) -> bool:
        n = len(self)
        return all(self.meet_idx(i, j) is not None for i in range(n) for j in range(i + 1, n))

    def is_lattice(self) -> bool:
        n = len(self)
        return all(
            self.meet_idx(i, j) is not None and self.join_idx(i, j) is not None
            for i in range(n) for j in range(i + 1, n)
        )

    def is_transitively_reduced(self) -> bool:
        for i in range(len(self)):
            ups = self.upper[i]
            for j in ups:
                for k in ups:
                    if k != j and self.leq_idx(k, j):
                        return False
        return True

    # -- subposets ---------------------------------------------------------------
    def restrict_convex(self, members: int | Iterable[int], name: str = "") -> "Poset":
        """Induced subposet on a convex subset (cover edges restrict verbatim)."""
        mask = members if isinstance(members, int) else _mask(members)
        keep = list(bits(mask))
        new = {old: k for k, old in enumerate(keep)}
        covers = [(new[i], new[j], c) for i, j, c in self.covers if i in new and j in new]
        return Poset([self.elements[i] for i in keep], covers, name)

    def induced(self, members: int | Iterable[int], name: str = "") -> "Poset":
        """Induced subposet on any subset; covers recomputed by transitive reduction."""
        mask = members if isinstance(members, int) else _mask(members)
        keep = list(bits(mask))
        new = {old: k for k, old in enumerate(keep)}
        covers = []
        for i in keep:
            strict = self.up[i] & mask & ~(1 << i)
            beyond = 0
            for j in bits(strict):
                beyond |= self.up[j] & ~(1 << j)
            for j in bits(strict & ~beyond):
                covers.append((new[i], new[j], PLAIN))
        return Poset([self.elements[i] for i in keep], covers, name)

    def interval(self, a, b, name: str = "") -> "Poset":
        ia, ib = self.idx(a), self.idx(b)
        return self.restrict_convex(self.up[ia] & self.down[ib], name)

    def upper_ideal(self, a, name: str = "") -> "Poset":
        return self.restrict_convex(self.up[self.idx(a)], name)

    def lower_ideal(self, a, name: str = "") -> "Poset":
        return self.restrict_convex(self.down[self.idx(a)], name)

    # -- export --------------------------------------------------------------------
    def to_json(self, label=str) -> str:
        return json.dumps({
            "elements": [label(e) for e in self.elements],
            "covers": [[i, j, c] for i, j, c in self.covers],
        })

    def to_dot(self, label=str, order_name: str = "") -> str:
        lines = [f'digraph "{order_name or self.name or "poset"}" {{', "  rankdir=BT;"]
        for k, e in enumerate(self.elements):
            lines.append(f'  n{k} [label="{label(e)}"];')
        for i, j, c in self.covers:
            if c == RED:
                attr = " [color=red]"
            elif c == BLUE:
                attr = " [color=blue, style=dashed]"
            else:
                attr = ""
            lines.append(f"  n{i} -> n{j}{attr};")
        lines.append("}")
        return "\n".join(lines)


def _mask(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def from_json(text: str, parse=lambda s: s) -> Poset:
    data = json.loads(text)
    return Poset([parse(e) for e in data["elements"]], [tuple(c) for c in data["covers"]])


def chain(k: int) -> Poset:
    """Chain with ``k`` elements ``0 < 1 < ... < k-1``."""
    return Poset(list(range(k)), [(i, i + 1) for i in range(k - 1)], f"chain{k}")


def antichain(k: int) -> Poset:
    return Poset(list(range(k)), [], f"antichain{k}")


def cartesian_product(p: Poset, q: Poset) -> Poset:
    m = len(q)
    elements = [(a, b) for a in p.elements for b in q.elements]
    covers = []
    for i, j, _ in p.covers:
        for b in range(m):
            covers.append((i * m + b, j * m + b, PLAIN))
    for i, j, _ in q.covers:
        for a in range(len(p)):
            covers.append((a * m + i, a * m + j, PLAIN))
    return Poset(elements, covers, f"({p.name})x({q.name})")


def product_of(posets: Sequence[Poset]) -> Poset:
    out = chain(1)
    for p in posets:
        out = cartesian_product(out, p)
    return out


def boolean_lattice(k: int) -> Poset:
    return product_of([chain(2)] * k)


# -- isomorphism -------------------------------------------------------------------

def _refined_colors(p: Poset) -> list[int]:
    """Colour refinement of the directed cover graph, seeded with order data."""
    ranks = [0] * len(p)
    for i in p.topological_order:
        for j in p.upper[i]:
            ranks[j] = max(ranks[j], ranks[i] + 1)
    depth = [0] * len(p)
    for i in reversed(p.topological_order):
        for j in p.upper[i]:
            depth[i] = max(depth[i], depth[j] + 1)
    colors = [
        (popcount(p.up[i]), popcount(p.down[i]), len(p.upper[i]), len(p.lower[i]), ranks[i], depth[i])
        for i in range(len(p))
    ]
    return colors


def _refine(p: Poset, colors: list) -> list:
    while True:
        sig = [
            (colors[i], tuple(sorted(colors[j] for j in p.upper[i])), tuple(sorted(colors[j] for j in p.lower[i])))
            for i in range(len(p))
        ]
        if len(set(sig)) == len(set(colors)):
            return colors
        colors = sig


def _canonical_palette(p: Poset, q: Poset):
    cp = _refine(p, _refined_colors(p))
    cq = _refine(q, _refined_colors(q))
    # re-run jointly so that colour names mean the same thing in both posets
    palette: dict = {}
    ip = [palette.setdefault(c, len(palette)) for c in cp]
    iq = [palette.setdefault(c, len(palette)) for c in cq]
    return ip, iq


def find_isomorphism(p: Poset, q: Poset, cap: int = 5000) -> Optional[list[int]]:
    """Return ``f`` with ``f[i]`` the image of element ``i`` of ``p``, or ``None``."""
    if len(p) > cap or len(q) > cap:
        raise TooLarge(f"isomorphism test capped at {cap} elements")
    if len(p) != len(q) or len(p.covers) != len(q.covers):
        return None
    if not p.elements:
        return []
    cp, cq = _canonical_palette(p, q)
    if Counter(cp) != Counter(cq):
        return None
    by_color: dict[int, list[int]] = {}
    for j, c in enumerate(cq):
        by_color.setdefault(c, []).append(j)

    # assign along a BFS of the undirected cover graph so that each new
    # element is adjacent to already-mapped ones whenever possible
    order: list[int] = []
    seen = [False] * len(p)
    for root in sorted(range(len(p)), key=lambda i: len(by_color[cp[i]])):
        if seen[root]:
            continue
        seen[root] = True
        dq = deque([root])
        while dq:
            i = dq.popleft()
            order.append(i)
            for j in p.upper[i] + p.lower[i]:
                if not seen[j]:
                    seen[j] = True
                    dq.append(j)

    qupper = [set(u) for u in q.upper]
    qlower = [set(l) for l in q.lower]
    f = [-1] * len(p)
    used = [False] * len(q)
    sys_limit = len(p)

    def consistent(i: int, y: int) -> bool:
        up_mapped = 0
        for j in p.upper[i]:
            if f[j] >= 0:
                if f[j] not in qupper[y]:
                    return False
                up_mapped += 1
        down_mapped = 0
        for j in p.lower[i]:
            if f[j] >= 0:
                if f[j] not in qlower[y]:
                    return False
                down_mapped += 1
        if sum(1 for z in q.upper[y] if used[z]) != up_mapped:
            return False
        if sum(1 for z in q.lower[y] if used[z]) != down_mapped:
            return False
        return True

    def candidates(i: int):
        # prefer images adjacent to an already-mapped neighbour
        for j in p.lower[i]:
            if f[j] >= 0:
                return [y for y in q.upper[f[j]] if not used[y] and cq[y] == cp[i]]
        for j in p.upper[i]:
            if f[j] >= 0:
                return [y for y in q.lower[f[j]] if not used[y] and cq[y] == cp[i]]
        return [y for y in by_color[cp[i]] if not used[y]]

    stack = [(0, iter(candidates(order[0])))]
    while stack:
        depth, it = stack[-1]
        i = order[depth]
        if f[i] >= 0:
            used[f[i]] = False
            f[i] = -1
        advanced = False
        for y in it:
            if consistent(i, y):
                f[i] = y
                used[y] = True
                if depth + 1 == sys_limit:
                    return f
                stack.append((depth + 1, iter(candidates(order[depth + 1]))))
                advanced = True
                break
        if not advanced:
            stack.pop()
    return None


def poset_isomorphic(p: Poset, q: Poset, cap: int = 5000) -> bool:
    return find_isomorphism(p, q, cap) is not None


def is_order_isomorphism(p: Poset, q: Poset, f: Sequence[int]) -> bool:
    """Check that ``f`` is a bijection preserving and reflecting the order."""
    if len(p) != len(q) or sorted(f) != list(range(len(q))):
        return False
    for i in range(len(p)):
        for j in range(len(p)):
            if p.leq_idx(i, j) != q.leq_idx(f[i], f[j]):
                return False
    return True
