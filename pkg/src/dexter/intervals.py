"""Intervals of the slide order: enumeration, factorizations, core intervals
and the block-refined generating series."""

from __future__ import annotations

from collections import defaultdict
from math import factorial
from typing import Iterator, Optional

from . import dyck, monoids, order
from .dyck import DyckPath, IntervalRef
from .errors import NotCore, NotInE, SizeTooLarge
from .polys import IntPoly, mul_trunc
from .poset import Poset, bits, find_isomorphism, is_order_isomorphism, popcount, product_of
from .report import Report

DEFAULT_MAX_N = 9
ST = ("s", "t")


# -- enumeration -------------------------------------------------------------------

def iter_intervals(n: int, max_n: int = DEFAULT_MAX_N) -> Iterator[IntervalRef]:
    if n > max_n:
        raise SizeTooLarge(f"n={n} exceeds the interval cap {max_n}")
    P = order.hasse(n)
    for i, u in enumerate(P.elements):
        for j in bits(P.up[i]):
            yield IntervalRef(u, P.elements[j])


def all_intervals(n: int, max_n: int = DEFAULT_MAX_N) -> list[IntervalRef]:
    return list(iter_intervals(n, max_n))


def interval_count(n: int) -> int:
    return order.hasse(n).relation_count()


def interval_count_formula(n: int) -> int:
    """``3 * 2^(n-1) * (2n)! / (n! (n+2)!)``; the empty case counts 1."""
    if n == 0:
        return 1
    num = 3 * 2 ** (n - 1) * factorial(2 * n)
    den = factorial(n) * factorial(n + 2)
    assert num % den == 0
    return num // den


def interval_poset(I: IntervalRef) -> Poset:
    return order.hasse(I.size).interval(I.bottom, I.top, name=f"[{dyck.to_string(I.bottom)},{dyck.to_string(I.top)}]")


def I_of(w: DyckPath) -> IntervalRef:
    return IntervalRef(dyck.w_min(dyck.size(w)), w)


def J_of(w: DyckPath) -> IntervalRef:
    top = (1,) + tuple(w) + (1, 0, 0)
    return IntervalRef(dyck.w_min(dyck.size(top)), top)


# -- block factorization -----------------------------------------------------------

def block_factor(I: IntervalRef) -> list[IntervalRef]:
    """Cut bottom and top where the top returns to height 0."""
    out = []
    start = 0
    for b in dyck.blocks(I.top):
        stop = start + len(b)
        out.append(IntervalRef(I.bottom[start:stop], b))
        start = stop
    return out


def check_block_factorization(I: IntervalRef) -> bool:
    """Concatenation is an order isomorphism from the product of the factors."""
    factors = block_factor(I)
    target = interval_poset(I)
    prod = product_of([interval_poset(f) for f in factors])
    try:
        f = [target.idx(_flatten_concat(e)) for e in prod.elements]
    except KeyError:
        return False
    return is_order_isomorphism(prod, target, f)


def _flatten(e) -> list:
    # product_of nests pairs as ((((0, a), b), c) ...)
    out = []
    while isinstance(e, tuple) and len(e) == 2 and isinstance(e[1], tuple):
        out.append(e[1])
        e = e[0]
    out.reverse()
    return out


def _flatten_concat(e) -> DyckPath:
    return sum(_flatten(e), ())


def check_sharp_factorization(I: IntervalRef) -> bool:
    """The # product is an order isomorphism from the product of the M2 factors."""
    factors = monoids.m2_factor(I)
    target = interval_poset(I)
    if not factors:
        return len(target) == 1
    prod = product_of([interval_poset(f) for f in factors])
    try:
        f = [target.idx(monoids.sharp_all(_flatten(e))) for e in prod.elements]
    except KeyError:
        return False
    return is_order_isomorphism(prod, target, f)


def check_level_factorization(w: DyckPath) -> bool:
    """``I(w)`` is isomorphic to the product of ``J(w_i)`` for a block-indecomposable ``w``."""
    parts = dyck.level_decomposition(w)
    prod = product_of([interval_poset(J_of(p)) for p in parts])
    return find_isomorphism(prod, interval_poset(I_of(w))) is not None


def level_key(w: DyckPath) -> tuple:
    """Sorted multiset of all level parts of all blocks."""
    parts = [p for b in dyck.blocks(w) for p in dyck.level_decomposition(b)]
    return tuple(sorted(parts))


def level_multiset_isomorphism_check(n: int, max_n: int = 7) -> Report:
    if n > max_n:
        raise SizeTooLarge(f"n={n} exceeds the isomorphism cap {max_n}")
    rep = Report(f"level multisets n={n}")
    groups: dict[tuple, list[DyckPath]] = defaultdict(list)
    for w in dyck.dyck_paths(n):
        groups[level_key(w)].append(w)
    for key, members in groups.items():
        first = interval_poset(I_of(members[0]))
        for other in members[1:]:
            same = find_isomorphism(first, interval_poset(I_of(other))) is not None
            rep.add("I(w) type depends only on the level multiset",
                    "isomorphism type of I(w) is determined by the union of level decompositions",
                    same, [dyck.to_string(members[0]), dyck.to_string(other)])
    for w in dyck.dyck_paths(n):
        if dyck.is_block_indecomposable(w):
            rep.add("I(w) = product of J(w_i)", "level factorization of I(w)",
                    check_level_factorization(w), dyck.to_string(w))
    return rep


# -- principal upper ideals -----------------------------------------------------------

def upper_ideal(w: DyckPath) -> Poset:
    return order.hasse(dyck.size(w)).upper_ideal(w, name=f"Up({dyck.to_string(w)})")


def upper_ideal_factor(w: DyckPath) -> Optional[tuple[DyckPath, DyckPath]]:
    """``(u', v)`` with ``u' = (u,1,0,0^k)`` from the strip ``w = (u,1,v,1,0,0,0^k)``."""
    strip = dyck.find_strip(w)
    if strip is None:
        return None
    return strip.u + (1, 0) + (0,) * strip.k, strip.v


def strip_split(y: DyckPath) -> tuple[DyckPath, DyckPath]:
    """Image of ``y`` in ``Up(u') x Up(v)``: re-read the strip of ``y`` itself."""
    pair = upper_ideal_factor(y)
    if pair is None:
        raise ValueError(f"{dyck.to_string(y)} has no strip")
    return pair


def strip_join(a: DyckPath, v: DyckPath) -> DyckPath:
    """Inverse of :func:`strip_split`: reinsert ``(v,1,0)`` after the last 1 of ``a``."""
    if not a:
        raise ValueError("first factor must be non-empty")
    j = dyck.final_zeros(a) - 1
    b = a[:len(a) - j - 2]
    return b + (1,) + tuple(v) + (1, 0, 0) + (0,) * j


def check_upper_ideal_factorization(w: DyckPath) -> bool:
    pair = upper_ideal_factor(w)
    if pair is None:
        return True
    u1, v = pair
    target = upper_ideal(w)
    prod = product_of([upper_ideal(u1), upper_ideal(v)])
    try:
        f = [target.idx(strip_join(*_flatten(e))) for e in prod.elements]
    except (KeyError, ValueError):
        return False
    return is_order_isomorphism(prod, target, f)


def is_reduced(I: IntervalRef) -> bool:
    b = I.bottom
    return len(b) == 0 or b[-2:] == (1, 0)


def non_reduced_pair(I: IntervalRef) -> tuple[IntervalRef, IntervalRef]:
    """Bijective witness for ``f_A = f_R + t (f_A - 1) f_A|_{s=1}``."""
    u1, v = upper_ideal_factor(I.bottom)
    a, v2 = strip_split(I.top)
    return IntervalRef(u1, a), IntervalRef(v, v2)


def non_reduced_unpair(J: IntervalRef, K: IntervalRef) -> IntervalRef:
    return IntervalRef(strip_join(J.bottom, K.bottom), strip_join(J.top, K.top))


# -- shapes and core intervals -----------------------------------------------------------

def has_shape_a(w: DyckPath) -> bool:
    return len(w) >= 4 and w[-2:] == (1, 0)


def has_shape_b(w: DyckPath) -> bool:
    return len(w) >= 4 and w[0] == 1 and w[-3:] == (1, 0, 0) and dyck.is_dyck(w[1:-3])


def is_core(I: IntervalRef) -> bool:
    if I == IntervalRef((1, 0, 1, 0), (1, 0, 1, 0)):
        return True
    return has_shape_a(I.bottom) and has_shape_b(I.top)


def in_E(w: DyckPath) -> bool:
    return has_shape_a(w) or has_shape_b(w)


def E_set(n: int) -> list[DyckPath]:
    return [w for w in dyck.dyck_paths(n) if in_E(w)]


def chain_E(w: DyckPath) -> list[DyckPath]:
    """``e_0(w), ..., e_k(w)`` inside the paths of size ``|w| + 2``."""
    bl = dyck.blocks(w)
    out = []
    for i in range(len(bl) + 1):
        out.append((1,) + sum(bl[:i], ()) + (0,) + sum(bl[i:], ()) + (1, 0))
    out.append((1,) + tuple(w) + (1, 0, 0))
    return out


def theta(u: DyckPath) -> DyckPath:
    if has_shape_b(u):
        return (1, 0) + u[1:-3] + (1, 0)
    if has_shape_a(u):
        first, second = dyck.blocks(u)[:2]
        cut = len(first) - 1  # position of the final 0 of the first block
        return u[:cut] + second + (0,) + u[cut + 1 + len(second):]
    raise NotInE(f"{dyck.to_string(u)} has neither shape")


def theta_orbit(u: DyckPath) -> list[DyckPath]:
    """The orbit of ``u`` listed from its shape-A start ``e_0``."""
    orbit = [u]
    x = theta(u)
    while x != u:
        orbit.append(x)
        x = theta(x)
    k = next(i for i, x in enumerate(orbit) if has_shape_b(x))
    rotated = orbit[k + 1:] + orbit[:k + 1]
    return rotated


def chain_top(u: DyckPath) -> DyckPath:
    x = u
    while not has_shape_b(x):
        x = theta(x)
    return x


def core_bijection(I: IntervalRef) -> tuple[IntervalRef, int]:
    """``[u, (1,w',1,0,0)] -> ([w, w'], index of u in E(w))``."""
    if not (has_shape_a(I.bottom) and has_shape_b(I.top)):
        raise NotCore(f"[{dyck.to_string(I.bottom)}, {dyck.to_string(I.top)}] is not a core interval")
    top = chain_top(I.bottom)
    w = top[1:-3]
    i = chain_E(w).index(I.bottom)
    return IntervalRef(w, I.top[1:-3]), i


def core_bijection_inv(J: IntervalRef, i: int) -> IntervalRef:
    chain = chain_E(J.bottom)
    if not 0 <= i < len(chain) - 1:
        raise NotCore(f"index {i} out of range for a chain of {len(chain)} elements")
    return IntervalRef(chain[i], (1,) + J.top + (1, 0, 0))


def core_count_via_bijection(n: int) -> int:
    """Number of shape-A/shape-B intervals of size ``n``, counted in size ``n - 2``."""
    if n < 2:
        return 0
    P = order.hasse(n - 2)
    return sum((len(dyck.blocks(w)) + 1) * popcount(P.up[i]) for i, w in enumerate(P.elements))


# -- generating series ---------------------------------------------------------------------

def _kind_counts(n: int, kind: str) -> dict[int, int]:
    P = order.hasse(n)
    by_blocks: dict[int, int] = defaultdict(int)
    if kind == "C":
        shape_b = 0
        for j, w in enumerate(P.elements):
            if has_shape_b(w):
                shape_b |= 1 << j
    for i, u in enumerate(P.elements):
        nb = len(dyck.blocks(u))
        if kind == "A":
            c = popcount(P.up[i])
        elif kind == "R":
            c = popcount(P.up[i]) if (not u or u[-2:] == (1, 0)) else 0
        elif kind == "C":
            c = popcount(P.up[i] & shape_b) if has_shape_a(u) else 0
            if u == (1, 0, 1, 0):
                c += 1
        else:
            raise ValueError(f"unknown series kind {kind!r}")
        if c:
            by_blocks[nb] += c
    return by_blocks


def series(kind: str, N: int, max_n: int = DEFAULT_MAX_N) -> IntPoly:
    """Brute-force series in ``s`` (blocks of the bottom) and ``t`` (size)."""
    if N > max_n:
        raise SizeTooLarge(f"degree {N} exceeds the enumeration cap {max_n}")
    terms = {}
    for n in range(N + 1):
        for j, c in _kind_counts(n, kind).items():
            terms[(j, n)] = c
    return IntPoly(terms, ST)


def series_table(kind: str, N: int) -> list[IntPoly]:
    """Per-degree coefficients of ``t``, each a polynomial in ``s``."""
    f = series(kind, N)
    return [f.coeff("t", n) for n in range(N + 1)]


def _v(name: str) -> IntPoly:
    return IntPoly.var(name, ST)


def verify_functional_equations(N: int, fA=None, fR=None, fC=None) -> Report:
    """Check the four identities between the series through ``t^N``.

    Series can be passed in to test corrupted tables.
    """
    fA = fA if fA is not None else series("A", N)
    fR = fR if fR is not None else series("R", N)
    fC = fC if fC is not None else series("C", N)
    s, t = _v("s"), _v("t")
    one = IntPoly.const(1, ST)
    F1 = fA.subs("s", 1)
    Q = (s * fA - F1).divide_linear("s", 1)
    st = {"s": 1, "t": 1}
    rep = Report(f"functional equations through t^{N}")

    rhs1 = fR + mul_trunc(t * (fA - 1), F1, "t", N)
    rep.add("fA = fR + t (fA - 1) fA|s=1", "relation between all and reduced intervals",
            fA.truncate("t", N) == rhs1.truncate("t", N))

    lhs2 = (fR - 1).divide_monomial(st)
    rhs2 = one + mul_trunc((fA - 1).divide_monomial(st), fC.divide_monomial(st), "t", N)
    rep.add("(fR - 1)/(st) = 1 + (fA - 1)/(st) * fC/(st)", "reduced intervals end with a core factor",
            lhs2.truncate("t", N - 1) == rhs2.truncate("t", N - 1))

    rhs3 = s * s * t * t * (one + Q)
    rep.add("fC = s^2 t^2 (1 + (s fA - fA|s=1)/(s-1))", "core intervals through the chain bijection",
            fC.truncate("t", N) == rhs3.truncate("t", N))

    rhs4 = one + s * t + mul_trunc(s * t * (fA - 1), one + Q, "t", N) + mul_trunc(t * (fA - 1), F1, "t", N)
    rep.add("combined catalytic equation for fA", "functional equation for all intervals",
            fA.truncate("t", N) == rhs4.truncate("t", N))
    return rep


def g_series(N: int) -> IntPoly:
    return IntPoly({(n,): interval_count_formula(n) for n in range(N + 1)}, ("t",))


def verify_algebraic_equation(N: int, brute_max: int = 7) -> Report:
    rep = Report(f"algebraic equation through t^{N}")
    g = g_series(N)
    t = IntPoly.var("t")
    expr = 16 * mul_trunc(g, g, "t", N) * t * t - g * (8 * t * t + 12 * t - 1) + t * t + 11 * t - 1
    residue = expr.truncate("t", N)
    rep.add("16g^2t^2 - g(8t^2+12t-1) + t^2 + 11t - 1 = 0", "algebraic equation for the interval series",
            residue.is_zero(), str(residue))
    counts = [interval_count(n) for n in range(brute_max + 1)]
    formula = [interval_count_formula(n) for n in range(brute_max + 1)]
    rep.add("closed formula matches enumeration", "interval counting formula", counts == formula,
            {"enumerated": counts, "formula": formula})
    return rep
