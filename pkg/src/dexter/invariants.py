"""Poset invariants: zeta and Coxeter polynomials, cyclotomic factors,
lattice properties, longest chains and colored in-degree polynomials."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

import numpy as np
from sympy import ZZ, Poly, cyclotomic_poly, isprime, primefactors, symbols, totient
from sympy.polys.matrices import DomainMatrix

from . import order
from .errors import NotALattice, TooLarge
from .polys import IntPoly, mul_trunc, series_inverse
from .poset import (  # noqa: F401  (re-exported)
    BLUE, RED, Poset, bits, boolean_lattice, cartesian_product, chain, find_isomorphism,
    poset_isomorphic, product_of,
)
from .report import Report

X = ("x",)
_x = symbols("x")


# -- zeta polynomial ----------------------------------------------------------------

def multichain_counts(P: Poset, kmax: int) -> list[int]:
    """``Z(k)`` for ``k = 1..kmax``: multichains ``x_1 <= ... <= x_{k-1}``."""
    out = [1]
    if kmax < 2:
        return out[:kmax]
    c = [1] * len(P)
    out.append(len(P))
    for _ in range(3, kmax + 1):
        c = [sum(c[i] for i in bits(P.down[j])) for j in range(len(P))]
        out.append(sum(c))
    return out


def interpolate(points: list[tuple[int, int]], var: str = "x") -> IntPoly:
    """Exact Lagrange interpolation; coefficients are ints or Fractions."""
    coeffs = [Fraction(0)] * len(points)
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k, b in enumerate(basis):
            coeffs[k] += yi * b / denom
    clean = [int(c) if c.denominator == 1 else c for c in coeffs]
    return IntPoly.from_coeffs(clean, var)


def zeta_polynomial(P: Poset, max_size: int = 5000) -> IntPoly:
    if len(P) > max_size:
        raise TooLarge(f"{len(P)} elements exceeds {max_size}")
    d = longest_chain(P)
    # degree is the length of the longest chain; fit on k >= 2 only (Z(1) is
    # not the empty-chain count unless P is bounded), plus one check point
    ks = list(range(2, d + 4))
    vals = multichain_counts(P, ks[-1])[1:]
    poly = interpolate(list(zip(ks[:-1], vals[:-1])))
    assert poly(ks[-1]) == vals[-1], "zeta interpolation is inconsistent"
    return poly


# -- Coxeter polynomial ----------------------------------------------------------------

def zeta_matrix(P: Poset) -> list[list[int]]:
    order_ = P.topological_order
    pos = {v: k for k, v in enumerate(order_)}
    n = len(P)
    Z = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in bits(P.up[i]):
            Z[pos[i]][pos[j]] = 1
    return Z


def coxeter_matrix(P: Poset) -> list[list[int]]:
    """``-Z^{-T} Z``; ``Z`` is unitriangular so everything stays integral."""
    Z = DomainMatrix([[ZZ(v) for v in row] for row in zeta_matrix(P)], (len(P), len(P)), ZZ)
    Zinv = Z.to_field().inv().convert_to(ZZ) if len(P) else Z
    C = -(Zinv.transpose() * Z)
    return [[int(v) for v in row] for row in C.to_list()]


def coxeter_polynomial(P: Poset, max_size: int = 5000) -> IntPoly:
    if len(P) > max_size:
        raise TooLarge(f"{len(P)} elements exceeds {max_size}")
    n = len(P)
    if n == 0:
        return IntPoly.const(1, X)
    C = DomainMatrix([[ZZ(v) for v in row] for row in coxeter_matrix(P)], (n, n), ZZ)
    cp = [int(c) for c in C.charpoly()]  # descending
    return IntPoly.from_coeffs(list(reversed(cp)), "x")


# -- cyclotomic factors -------------------------------------------------------------

def _divmod_monic(p: list[int], d: list[int]) -> tuple[list[int], list[int]]:
    """Division of ascending coefficient lists by a monic divisor."""
    p = list(p)
    dd = len(d) - 1
    if len(p) - 1 < dd:
        return [0], p
    q = [0] * (len(p) - dd)
    for k in range(len(p) - 1, dd - 1, -1):
        c = p[k]
        if c:
            q[k - dd] = c
            for j in range(dd + 1):
                p[k - dd + j] -= c * d[j]
    rem = p[:dd] or [0]
    return q, rem


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> tuple[int, ...]:
    """Ascending coefficients of ``Phi_d``."""
    return tuple(int(c) for c in reversed(cyclotomic_poly(d, _x, polys=True).all_coeffs()))


@lru_cache(maxsize=None)
def _root_of_unity_mod(d: int) -> tuple[int, int]:
    """A prime ``q = 1 mod d`` and an element of exact order ``d`` mod ``q``."""
    q = d + 1
    while not isprime(q):
        q += d
    rng = random.Random(d)
    primes = primefactors(d)
    while True:
        r = pow(rng.randrange(2, q), (q - 1) // d, q) if q > 2 else 1
        if all(pow(r, d // p, q) != 1 for p in primes):
            return q, r


def _may_divide(p: list[int], d: int) -> bool:
    # Phi_d(r) = 0 mod q for r of exact order d, so Phi_d | p forces p(r) = 0 mod q
    q, r = _root_of_unity_mod(d)
    acc = 0
    for c in reversed(p):
        acc = (acc * r + c) % q
    return acc == 0


@dataclass
class CycloFactorization:
    factors: list[tuple[int, int]]  # (d, multiplicity)
    remainder: IntPoly

    def expand(self) -> IntPoly:
        out = self.remainder
        for d, m in self.factors:
            out = out * IntPoly.from_coeffs(cyclotomic(d), "x") ** m
        return out

    def is_complete(self) -> bool:
        return self.remainder == 1 or self.remainder == -1

    def __str__(self):
        body = " ".join(f"Phi{d}" + (f"^{m}" if m > 1 else "") for d, m in self.factors)
        if self.remainder == 1:
            return body or "1"
        if self.remainder == -1:
            return "-" + (body or "1")
        return f"{body} * ({self.remainder})" if body else str(self.remainder)


def cyclotomic_factor(p: IntPoly) -> CycloFactorization:
    coeffs = [int(c) for c in p.coeffs()]
    factors = []
    d = 1
    while len(coeffs) > 1:
        deg = len(coeffs) - 1
        if euler_phi(d) <= deg and _may_divide(coeffs, d):
            cyc = list(cyclotomic(d))
            m = 0
            while len(coeffs) - 1 >= len(cyc) - 1:
                q, rem = _divmod_monic(coeffs, cyc)
                if any(rem):
                    break
                coeffs = q
                m += 1
            if m:
                factors.append((d, m))
        d += 1
        # phi(d) >= sqrt(d / 2), so nothing beyond 2 deg^2 can divide
        if d > 2 * deg * deg + 2:
            break
    return CycloFactorization(factors, IntPoly.from_coeffs(coeffs, "x"))


def euler_phi(d: int) -> int:
    return int(totient(d))


def roots_on_unit_circle(p: IntPoly, tol: float = 1e-8) -> bool:
    """Strip cyclotomic factors exactly, then locate the leftover roots numerically."""
    rest = cyclotomic_factor(p).remainder
    if rest.degree() <= 0:
        return True
    x = symbols("x")
    sq = Poly(list(reversed(rest.coeffs())), x).sqf_part()
    roots = sq.nroots(n=30, maxsteps=200)
    return all(abs(abs(complex(r)) - 1) < tol for r in roots)


def numeric_roots(p: IntPoly) -> np.ndarray:
    return np.roots(list(reversed([float(c) for c in p.coeffs()])))


# -- lattice properties ------------------------------------------------------------------

def _tables(P: Poset):
    n = len(P)
    meet = [[P.meet_idx(i, j) for j in range(n)] for i in range(n)]
    join = [[P.join_idx(i, j) for j in range(n)] for i in range(n)]
    if any(v is None for row in meet for v in row) or any(v is None for row in join for v in row):
        raise NotALattice(f"{P.name or 'poset'} is not a lattice")
    return meet, join


def is_semidistributive(P: Poset) -> bool:
    meet, join = _tables(P)
    n = len(P)
    for x in range(n):
        mx, jx = meet[x], join[x]
        for y in range(n):
            for z in range(y + 1, n):
                if mx[y] == mx[z] and mx[join[y][z]] != mx[y]:
                    return False
                if jx[y] == jx[z] and jx[meet[y][z]] != jx[y]:
                    return False
    return True


def join_irreducibles(P: Poset) -> list[int]:
    return [i for i in range(len(P)) if len(P.lower[i]) == 1]


def meet_irreducibles(P: Poset) -> list[int]:
    return [i for i in range(len(P)) if len(P.upper[i]) == 1]


def is_extremal(P: Poset) -> bool:
    _tables(P)
    ell = longest_chain(P)
    return len(join_irreducibles(P)) == ell == len(meet_irreducibles(P))


def longest_chain(P: Poset) -> int:
    """Number of cover edges on a longest chain."""
    depth = [0] * len(P)
    for i in P.topological_order:
        for j in P.upper[i]:
            depth[j] = max(depth[j], depth[i] + 1)
    return max(depth, default=0)


def quarter_squares_plus_one(n: int) -> int:
    return n * n // 4 + 1


# -- colored in-degree polynomials ----------------------------------------------------------

RB = ("r", "b")
RBT = ("r", "b", "t")


def in_degree_polynomial(P: Poset, swap: bool = False) -> IntPoly:
    red = [0] * len(P)
    blue = [0] * len(P)
    for _, j, c in P.covers:
        if (c == RED) != swap:
            red[j] += 1
        else:
            blue[j] += 1
    terms: dict = {}
    for r, b in zip(red, blue):
        terms[(r, b)] = terms.get((r, b), 0) + 1
    return IntPoly(terms, RB)


def colored_h_polynomial(n: int, swap: bool = False) -> IntPoly:
    return in_degree_polynomial(order.hasse(n), swap)


def h_series(N: int, swap: bool = False) -> IntPoly:
    terms = {}
    for n in range(N + 1):
        for (r, b), c in colored_h_polynomial(n, swap).terms.items():
            terms[(r, b, n)] = c
    return IntPoly(terms, RBT)


def narayana(n: int, k: int) -> int:
    """Number of Dyck paths of size ``n`` with ``k`` peaks."""
    if n == 0:
        return 1 if k == 0 else 0
    if not 1 <= k <= n:
        return 0
    return comb(n, k) * comb(n, k - 1) // n


def symmetry_holds(n: int) -> bool:
    """``A_n(r, r b) = r^(n-1) A_n(1/r, b/r)``."""
    A = colored_h_polynomial(n)
    lhs = A.subs_monomials({"b": {"r": 1, "b": 1}})
    rhs = A.subs_monomials({"r": {"r": -1}, "b": {"b": 1, "r": -1}}).shift({"r": n - 1})
    return lhs == rhs


def verify_h_equations(N: int, swap: bool = False) -> Report:
    rep = Report(f"colored h-polynomials through t^{N}")
    A = h_series(N, swap)
    r, b, t = (IntPoly.var(v, RBT) for v in RBT)
    one = IntPoly.const(1, RBT)

    A2 = mul_trunc(A, A, "t", N)
    quad = A2 * t * b + A * t * r - 2 * A * t * b + A * t - t * r + t * b - A + 1
    rep.add("quadratic equation for A", "A^2tb + Atr - 2Atb + At - tr + tb - A + 1 = 0",
            quad.truncate("t", N).is_zero())

    B_from_A = (one - series_inverse(A, "t", N)).truncate("t", N)
    denom = one - t * (r + b * (A - 1))
    B_direct = mul_trunc(t, series_inverse(denom, "t", N), "t", N)
    rep.add("A = 1/(1-B) with B = t/(1 - t(r + b(A-1)))", "colored functional equation",
            B_from_A == B_direct.truncate("t", N))

    Ax = uncolored(A)
    xv, tv = IntPoly.var("x", ("x", "t")), IntPoly.var("t", ("x", "t"))
    onex = IntPoly.const(1, ("x", "t"))
    Bx = (onex - series_inverse(Ax, "t", N)).truncate("t", N)
    Bx_direct = mul_trunc(tv, series_inverse(onex - xv * tv * Ax, "t", N), "t", N)
    rep.add("uncolored B = t/(1 - x t A)", "Narayana functional equation",
            Bx == Bx_direct.truncate("t", N))
    return rep


def uncolored(A: IntPoly) -> IntPoly:
    """Specialize ``r = b = x`` in a series over ``(r, b, t)``."""
    terms: dict = {}
    for (r, b, n), c in A.terms.items():
        terms[(r + b, n)] = terms.get((r + b, n), 0) + c
    return IntPoly(terms, ("x", "t"))


def narayana_check(N: int) -> bool:
    for n in range(1, N + 1):
        A = colored_h_polynomial(n)
        by_deg: dict[int, int] = {}
        for (r, b), c in A.terms.items():
            by_deg[r + b] = by_deg.get(r + b, 0) + c
        if any(by_deg.get(j, 0) != narayana(n, j + 1) for j in range(n + 1)):
            return False
    return True
