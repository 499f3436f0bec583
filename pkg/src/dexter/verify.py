"""Verification suites behind ``dexter verify`` and the acceptance tests.

Each ``check_*`` function takes explicit sizes and returns a :class:`Report`;
``run_suite`` maps a suite name and a :class:`RunConfig` onto them.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from typing import Callable

from . import dyck, hochschild, intervals, invariants, known, meet, monoids, order, related
from .config import RunConfig
from .poset import Poset, bits, boolean_lattice, poset_isomorphic
from .polys import IntPoly
from .report import Report

# -- counts and order structure -------------------------------------------------


def check_interval_counts(max_n: int) -> Report:
    rep = Report("interval counts")
    got = [intervals.interval_count(n) for n in range(max_n + 1)]
    ref = list(known.INTERVAL_COUNTS[: max_n + 1])
    rep.add("interval counts", "1, 1, 3, 12, 56, 288, 1584, 9152", got[: len(ref)] == ref, got)
    formula = [intervals.interval_count_formula(n) for n in range(max_n + 1)]
    rep.add("closed counting formula", "formula agrees with enumeration", formula == got, formula)
    return rep


def check_maximal(motzkin_n: int, predicate_n: int) -> Report:
    rep = Report("maximal elements")
    got = [sum(1 for w in order.hasse(n).elements if not order.covers(w)) for n in range(1, motzkin_n + 1)]
    rep.add("maximal elements are counted by Motzkin numbers", "Motzkin numbers",
            got == list(known.MOTZKIN[:motzkin_n]), got)
    bad = [dyck.to_string(w) for n in range(predicate_n + 1) for w in dyck.dyck_paths(n)
           if order.is_maximal(w) != (not order.covers(w))]
    rep.add("maximality predicate matches empty out-degree", "characterization of maximal elements",
            not bad, bad[:5])
    return rep


def check_hasse_structure(max_n: int) -> Report:
    rep = Report("Hasse diagrams")
    for n in range(max_n + 1):
        P = order.hasse(n)
        reduced = P.is_transitively_reduced()
        minimal = [dyck.to_string(P.elements[i]) for i in P.minimal()]
        rep.add(f"Hasse diagram n={n}", "transitively reduced with a single source",
                reduced and minimal == [dyck.to_string(dyck.w_min(n))],
                {"size": len(P), "sources": minimal})
    return rep


def check_kappa(max_n: int) -> Report:
    rep = Report("binary tree bijection")
    bad = []
    for n in range(max_n + 1):
        for w in dyck.dyck_paths(n):
            t = dyck.kappa(w)
            if dyck.kappa_inv(t) != w or dyck.tree_size(t) != n:
                bad.append(dyck.to_string(w))
            elif dyck.rightmost_branch_length(t) != dyck.final_zeros(w):
                bad.append(dyck.to_string(w))
    rep.add(f"kappa roundtrip n<={max_n}", "paths to binary trees, final zeros to right branch",
            not bad, bad[:5])
    return rep


def check_order_sandwich(max_n: int) -> Report:
    rep = Report("related orders")
    for n in range(max_n + 1):
        D, T, C = (related.order_poset(n, k) for k in ("dexter", "tamari", "comb"))
        rep.add(f"comb in dexter in Tamari n={n}", "order inclusions",
                related.order_contains(C, D) and related.order_contains(D, T))
        bad = []
        for w in dyck.dyck_paths(n):
            for x, i, target in order.cover_moves(w):
                chain = related.tamari_interval_chain(w, x, i)
                if chain != related.slide_steps(w, x, i):
                    bad.append((dyck.to_string(w), dyck.to_string(target)))
        rep.add(f"Tamari interval of each dexter cover is a chain n={n}", "chain of single slides",
                not bad, bad[:5])
    return rep


# -- factorization theorems --------------------------------------------------------


def check_factorizations(max_n: int) -> Report:
    rep = Report("factorization theorems")
    block = sharp = upper = 0
    bad_block, bad_sharp, bad_upper = [], [], []
    for n in range(max_n + 1):
        for I in intervals.iter_intervals(n):
            block += 1
            if not intervals.check_block_factorization(I):
                bad_block.append(I)
            if dyck.is_block_indecomposable(I.bottom) and n >= 1:
                sharp += 1
                if not intervals.check_sharp_factorization(I):
                    bad_sharp.append(I)
        for w in dyck.dyck_paths(n):
            if intervals.upper_ideal_factor(w) is not None:
                upper += 1
                if not intervals.check_upper_ideal_factorization(w):
                    bad_upper.append(w)
    rep.add(f"block factorization n<={max_n}", "intervals are products over blocks of the bottom",
            not bad_block, {"checked": block, "failures": len(bad_block)})
    rep.add(f"sharp factorization n<={max_n}", "explicit isomorphism onto the product of generators",
            not bad_sharp, {"checked": sharp, "failures": len(bad_sharp)})
    rep.add(f"upper ideal factorization n<={max_n}", "upper ideals of paths with a strip split",
            not bad_upper, {"checked": upper, "failures": len(bad_upper)})
    for n in range(max_n + 1):
        rep.extend(intervals.level_multiset_isomorphism_check(n, max_n=max(max_n, 7)))
    return rep


# -- series and cores -----------------------------------------------------------------


def check_printed_series() -> Report:
    rep = Report("printed series")
    for kind, ref in (("A", known.F_A), ("R", known.F_R), ("C", known.F_C)):
        got = intervals.series(kind, 4)
        rep.add(f"f_{kind} through t^4", "printed expansion", got == IntPoly(ref, intervals.ST), str(got))
    return rep


def check_cores(max_n: int) -> Report:
    rep = Report("core intervals")
    for n in range(max_n + 1):
        E = set(intervals.E_set(n))
        P = order.hasse(n)
        mask = sum(1 << P.index[w] for w in E)
        ideal = all(P.down[P.index[w]] & ~mask == 0 for w in E)
        rep.add(f"E_n is a lower ideal n={n}", "shapes A and B are closed downwards", ideal, len(E))

        seen: set = set()
        ok = True
        if n >= 2:
            for w in dyck.dyck_paths(n - 2):
                chain = intervals.chain_E(w)
                orbit = intervals.theta_orbit(chain[0])
                ok &= orbit == chain and not (seen & set(chain))
                seen |= set(chain)
        rep.add(f"chains partition E_n as theta orbits n={n}", "chains E(w)", ok and seen == E)

        bad = 0
        for I in intervals.iter_intervals(n):
            if intervals.has_shape_a(I.bottom) and intervals.has_shape_b(I.top):
                J, i = intervals.core_bijection(I)
                if intervals.core_bijection_inv(J, i) != I or not _is_interval(J):
                    bad += 1
        rep.add(f"core bijection roundtrip n={n}", "core intervals to pairs (interval, chain index)", bad == 0)

        direct = sum(1 for I in intervals.iter_intervals(n)
                     if intervals.has_shape_a(I.bottom) and intervals.has_shape_b(I.top))
        rep.add(f"core count through the bijection n={n}", "recount in size n-2",
                intervals.core_count_via_bijection(n) == direct, direct)
    return rep


def _is_interval(J) -> bool:
    return order.path_leq(J.bottom, J.top)


# -- monoids -------------------------------------------------------------------------


def check_monoids(max_n: int, m2_n: int, gen_n: int | None = None, sample: int = 200, seed: int = 0) -> Report:
    rep = Report("monoids")
    small = [w for n in range(1, 4) for w in dyck.dyck_paths(n)]
    assoc = all(monoids.sharp(monoids.sharp(a, b), c) == monoids.sharp(a, monoids.sharp(b, c))
                for a, b, c in itertools.product(small, repeat=3))
    unit = all(monoids.sharp(monoids.UNIT, a) == a == monoids.sharp(a, monoids.UNIT) for a in small)
    rep.add("sharp associative with unit, sizes <= 3", "monoid axioms", assoc and unit)

    rng = random.Random(seed)
    pool = [w for n in range(1, max_n + 1) for w in dyck.dyck_paths(n)]
    triples = [tuple(rng.choice(pool) for _ in range(3)) for _ in range(sample)]
    rep.add(f"sharp associative on {sample} sampled triples", "monoid axioms",
            all(monoids.sharp(monoids.sharp(a, b), c) == monoids.sharp(a, monoids.sharp(b, c))
                for a, b, c in triples))

    bad = [w for n in range(1, max_n + 1) for w in dyck.dyck_paths(n)
           if monoids.sharp_all(monoids.m1_factor(w)) != w
           or not all(monoids.is_m1_generator(g) for g in monoids.m1_factor(w))]
    rep.add(f"M1 factorization roundtrip n<={max_n}", "free on its generators", not bad, bad[:3])

    bad2 = []
    for n in range(1, m2_n + 1):
        for I in intervals.iter_intervals(n):
            f = monoids.m2_factor(I)
            if monoids.m2_product_all(f) != I or not all(monoids.is_m2_generator(g) for g in f):
                bad2.append(I)
    rep.add(f"M2 factorization roundtrip n<={m2_n}", "intervals factor into generators", not bad2, bad2[:3])

    top = gen_n if gen_n is not None else min(max(m2_n, 2), 7)
    got = {n: monoids.m2_generator_count(n) for n in range(2, top + 1)}
    ref = {n: known.M2_GENERATORS[n] for n in got}
    rep.add(f"M2 generator counts sizes 2..{top}", "3, 3, 11, 51, 267, 1507", got == ref, got)
    return rep


# -- meet -------------------------------------------------------------------------------


def check_meet_exhaustive(n: int) -> Report:
    rep = Report(f"meet n={n}")
    P = order.hasse(n)
    bad = []
    for a, b in itertools.product(range(len(P)), repeat=2):
        glb = P.meet_idx(a, b)
        got = meet.meet(P.elements[a], P.elements[b])
        if glb is None or P.elements[glb] != got:
            bad.append((dyck.to_string(P.elements[a]), dyck.to_string(P.elements[b])))
    rep.add(f"constructive meet equals the greatest lower bound n={n}", "meet-semilattice",
            not bad, {"pairs": len(P) ** 2, "failures": bad[:3]})
    return rep


def _r_set(P: Poset, u, i) -> int:
    mask = 0
    for j in bits(P.up[P.index[u]]):
        v = P.elements[j]
        if v[:i] == u[:i] and v[i] == 1:
            mask |= 1 << j
    return mask


def _s_set(P: Poset, w, i) -> int:
    mask = 0
    for j in bits(P.down[P.index[w]]):
        v = P.elements[j]
        if v[:i] == w[:i] and v[i] == 0:
            mask |= 1 << j
    return mask


def _unique_min(P: Poset, mask: int):
    mins = [j for j in bits(mask) if P.down[j] & mask == 1 << j]
    return P.elements[mins[0]] if len(mins) == 1 and all(P.leq_idx(mins[0], k) for k in bits(mask)) else None


def _unique_max(P: Poset, mask: int):
    maxs = [j for j in bits(mask) if P.up[j] & mask == 1 << j]
    return P.elements[maxs[0]] if len(maxs) == 1 and all(P.leq_idx(k, maxs[0]) for k in bits(mask)) else None


def check_meet_oracles(max_n: int) -> Report:
    """Rise/min_R/desc/s_op against brute-force extrema of R_i and S_i."""
    rep = Report("meet operators")
    counts = dict(rise=0, min_r=0, desc=0, s_op=0, dynamic=0)
    bad: dict[str, list] = {k: [] for k in counts}
    for n in range(1, max_n + 1):
        P = order.hasse(n)
        for u in P.elements:
            for i in range(len(u)):
                if u[i] == 0:
                    R = _r_set(P, u, i)
                    r = meet.rise(u, i)
                    counts["rise"] += 1
                    if r is None:
                        if R:
                            bad["rise"].append((u, i))
                    elif not (P.leq(u, r) and r[:i] == u[:i]
                              and all(P.leq(r, P.elements[j]) for j in bits(R))):
                        bad["rise"].append((u, i))
                    counts["min_r"] += 1
                    m = meet.min_R(u, i)
                    if m != (_unique_min(P, R) if R else None):
                        bad["min_r"].append((u, i))
                elif dyck.heights(u)[i] > 0:
                    d = meet.desc(u, i)
                    S = _s_set(P, u, i)
                    counts["desc"] += 1
                    if (u, "red") not in order.covers(d) and (u, "blue") not in order.covers(d):
                        bad["desc"].append((u, i))
                    elif not all(P.leq(P.elements[j], d) for j in bits(S)):
                        bad["desc"].append((u, i))
                    counts["s_op"] += 1
                    s = meet.s_op(u, i)
                    if s != _unique_max(P, S) or s[:i] != u[:i]:
                        bad["s_op"].append((u, i))
                    counts["dynamic"] += 1
                    if meet.s_op_dynamic(u, i) != s:
                        bad["dynamic"].append((u, i))
    claims = {
        "rise": "Rise stays below every element of R_i",
        "min_r": "min_R is the unique minimum of R_i",
        "desc": "Desc is a cover below w dominating S_i",
        "s_op": "s_i is the unique maximum of S_i",
        "dynamic": "fixed and recomputed iteration counts agree",
    }
    for k, claim in claims.items():
        rep.add(f"{k} oracle n<={max_n}", claim, not bad[k],
                {"checked": counts[k], "failures": [(dyck.to_string(u), i) for u, i in bad[k][:3]]})
    return rep


def check_meet_prefix_lift(max_n: int) -> Report:
    """Common lower bounds lift, through min_R, to ones sharing the common prefix."""
    rep = Report("meet prefix lift")
    bad = []
    for n in range(1, max_n + 1):
        P = order.hasse(n)
        for a, b in itertools.combinations(range(len(P)), 2):
            v, w = P.elements[a], P.elements[b]
            k = next(j for j in range(len(v)) if v[j] != w[j])
            common = P.down[a] & P.down[b]
            for c in bits(common):
                u = P.elements[c]
                while u is not None and u[:k] != v[:k]:
                    j = next(j for j in range(k) if u[j] != v[j])
                    u = meet.min_R(u, j)
                if u is None or not (common >> P.index[u]) & 1:
                    bad.append((v, w, P.elements[c]))
    rep.add(f"prefix lift n<={max_n}", "lower bounds can be lifted to the common prefix", not bad, len(bad))
    return rep


# -- Hochschild -------------------------------------------------------------------------


def check_hochschild(max_n: int, sizes_n: int | None = None) -> Report:
    rep = Report("Hochschild interval")
    sizes_n = max_n if sizes_n is None else sizes_n
    got = [len(hochschild.f_poset(n)) for n in range(1, sizes_n + 1)]
    rep.add(f"|F_n| for n=1..{sizes_n}", "2^(n-2)(n+3)",
            got == list(known.F_SIZES[:sizes_n]) and got == [hochschild.count_formula(n) for n in range(1, sizes_n + 1)],
            got)
    for w, z in known.RHO_EXAMPLES:
        rep.add(f"rho({w})", "printed example", hochschild.rho(dyck.parse(w)) == z)
    for z, w in known.RHO_INV_EXAMPLES:
        rep.add(f"rho^-1({hochschild.to_digits(z)})", "printed example", hochschild.rho_inv(z) == dyck.parse(w))
    for n in range(1, max_n + 1):
        P = hochschild.f_poset(n)
        images = {w: hochschild.rho(w) for w in P.elements}
        roundtrip = all(hochschild.rho_inv(z) == w for w, z in images.items())
        z0, z1, zb = hochschild.z_sets(n)
        parts = (
            {images[w] for w in hochschild.part(n, "0")} == z0
            and {images[w] for w in hochschild.part(n, "1")} == z1
            and {images[w] for w in hochschild.part(n, "b")} == zb
            and len(set(images.values())) == len(P)
        )
        rep.add(f"rho roundtrip n={n}", "brick inverse", roundtrip)
        rep.add(f"rho(F_n) = Z_n with sub-partitions n={n}", "recursive description of the image", parts)
        edges = all(
            sum(1 for a, b in zip(images[P.elements[i]], images[P.elements[j]]) if a != b) == 1
            and all(a <= b for a, b in zip(images[P.elements[i]], images[P.elements[j]]))
            for i, j, _ in P.covers
        )
        rep.add(f"covers change one letter upwards n={n}", "cover moves increase one letter", edges)
        rep.add(f"membership predicate n={n}", "characterization of F_n",
                all(hochschild.in_F(w, n) for w in P.elements)
                and sum(hochschild.in_F(w, n) for w in dyck.dyck_paths(n + 2)) == len(P)
                if n + 2 <= 9 else all(hochschild.in_F(w, n) for w in P.elements))
    return rep


def check_boolean_parts(max_n: int) -> Report:
    rep = Report("boolean parts of F_n")
    for n in range(1, max_n + 1):
        P = hochschild.f_poset(n)
        B = boolean_lattice(n - 1)
        for which, label in (("b", "block-indecomposable part"), ("v0", "height-0 valleys")):
            sub = P.induced([P.index[w] for w in hochschild.part(n, which)])
            rep.add(f"{label} n={n}", "boolean lattice on n-1 atoms",
                    len(sub) == 2 ** (n - 1) and poset_isomorphic(sub, B), len(sub))
    return rep


# -- invariants ---------------------------------------------------------------------------


def check_zeta(max_n: int) -> Report:
    rep = Report("zeta polynomials")
    m1, m2 = [], []
    for n in range(1, max_n + 1):
        Z = invariants.zeta_polynomial(order.hasse(n))
        m1.append(Z(-1))
        m2.append(Z(-2))
    rep.add("Z(-1)", "1, -1, 2, -5, 14, -42", m1 == list(known.ZETA_AT_MINUS_ONE[:max_n]), m1)
    rep.add("Z(-2)", "1, -2, 7, -29, 131, -625", m2 == list(known.ZETA_AT_MINUS_TWO[:max_n]), m2)
    return rep


def check_coxeter(include_f5: bool = True) -> Report:
    rep = Report("Coxeter polynomials")
    for w, size, exps in known.COXETER_UPPER_EXAMPLES:
        P = _upper_example(w)
        f = invariants.cyclotomic_factor(invariants.coxeter_polynomial(P))
        rep.add(f"Coxeter polynomial for {w}", "printed cyclotomic factorization",
                len(P) == size and f.is_complete() and dict(f.factors) == exps, {"size": len(P), "factors": str(f)})
    if include_f5:
        P = hochschild.f_poset(5)
        f = invariants.cyclotomic_factor(invariants.coxeter_polynomial(P))
        rep.add("Coxeter polynomial of F_5", "printed cyclotomic factorization",
                f.is_complete() and dict(f.factors) == known.COXETER_F5, str(f))
    return rep


def _upper_example(w: str) -> Poset:
    return intervals.interval_poset(intervals.J_of(dyck.parse(w)))


def check_unit_circle(max_n: int) -> Report:
    rep = Report("Coxeter roots")
    P = intervals.interval_poset(intervals.I_of(dyck.parse(known.OFF_CIRCLE_EXAMPLE)))
    rep.add(f"roots for I({known.OFF_CIRCLE_EXAMPLE})", "some roots leave the unit circle",
            not invariants.roots_on_unit_circle(invariants.coxeter_polynomial(P)), len(P))
    for n in range(1, max_n + 1):
        p = invariants.coxeter_polynomial(hochschild.f_poset(n))
        rep.add(f"roots for F_{n}", "all roots on the unit circle", invariants.roots_on_unit_circle(p))
    return rep


def check_lattice_examples() -> Report:
    rep = Report("lattice counterexamples")
    P = intervals.interval_poset(intervals.I_of(dyck.parse(known.NOT_SEMIDISTRIBUTIVE_EXAMPLE)))
    rep.add("example interval is a lattice", "lattice", P.is_lattice(), len(P))
    rep.add("example interval not semidistributive", "counterexample", not invariants.is_semidistributive(P))
    rep.add("example interval not extremal", "counterexample", not invariants.is_extremal(P))
    return rep


def check_h_polynomials(eq_n: int, sym_n: int, nara_n: int) -> Report:
    rep = invariants.verify_h_equations(eq_n)
    rep.add(f"symmetry n<={sym_n}", "A_n(r, rb) = r^(n-1) A_n(1/r, b/r)",
            all(invariants.symmetry_holds(n) for n in range(1, sym_n + 1)))
    rep.add(f"uncolored specialization n<={nara_n}", "Narayana polynomials", invariants.narayana_check(nara_n))
    return rep


# -- suites ---------------------------------------------------------------------------------

SUITES = ("counts", "series", "monoids", "meet", "hochschild", "invariants")


def _suite_counts(cfg: RunConfig) -> Report:
    c = cfg.cap("counts")
    rep = Report("counts")
    for r in (check_interval_counts(c), check_maximal(c, min(c + 1, 9)), check_hasse_structure(c),
              check_kappa(c), check_order_sandwich(min(c, 7)), check_factorizations(min(c, 6))):
        rep.extend(r)
    return rep


def _suite_series(cfg: RunConfig) -> Report:
    c = cfg.cap("series")
    rep = Report("series")
    for r in (check_printed_series(), intervals.verify_functional_equations(c),
              intervals.verify_algebraic_equation(12, brute_max=min(c, 7)), check_cores(c)):
        rep.extend(r)
    return rep


def _suite_monoids(cfg: RunConfig) -> Report:
    c = cfg.cap("monoids")
    return check_monoids(c, min(c, 6), seed=cfg.seed)


def _suite_meet(cfg: RunConfig) -> Report:
    c = cfg.cap("meet")
    rep = Report("meet")
    for n in range(c + 1):
        rep.extend(check_meet_exhaustive(n))
    rep.extend(check_meet_oracles(min(c, 6)))
    rep.extend(check_meet_prefix_lift(min(c, 5)))
    return rep


def _suite_hochschild(cfg: RunConfig) -> Report:
    c = cfg.cap("hochschild")
    rep = check_hochschild(c)
    rep.extend(check_boolean_parts(min(c, 7)))
    rep.extend(hochschild.structural_bijections(min(c, 6) - 1))
    return rep


def _suite_invariants(cfg: RunConfig) -> Report:
    c = cfg.cap("invariants")
    rep = Report("invariants")
    for r in (check_zeta(min(c, 6)), check_coxeter(), check_unit_circle(min(c, 6)),
              check_lattice_examples(), check_h_polynomials(min(c + 2, 8), min(c + 2, 8), min(c + 3, 9))):
        rep.extend(r)
    return rep


_RUNNERS: dict[str, Callable[[RunConfig], Report]] = {
    "counts": _suite_counts,
    "series": _suite_series,
    "monoids": _suite_monoids,
    "meet": _suite_meet,
    "hochschild": _suite_hochschild,
    "invariants": _suite_invariants,
}


def run_suite(name: str, cfg: RunConfig | None = None) -> Report:
    cfg = cfg or RunConfig()
    if name == "all":
        names = list(SUITES)
    elif name in _RUNNERS:
        names = [name]
    else:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITES + ('all',)}")
    rep = Report(name)
    if cfg.threads > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
            for r in pool.map(_run_one, names, [cfg] * len(names)):
                rep.extend(r)
    else:
        for n in names:
            rep.extend(_RUNNERS[n](cfg))
    return rep


def _run_one(name: str, cfg: RunConfig) -> Report:
    return _RUNNERS[name](cfg)
