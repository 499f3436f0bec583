"""Exact sparse multivariate polynomials.

Coefficients are Python ints (or :class:`fractions.Fraction` when an
interpolation needs them); exponents may be negative, which gives Laurent
polynomials for free.  Every generating series in the package is an
:class:`IntPoly` truncated in ``t``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .errors import DivisionNotExact

Exps = tuple[int, ...]


class IntPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, terms: Mapping[Exps, int] | None = None, vars: Iterable[str] = ("x",)):
        self.vars = tuple(vars)
        clean = {}
        for e, c in (terms or {}).items():
            if c:
                if len(e) != len(self.vars):
                    raise ValueError(f"exponent {e} does not match variables {self.vars}")
                clean[tuple(e)] = c
        self.terms = clean

    # -- constructors ---------------------------------------------------
    @classmethod
    def const(cls, c, vars=("x",)) -> "IntPoly":
        vars = tuple(vars)
        return cls({(0,) * len(vars): c}, vars)

    @classmethod
    def var(cls, name: str, vars=None) -> "IntPoly":
        vars = tuple(vars) if vars is not None else (name,)
        e = tuple(1 if v == name else 0 for v in vars)
        return cls({e: 1}, vars)

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff=1, vars=("x",)) -> "IntPoly":
        vars = tuple(vars)
        return cls({tuple(exps.get(v, 0) for v in vars): coeff}, vars)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], var: str = "x") -> "IntPoly":
        """Univariate polynomial from ascending coefficients."""
        return cls({(k,): c for k, c in enumerate(coeffs)}, (var,))

    # -- helpers ---------------------------------------------------------
    def _coerce(self, other) -> "IntPoly":
        if isinstance(other, IntPoly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch {self.vars} vs {other.vars}")
            return other
        if isinstance(other, (int, Fraction)):
            return IntPoly.const(other, self.vars)
        return NotImplemented

    def _idx(self, var: str) -> int:
        return self.vars.index(var)

    def is_zero(self) -> bool:
        return not self.terms

    def copy(self) -> "IntPoly":
        return IntPoly(dict(self.terms), self.vars)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return IntPoly(out, self.vars)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly({e: -c for e, c in self.terms.items()}, self.vars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exps, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return IntPoly(out, self.vars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = IntPoly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- structure ----------------------------------------------------------
    def degree(self, var: str | None = None) -> int:
        """Max exponent of ``var`` (total degree when omitted); -1 for zero."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        i = self._idx(var)
        return max(e[i] for e in self.terms)

    def min_degree(self, var: str) -> int:
        i = self._idx(var)
        return min(e[i] for e in self.terms) if self.terms else 0

    def coeff(self, var: str, k: int) -> "IntPoly":
        """Coefficient of ``var**k``, as a polynomial with ``var`` exponent 0."""
        i = self._idx(var)
        out = {}
        for e, c in self.terms.items():
            if e[i] == k:
                out[e[:i] + (0,) + e[i + 1:]] = c
        return IntPoly(out, self.vars)

    def truncate(self, var: str, n: int) -> "IntPoly":
        i = self._idx(var)
        return IntPoly({e: c for e, c in self.terms.items() if e[i] <= n}, self.vars)

    def subs(self, var: str, value) -> "IntPoly":
        """Substitute a number for ``var``."""
        i = self._idx(var)
        out: dict[Exps, int] = {}
        for e, c in self.terms.items():
            k = e[i]
            factor = value ** k if k >= 0 else Fraction(1, value) ** (-k)
            ne = e[:i] + (0,) + e[i + 1:]
            out[ne] = out.get(ne, 0) + c * factor
        return IntPoly(out, self.vars)

    def subs_monomials(self, images: Mapping[str, Mapping[str, int]]) -> "IntPoly":
        """Replace each variable by a (Laurent) monomial.

        ``images={"b": {"r": 1, "b": 1}}`` sends ``b`` to ``r*b``; variables not
        listed are kept.
        """
        mats = []
        for v in self.vars:
            img = images.get(v, {v: 1})
            mats.append(tuple(img.get(w, 0) for w in self.vars))
        out: dict[Exps, int] = {}
        for e, c in self.terms.items():
            ne = [0] * len(self.vars)
            for k, row in zip(e, mats):
                if k:
                    for j, r in enumerate(row):
                        ne[j] += k * r
            key = tuple(ne)
            out[key] = out.get(key, 0) + c
        return IntPoly(out, self.vars)

    def shift(self, exps: Mapping[str, int]) -> "IntPoly":
        """Multiply by a monomial (negative exponents allowed)."""
        d = tuple(exps.get(v, 0) for v in self.vars)
        return IntPoly({tuple(a + b for a, b in zip(e, d)): c for e, c in self.terms.items()}, self.vars)

    def divide_monomial(self, exps: Mapping[str, int]) -> "IntPoly":
        """Exact division by a monomial; fails if a negative exponent appears."""
        d = tuple(exps.get(v, 0) for v in self.vars)
        out = {}
        for e, c in self.terms.items():
            ne = tuple(a - b for a, b in zip(e, d))
            if min(ne) < 0:
                raise DivisionNotExact(f"term {e} not divisible by {d}")
            out[ne] = c
        return IntPoly(out, self.vars)

    def divide_linear(self, var: str, root=1) -> "IntPoly":
        """Exact division by ``(var - root)``.

        Raises :class:`DivisionNotExact` on a nonzero remainder.
        """
        i = self._idx(var)
        groups: dict[Exps, dict[int, int]] = {}
        for e, c in self.terms.items():
            rest = e[:i] + (0,) + e[i + 1:]
            groups.setdefault(rest, {})[e[i]] = c
        out: dict[Exps, int] = {}
        for rest, col in groups.items():
            lo = min(col)
            hi = max(col)
            if lo < 0:
                raise DivisionNotExact("negative exponent in linear division")
            # synthetic division: q[k-1] = c[k] + root * q[k]
            q = 0
            for k in range(hi, 0, -1):
                q = col.get(k, 0) + root * q
                if q:
                    out[rest[:i] + (k - 1,) + rest[i + 1:]] = q
            remainder = col.get(0, 0) + root * q
            if remainder:
                raise DivisionNotExact(f"remainder {remainder} dividing by ({var} - {root})")
        return IntPoly(out, self.vars)

    def evaluate(self, **values):
        total = 0
        for e, c in self.terms.items():
            term = c
            for v, k in zip(self.vars, e):
                x = values[v]
                term *= x ** k if k >= 0 else Fraction(1, x) ** (-k)
            total += term
        if isinstance(total, Fraction) and total.denominator == 1:
            return int(total)
        return total

    def __call__(self, x):
        if len(self.vars) != 1:
            raise TypeError("call syntax only for univariate polynomials")
        return self.evaluate(**{self.vars[0]: x})

    def coeffs(self) -> list:
        """Ascending coefficient list of a univariate, nonnegative-degree polynomial."""
        if len(self.vars) != 1:
            raise TypeError("univariate only")
        d = self.degree()
        out = [0] * (d + 1)
        for (k,), c in self.terms.items():
            out[k] = c
        return out

    # -- printing -----------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            c = self.terms[e]
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"IntPoly({self}, vars={self.vars})"


def series_inverse(p: IntPoly, var: str, n: int) -> IntPoly:
    """Inverse of a power series in ``var`` with constant term 1, through degree ``n``."""
    p0 = p.coeff(var, 0)
    if p0 != 1:
        raise DivisionNotExact("series inverse needs constant term 1")
    parts = [p.coeff(var, k) for k in range(n + 1)]
    inv = [IntPoly.const(1, p.vars)]
    for m in range(1, n + 1):
        acc = IntPoly({}, p.vars)
        for k in range(1, m + 1):
            if not parts[k].is_zero():
                acc = acc + parts[k] * inv[m - k]
        inv.append(-acc)
    i = p._idx(var)
    out: dict[Exps, int] = {}
    for m, q in enumerate(inv):
        for e, c in q.terms.items():
            out[e[:i] + (m,) + e[i + 1:]] = c
    return IntPoly(out, p.vars)


def mul_trunc(a: IntPoly, b: IntPoly, var: str, n: int) -> IntPoly:
    """Product truncated to degree ``n`` in ``var``."""
    i = a._idx(var)
    out: dict[Exps, int] = {}
    for e1, c1 in a.terms.items():
        if e1[i] > n:
            continue
        for e2, c2 in b.terms.items():
            if e1[i] + e2[i] > n:
                continue
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return IntPoly(out, a.vars)
