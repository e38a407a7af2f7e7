"""Exact arithmetic and exact linear algebra.

Everything here works over ``fractions.Fraction`` (and Python ints where
possible).  Matrices are plain lists of rows; nothing in this module uses
floating point.

Contents
--------
* :class:`Laurent` -- sparse Laurent polynomials in one variable.  The same
  class represents polynomials in ``x``, in ``u = 2x`` and Laurent
  polynomials in ``s = t^(1/2)``; only the printed variable name differs.
* :class:`GaussRational` -- complex numbers with rational parts.
* :class:`CirclePoint` / :func:`circle_param` -- rational points on the unit
  circle.
* signatures (:func:`sym_signature`, :func:`herm_signature`), fraction-free
  determinant and rank over Laurent rings, Laurent square roots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from .errors import InternalParity, NotASquare, NotHermitian, NotSymmetric

__all__ = [
    "Laurent",
    "GaussRational",
    "CirclePoint",
    "circle_param",
    "sym_signature",
    "herm_signature",
    "realify",
    "det_laurent",
    "rank_laurent",
    "poly_sqrt",
    "substitute_u",
    "format_t",
    "matmul",
    "transpose",
    "conj_transpose",
]


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class Laurent:
    """Laurent polynomial with rational coefficients.

    ``Laurent({2: 1, 0: -1, -2: 1})`` is ``s^2 - 1 + s^-2``.  Instances are
    immutable and hashable.  Coefficients are kept as ``int`` when integral.
    """

    __slots__ = ("_c", "var")

    def __init__(self, coeffs: Mapping[int, Rational] | None = None, var: str = "s"):
        c = {}
        for e, v in (coeffs or {}).items():
            if v:
                c[int(e)] = _normalize(v)
        self._c = c
        self.var = var

    @classmethod
    def const(cls, value, var="s"):
        return cls({0: value}, var)

    @classmethod
    def monomial(cls, exp, coeff=1, var="s"):
        return cls({exp: coeff}, var)

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def __getitem__(self, exp):
        return self._c.get(exp, 0)

    def is_zero(self):
        return not self._c

    def __bool__(self):
        return bool(self._c)

    @property
    def max_exp(self):
        return max(self._c) if self._c else None

    @property
    def min_exp(self):
        return min(self._c) if self._c else None

    def is_integral(self):
        return all(isinstance(v, int) for v in self._c.values())

    def _coerce(self, other):
        if isinstance(other, Laurent):
            return other
        if isinstance(other, (int, Fraction)):
            return Laurent.const(other, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return Laurent(c, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Laurent({e: -v for e, v in self._c.items()}, self.var)

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
        c: dict = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return Laurent(c, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, v), = self._c.items()
            return Laurent({-e * -n: Fraction(1, 1) / v ** -n}, self.var)
        result = Laurent.const(1, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Laurent.const(other)
        if not isinstance(other, Laurent):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def bar(self):
        """The involution ``s -> s^-1``."""
        return Laurent({-e: v for e, v in self._c.items()}, self.var)

    def shift(self, k):
        """Multiply by ``var^k``."""
        return Laurent({e + k: v for e, v in self._c.items()}, self.var)

    def scale(self, c):
        return Laurent({e: v * c for e, v in self._c.items()}, self.var)

    def rename(self, var):
        return Laurent(self._c, var)

    def __call__(self, value):
        """Evaluate at a rational or a :class:`GaussRational`."""
        if isinstance(value, int):
            value = Fraction(value)
        total = 0
        for e, v in self._c.items():
            total = total + v * value ** e
        return _normalize(total) if isinstance(total, (int, Fraction)) else total

    def exact_div(self, other: "Laurent") -> "Laurent":
        """Quotient of an exact division; raises ``ArithmeticError`` otherwise."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return Laurent({}, self.var)
        top, lead = other.max_exp, other[other.max_exp]
        span = other.max_exp - other.min_exp
        q: dict = {}
        r = self
        while r:
            if r.max_exp - r.min_exp < span:
                raise ArithmeticError("inexact Laurent division")
            e = r.max_exp - top
            c = Fraction(r[r.max_exp]) / lead
            q[e] = c
            r = r - other.shift(e).scale(c)
        return Laurent(q, self.var)

    def __repr__(self):
        return f"Laurent({self.items()!r}, var={self.var!r})"

    def __str__(self):
        return format_poly(self, self.var)


def _fmt_coeff_term(c, mono):
    """Render one signed term; returns (sign, body)."""
    sign = "-" if c < 0 else "+"
    a = abs(c)
    if not mono:
        return sign, str(a)
    if a == 1:
        return sign, mono
    return sign, f"{a}{mono}"


def format_poly(p: Laurent, var: str, spaced: bool = False) -> str:
    """Descending-power rendering, e.g. ``4x^2-2`` or ``s^2 - 1 + s^-2``."""
    if p.is_zero():
        return "0"
    parts = []
    for e, c in sorted(p.items(), reverse=True):
        mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
        parts.append(_fmt_coeff_term(c, mono))
    return _join_terms(parts, spaced)


def _join_terms(parts, spaced):
    out = ""
    for i, (sign, body) in enumerate(parts):
        if i == 0:
            out = ("-" if sign == "-" else "") + body
        elif spaced:
            out += f" {sign} {body}"
        else:
            out += f"{sign}{body}"
    return out


def format_t(p: Laurent, spaced: bool = True) -> str:
    """Render a polynomial in ``s = t^(1/2)`` using powers of ``t``.

    ``s^2 - 1 + s^-2`` becomes ``t - 1 + t^-1``; odd powers print as halves,
    ``s - s^-1`` becomes ``t^1/2 - t^-1/2``.
    """
    if p.is_zero():
        return "0"
    parts = []
    for e, c in sorted(p.items(), reverse=True):
        if e == 0:
            mono = ""
        elif e == 2:
            mono = "t"
        elif e % 2 == 0:
            mono = f"t^{e // 2}"
        else:
            mono = f"t^{e}/2"
        parts.append(_fmt_coeff_term(c, mono))
    return _join_terms(parts, spaced)


@dataclass(frozen=True)
class GaussRational:
    """Exact complex number ``re + i*im`` with rational parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @staticmethod
    def of(z) -> "GaussRational":
        if isinstance(z, GaussRational):
            return z
        if isinstance(z, (int, Fraction)):
            return GaussRational(Fraction(z), Fraction(0))
        raise TypeError(f"cannot convert {z!r} to GaussRational")

    def conj(self):
        return GaussRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __add__(self, other):
        try:
            o = GaussRational.of(other)
        except TypeError:
            return NotImplemented
        return GaussRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __sub__(self, other):
        try:
            o = GaussRational.of(other)
        except TypeError:
            return NotImplemented
        return GaussRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussRational.of(other) - self

    def __mul__(self, other):
        try:
            o = GaussRational.of(other)
        except TypeError:
            return NotImplemented
        return GaussRational(self.re * o.re - self.im * o.im,
                             self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = GaussRational.of(other)
        n = o.norm2()
        if n == 0:
            raise ZeroDivisionError("GaussRational division by zero")
        p = self * o.conj()
        return GaussRational(p.re / n, p.im / n)

    def __rtruediv__(self, other):
        return GaussRational.of(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return GaussRational(1) / self ** (-n)
        result, base = GaussRational(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        try:
            o = GaussRational.of(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def to_json(self):
        return [str(self.re), str(self.im)]


I = GaussRational(0, 1)


@dataclass(frozen=True)
class CirclePoint:
    """Exact point on the unit circle from a rational parameter ``v``.

    ``sqrt_omega = ((1 - v^2) + 2iv) / (1 + v^2)`` and ``omega = sqrt_omega^2``;
    ``x`` is the real part of ``sqrt_omega``.
    """

    v: Fraction
    sqrt_omega: GaussRational
    omega: GaussRational
    x: Fraction

    @property
    def theta(self) -> float:
        """Argument of ``omega`` in ``[0, 2*pi)``; display only."""
        return math.atan2(float(self.omega.im), float(self.omega.re)) % (2 * math.pi)


def circle_param(v) -> CirclePoint:
    v = Fraction(v)
    d = 1 + v * v
    sw = GaussRational((1 - v * v) / d, 2 * v / d)
    return CirclePoint(v=v, sqrt_omega=sw, omega=sw * sw, x=sw.re)


# ---------------------------------------------------------------- matrices


def transpose(m):
    return [list(r) for r in zip(*m)] if m else []


def conj_transpose(m):
    return [[z.conj() for z in r] for r in transpose(m)]


def matmul(a, b):
    if not a:
        return []
    bt = transpose(b)
    if not bt:
        return [[] for _ in a]
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = 0
            for p, q in zip(row, col):
                if p and q:
                    acc = acc + p * q
            out_row.append(acc)
        out.append(out_row)
    return out


def _sign(q) -> int:
    return (q > 0) - (q < 0)


def sym_signature(m: Sequence[Sequence]) -> int:
    """Signature of a symmetric rational matrix by congruence diagonalization.

    Pivots on a nonzero diagonal entry when one exists; otherwise splits off a
    2x2 block ``[[0, b], [b, 0]]`` (signature 0) around a nonzero off-diagonal
    entry.  Zero rows are dropped.
    """
    n = len(m)
    a = [[Fraction(v) for v in row] for row in m]
    for i in range(n):
        if len(a[i]) != n:
            raise NotSymmetric("matrix is not square")
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise NotSymmetric(f"entry ({i},{j}) differs from ({j},{i})")
    active = list(range(n))
    sig = 0
    while active:
        piv = next((i for i in active if a[i][i] != 0), None)
        if piv is not None:
            p = a[piv][piv]
            sig += _sign(p)
            active.remove(piv)
            col = [a[r][piv] for r in range(n)]
            for r in active:
                if col[r]:
                    f = col[r] / p
                    row_r, row_p = a[r], a[piv]
                    for c in active:
                        if row_p[c]:
                            row_r[c] -= f * row_p[c]
            continue
        pair = next(((i, j) for i in active for j in active if i < j and a[i][j] != 0), None)
        if pair is None:
            break
        i, j = pair
        b = a[i][j]
        active.remove(i)
        active.remove(j)
        ci = [a[r][i] for r in range(n)]
        cj = [a[r][j] for r in range(n)]
        for r in active:
            if not (ci[r] or cj[r]):
                continue
            for c in active:
                a[r][c] -= (ci[r] * cj[c] + cj[r] * ci[c]) / b
    return sig


def realify(h: Sequence[Sequence]) -> list[list[Fraction]]:
    """Replace each entry ``p + qi`` by the real block ``[[p, -q], [q, p]]``."""
    n = len(h)
    out = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            z = GaussRational.of(h[i][j])
            out[2 * i][2 * j] = z.re
            out[2 * i][2 * j + 1] = -z.im
            out[2 * i + 1][2 * j] = z.im
            out[2 * i + 1][2 * j + 1] = z.re
    return out


def herm_signature(h: Sequence[Sequence]) -> int:
    n = len(h)
    for i in range(n):
        if len(h[i]) != n:
            raise NotHermitian("matrix is not square")
        for j in range(i + 1):
            if GaussRational.of(h[i][j]) != GaussRational.of(h[j][i]).conj():
                raise NotHermitian(f"entry ({i},{j}) is not the conjugate of ({j},{i})")
    doubled = sym_signature(realify(h))
    if doubled % 2:
        raise InternalParity(f"realified signature {doubled} is odd")
    return doubled // 2


def _as_laurent(v, var="s"):
    return v if isinstance(v, Laurent) else Laurent.const(v, var)


def det_laurent(m: Sequence[Sequence[Laurent]]) -> Laurent:
    """Determinant over the Laurent ring by Bareiss fraction-free elimination.

    Every division performed is exact in ``Q[s, s^-1]``.  The empty matrix has
    determinant 1.
    """
    n = len(m)
    var = next((e.var for row in m for e in row if isinstance(e, Laurent)), "s")
    if n == 0:
        return Laurent.const(1, var)
    a = [[_as_laurent(v, var) for v in row] for row in m]
    sign = 1
    prev = Laurent.const(1, var)
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not a[r][k].is_zero()), None)
            if swap is None:
                return Laurent({}, var)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                num = akk * a[i][j] - aik * a[k][j]
                a[i][j] = num.exact_div(prev)
            a[i][k] = Laurent({}, var)
        prev = akk
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def rank_laurent(m: Sequence[Sequence]) -> int:
    """Rank over the fraction field, by fraction-free elimination with pivoting."""
    rows = len(m)
    if rows == 0:
        return 0
    cols = len(m[0])
    a = [[_as_laurent(v) for v in row] for row in m]
    prev = Laurent.const(1)
    rank = 0
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if not a[r][c].is_zero()), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][c]
        for i in range(rank + 1, rows):
            aic = a[i][c]
            for j in range(c + 1, cols):
                a[i][j] = (p * a[i][j] - aic * a[rank][j]).exact_div(prev)
            a[i][c] = Laurent({})
        prev = p
        rank += 1
        if rank == rows:
            break
    return rank


def _isqrt_rational(q) -> Fraction | None:
    q = Fraction(q)
    if q < 0:
        return None
    n, d = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None


def poly_sqrt(p: Laurent, allow_negation: bool = False) -> Laurent:
    """Exact Laurent square root, determined up to a global sign.

    The root is built from the top coefficient downwards.  With
    ``allow_negation`` a root of ``-p`` is returned when ``p`` itself has
    none; callers distinguish the two cases by squaring.  Raises
    :class:`NotASquare` when no exact root exists.
    """
    try:
        return _poly_sqrt(p)
    except NotASquare:
        if allow_negation:
            return _poly_sqrt(-p)
        raise


def _poly_sqrt(p: Laurent) -> Laurent:
    var = p.var
    if p.is_zero():
        return Laurent({}, var)
    hi, lo = p.max_exp, p.min_exp
    if hi % 2 or lo % 2:
        raise NotASquare(f"extreme exponents ({lo}, {hi}) are not both even")
    lead = _isqrt_rational(p[hi])
    if lead is None:
        raise NotASquare(f"leading coefficient {p[hi]} is not a rational square")
    top = hi // 2
    q = {top: lead}
    # (sum q_k s^k)^2 matched coefficient by coefficient from s^hi downwards
    for k in range(top - 1, lo // 2 - 1, -1):
        target = p[top + k]
        acc = 0
        for j in range(k + 1, top):
            if j in q and (top + k - j) in q and (top + k - j) > j:
                acc += 2 * q[j] * q[top + k - j]
        mid = top + k
        if mid % 2 == 0 and (mid // 2) in q and mid // 2 > k:
            acc += q[mid // 2] ** 2
        q[k] = Fraction(target - acc) / (2 * lead)
    root = Laurent(q, var)
    if root * root != p:
        raise NotASquare("coefficient recursion does not close")
    return root


def substitute_u(p: Laurent, var: str = "s") -> Laurent:
    """Evaluate a polynomial in ``u`` at ``u = s + s^-1``."""
    u = Laurent({1: 1, -1: 1}, var)
    result = Laurent({}, var)
    power = Laurent.const(1, var)
    top = p.max_exp if p else -1
    if p and p.min_exp < 0:
        raise ValueError("substitute_u expects an ordinary polynomial in u")
    for e in range(top + 1):
        if p[e]:
            result = result + power.scale(p[e])
        power = power * u
    return result


def identity(n, one=1, zero=0):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def is_symmetric(m) -> bool:
    return all(m[i][j] == m[j][i] for i in range(len(m)) for j in range(i))


def mat_equal(a, b) -> bool:
    if len(a) != len(b):
        return False
    return all(len(r) == len(s) and all(x == y for x, y in zip(r, s)) for r, s in zip(a, b))


def submatrix(m, keep: Iterable[int]):
    keep = list(keep)
    return [[m[i][j] for j in keep] for i in keep]
