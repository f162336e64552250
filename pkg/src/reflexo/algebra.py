"""Exact rational polynomial algebra.

Everything here is exact: coefficients are `fractions.Fraction` throughout and
no operation ever rounds.  Two polynomial representations are provided:

* ``UniPoly`` -- dense univariate polynomials (ascending coefficients) with a
  variable tag, used for resultants in lambda, Picard-Fuchs coefficient
  polynomials p_k(t), squarefree decomposition and rational roots.

* ``MPoly`` -- sparse polynomials in the fixed variables (x, y, l) used by the
  elimination pipeline.  lambda ("l") is conceptually a coefficient-ring
  variable; the representation is shared for convenience.

Resultants are computed by the fraction-free subresultant PRS (pseudo-division
with Brown's g/h division factors), with the exact Sylvester value recovered by
tracking the leading-coefficient corrections of each pseudo-division step.  The
test-suite cross-checks against an independent Bareiss determinant of the
Sylvester matrix.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterable, Sequence

NEG_INF = float("-inf")  # degree of the zero polynomial


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


# ---------------------------------------------------------------------------
# dense univariate polynomials
# ---------------------------------------------------------------------------


class UniPoly:
    """Dense univariate polynomial over Q, coefficients ascending by degree."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "t"):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = cs
        self.var = var

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, c, var: str = "t") -> "UniPoly":
        return cls([c], var)

    @classmethod
    def monomial(cls, deg: int, c=1, var: str = "t") -> "UniPoly":
        return cls([0] * deg + [c], var)

    @classmethod
    def from_roots(cls, roots: Sequence, var: str = "t") -> "UniPoly":
        p = cls([1], var)
        for r in roots:
            p = p * cls([-_frac(r), 1], var)
        return p

    # -- basics -------------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_const(self) -> bool:
        return len(self.coeffs) <= 1

    def lc(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == ([] if other == 0 else [_frac(other)])
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> "UniPoly":
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[i] + other[i] for i in range(n)], self.var)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other) -> "UniPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> "UniPoly":
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly([], self.var)
        res = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                res[i + j] += a * b
        return UniPoly(res, self.var)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative power")
        result = UniPoly([1], self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        return UniPoly([other], self.var)

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        """Euclidean division over Q."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dn = other.degree
        lcd = other.lc()
        q = [Fraction(0)] * max(len(rem) - dn, 0)
        for i in range(len(rem) - 1, dn - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            f = c / lcd
            q[i - dn] = f
            for j, b in enumerate(other.coeffs):
                rem[i - dn + j] -= f * b
        return UniPoly(q, self.var), UniPoly(rem, self.var)

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("division not exact")
        return q

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:], self.var)

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        lcd = self.lc()
        return UniPoly([c / lcd for c in self.coeffs], self.var)

    def primitive_integer(self) -> "UniPoly":
        """Scale to integer coefficients with content 1 and positive trailing
        (lowest-degree nonzero) coefficient."""
        if self.is_zero():
            return self
        from math import lcm

        denom = 1
        for c in self.coeffs:
            denom = lcm(denom, c.denominator)
        ints = [int(c * denom) for c in self.coeffs]
        g = 0
        for c in ints:
            g = int_gcd(g, abs(c))
        ints = [c // g for c in ints]
        low = next(c for c in ints if c != 0)
        if low < 0:
            ints = [-c for c in ints]
        return UniPoly(ints, self.var)

    def compose_scale(self, a) -> "UniPoly":
        """p(a*x) for a rational scalar a."""
        a = _frac(a)
        return UniPoly([c * a**i for i, c in enumerate(self.coeffs)], self.var)

    def __repr__(self):
        return f"UniPoly({format_unipoly(self)!r})"


def format_unipoly(p: UniPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        if i == 0:
            mon = ""
        elif i == 1:
            mon = p.var
        else:
            mon = f"{p.var}^{i}"
        if mon and abs(c) == 1:
            cs = "-" if c < 0 else ""
        else:
            cs = str(c)
            if mon:
                cs += "*"
        parts.append(cs + mon)
    out = parts[0]
    for part in parts[1:]:
        out += " - " + part[1:] if part.startswith("-") else " + " + part
    return out


def gcd_poly(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd over Q."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) undefined")
    a, b = p, q
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


def squarefree_decomposition(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: p = lc * prod f_i^i with the f_i monic squarefree and
    pairwise coprime.  Returns [(f_i, i)] for nonconstant f_i."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    p = p.monic()
    if p.is_const():
        return []
    dp = p.derivative()
    a = gcd_poly(p, dp)
    b = p.exact_div(a)
    c = dp.exact_div(a)
    d = c - b.derivative()
    out = []
    i = 1
    while True:
        if b.is_const():
            break
        f = gcd_poly(b, d)
        if not f.is_const():
            out.append((f, i))
        b2 = b.exact_div(f)
        c2 = d.exact_div(f)
        d = c2 - b2.derivative()
        b = b2
        i += 1
    return out


def rational_roots(p: UniPoly) -> list[Fraction]:
    """All rational roots of p (each listed once), via the rational-root
    theorem on the primitive integer model."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    # strip powers of the variable
    coeffs = list(p.coeffs)
    roots = []
    k = 0
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        k += 1
    if k:
        roots.append(Fraction(0))
    q = UniPoly(coeffs, p.var).primitive_integer()
    if q.is_const():
        return roots
    a0 = abs(int(q.coeffs[0]))
    an = abs(int(q.coeffs[-1]))
    for num in _divisors(a0):
        for den in _divisors(an):
            if int_gcd(num, den) != 1:
                continue
            for sign in (1, -1):
                r = Fraction(sign * num, den)
                if q(r) == 0:
                    roots.append(r)
    return sorted(set(roots))


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def squarefree_rational_roots(
    p: UniPoly,
) -> tuple[list[tuple[Fraction, int]], list[tuple[UniPoly, int]]]:
    """Complete squarefree decomposition with rational roots extracted.

    Returns (roots, residual): roots is a list of (rational root, exact
    multiplicity); residual is a list of (factor, multiplicity) where every
    factor is monic, squarefree and rational-root-free (not necessarily
    irreducible -- "rational-root-free" semantics only).
    """
    roots: list[tuple[Fraction, int]] = []
    residual: list[tuple[UniPoly, int]] = []
    for f, mult in squarefree_decomposition(p):
        rs = rational_roots(f)
        for r in rs:
            roots.append((r, mult))
            f = f.exact_div(UniPoly([-r, 1], f.var))
        if not f.is_const():
            residual.append((f.monic(), mult))
    roots.sort()
    return roots, residual


# ---------------------------------------------------------------------------
# sparse polynomials in (x, y, l)
# ---------------------------------------------------------------------------

VARS = ("x", "y", "l")
_VAR_INDEX = {"x": 0, "y": 1, "l": 2}


class MPoly:
    """Sparse polynomial in x, y, l over Q.

    Keys are exponent triples (a, b, c) with nonnegative entries; values are
    nonzero Fractions.  Immutable by convention.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        cleaned = {}
        if terms:
            for k, v in terms.items():
                v = _frac(v)
                if v != 0:
                    cleaned[tuple(k)] = v
        self.terms = cleaned

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, c) -> "MPoly":
        return cls({(0, 0, 0): c})

    @classmethod
    def var(cls, name: str) -> "MPoly":
        e = [0, 0, 0]
        e[_VAR_INDEX[name]] = 1
        return cls({tuple(e): 1})

    @classmethod
    def from_unipoly(cls, p: UniPoly, name: str) -> "MPoly":
        i = _VAR_INDEX[name]
        terms = {}
        for d, c in enumerate(p.coeffs):
            if c != 0:
                e = [0, 0, 0]
                e[i] = d
                terms[tuple(e)] = c
        return cls(terms)

    # -- basics -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0, 0, 0) in self.terms)

    def const_value(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if not self.is_const():
            raise ValueError("not a constant")
        return self.terms[(0, 0, 0)]

    def degree(self, name: str):
        if not self.terms:
            return NEG_INF
        i = _VAR_INDEX[name]
        return max(k[i] for k in self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({} if other == 0 else {(0, 0, 0): _frac(other)})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> "MPoly":
        other = self._coerce(other)
        terms = dict(self.terms)
        for k, v in other.terms.items():
            s = terms.get(k, Fraction(0)) + v
            if s == 0:
                terms.pop(k, None)
            else:
                terms[k] = s
        out = MPoly.__new__(MPoly)
        out.terms = terms
        return out

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self) -> "MPoly":
        out = MPoly.__new__(MPoly)
        out.terms = {k: -v for k, v in self.terms.items()}
        return out

    def __sub__(self, other) -> "MPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> "MPoly":
        other = self._coerce(other)
        terms: dict = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = (k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2])
                s = terms.get(k, Fraction(0)) + v1 * v2
                if s == 0:
                    terms.pop(k, None)
                else:
                    terms[k] = s
        out = MPoly.__new__(MPoly)
        out.terms = terms
        return out

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise ValueError("negative power")
        result = MPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            return other
        return MPoly.const(other)

    # -- structure ----------------------------------------------------------

    def coeffs_in(self, name: str) -> list["MPoly"]:
        """Dense coefficient list (ascending) of self viewed as univariate in
        `name` with MPoly coefficients (in the remaining variables)."""
        i = _VAR_INDEX[name]
        deg = self.degree(name)
        if deg is NEG_INF:
            return []
        buckets: list[dict] = [dict() for _ in range(int(deg) + 1)]
        for k, v in self.terms.items():
            kk = list(k)
            d = kk[i]
            kk[i] = 0
            buckets[d][tuple(kk)] = v
        out = []
        for b in buckets:
            m = MPoly.__new__(MPoly)
            m.terms = b
            out.append(m)
        return out

    @classmethod
    def from_coeffs(cls, coeffs: Sequence["MPoly"], name: str) -> "MPoly":
        i = _VAR_INDEX[name]
        terms: dict = {}
        for d, c in enumerate(coeffs):
            for k, v in c.terms.items():
                kk = list(k)
                kk[i] += d
                terms[tuple(kk)] = terms.get(tuple(kk), Fraction(0)) + v
        return cls(terms)

    def eval_var(self, name: str, value) -> "MPoly":
        """Substitute a rational value for one variable."""
        i = _VAR_INDEX[name]
        value = _frac(value)
        terms: dict = {}
        for k, v in self.terms.items():
            kk = list(k)
            d = kk[i]
            kk[i] = 0
            c = v * value**d
            kk = tuple(kk)
            s = terms.get(kk, Fraction(0)) + c
            if s == 0:
                terms.pop(kk, None)
            else:
                terms[kk] = s
        out = MPoly.__new__(MPoly)
        out.terms = terms
        return out

    def derivative(self, name: str) -> "MPoly":
        i = _VAR_INDEX[name]
        terms: dict = {}
        for k, v in self.terms.items():
            if k[i] == 0:
                continue
            kk = list(k)
            c = v * kk[i]
            kk[i] -= 1
            terms[tuple(kk)] = c
        out = MPoly.__new__(MPoly)
        out.terms = terms
        return out

    def strip_monomial(self) -> "MPoly":
        """Divide out the largest common monomial factor."""
        if not self.terms:
            return self
        mins = [min(k[i] for k in self.terms) for i in range(3)]
        if mins == [0, 0, 0]:
            return self
        out = MPoly.__new__(MPoly)
        out.terms = {
            (k[0] - mins[0], k[1] - mins[1], k[2] - mins[2]): v
            for k, v in self.terms.items()
        }
        return out

    def to_unipoly(self, name: str) -> UniPoly:
        """Convert to UniPoly; self must involve only `name`."""
        i = _VAR_INDEX[name]
        deg = self.degree(name)
        n = 0 if deg is NEG_INF else int(deg) + 1
        coeffs = [Fraction(0)] * n
        for k, v in self.terms.items():
            if any(k[j] != 0 for j in range(3) if j != i):
                raise ValueError(f"polynomial involves more than {name}")
            coeffs[k[i]] = v
        return UniPoly(coeffs, "l" if name == "l" else name)

    def leading_term(self) -> tuple[tuple, Fraction]:
        k = max(self.terms)
        return k, self.terms[k]

    def exact_div(self, other: "MPoly") -> "MPoly":
        """Exact multivariate division; raises if the division is not exact."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if other.is_const():
            c = other.const_value()
            out = MPoly.__new__(MPoly)
            out.terms = {k: v / c for k, v in self.terms.items()}
            return out
        rem = dict(self.terms)
        dk, dc = other.leading_term()
        q: dict = {}
        while rem:
            k = max(rem)
            v = rem[k]
            t = (k[0] - dk[0], k[1] - dk[1], k[2] - dk[2])
            if min(t) < 0:
                raise ArithmeticError("division not exact")
            c = v / dc
            q[t] = q.get(t, Fraction(0)) + c
            for k2, v2 in other.terms.items():
                kk = (t[0] + k2[0], t[1] + k2[1], t[2] + k2[2])
                s = rem.get(kk, Fraction(0)) - c * v2
                if s == 0:
                    rem.pop(kk, None)
                else:
                    rem[kk] = s
        out = MPoly.__new__(MPoly)
        out.terms = q
        return out

    def divides(self, other: "MPoly") -> bool:
        try:
            other.exact_div(self)
            return True
        except ArithmeticError:
            return False

    def __repr__(self):
        return f"MPoly({format_mpoly(self)!r})"


def format_mpoly(p: MPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k in sorted(p.terms, reverse=True):
        v = p.terms[k]
        mon = "".join(
            (f"{n}" if e == 1 else f"{n}^{e}") for n, e in zip(VARS, k) if e
        )
        if mon and abs(v) == 1:
            cs = "-" if v < 0 else ""
        else:
            cs = str(v) + ("*" if mon else "")
        parts.append(cs + mon)
    out = parts[0]
    for part in parts[1:]:
        out += " - " + part[1:] if part.startswith("-") else " + " + part
    return out


# ---------------------------------------------------------------------------
# resultants (fraction-free subresultant PRS)
# ---------------------------------------------------------------------------


def _poly_deg(coeffs: list[MPoly]) -> int:
    """Degree of a dense MPoly-coefficient list; -1 for zero."""
    n = len(coeffs) - 1
    while n >= 0 and coeffs[n].is_zero():
        n -= 1
    return n


def _trim(coeffs: list[MPoly]) -> list[MPoly]:
    n = _poly_deg(coeffs)
    return coeffs[: n + 1]


def _pmul(a: list[MPoly], b: list[MPoly]) -> list[MPoly]:
    if not a or not b:
        return []
    res = [MPoly() for _ in range(len(a) + len(b) - 1)]
    for i, ai in enumerate(a):
        if ai.is_zero():
            continue
        for j, bj in enumerate(b):
            if bj.is_zero():
                continue
            res[i + j] = res[i + j] + ai * bj
    return _trim(res)


def _psub(a: list[MPoly], b: list[MPoly]) -> list[MPoly]:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        ai = a[i] if i < len(a) else MPoly()
        bi = b[i] if i < len(b) else MPoly()
        out.append(ai - bi)
    return _trim(out)


def _pscale(a: list[MPoly], c: MPoly) -> list[MPoly]:
    return _trim([ai * c for ai in a])

def _pdiv_exact(a: list[MPoly], c: MPoly) -> list[MPoly]:
    return [ai.exact_div(c) if not ai.is_zero() else ai for ai in a]


def _prem(a: list[MPoly], b: list[MPoly]) -> list[MPoly]:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, exactly."""
    a = _trim(list(a))
    b = _trim(list(b))
    da, db = _poly_deg(a), _poly_deg(b)
    if db < 0:
        raise ZeroDivisionError("pseudo-division by zero")
    if da < db:
        return a
    lc_b = b[db]
    rem = a
    steps = 0
    while True:
        dr = _poly_deg(rem)
        if dr < db:
            break
        coef = rem[dr]
        rem = [c * lc_b for c in rem]
        for j in range(db + 1):
            rem[dr - db + j] = rem[dr - db + j] - coef * b[j]
        rem = _trim(rem)
        steps += 1
    extra = da - db + 1 - steps
    if extra > 0 and rem:
        f = lc_b**extra
        rem = [c * f for c in rem]
    return _trim(rem)


def resultant_coeff_lists(A: list[MPoly], B: list[MPoly]) -> MPoly:
    """Exact resultant of two dense MPoly-coefficient polynomials in one main
    variable, via the subresultant PRS.

    The Sylvester-determinant value (with sign) is recovered by accumulating
    the leading-coefficient correction factors of each pseudo-division step;
    the final quotient is exact by theory and checked at runtime.
    """
    A, B = _trim(list(A)), _trim(list(B))
    m, n = _poly_deg(A), _poly_deg(B)
    if m < 0 or n < 0:
        return MPoly()
    sign = 1
    if m < n:
        A, B, m, n = B, A, n, m
        if (m * n) % 2 == 1:
            sign = -sign
    # accumulated correction: Res(A0,B0) = sign * prod(num) / prod(den) * Res(A,B)
    num: list[tuple[MPoly, int]] = []
    den: list[tuple[MPoly, int]] = []
    g = MPoly.const(1)
    h = MPoly.const(1)
    first = True
    while True:
        m, n = _poly_deg(A), _poly_deg(B)
        if n == 0:
            # Res(A, const) = const^deg(A)
            num.append((B[0], m))
            break
        R = _prem(A, B)
        delta = m - n
        dR = _poly_deg(R)
        if dR < 0:
            return MPoly()  # common factor: resultant vanishes
        # Res(A,B) = (-1)^(mn) lc(B)^(m - dR - (delta+1)n) Res(B, R)
        if (m * n) % 2 == 1:
            sign = -sign
        e = m - dR - (delta + 1) * n
        if e >= 0:
            num.append((B[n], e))
        else:
            den.append((B[n], -e))
        # subresultant division to keep coefficients small:
        # next dividend pair is (B, R / (g*h^delta))
        if first:
            divisor = MPoly.const(1)
            first = False
        else:
            divisor = g * h**delta
        if not divisor.is_const() or divisor.const_value() != 1:
            R = _pdiv_exact(R, divisor)
            # Res(B, R/c) = Res(B, R) / c^deg(B) -> deg(B) of *next* step
            num.append((divisor, n))
        g = B[n]
        if delta > 0:
            # h = g^delta / h^(delta-1)
            h_new = g**delta
            if delta > 1:
                h_new = h_new.exact_div(h ** (delta - 1))
            h = h_new
        A, B = B, R
    result_num = MPoly.const(1 if sign > 0 else -1)
    for p, e in num:
        if e:
            result_num = result_num * p**e
    result_den = MPoly.const(1)
    for p, e in den:
        if e:
            result_den = result_den * p**e
    return result_num.exact_div(result_den)


def resultant_mpoly(p: MPoly, q: MPoly, name: str) -> MPoly:
    """Res_name(p, q) for sparse polynomials; exact Sylvester value."""
    a = p.coeffs_in(name)
    b = q.coeffs_in(name)
    if _poly_deg(a) <= 0 and _poly_deg(b) <= 0:
        raise ValueError("nothing to eliminate")
    return resultant_coeff_lists(a, b)


def resultant(p, q, var: str):
    """Resultant front end: accepts UniPoly (same var) or MPoly inputs.

    For UniPoly inputs the result is a Fraction; for MPoly inputs an MPoly in
    the remaining variables.
    """
    if isinstance(p, UniPoly) and isinstance(q, UniPoly):
        if p.is_const() and q.is_const():
            raise ValueError("nothing to eliminate")
        name = "l" if var in ("l", "lambda") else "x"
        r = resultant_mpoly(
            MPoly.from_unipoly(p, name), MPoly.from_unipoly(q, name), name
        )
        return r.const_value()
    return resultant_mpoly(p, q, var)


def sylvester_matrix(a: list, b: list):
    """Sylvester matrix (rows of shifted coefficient lists, descending) for
    coefficient lists given ascending.  Entries as given (Fractions/MPoly)."""
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    rows = []
    ad = list(reversed(a))
    bd = list(reversed(b))
    for i in range(n):
        rows.append([_zero_like(a[0])] * i + ad + [_zero_like(a[0])] * (n - 1 - i))
    for i in range(m):
        rows.append([_zero_like(a[0])] * i + bd + [_zero_like(a[0])] * (m - 1 - i))
    return rows


def _zero_like(x):
    return MPoly() if isinstance(x, MPoly) else Fraction(0)


def bareiss_determinant(rows: list[list[Fraction]]) -> Fraction:
    """Fraction-free Bareiss determinant over Q (used as a resultant oracle)."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    m = [list(r) for r in rows]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
            m[i][k] = Fraction(0)
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


# ---------------------------------------------------------------------------
# bivariate gcd (lambda-free), quotient-ring arithmetic
# ---------------------------------------------------------------------------


def _content_y(coeffs: list[MPoly]) -> UniPoly:
    """gcd in Q[y] of the coefficients (each must involve only y)."""
    g: UniPoly | None = None
    for c in coeffs:
        if c.is_zero():
            continue
        u = c.to_unipoly("y")
        g = u.monic() if g is None else gcd_poly(g, u)
        if g.is_const():
            return UniPoly([1], "y")
    return g if g is not None else UniPoly([], "y")


def gcd_bivariate(p: MPoly, q: MPoly) -> MPoly:
    """gcd of two polynomials in Q[x, y] (no lambda), monic-normalized in the
    sense of primitive with monic leading y-content.

    Primitive-PRS in the main variable x with contents in Q[y].
    """
    for r in (p, q):
        if r.degree("l") not in (NEG_INF, 0):
            raise ValueError("gcd_bivariate expects lambda-free input")
    if p.is_zero():
        return _normalize_biv(q)
    if q.is_zero():
        return _normalize_biv(p)
    a = p.coeffs_in("x")
    b = q.coeffs_in("x")
    if _poly_deg(a) == 0 and _poly_deg(b) == 0:
        g = gcd_poly(a[0].to_unipoly("y"), b[0].to_unipoly("y"))
        return MPoly.from_unipoly(g, "y")
    if _poly_deg(a) < _poly_deg(b):
        a, b = b, a
    ca, a = _remove_content(a)
    cb, b = _remove_content(b)
    cg = gcd_poly(ca, cb)
    while True:
        if _poly_deg(b) < 0:
            g = a
            break
        if _poly_deg(b) == 0:
            g = [MPoly.const(1)]
            break
        r = _prem(a, b)
        if _poly_deg(r) >= 0:
            _, r = _remove_content(r)
        a, b = b, r
    gp = MPoly.from_coeffs(g, "x")
    return _normalize_biv(gp * MPoly.from_unipoly(cg, "y"))


def _remove_content(coeffs: list[MPoly]) -> tuple[UniPoly, list[MPoly]]:
    c = _content_y(coeffs)
    if c.is_const():
        return UniPoly([1], "y"), coeffs
    cm = MPoly.from_unipoly(c, "y")
    return c, [x.exact_div(cm) if not x.is_zero() else x for x in coeffs]


def _normalize_biv(p: MPoly) -> MPoly:
    """Scale by a rational so the lex-leading coefficient is 1."""
    if p.is_zero():
        return p
    _, lc = p.leading_term()
    return p.exact_div(MPoly.const(lc))


class ZeroDivisorError(ArithmeticError):
    """Raised when inverting a zero divisor in Q[z]/(q); carries the factor."""

    def __init__(self, factor: UniPoly):
        super().__init__("zero divisor encountered")
        self.factor = factor


class QuotientRing:
    """Arithmetic in Q[z]/(q) for a squarefree modulus q.

    Elements are UniPoly of degree < deg q.  Inversion uses the extended
    Euclidean algorithm; hitting a zero divisor raises ZeroDivisorError with
    the discovered factor of q so callers can split the modulus and recurse.
    """

    def __init__(self, modulus: UniPoly):
        if modulus.degree is NEG_INF or modulus.degree < 1:
            raise ValueError("modulus must be nonconstant")
        self.modulus = modulus.monic()

    def reduce(self, p: UniPoly) -> UniPoly:
        return p.divmod(self.modulus)[1]

    def add(self, a: UniPoly, b: UniPoly) -> UniPoly:
        return a + b

    def mul(self, a: UniPoly, b: UniPoly) -> UniPoly:
        return self.reduce(a * b)

    def inv(self, a: UniPoly) -> UniPoly:
        a = self.reduce(a)
        if a.is_zero():
            raise ZeroDivisionError("inverting zero")
        # extended euclid: find u with u*a = gcd (mod modulus)
        r0, r1 = self.modulus, a
        s0, s1 = UniPoly([], a.var), UniPoly([1], a.var)
        while not r1.is_zero():
            qt, rem = r0.divmod(r1)
            r0, r1 = r1, rem
            s0, s1 = s1, s0 - qt * s1
        if not r0.is_const():
            raise ZeroDivisorError(r0.monic())
        return self.reduce(s0 * (Fraction(1) / r0.lc()))


def gcd_over_quotient(
    polys: list[list[UniPoly]], ring: QuotientRing
) -> list[UniPoly]:
    """Monic gcd of polynomials with coefficients in Q[z]/(q).

    Each polynomial is a dense ascending coefficient list of UniPoly residues.
    Raises ZeroDivisorError if a leading coefficient turns out non-invertible.
    """

    def deg(p: list[UniPoly]) -> int:
        n = len(p) - 1
        while n >= 0 and ring.reduce(p[n]).is_zero():
            n -= 1
        return n

    def make_monic(p: list[UniPoly]) -> list[UniPoly]:
        d = deg(p)
        if d < 0:
            return []
        inv = ring.inv(p[d])
        return [ring.mul(c, inv) for c in p[: d + 1]]

    def mod(a: list[UniPoly], b: list[UniPoly]) -> list[UniPoly]:
        b = make_monic(b)
        db = len(b) - 1
        rem = [ring.reduce(c) for c in a]
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c.is_zero():
                continue
            for j in range(db + 1):
                rem[i - db + j] = ring.reduce(rem[i - db + j] - c * b[j])
        return rem[:db] if db > 0 else []

    g: list[UniPoly] | None = None
    for p in polys:
        p = [ring.reduce(c) for c in p]
        if deg(p) < 0:
            continue
        if g is None:
            g = p
            continue
        a, b = g, p
        while deg(b) >= 0:
            if deg(b) == 0:
                b = make_monic(b)  # may raise ZeroDivisorError -> caller splits
                a, b = b, []
                break
            a, b = b, mod(a, b)
        g = a
        if deg(g) == 0:
            break
    if g is None:
        return []
    return make_monic(g)
