"""Classical periods and Picard-Fuchs operators.

The period of a Laurent polynomial f is the power series whose m-th
coefficient is the constant term of f^m.  An annihilating operator
L = sum_k p_k(t) D^k with D = t d/dt is recovered by exact fitting of the
induced linear recursion on the coefficients; the fibre parameter of the
pencil relates to the series variable by t = -1/lambda.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .algebra import UniPoly, format_unipoly, squarefree_rational_roots
from .laurent import LaurentPoly, newton_polygon


class PowerSeries:
    """Exact truncated power series: coefficients c_0..c_M."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        self.coefficients = [Fraction(c) for c in coefficients]

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, m: int) -> Fraction:
        return self.coefficients[m]

    def __len__(self) -> int:
        return len(self.coefficients)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PowerSeries)
            and self.coefficients == other.coefficients
        )

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coefficients[:8])
        tail = ", ..." if len(self.coefficients) > 8 else ""
        return f"PowerSeries([{head}{tail}], order={self.order})"


def period_coefficients(f: LaurentPoly, M: int) -> PowerSeries:
    """c_m = constant term of f^m for 0 <= m <= M.

    Powers are built by iterated sparse multiplication; after computing f^k a
    term at exponent u is pruned unless -u lies in (M - k) * Newt(f), since
    otherwise no later multiplication can bring it back to exponent 0.
    """
    if M < 0:
        raise ValueError("M must be nonnegative")
    coeffs = [Fraction(1)]
    if M == 0:
        return PowerSeries(coeffs)
    if not f.terms:
        return PowerSeries([Fraction(1)] + [Fraction(0)] * M)
    NP = newton_polygon(f)
    if isinstance(NP, list):
        # segment or point support: constant term of f^m is the coefficient
        # picked up when m * u = 0 has solutions, handled by plain expansion
        normals = []
    else:
        normals = [(e.inner_normal, e.normal_value()) for e in NP.edges()]
    g = LaurentPoly({(0, 0): 1})
    for k in range(1, M + 1):
        g = g * f
        remaining = M - k
        if normals:
            kept = {
                u: c
                for u, c in g.terms.items()
                if all(
                    -(n[0] * u[0] + n[1] * u[1]) >= remaining * b
                    for n, b in normals
                )
            }
            g = LaurentPoly.__new__(LaurentPoly)
            g.terms = kept
        coeffs.append(g.constant_term())
    return PowerSeries(coeffs)


class DiffOperator:
    """L = sum_{k=0}^h p_k(t) D^k with D = t d/dt and p_h nonzero."""

    __slots__ = ("polys",)

    def __init__(self, polys):
        ps = [p if isinstance(p, UniPoly) else UniPoly(p) for p in polys]
        while ps and ps[-1].is_zero():
            ps.pop()
        if not ps:
            raise ValueError("zero operator")
        self.polys = ps

    @property
    def order(self) -> int:
        return len(self.polys) - 1

    def normalized(self) -> "DiffOperator":
        """Primitive integer coefficients; the lowest nonzero coefficient of
        the leading polynomial p_h is made positive."""
        num_lcm = 1
        den_lcm = 1
        for p in self.polys:
            for c in p.coeffs:
                if c != 0:
                    den_lcm = den_lcm * c.denominator // int_gcd(
                        den_lcm, c.denominator
                    )
        g = 0
        for p in self.polys:
            for c in p.coeffs:
                g = int_gcd(g, abs(int(c * den_lcm)))
        scale = Fraction(den_lcm, g if g else 1)
        lead = self.polys[-1]
        low = next(c for c in lead.coeffs if c != 0)
        if low * scale < 0:
            scale = -scale
        return DiffOperator([p * scale for p in self.polys])

    def dual_form(self) -> list[UniPoly]:
        """The same operator written sum_j t^j P_j(D): P_j as UniPoly in D."""
        max_j = max(p.degree for p in self.polys)
        out = []
        for j in range(max_j + 1):
            out.append(UniPoly([p[j] for p in self.polys], var="D"))
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, DiffOperator) and self.polys == other.polys

    def __repr__(self):
        terms = []
        for k, p in enumerate(self.polys):
            if p.is_zero():
                continue
            dk = "" if k == 0 else ("*D" if k == 1 else f"*D^{k}")
            terms.append(f"({format_unipoly(p)}){dk}")
        return "DiffOperator(" + " + ".join(terms) + ")"


def apply_operator(L: DiffOperator, s: PowerSeries) -> PowerSeries:
    """Coefficientwise image: the t^m coefficient of L s is
    sum_k sum_j p_k[j] (m-j)^k c_{m-j}."""
    M = s.order
    out = []
    for m in range(M + 1):
        acc = Fraction(0)
        for k, p in enumerate(L.polys):
            if p.is_zero():
                continue
            for j in range(min(p.degree, m) + 1):
                c = p[j]
                if c:
                    acc += c * (m - j) ** k * s[m - j]
        out.append(acc)
    return PowerSeries(out)


def _nullspace_vector(rows: list[list[Fraction]], ncols: int):
    """One kernel vector of the matrix (rows x ncols) over Q, or None.

    Gauss-Jordan; the kernel vector sets the first free variable to 1, so the
    result is deterministic.
    """
    mat = [row[:] for row in rows]
    pivot_of_col = [-1] * ncols
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivot_of_col[c] = r
        r += 1
        if r == len(mat):
            break
    free = next((c for c in range(ncols) if pivot_of_col[c] == -1), None)
    if free is None:
        return None
    vec = [Fraction(0)] * ncols
    vec[free] = Fraction(1)
    for c in range(ncols):
        pr = pivot_of_col[c]
        if pr != -1:
            vec[c] = -mat[pr][free]
    return vec


def find_picard_fuchs(
    s: PowerSeries,
    max_order: int = 4,
    max_degree: int = 12,
    guard: int = 8,
) -> DiffOperator:
    """Minimal annihilating operator: order h ascending from 1, then degree d
    ascending; a candidate kernel must also annihilate the last `guard`
    coefficients, which are excluded from the fit."""
    M = s.order
    for h in range(1, max_order + 1):
        for d in range(0, max_degree + 1):
            ncols = (h + 1) * (d + 1)
            if ncols + guard > M + 1:
                break  # not enough data at this order
            fit_rows = []
            for m in range(0, M - guard + 1):
                fit_rows.append(_recursion_row(s, m, h, d))
            vec = _nullspace_vector(fit_rows, ncols)
            if vec is None:
                continue
            polys = [
                UniPoly(vec[k * (d + 1) : (k + 1) * (d + 1)])
                for k in range(h + 1)
            ]
            if polys[h].is_zero():
                continue  # order drops: this is a lower-order relation
            L = DiffOperator(polys)
            if all(
                _recursion_value(L, s, m) == 0
                for m in range(M - guard + 1, M + 1)
            ):
                return L.normalized()
    raise ValueError("no operator found (raise bounds)")


def _recursion_row(s: PowerSeries, m: int, h: int, d: int) -> list[Fraction]:
    """Row of the fit matrix for coefficient m: entry for unknown a_{k,j} is
    (m-j)^k c_{m-j}."""
    row = []
    for k in range(h + 1):
        for j in range(d + 1):
            row.append((m - j) ** k * s[m - j] if m - j >= 0 else Fraction(0))
    return row


def _recursion_value(L: DiffOperator, s: PowerSeries, m: int) -> Fraction:
    acc = Fraction(0)
    for k, p in enumerate(L.polys):
        if p.is_zero():
            continue
        for j in range(p.degree + 1):
            if p[j] and m - j >= 0:
                acc += p[j] * (m - j) ** k * s[m - j]
    return acc


def operator_singular_locus(L: DiffOperator):
    """Finite singular candidates of L: rational roots (with multiplicity) and
    residual rational-root-free factors of the leading coefficient p_h.

    Returns {"roots": [(t*, mult)], "residual": [(UniPoly, mult)],
    "zero": bool, "infinity": True} -- t = 0 is flagged when p_h(0) = 0;
    t = infinity is always reported, unclassified.
    """
    lead = L.polys[-1]
    roots, residual = squarefree_rational_roots(lead)
    return {
        "roots": [(r, m) for r, m in roots if r != 0],
        "residual": residual,
        "zero": lead(0) == 0,
        "infinity": True,
    }
